#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ordcalc/errors.hpp"
#include "ordcalc/natural.hpp"

namespace ordcalc {

// Ordinals of finite degree, written with coefficients on the left:
//
//     a_n w^n + ... + a_1 w + a_0
//
// where "a w^e" means a summed copies of w^e. Multiplication throughout the
// library is the lexicographic product: A*B replaces each point of A with a
// copy of B, so 2*w = w + w while w*2 = w. This is the reverse of the
// antilexicographic convention common in set theory texts.

struct CnfTerm {
    Nat exponent = 0;
    Nat coefficient = 0;

    friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

/// An ordinal of finite degree in Cantor normal form: a sequence of
/// (exponent, coefficient) terms with strictly decreasing exponents and
/// coefficients >= 1. The empty sequence is 0. Values are immutable.
class OrdinalCNF {
public:
    OrdinalCNF() = default;  // zero

    /// Validating constructor. `terms` must already be in canonical form.
    explicit OrdinalCNF(std::vector<CnfTerm> terms) : terms_(std::move(terms)) {
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].coefficient == 0)
                throw InvariantViolation("CNF coefficient must be >= 1");
            if (i > 0 && terms_[i - 1].exponent <= terms_[i].exponent)
                throw InvariantViolation("CNF exponents must be strictly decreasing");
        }
    }

    static OrdinalCNF zero() { return OrdinalCNF{}; }

    static OrdinalCNF finite(Nat k) {
        if (k == 0) return zero();
        return OrdinalCNF{{CnfTerm{0, k}}};
    }

    /// coeff * w^e as a single-term ordinal (zero when coeff is 0).
    static OrdinalCNF omega_power(Nat e, Nat coeff = 1) {
        if (coeff == 0) return zero();
        return OrdinalCNF{{CnfTerm{e, coeff}}};
    }

    const std::vector<CnfTerm>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Leading term; precondition: nonzero.
    const CnfTerm& leading() const { return terms_.front(); }

    Nat coefficient_of(Nat exponent) const {
        for (const CnfTerm& t : terms_)
            if (t.exponent == exponent) return t.coefficient;
        return 0;
    }

    Nat constant_term() const {
        if (!terms_.empty() && terms_.back().exponent == 0) return terms_.back().coefficient;
        return 0;
    }

    /// The terms with exponent >= 1 (drops the constant).
    OrdinalCNF limit_part() const {
        std::vector<CnfTerm> ts = terms_;
        if (!ts.empty() && ts.back().exponent == 0) ts.pop_back();
        return OrdinalCNF{std::move(ts)};
    }

    friend bool operator==(const OrdinalCNF&, const OrdinalCNF&) = default;

    // Order on ordinals: compare (exponent, coefficient) sequences from the
    // leading term; a proper prefix is smaller.
    friend std::strong_ordering operator<=>(const OrdinalCNF& a, const OrdinalCNF& b) {
        const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.terms_[i].exponent != b.terms_[i].exponent)
                return a.terms_[i].exponent <=> b.terms_[i].exponent;
            if (a.terms_[i].coefficient != b.terms_[i].coefficient)
                return a.terms_[i].coefficient <=> b.terms_[i].coefficient;
        }
        return a.terms_.size() <=> b.terms_.size();
    }

private:
    std::vector<CnfTerm> terms_;
};

enum class OrdinalKind { Zero, Successor, Limit };

/// Build an ordinal from unordered (exponent, coefficient) pairs. Pairs with
/// coefficient 0 are dropped; duplicate exponents are rejected.
inline OrdinalCNF make_cnf(std::vector<std::pair<Nat, Nat>> pairs) {
    std::erase_if(pairs, [](const auto& p) { return p.second == 0; });
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    std::vector<CnfTerm> terms;
    terms.reserve(pairs.size());
    for (const auto& [e, c] : pairs) {
        if (!terms.empty() && terms.back().exponent == e)
            throw DuplicateExponentError("duplicate exponent " + std::to_string(e));
        terms.push_back(CnfTerm{e, c});
    }
    return OrdinalCNF{std::move(terms)};
}

/// Largest exponent. degree(0) is an error; callers must classify first.
inline Nat degree(const OrdinalCNF& a) {
    if (a.is_zero()) throw ZeroHasNoDegreeError("degree of 0 is undefined");
    return a.leading().exponent;
}

inline OrdinalKind classify(const OrdinalCNF& a) {
    if (a.is_zero()) return OrdinalKind::Zero;
    return a.constant_term() >= 1 ? OrdinalKind::Successor : OrdinalKind::Limit;
}

inline std::strong_ordering compare(const OrdinalCNF& a, const OrdinalCNF& b) {
    return a <=> b;
}

/// Ordinal sum. Terms of `a` below deg(b) are absorbed; a term of `a` at
/// exactly deg(b) merges into b's leading coefficient.
inline OrdinalCNF add(const OrdinalCNF& a, const OrdinalCNF& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Nat m = b.leading().exponent;
    std::vector<CnfTerm> terms;
    terms.reserve(a.terms().size() + b.terms().size());
    for (const CnfTerm& t : a.terms()) {
        if (t.exponent > m) terms.push_back(t);
    }
    Nat lead = b.leading().coefficient;
    if (Nat at = a.coefficient_of(m); at > 0) lead = checked_add(at, lead);
    terms.push_back(CnfTerm{m, lead});
    for (std::size_t i = 1; i < b.terms().size(); ++i) terms.push_back(b.terms()[i]);
    return OrdinalCNF{std::move(terms)};
}

/// p*a, i.e. p summed copies of a: equals p*a_n w^n + (tail of a).
inline OrdinalCNF scale_left(Nat p, const OrdinalCNF& a) {
    if (p == 0 || a.is_zero()) return OrdinalCNF::zero();
    std::vector<CnfTerm> terms = a.terms();
    terms.front().coefficient = checked_mul(p, terms.front().coefficient);
    return OrdinalCNF{std::move(terms)};
}

/// Lexicographic product a*b: replace each point of a with a copy of b.
/// Distributes over the CNF terms of the left factor; a single term a w^e
/// with e >= 1 contributes a w^(deg b + e), and the constant term scales b.
inline OrdinalCNF prod(const OrdinalCNF& a, const OrdinalCNF& b) {
    if (a.is_zero() || b.is_zero()) return OrdinalCNF::zero();
    const Nat m = degree(b);
    OrdinalCNF acc;
    for (const CnfTerm& t : a.terms()) {
        OrdinalCNF partial = t.exponent >= 1
                                 ? OrdinalCNF::omega_power(checked_add(m, t.exponent), t.coefficient)
                                 : scale_left(t.coefficient, b);
        acc = add(acc, partial);
    }
    return acc;
}

/// a*p for a natural p: multiplies only the constant term, since w^i p = w^i
/// for i >= 1. Equals prod(a, finite(p)).
inline OrdinalCNF scale_right(const OrdinalCNF& a, Nat p) {
    if (p == 0 || a.is_zero()) return OrdinalCNF::zero();
    std::vector<CnfTerm> terms = a.terms();
    if (terms.back().exponent == 0) terms.back().coefficient = checked_mul(terms.back().coefficient, p);
    return OrdinalCNF{std::move(terms)};
}

/// Left difference by one: the unique d with 1 + d = a. Removing the first
/// point of an infinite ordinal leaves it unchanged; a finite k drops to k-1.
inline OrdinalCNF subtract_first(const OrdinalCNF& a) {
    if (a.is_zero()) throw ZeroArgumentError("cannot remove the first point of 0");
    if (a.leading().exponent >= 1) return a;
    return OrdinalCNF::finite(a.leading().coefficient - 1);
}

/// Canonical text form, e.g. "3*w^2 + w + 4"; parses back to the same value.
inline std::string to_string(const OrdinalCNF& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const CnfTerm& t : a.terms()) {
        if (!out.empty()) out += " + ";
        if (t.exponent == 0) {
            out += std::to_string(t.coefficient);
            continue;
        }
        if (t.coefficient >= 2) out += std::to_string(t.coefficient) + "*";
        out += "w";
        if (t.exponent >= 2) out += "^" + std::to_string(t.exponent);
    }
    return out;
}

inline OrdinalCNF operator+(const OrdinalCNF& a, const OrdinalCNF& b) { return add(a, b); }
inline OrdinalCNF operator*(const OrdinalCNF& a, const OrdinalCNF& b) { return prod(a, b); }

}  // namespace ordcalc
