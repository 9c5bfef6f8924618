#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ordcalc/condense.hpp"
#include "ordcalc/errors.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc {

// Closed forms for the maps induced on ordinals of finite degree by
// multiplying with 1 or w modulo the finite condensation. d() shifts every
// exponent down by one, with a +1 correction when a nonzero constant term
// collapses to a point; it behaves much like a polynomial derivative, and
// i_preimage/i_limit describe its preimages.

/// Finite-condensation derivative. For degree n >= 1,
/// d(a_n w^n + ... + a_1 w + a_0) = a_n w^(n-1) + ... + a_2 w + a_1 + c with
/// c = 1 iff a_0 >= 1; a positive natural maps to 1, and d(0) = 0.
inline OrdinalCNF d(const OrdinalCNF& a) {
    if (a.is_zero()) return OrdinalCNF::zero();
    if (degree(a) == 0) return OrdinalCNF::finite(1);
    std::vector<CnfTerm> terms;
    terms.reserve(a.terms().size());
    for (const CnfTerm& t : a.terms())
        if (t.exponent >= 2) terms.push_back(CnfTerm{t.exponent - 1, t.coefficient});
    const Nat c = a.constant_term() >= 1 ? 1 : 0;
    const Nat constant = checked_add(a.coefficient_of(1), c);
    if (constant > 0) terms.push_back(CnfTerm{0, constant});
    return OrdinalCNF{std::move(terms)};
}

/// Left multiplication by w modulo the finite condensation: the monic
/// monomial w^deg(a). The leading coefficient and the lower terms are lost,
/// so this is the degree map; 0 maps to 0.
inline OrdinalCNF phi_l_omega(const OrdinalCNF& a) {
    if (a.is_zero()) return OrdinalCNF::zero();
    return OrdinalCNF::omega_power(degree(a));
}

/// Right multiplication by w modulo the finite condensation: the identity,
/// since each copy of w is its own condensation class.
inline OrdinalCNF phi_r_omega(const OrdinalCNF& a) { return a; }

/// n-fold derivative.
inline OrdinalCNF d_iter(OrdinalCNF a, Nat n) {
    for (Nat i = 0; i < n; ++i) a = d(a);
    return a;
}

/// Finite description of the full preimage of a nonzero ordinal under d:
/// finitely many fixed members plus at most one family {base + j : j >= 1}.
struct PreimageSet {
    std::vector<OrdinalCNF> fixed;
    std::optional<OrdinalCNF> parametric_base;

    /// True when b is one of the described preimages.
    bool describes(const OrdinalCNF& b) const {
        for (const OrdinalCNF& f : fixed)
            if (f == b) return true;
        if (parametric_base && b.constant_term() >= 1 && b.limit_part() == *parametric_base)
            return true;
        return false;
    }
};

namespace detail {

/// Every exponent shifted up by one (the constant term becomes a w-term).
inline OrdinalCNF exponent_upshift(const OrdinalCNF& a) {
    std::vector<CnfTerm> terms;
    terms.reserve(a.terms().size());
    for (const CnfTerm& t : a.terms())
        terms.push_back(CnfTerm{checked_add(t.exponent, 1), t.coefficient});
    return OrdinalCNF{std::move(terms)};
}

}  // namespace detail

/// d(b) = a has solutions exactly as follows, split on a's constant term
/// a_0. Writing U for the upshift of a's limit part:
///   a_0 = 0:  the single ordinal U;
///   a_0 = 1:  U + w, plus the family U + j for j >= 1;
///   a_0 > 1:  U + a_0 w, plus the family U + (a_0 - 1) w + j for j >= 1.
inline PreimageSet i_preimage(const OrdinalCNF& a) {
    if (a.is_zero()) throw ZeroArgumentError("preimage description requires a nonzero ordinal");
    const Nat a0 = a.constant_term();
    const OrdinalCNF upshifted_limit = detail::exponent_upshift(a.limit_part());
    PreimageSet out;
    if (a0 == 0) {
        out.fixed.push_back(upshifted_limit);
        return out;
    }
    out.fixed.push_back(add(upshifted_limit, OrdinalCNF::omega_power(1, a0)));
    out.parametric_base = a0 == 1
                              ? upshifted_limit
                              : add(upshifted_limit, OrdinalCNF::omega_power(1, a0 - 1));
    return out;
}

/// On nonzero limits the preimage is a single ordinal, so d has an inverse
/// there: the exponent upshift.
inline OrdinalCNF i_limit(const OrdinalCNF& a) {
    if (classify(a) != OrdinalKind::Limit)
        throw NotALimitError("the antiderivative is single-valued on nonzero limits only");
    return detail::exponent_upshift(a);
}

enum class DefectClass { Equal, PlusOne };

inline std::string to_string(DefectClass c) {
    return c == DefectClass::Equal ? "Equal" : "PlusOne";
}

/// How d(a + b) relates to d(a) + d(b): Equal when a is a limit, or a
/// successor with deg(b) >= 2; in every other case the sum of derivatives
/// overshoots by exactly one. The zero cases are outside the dichotomy and
/// rejected unless allow_zero is set, which treats them as Equal.
inline DefectClass distribute_defect(const OrdinalCNF& a, const OrdinalCNF& b,
                                     bool allow_zero = false) {
    if (a.is_zero() || b.is_zero()) {
        if (allow_zero) return DefectClass::Equal;
        throw ZeroArgumentError("defect classification requires nonzero ordinals");
    }
    if (classify(a) == OrdinalKind::Limit) return DefectClass::Equal;
    if (degree(b) >= 2) return DefectClass::Equal;
    return DefectClass::PlusOne;
}

namespace detail {

/// The explicit case formulas for d(p a + q b) with a, b limits of degree
/// >= 2, kept as a separate route from the generic computation.
inline OrdinalCNF linear_combo_case_formula(Nat p, const OrdinalCNF& a, Nat q,
                                            const OrdinalCNF& b) {
    const Nat n = degree(a);
    const Nat m = degree(b);
    std::vector<CnfTerm> terms;
    if (n < m) {
        terms.push_back(CnfTerm{m - 1, checked_mul(q, b.leading().coefficient)});
        for (const CnfTerm& t : b.terms())
            if (t.exponent < m) terms.push_back(CnfTerm{t.exponent - 1, t.coefficient});
    } else if (n == m) {
        terms.push_back(CnfTerm{n - 1, checked_add(checked_mul(p, a.leading().coefficient),
                                                   checked_mul(q, b.leading().coefficient))});
        for (const CnfTerm& t : b.terms())
            if (t.exponent < n) terms.push_back(CnfTerm{t.exponent - 1, t.coefficient});
    } else {
        terms.push_back(CnfTerm{n - 1, checked_mul(p, a.leading().coefficient)});
        for (const CnfTerm& t : a.terms())
            if (t.exponent > m && t.exponent < n) terms.push_back(CnfTerm{t.exponent - 1, t.coefficient});
        terms.push_back(CnfTerm{m - 1, checked_add(a.coefficient_of(m),
                                                   checked_mul(q, b.leading().coefficient))});
        for (const CnfTerm& t : b.terms())
            if (t.exponent < m) terms.push_back(CnfTerm{t.exponent - 1, t.coefficient});
    }
    return OrdinalCNF{std::move(terms)};
}

}  // namespace detail

/// d(p a + q b) for limits a, b of degree >= 2 and p, q >= 1. The result is
/// computed generically and cross-checked against both the linearity form
/// p d(a) + q d(b) and the per-case closed formulas, so a transcription slip
/// in either route is caught.
inline OrdinalCNF d_linear_combo(Nat p, const OrdinalCNF& a, Nat q, const OrdinalCNF& b) {
    if (p == 0 || q == 0) throw PreconditionError("scalars must be >= 1");
    auto limit_deg2 = [](const OrdinalCNF& x) {
        return classify(x) == OrdinalKind::Limit && degree(x) >= 2;
    };
    if (!limit_deg2(a) || !limit_deg2(b))
        throw PreconditionError("arguments must be limit ordinals of degree >= 2");
    const OrdinalCNF generic = d(add(scale_left(p, a), scale_left(q, b)));
    const OrdinalCNF linear = add(scale_left(p, d(a)), scale_left(q, d(b)));
    const OrdinalCNF by_cases = detail::linear_combo_case_formula(p, a, q, b);
    if (generic != linear || generic != by_cases)
        throw Error("derivative linearity routes disagree on " + to_string(a) + ", " +
                    to_string(b));
    return generic;
}

/// d of a sum of scaled limits. Verifies the expansion
///   d(sum p_i a_i) = sum ((p_i - 1) a_leading w^(deg-1) + d(a_i))
/// and, when every degree is >= 2, the strengthening sum p_i d(a_i).
inline OrdinalCNF d_sum_scaled(const std::vector<std::pair<Nat, OrdinalCNF>>& terms) {
    if (terms.empty()) throw PreconditionError("at least one summand required");
    bool all_deg2 = true;
    OrdinalCNF combined;
    OrdinalCNF expansion;
    OrdinalCNF linear;
    for (const auto& [p, a] : terms) {
        if (p == 0) throw PreconditionError("scalars must be >= 1");
        if (classify(a) != OrdinalKind::Limit)
            throw PreconditionError("summands must be nonzero limit ordinals");
        const Nat deg = degree(a);
        all_deg2 = all_deg2 && deg >= 2;
        combined = add(combined, scale_left(p, a));
        OrdinalCNF head = OrdinalCNF::omega_power(deg - 1, checked_mul(p - 1, a.leading().coefficient));
        expansion = add(expansion, add(head, d(a)));
        linear = add(linear, scale_left(p, d(a)));
    }
    const OrdinalCNF result = d(combined);
    if (result != expansion)
        throw Error("scaled-sum derivative expansion disagrees for " + to_string(combined));
    if (all_deg2 && result != linear)
        throw Error("scaled-sum derivative linearity disagrees for " + to_string(combined));
    return result;
}

/// d(a p) = d(a): right scalar factors vanish under the condensation.
inline bool d_right_scale_invariance(const OrdinalCNF& a, Nat p) {
    if (p == 0) throw PreconditionError("scalar must be >= 1");
    return d(scale_right(a, p)) == d(a);
}

/// The first power of w, in degree order, witnessing that d fails to be
/// compatible with composition: a triple (a, d(a), d(d(a))) with
/// d(d(a)) != d(a).
inline std::tuple<OrdinalCNF, OrdinalCNF, OrdinalCNF> homomorphism_witness() {
    for (Nat k = 0;; ++k) {
        const OrdinalCNF a = OrdinalCNF::omega_power(k);
        const OrdinalCNF first = d(a);
        const OrdinalCNF second = d(first);
        if (second != first) return {a, first, second};
    }
}

}  // namespace ordcalc
