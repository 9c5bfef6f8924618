#pragma once

#include <string>
#include <vector>

#include "ordcalc/band.hpp"
#include "ordcalc/errors.hpp"
#include "ordcalc/linterm.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc {

// Structurally recursive finite condensation on linear-order terms. This is
// the brute-force reference the closed-form operators are verified against,
// so it deliberately avoids the coefficient-shift shortcut: powers of w are
// reduced one product layer at a time through the absorption rule, sums are
// condensed part by part and re-joined with a juncture merge.
//
// Juncture merge: if part A has a last element and part B has a first
// element, those two points are adjacent in A + B, so the last condensation
// class of A and the first class of B are finitely separated and fuse into
// one. The fused class is counted once by keeping A's condensation whole and
// dropping the first class of B's, i.e. taking the left difference by one.
// Each class is nonempty, so exactly one class disappears per fused juncture.

/// Expand a CNF into an explicit term: coefficients become repeated summands
/// and w^e becomes an e-fold product chain with a generator on the right.
inline LinTerm term_of_cnf(const OrdinalCNF& a) {
    std::vector<LinTerm> parts;
    for (const CnfTerm& t : a.terms()) {
        if (t.exponent == 0) {
            parts.push_back(LinTerm::fin(t.coefficient));
            continue;
        }
        LinTerm chain = LinTerm::gen(Generator::Omega);
        for (Nat e = 1; e < t.exponent; ++e)
            chain = LinTerm::prod(chain, LinTerm::gen(Generator::Omega));
        for (Nat c = 0; c < t.coefficient; ++c) parts.push_back(chain);
    }
    return LinTerm::sum(std::move(parts));
}

/// Order type of a well-ordered term, folding sums with add and products
/// with prod.
inline OrdinalCNF eval_term(const LinTerm& t) {
    switch (t.kind()) {
        case LinTerm::Kind::Zero: return OrdinalCNF::zero();
        case LinTerm::Kind::Fin: return OrdinalCNF::finite(t.fin_value());
        case LinTerm::Kind::Gen:
            if (t.generator() != Generator::Omega)
                throw NotWellOrderedError("term contains " + to_string(t.generator()));
            return OrdinalCNF::omega_power(1);
        case LinTerm::Kind::Sum: {
            OrdinalCNF acc;
            for (const LinTerm& p : t.parts()) acc = add(acc, eval_term(p));
            return acc;
        }
        case LinTerm::Kind::Prod: return prod(eval_term(t.left()), eval_term(t.right()));
    }
    throw Error("unreachable term kind");
}

namespace detail {

inline void trace_step(std::vector<std::string>* trace, const std::string& line) {
    if (trace) trace->push_back(line);
}

}  // namespace detail

inline LinTerm condense_term(const LinTerm& t, std::vector<std::string>* trace = nullptr);

namespace detail {

/// The condensation of a term minus its first class. Only ever applied to
/// condensation results whose first class exists; in the supported fragment
/// those are well-ordered.
inline LinTerm drop_first_class(const LinTerm& condensed) {
    if (condensed.is_well_ordered())
        return term_of_cnf(subtract_first(eval_term(condensed)));
    throw UnsupportedTermError("cannot drop the first class of " + to_string(condensed));
}

inline LinTerm condense_sum(const LinTerm& t, std::vector<std::string>* trace) {
    const std::vector<LinTerm>& parts = t.parts();
    if (!t.is_well_ordered()) {
        // Scattered sums are supported only when every part is a plain
        // generator or finite block.
        for (const LinTerm& p : parts)
            if (p.kind() != LinTerm::Kind::Gen && p.kind() != LinTerm::Kind::Fin)
                throw UnsupportedTermError("sum mixes reverse generators with compound parts: " +
                                           to_string(t));
    }
    std::vector<LinTerm> out;
    out.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        LinTerm c = condense_term(parts[i], trace);
        if (i > 0 && parts[i - 1].has_last_element() && parts[i].has_first_element()) {
            trace_step(trace, "merge boundary classes between " + to_string(parts[i - 1]) +
                                  " and " + to_string(parts[i]));
            c = drop_first_class(c);
        }
        out.push_back(std::move(c));
    }
    return LinTerm::sum(std::move(out));
}

}  // namespace detail

/// Finite condensation of a term, one rewrite at a time. Finite blocks and
/// single generators collapse to a point (any two points of w, w* or z have
/// only finitely many points between them); a product with a generator on
/// the right keeps its left factor intact, each copy of the generator being
/// its own class; sums condense part by part with the juncture merge above.
inline LinTerm condense_term(const LinTerm& t, std::vector<std::string>* trace) {
    switch (t.kind()) {
        case LinTerm::Kind::Zero: return t;
        case LinTerm::Kind::Fin:
            detail::trace_step(trace, to_string(t) + " => 1  (finite block is one class)");
            return LinTerm::fin(1);
        case LinTerm::Kind::Gen:
            detail::trace_step(trace, to_string(t) + " => 1  (generator is one class)");
            return LinTerm::fin(1);
        case LinTerm::Kind::Prod: {
            if (t.right().kind() == LinTerm::Kind::Gen) {
                detail::trace_step(trace, to_string(t) + " => " + to_string(t.left()) +
                                              "  (right factor absorbed)");
                return t.left();
            }
            if (t.is_well_ordered()) {
                LinTerm expanded = term_of_cnf(eval_term(t));
                detail::trace_step(trace,
                                   to_string(t) + " => " + to_string(expanded) + "  (expand)");
                return condense_term(expanded, trace);
            }
            throw UnsupportedTermError("unsupported product: " + to_string(t));
        }
        case LinTerm::Kind::Sum: return detail::condense_sum(t, trace);
    }
    throw Error("unreachable term kind");
}

/// Order type of the finite condensation of an ordinal, computed entirely by
/// term rewriting: expand the CNF, condense block by block, evaluate. This
/// path never uses the closed-form exponent shift.
inline OrdinalCNF condense_cnf_oracle(const OrdinalCNF& a, std::vector<std::string>* trace = nullptr) {
    return eval_term(condense_term(term_of_cnf(a), trace));
}

/// n-fold application of the condensation.
inline OrdinalCNF iterate_condense(OrdinalCNF a, Nat n) {
    for (Nat i = 0; i < n; ++i) a = condense_cnf_oracle(a);
    return a;
}

/// X . Y re-derived from the term engine instead of the stored table: build
/// the product order and condense it. X.1 relabels X, so it condenses X
/// directly.
inline BandElement band_product_via_condensation(BandElement x, BandElement y) {
    auto term_of = [](BandElement e) {
        switch (e) {
            case BandElement::One: return LinTerm::fin(1);
            case BandElement::Omega: return LinTerm::gen(Generator::Omega);
            case BandElement::OmegaStar: return LinTerm::gen(Generator::OmegaStar);
            case BandElement::Zeta: return LinTerm::gen(Generator::Zeta);
        }
        throw Error("unreachable band element");
    };
    LinTerm product = y == BandElement::One ? term_of(x) : LinTerm::prod(term_of(x), term_of(y));
    LinTerm condensed = condense_term(product);
    if (condensed == LinTerm::fin(1)) return BandElement::One;
    if (condensed.kind() == LinTerm::Kind::Gen) {
        switch (condensed.generator()) {
            case Generator::Omega: return BandElement::Omega;
            case Generator::OmegaStar: return BandElement::OmegaStar;
            case Generator::Zeta: return BandElement::Zeta;
        }
    }
    throw UnsupportedTermError("condensation of a band product left the band: " +
                               to_string(condensed));
}

}  // namespace ordcalc
