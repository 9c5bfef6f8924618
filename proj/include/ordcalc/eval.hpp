#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ordcalc/band.hpp"
#include "ordcalc/condense.hpp"
#include "ordcalc/derivative.hpp"
#include "ordcalc/errors.hpp"
#include "ordcalc/linterm.hpp"
#include "ordcalc/ordinal.hpp"
#include "ordcalc/parser.hpp"

namespace ordcalc {

enum class Comparison { LT, EQ, GT };

inline std::string to_string(Comparison c) {
    switch (c) {
        case Comparison::LT: return "LT";
        case Comparison::EQ: return "EQ";
        case Comparison::GT: return "GT";
    }
    return "?";
}

class EvalResult {
public:
    enum class Kind { Ordinal, Band, Preimage, Defect, Comparison, Boolean };

    EvalResult(OrdinalCNF v) : value_(std::move(v)) {}
    EvalResult(BandElement v) : value_(v) {}
    EvalResult(PreimageSet v) : value_(std::move(v)) {}
    EvalResult(DefectClass v) : value_(v) {}
    EvalResult(Comparison v) : value_(v) {}
    EvalResult(bool v) : value_(v) {}

    Kind kind() const { return static_cast<Kind>(value_.index()); }

    const OrdinalCNF& ordinal() const { return std::get<OrdinalCNF>(value_); }
    BandElement band() const { return std::get<BandElement>(value_); }
    const PreimageSet& preimage() const { return std::get<PreimageSet>(value_); }
    DefectClass defect() const { return std::get<DefectClass>(value_); }
    Comparison comparison() const { return std::get<Comparison>(value_); }
    bool boolean() const { return std::get<bool>(value_); }

private:
    std::variant<OrdinalCNF, BandElement, PreimageSet, DefectClass, Comparison, bool> value_;
};

namespace detail {

/// Band values that are themselves ordinals, for coercion and value equality.
inline bool band_as_ordinal(BandElement b, OrdinalCNF& out) {
    if (b == BandElement::One) {
        out = OrdinalCNF::finite(1);
        return true;
    }
    if (b == BandElement::Omega) {
        out = OrdinalCNF::omega_power(1);
        return true;
    }
    return false;
}

}  // namespace detail

/// Equality of the denoted values; Band(1) and Ordinal(1) agree, as do
/// Band(w) and Ordinal(w).
inline bool same_value(const EvalResult& a, const EvalResult& b) {
    OrdinalCNF coerced;
    if (a.kind() == EvalResult::Kind::Band && b.kind() == EvalResult::Kind::Ordinal)
        return detail::band_as_ordinal(a.band(), coerced) && coerced == b.ordinal();
    if (a.kind() == EvalResult::Kind::Ordinal && b.kind() == EvalResult::Kind::Band)
        return detail::band_as_ordinal(b.band(), coerced) && coerced == a.ordinal();
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case EvalResult::Kind::Ordinal: return a.ordinal() == b.ordinal();
        case EvalResult::Kind::Band: return a.band() == b.band();
        case EvalResult::Kind::Preimage:
            return a.preimage().fixed == b.preimage().fixed &&
                   a.preimage().parametric_base == b.preimage().parametric_base;
        case EvalResult::Kind::Defect: return a.defect() == b.defect();
        case EvalResult::Kind::Comparison: return a.comparison() == b.comparison();
        case EvalResult::Kind::Boolean: return a.boolean() == b.boolean();
    }
    return false;
}

namespace detail {

inline EvalResult eval_expr(const Expr& e, std::vector<std::string>* trace);

inline OrdinalCNF eval_ordinal(const Expr& e, std::vector<std::string>* trace,
                               const char* context) {
    EvalResult r = eval_expr(e, trace);
    if (r.kind() == EvalResult::Kind::Ordinal) return r.ordinal();
    if (r.kind() == EvalResult::Kind::Band) {
        OrdinalCNF coerced;
        if (band_as_ordinal(r.band(), coerced)) return coerced;
        throw TypeError(std::string(context) + ": " + to_string(r.band()) +
                        " is not an ordinal");
    }
    throw TypeError(std::string(context) + ": expected an ordinal");
}

inline BandElement eval_band(const Expr& e, std::vector<std::string>* trace) {
    EvalResult r = eval_expr(e, trace);
    if (r.kind() == EvalResult::Kind::Band) return r.band();
    if (r.kind() == EvalResult::Kind::Ordinal) {
        if (r.ordinal() == OrdinalCNF::finite(1)) return BandElement::One;
        if (r.ordinal() == OrdinalCNF::omega_power(1)) return BandElement::Omega;
        throw TypeError("timesF: " + to_string(r.ordinal()) + " is not in {1, w, w*, z}");
    }
    throw TypeError("timesF: expected a band element");
}

/// Build a linear-order term from an expression, for condF. Band constants
/// become generators; nested calls are evaluated and expanded.
inline LinTerm term_from_expr(const Expr& e, std::vector<std::string>* trace) {
    switch (e.kind()) {
        case Expr::Kind::Number: return LinTerm::fin(e.number());
        case Expr::Kind::OmegaPow: {
            if (e.exponent() == 0) return LinTerm::fin(1);
            LinTerm chain = LinTerm::gen(Generator::Omega);
            for (Nat i = 1; i < e.exponent(); ++i)
                chain = LinTerm::prod(chain, LinTerm::gen(Generator::Omega));
            return chain;
        }
        case Expr::Kind::BandConst:
            switch (e.band()) {
                case BandElement::One: return LinTerm::fin(1);
                case BandElement::Omega: return LinTerm::gen(Generator::Omega);
                case BandElement::OmegaStar: return LinTerm::gen(Generator::OmegaStar);
                case BandElement::Zeta: return LinTerm::gen(Generator::Zeta);
            }
            throw Error("unreachable band constant");
        case Expr::Kind::Add:
            return LinTerm::sum({term_from_expr(e.left(), trace), term_from_expr(e.right(), trace)});
        case Expr::Kind::Mul:
            return LinTerm::prod(term_from_expr(e.left(), trace), term_from_expr(e.right(), trace));
        case Expr::Kind::Call: return term_of_cnf(eval_ordinal(e, trace, e.call_name().c_str()));
    }
    throw Error("unreachable expression kind");
}

inline void check_arity(const Expr& e, std::size_t want) {
    if (e.args().size() != want)
        throw ArityError(e.call_name() + " takes " + std::to_string(want) + " argument" +
                         (want == 1 ? "" : "s") + ", got " + std::to_string(e.args().size()));
}

inline EvalResult eval_call(const Expr& e, std::vector<std::string>* trace) {
    const std::string& name = e.call_name();
    if (name == "d") {
        check_arity(e, 1);
        return d(eval_ordinal(e.args()[0], trace, "d"));
    }
    if (name == "D") {
        check_arity(e, 2);
        OrdinalCNF n = eval_ordinal(e.args()[0], trace, "D");
        if (!n.is_zero() && degree(n) != 0)
            throw TypeError("D: the iteration count must be a natural number");
        return d_iter(eval_ordinal(e.args()[1], trace, "D"), n.constant_term());
    }
    if (name == "I") {
        check_arity(e, 1);
        return i_preimage(eval_ordinal(e.args()[0], trace, "I"));
    }
    if (name == "Ilim") {
        check_arity(e, 1);
        return i_limit(eval_ordinal(e.args()[0], trace, "Ilim"));
    }
    if (name == "condF") {
        check_arity(e, 1);
        LinTerm condensed = condense_term(term_from_expr(e.args()[0], trace), trace);
        if (condensed.is_well_ordered()) return eval_term(condensed);
        if (condensed.kind() == LinTerm::Kind::Gen) {
            switch (condensed.generator()) {
                case Generator::Omega: return BandElement::Omega;
                case Generator::OmegaStar: return BandElement::OmegaStar;
                case Generator::Zeta: return BandElement::Zeta;
            }
        }
        throw UnsupportedTermError("condF: result " + to_string(condensed) +
                                   " is neither an ordinal nor a band element");
    }
    if (name == "timesF") {
        check_arity(e, 2);
        return times_f(eval_band(e.args()[0], trace), eval_band(e.args()[1], trace));
    }
    if (name == "defect") {
        check_arity(e, 2);
        return distribute_defect(eval_ordinal(e.args()[0], trace, "defect"),
                                 eval_ordinal(e.args()[1], trace, "defect"));
    }
    if (name == "deg") {
        check_arity(e, 1);
        return OrdinalCNF::finite(degree(eval_ordinal(e.args()[0], trace, "deg")));
    }
    if (name == "cmp") {
        check_arity(e, 2);
        auto c = compare(eval_ordinal(e.args()[0], trace, "cmp"),
                         eval_ordinal(e.args()[1], trace, "cmp"));
        return c < 0 ? Comparison::LT : c > 0 ? Comparison::GT : Comparison::EQ;
    }
    throw TypeError("unknown function '" + name + "'");
}

inline EvalResult eval_expr(const Expr& e, std::vector<std::string>* trace) {
    switch (e.kind()) {
        case Expr::Kind::Number: return OrdinalCNF::finite(e.number());
        case Expr::Kind::OmegaPow: return OrdinalCNF::omega_power(e.exponent());
        case Expr::Kind::BandConst: return e.band();
        case Expr::Kind::Add:
            return add(eval_ordinal(e.left(), trace, "+"), eval_ordinal(e.right(), trace, "+"));
        case Expr::Kind::Mul:
            return prod(eval_ordinal(e.left(), trace, "*"), eval_ordinal(e.right(), trace, "*"));
        case Expr::Kind::Call: return eval_call(e, trace);
    }
    throw Error("unreachable expression kind");
}

}  // namespace detail

/// Evaluate an expression tree. Ordinal subexpressions use the lexicographic
/// product convention; band constants w*/z are rejected outside band and
/// term contexts. Pass `trace` to collect the condensation rewrite steps.
inline EvalResult eval(const Expr& e, std::vector<std::string>* trace = nullptr) {
    return detail::eval_expr(e, trace);
}

inline std::string pretty(const PreimageSet& p) {
    std::string out = "{";
    for (std::size_t i = 0; i < p.fixed.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(p.fixed[i]);
    }
    if (p.parametric_base) {
        out += "; ";
        if (!p.parametric_base->is_zero()) out += to_string(*p.parametric_base) + " + ";
        out += "j, j >= 1";
    }
    out += "}";
    return out;
}

/// Canonical text for a result. Ordinal and band renderings re-parse to the
/// same value.
inline std::string pretty(const EvalResult& r) {
    switch (r.kind()) {
        case EvalResult::Kind::Ordinal: return to_string(r.ordinal());
        case EvalResult::Kind::Band: return to_string(r.band());
        case EvalResult::Kind::Preimage: return pretty(r.preimage());
        case EvalResult::Kind::Defect: return to_string(r.defect());
        case EvalResult::Kind::Comparison: return to_string(r.comparison());
        case EvalResult::Kind::Boolean: return r.boolean() ? "true" : "false";
    }
    return "?";
}

inline const char* kind_name(EvalResult::Kind k) {
    switch (k) {
        case EvalResult::Kind::Ordinal: return "ordinal";
        case EvalResult::Kind::Band: return "band";
        case EvalResult::Kind::Preimage: return "preimage";
        case EvalResult::Kind::Defect: return "defect";
        case EvalResult::Kind::Comparison: return "comparison";
        case EvalResult::Kind::Boolean: return "boolean";
    }
    return "?";
}

/// {"input": ..., "kind": ..., "value": ..., "trace": [...]} with "trace"
/// present only when steps were collected.
inline nlohmann::ordered_json to_json(std::string_view input, const EvalResult& r,
                                      const std::vector<std::string>* trace = nullptr) {
    nlohmann::ordered_json j;
    j["input"] = std::string(input);
    j["kind"] = kind_name(r.kind());
    if (r.kind() == EvalResult::Kind::Preimage) {
        nlohmann::ordered_json v;
        v["fixed"] = nlohmann::ordered_json::array();
        for (const OrdinalCNF& f : r.preimage().fixed) v["fixed"].push_back(to_string(f));
        if (r.preimage().parametric_base)
            v["family_base"] = to_string(*r.preimage().parametric_base);
        else
            v["family_base"] = nullptr;
        j["value"] = std::move(v);
    } else {
        j["value"] = pretty(r);
    }
    if (trace && !trace->empty()) j["trace"] = *trace;
    return j;
}

/// Parse then evaluate.
inline EvalResult eval_string(std::string_view input, std::vector<std::string>* trace = nullptr) {
    return eval(parse(input), trace);
}

}  // namespace ordcalc
