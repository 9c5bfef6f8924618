#pragma once

#include <vector>

#include "ordcalc/ordinal.hpp"

namespace ordcalc {

/// All ordinals with degree <= max_degree and coefficients <= max_coeff,
/// in ascending order, starting with 0. The coefficient tuple
/// (a_max_degree, ..., a_0) runs through lexicographic order, which is
/// exactly the ordinal order.
inline std::vector<OrdinalCNF> enumerate_cnf(Nat max_degree, Nat max_coeff) {
    std::vector<OrdinalCNF> out;
    std::vector<Nat> coeffs(static_cast<std::size_t>(max_degree) + 1, 0);  // index = exponent
    for (;;) {
        std::vector<CnfTerm> terms;
        for (std::size_t e = coeffs.size(); e-- > 0;)
            if (coeffs[e] > 0) terms.push_back(CnfTerm{static_cast<Nat>(e), coeffs[e]});
        out.push_back(OrdinalCNF{std::move(terms)});
        std::size_t i = 0;  // increment the constant fastest
        while (i < coeffs.size() && coeffs[i] == max_coeff) coeffs[i++] = 0;
        if (i == coeffs.size()) break;
        ++coeffs[i];
    }
    return out;
}

/// The nonzero limit ordinals of the same enumeration.
inline std::vector<OrdinalCNF> enumerate_limits(Nat max_degree, Nat max_coeff) {
    std::vector<OrdinalCNF> out;
    for (OrdinalCNF& a : enumerate_cnf(max_degree, max_coeff))
        if (classify(a) == OrdinalKind::Limit) out.push_back(std::move(a));
    return out;
}

}  // namespace ordcalc
