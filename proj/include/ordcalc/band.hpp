#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ordcalc/errors.hpp"

namespace ordcalc {

// The four order types whose finite condensation is a single point, closed
// under multiplication modulo the finite condensation.
enum class BandElement : std::uint8_t { One = 0, Omega = 1, OmegaStar = 2, Zeta = 3 };

inline constexpr std::array<BandElement, 4> kBandElements = {
    BandElement::One, BandElement::Omega, BandElement::OmegaStar, BandElement::Zeta};

inline std::string to_string(BandElement x) {
    switch (x) {
        case BandElement::One: return "1";
        case BandElement::Omega: return "w";
        case BandElement::OmegaStar: return "omega_star";
        case BandElement::Zeta: return "zeta";
    }
    return "?";
}

using BandTable = std::array<std::array<BandElement, 4>, 4>;

/// The multiplication table, stored as data: row 1 and column 1 are all 1,
/// and otherwise the left factor absorbs the right.
inline constexpr BandTable canonical_band_table() {
    BandTable t{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == 0 || j == 0) {
                t[i][j] = BandElement::One;
            } else {
                t[i][j] = static_cast<BandElement>(i);
            }
        }
    }
    return t;
}

/// X . Y modulo the finite condensation, by table lookup.
inline BandElement times_f(BandElement x, BandElement y) {
    static constexpr BandTable table = canonical_band_table();
    return table[static_cast<int>(x)][static_cast<int>(y)];
}

/// times_f restricted to the ordinal elements {1, w}.
inline BandElement times_f_on(BandElement x, BandElement y) {
    auto ordinal_element = [](BandElement e) {
        return e == BandElement::One || e == BandElement::Omega;
    };
    if (!ordinal_element(x) || !ordinal_element(y))
        throw OutOfSubsetError("times_f_on is defined on {1, w} only");
    return times_f(x, y);
}

struct BandLawFailure {
    const char* law;
    std::array<BandElement, 3> triple;
};

struct BandReport {
    std::uint64_t idempotency_checked = 0;
    std::uint64_t associativity_checked = 0;
    std::uint64_t left_regularity_checked = 0;
    std::vector<BandLawFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Exhaustively check that `table` defines a left regular band: 4 idempotency
/// cases, 64 associativity cases, 16 left-regularity cases. Failures are
/// reported in the result, never thrown.
inline BandReport verify_left_regular_band(const BandTable& table = canonical_band_table()) {
    auto mul = [&table](BandElement a, BandElement b) {
        return table[static_cast<int>(a)][static_cast<int>(b)];
    };
    BandReport report;
    for (BandElement x : kBandElements) {
        ++report.idempotency_checked;
        if (mul(x, x) != x) report.failures.push_back({"idempotency", {x, x, x}});
    }
    for (BandElement x : kBandElements)
        for (BandElement y : kBandElements)
            for (BandElement z : kBandElements) {
                ++report.associativity_checked;
                if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                    report.failures.push_back({"associativity", {x, y, z}});
            }
    for (BandElement x : kBandElements)
        for (BandElement y : kBandElements) {
            ++report.left_regularity_checked;
            if (mul(mul(x, y), x) != mul(x, y))
                report.failures.push_back({"left-regularity", {x, y, x}});
        }
    return report;
}

/// X <= Y in the band order iff X.Y = Y.
inline bool band_leq(BandElement x, BandElement y) { return times_f(x, y) == y; }

/// Covering relation of band_leq, computed by removing transitive edges
/// rather than transcribed.
inline std::vector<std::pair<BandElement, BandElement>> hasse_edges() {
    std::vector<std::pair<BandElement, BandElement>> edges;
    for (BandElement lo : kBandElements)
        for (BandElement hi : kBandElements) {
            if (lo == hi || !band_leq(lo, hi)) continue;
            bool covered = true;
            for (BandElement mid : kBandElements) {
                if (mid == lo || mid == hi) continue;
                if (band_leq(lo, mid) && band_leq(mid, hi)) {
                    covered = false;
                    break;
                }
            }
            if (covered) edges.emplace_back(lo, hi);
        }
    return edges;
}

}  // namespace ordcalc
