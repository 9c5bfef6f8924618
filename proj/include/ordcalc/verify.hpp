#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ordcalc/band.hpp"
#include "ordcalc/condense.hpp"
#include "ordcalc/derivative.hpp"
#include "ordcalc/enumerate.hpp"
#include "ordcalc/eval.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc {

// Exhaustive verification of every law the library claims, over desk-scale
// enumerations. Unary laws run over the full enumeration, pairwise and
// triple-wise laws over reduced ones; the bounds below keep every suite in
// the seconds range while still covering every branch of every case split.

struct VerifyBounds {
    Nat max_degree = 4;
    Nat max_coeff = 5;
    Nat max_scalar = 4;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_counterexample;
    double millis = 0.0;
};

struct VerificationReport {
    VerifyBounds bounds;
    unsigned shards = 1;
    std::vector<SuiteResult> suites;
    double wall_millis = 0.0;

    std::uint64_t total_checks() const {
        std::uint64_t n = 0;
        for (const SuiteResult& s : suites) n += s.checks;
        return n;
    }
    std::uint64_t total_failures() const {
        std::uint64_t n = 0;
        for (const SuiteResult& s : suites) n += s.failures;
        return n;
    }
    bool ok() const { return total_failures() == 0; }
};

namespace verify_detail {

struct Acc {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::uint64_t first_index = std::numeric_limits<std::uint64_t>::max();
    std::string first_message;

    template <class MsgFn>
    void require(bool ok, std::uint64_t index, MsgFn&& msg) {
        ++checks;
        if (!ok) {
            ++failures;
            if (index < first_index) {
                first_index = index;
                first_message = msg();
            }
        }
    }

    void merge(Acc&& o) {
        checks += o.checks;
        failures += o.failures;
        if (o.first_index < first_index) {
            first_index = o.first_index;
            first_message = std::move(o.first_message);
        }
    }
};

/// Split [0, n) across worker threads; accumulators merge deterministically
/// by index, so the reported counterexample does not depend on the shard
/// count. A body that throws records one failure for its whole range.
template <class Body>
Acc run_sharded(std::size_t n, unsigned shards, Body&& body) {
    auto guarded = [&body](std::size_t b, std::size_t e, Acc& acc) {
        try {
            body(b, e, acc);
        } catch (const std::exception& ex) {
            acc.require(false, b, [&] { return std::string("exception: ") + ex.what(); });
        }
    };
    if (shards <= 1 || n < 2 * shards) {
        Acc acc;
        guarded(0, n, acc);
        return acc;
    }
    const std::size_t chunk = (n + shards - 1) / shards;
    std::vector<Acc> accs(shards);
    std::vector<std::thread> threads;
    for (unsigned s = 0; s < shards; ++s) {
        const std::size_t b = s * chunk;
        const std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        threads.emplace_back([&guarded, &accs, s, b, e] { guarded(b, e, accs[s]); });
    }
    for (std::thread& t : threads) t.join();
    Acc out;
    for (Acc& a : accs) out.merge(std::move(a));
    return out;
}

}  // namespace verify_detail

struct VerifyContext {
    VerifyBounds bounds;
    unsigned shards = 1;
    std::vector<OrdinalCNF> full;     // ascending, includes 0
    std::vector<OrdinalCNF> reduced;  // degree <= 3, coefficients <= 3 (clamped to bounds)
    // Sum and product tables over the reduced enumeration, indexed by rank.
    std::vector<std::vector<OrdinalCNF>> add_table;
    std::vector<std::vector<OrdinalCNF>> prod_table;
};

inline VerifyContext make_verify_context(const VerifyBounds& bounds, unsigned shards = 1) {
    VerifyContext ctx;
    ctx.bounds = bounds;
    ctx.shards = std::max(1u, shards);
    ctx.full = enumerate_cnf(bounds.max_degree, bounds.max_coeff);
    ctx.reduced = enumerate_cnf(std::min<Nat>(3, bounds.max_degree), std::min<Nat>(3, bounds.max_coeff));
    const std::size_t n = ctx.reduced.size();
    ctx.add_table.assign(n, {});
    ctx.prod_table.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        ctx.add_table[i].reserve(n);
        ctx.prod_table[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            ctx.add_table[i].push_back(add(ctx.reduced[i], ctx.reduced[j]));
            ctx.prod_table[i].push_back(prod(ctx.reduced[i], ctx.reduced[j]));
        }
    }
    return ctx;
}

struct Suite {
    std::string name;
    std::function<verify_detail::Acc(const VerifyContext&)> run;
};

namespace verify_detail {

inline std::string pair_msg(const OrdinalCNF& a, const OrdinalCNF& b) {
    return "(" + to_string(a) + ", " + to_string(b) + ")";
}

inline std::string triple_msg(const OrdinalCNF& a, const OrdinalCNF& b, const OrdinalCNF& c) {
    return "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ")";
}

// ---- cnf_core ----

inline Acc suite_add_right_strict(const VerifyContext& ctx) {
    const std::size_t n = ctx.reduced.size();
    return run_sharded(n, ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t g = b + 1; g < n; ++g)
                    acc.require(ctx.add_table[a][b] < ctx.add_table[a][g], (a * n + b) * n + g, [&] {
                        return triple_msg(ctx.reduced[a], ctx.reduced[b], ctx.reduced[g]);
                    });
    });
}

inline Acc suite_add_left_weak(const VerifyContext& ctx) {
    const std::size_t n = ctx.reduced.size();
    return run_sharded(n, ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t g = b + 1; g < n; ++g)
                    acc.require(ctx.add_table[b][a] <= ctx.add_table[g][a], (a * n + b) * n + g, [&] {
                        return triple_msg(ctx.reduced[a], ctx.reduced[b], ctx.reduced[g]);
                    });
    });
}

inline Acc suite_prod_left_strict(const VerifyContext& ctx) {
    const std::size_t n = ctx.reduced.size();
    return run_sharded(n, ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t a = std::max<std::size_t>(lo, 1); a < hi; ++a)  // right factor >= 1
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t g = b + 1; g < n; ++g)
                    acc.require(ctx.prod_table[b][a] < ctx.prod_table[g][a], (a * n + b) * n + g, [&] {
                        return triple_msg(ctx.reduced[a], ctx.reduced[b], ctx.reduced[g]);
                    });
    });
}

inline Acc suite_prod_right_weak(const VerifyContext& ctx) {
    const std::size_t n = ctx.reduced.size();
    return run_sharded(n, ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t a = lo; a < hi; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t g = b + 1; g < n; ++g)
                    acc.require(ctx.prod_table[a][b] <= ctx.prod_table[a][g], (a * n + b) * n + g, [&] {
                        return triple_msg(ctx.reduced[a], ctx.reduced[b], ctx.reduced[g]);
                    });
    });
}

inline Acc suite_associativity(const VerifyContext& ctx) {
    const std::vector<OrdinalCNF> xs =
        enumerate_cnf(std::min<Nat>(2, ctx.bounds.max_degree), std::min<Nat>(3, ctx.bounds.max_coeff));
    const std::size_t n = xs.size();
    return run_sharded(n, ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const OrdinalCNF aij = add(xs[i], xs[j]);
                const OrdinalCNF pij = prod(xs[i], xs[j]);
                for (std::size_t k = 0; k < n; ++k) {
                    acc.require(add(aij, xs[k]) == add(xs[i], add(xs[j], xs[k])),
                                2 * ((i * n + j) * n + k),
                                [&] { return "add " + triple_msg(xs[i], xs[j], xs[k]); });
                    acc.require(prod(pij, xs[k]) == prod(xs[i], prod(xs[j], xs[k])),
                                2 * ((i * n + j) * n + k) + 1,
                                [&] { return "prod " + triple_msg(xs[i], xs[j], xs[k]); });
                }
            }
    });
}

inline Acc suite_scale_left_iterated_add(const VerifyContext& ctx) {
    return run_sharded(ctx.full.size(), ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i) {
            OrdinalCNF iterated;
            for (Nat p = 0; p <= 6; ++p) {
                acc.require(scale_left(p, ctx.full[i]) == iterated, i * 7 + p, [&] {
                    return "p=" + std::to_string(p) + ", alpha=" + to_string(ctx.full[i]);
                });
                iterated = add(iterated, ctx.full[i]);
            }
        }
    });
}

inline Acc suite_initial_segments(const VerifyContext& ctx) {
    Acc acc;
    for (std::size_t i = 0; i < ctx.full.size(); ++i) {
        const OrdinalCNF& a = ctx.full[i];
        if (a.is_zero()) continue;
        const OrdinalCNF lead = OrdinalCNF::omega_power(a.leading().exponent, a.leading().coefficient);
        for (Nat k = 1; k <= 4; ++k)
            acc.require(scale_left(k, a) <= scale_left(k + 1, lead), i * 4 + k, [&] {
                return "k=" + std::to_string(k) + ", alpha=" + to_string(a);
            });
    }
    const Nat dmax = std::min<Nat>(4, ctx.bounds.max_degree);
    for (Nat m = 0; m < dmax; ++m)
        for (Nat nn = m + 1; nn <= dmax; ++nn)
            for (Nat a = 1; a <= ctx.bounds.max_coeff; ++a)
                for (Nat b = 1; b <= ctx.bounds.max_coeff; ++b) {
                    const OrdinalCNF low = OrdinalCNF::omega_power(m, a);
                    const OrdinalCNF high = OrdinalCNF::omega_power(nn, b);
                    acc.require(add(low, high) == high, acc.checks,
                                [&] { return pair_msg(low, high); });
                }
    return acc;
}

inline Acc suite_compare_vs_additive_order(const VerifyContext& ctx) {
    const std::size_t n = ctx.reduced.size();
    return run_sharded(n, ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                bool delta_exists = false;
                for (std::size_t k = 0; k < n && !delta_exists; ++k)
                    delta_exists = ctx.add_table[i][k] == ctx.reduced[j];
                const bool leq = ctx.reduced[i] <= ctx.reduced[j];
                acc.require(leq == delta_exists, i * n + j,
                            [&] { return pair_msg(ctx.reduced[i], ctx.reduced[j]); });
            }
    });
}

inline Acc suite_canonical_closure(const VerifyContext& ctx) {
    auto canonical = [](const OrdinalCNF& x) {
        for (std::size_t t = 0; t < x.terms().size(); ++t) {
            if (x.terms()[t].coefficient == 0) return false;
            if (t > 0 && x.terms()[t - 1].exponent <= x.terms()[t].exponent) return false;
        }
        return true;
    };
    const std::size_t n = ctx.reduced.size();
    return run_sharded(n, ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                acc.require(canonical(ctx.add_table[i][j]) && canonical(ctx.prod_table[i][j]),
                            i * n + j, [&] { return pair_msg(ctx.reduced[i], ctx.reduced[j]); });
            }
            const OrdinalCNF& a = ctx.reduced[i];
            if (!a.is_zero())
                acc.require(canonical(subtract_first(a)) && canonical(d(a)) &&
                                add(OrdinalCNF::finite(1), subtract_first(a)) == a,
                            n * n + i, [&] { return to_string(a); });
        }
    });
}

// ---- band ----

inline Acc suite_band_laws(const VerifyContext&) {
    Acc acc;
    const BandReport report = verify_left_regular_band();
    acc.checks = report.idempotency_checked + report.associativity_checked +
                 report.left_regularity_checked;
    acc.failures = report.failures.size();
    if (!report.failures.empty()) {
        const BandLawFailure& f = report.failures.front();
        acc.first_index = 0;
        acc.first_message = std::string(f.law) + " (" + to_string(f.triple[0]) + ", " +
                            to_string(f.triple[1]) + ", " + to_string(f.triple[2]) + ")";
    }
    return acc;
}

inline Acc suite_band_table_vs_condensation(const VerifyContext&) {
    Acc acc;
    std::uint64_t idx = 0;
    for (BandElement x : kBandElements)
        for (BandElement y : kBandElements) {
            acc.require(times_f(x, y) == band_product_via_condensation(x, y), idx++, [&] {
                return "(" + to_string(x) + ", " + to_string(y) + ")";
            });
        }
    // A few entries pinned literally, independent of both routes.
    acc.require(times_f(BandElement::Omega, BandElement::Zeta) == BandElement::Omega, idx++,
                [] { return std::string("(w, zeta)"); });
    acc.require(times_f(BandElement::One, BandElement::OmegaStar) == BandElement::One, idx++,
                [] { return std::string("(1, omega_star)"); });
    acc.require(times_f(BandElement::Zeta, BandElement::Omega) == BandElement::Zeta, idx++,
                [] { return std::string("(zeta, w)"); });
    return acc;
}

inline Acc suite_band_poset(const VerifyContext&) {
    Acc acc;
    std::uint64_t idx = 0;
    for (BandElement x : kBandElements)
        acc.require(band_leq(x, x), idx++, [&] { return "reflexivity at " + to_string(x); });
    for (BandElement x : kBandElements)
        for (BandElement y : kBandElements)
            acc.require(!(band_leq(x, y) && band_leq(y, x)) || x == y, idx++,
                        [&] { return "antisymmetry (" + to_string(x) + ", " + to_string(y) + ")"; });
    for (BandElement x : kBandElements)
        for (BandElement y : kBandElements)
            for (BandElement z : kBandElements)
                acc.require(!(band_leq(x, y) && band_leq(y, z)) || band_leq(x, z), idx++, [&] {
                    return "transitivity (" + to_string(x) + ", " + to_string(y) + ", " +
                           to_string(z) + ")";
                });
    const std::vector<std::pair<BandElement, BandElement>> expected = {
        {BandElement::Omega, BandElement::One},
        {BandElement::OmegaStar, BandElement::One},
        {BandElement::Zeta, BandElement::One},
    };
    auto edges = hasse_edges();
    std::sort(edges.begin(), edges.end());
    acc.require(edges == expected, idx++, [] { return std::string("covering relation"); });
    const std::array<BandElement, 3> lower = {BandElement::Omega, BandElement::OmegaStar,
                                              BandElement::Zeta};
    for (BandElement x : lower)
        for (BandElement y : lower)
            if (x != y)
                acc.require(!band_leq(x, y), idx++, [&] {
                    return "incomparability (" + to_string(x) + ", " + to_string(y) + ")";
                });
    for (BandElement x : kBandElements) {
        acc.require(times_f(x, BandElement::One) == BandElement::One &&
                        times_f(BandElement::One, x) == BandElement::One,
                    idx++, [&] { return "absorbing 1 at " + to_string(x); });
    }
    const std::array<BandElement, 2> on = {BandElement::One, BandElement::Omega};
    for (BandElement x : on)
        for (BandElement y : on) {
            const BandElement r = times_f_on(x, y);
            acc.require(r == BandElement::One || r == BandElement::Omega, idx++, [&] {
                return "closure (" + to_string(x) + ", " + to_string(y) + ")";
            });
        }
    return acc;
}

// ---- condensation oracle ----

inline Acc suite_term_roundtrip(const VerifyContext& ctx) {
    return run_sharded(ctx.full.size(), ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i)
            acc.require(eval_term(term_of_cnf(ctx.full[i])) == ctx.full[i], i,
                        [&] { return to_string(ctx.full[i]); });
    });
}

inline Acc suite_oracle_agreement(const VerifyContext& ctx) {
    return run_sharded(ctx.full.size(), ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i)
            acc.require(condense_cnf_oracle(ctx.full[i]) == d(ctx.full[i]), i,
                        [&] { return to_string(ctx.full[i]); });
    });
}

inline Acc suite_right_absorption(const VerifyContext& ctx) {
    const OrdinalCNF w = OrdinalCNF::omega_power(1);
    return run_sharded(ctx.full.size(), ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i)
            acc.require(condense_cnf_oracle(prod(ctx.full[i], w)) == ctx.full[i], i,
                        [&] { return to_string(ctx.full[i]); });
    });
}

inline Acc suite_block_sum_distribution(const VerifyContext& ctx) {
    return run_sharded(ctx.full.size(), ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i) {
            const OrdinalCNF& a = ctx.full[i];
            if (a.is_zero()) continue;
            OrdinalCNF concat;
            for (const CnfTerm& t : a.terms())
                concat = add(concat, condense_cnf_oracle(OrdinalCNF::omega_power(t.exponent, t.coefficient)));
            acc.require(concat == condense_cnf_oracle(a), i, [&] { return to_string(a); });
        }
    });
}

inline Acc suite_condensation_order_preservation(const VerifyContext& ctx) {
    const std::size_t n = ctx.reduced.size();
    std::vector<OrdinalCNF> c;
    c.reserve(n);
    for (const OrdinalCNF& a : ctx.reduced) c.push_back(condense_cnf_oracle(a));
    Acc acc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            acc.require(c[i] <= c[j], i * n + j,
                        [&] { return pair_msg(ctx.reduced[i], ctx.reduced[j]); });
    return acc;
}

// ---- derivative ----

inline Acc suite_degree_drop(const VerifyContext& ctx) {
    Acc acc;
    for (std::size_t i = 0; i < ctx.full.size(); ++i) {
        const OrdinalCNF& a = ctx.full[i];
        if (a.is_zero() || degree(a) == 0) continue;
        acc.require(degree(d(a)) == degree(a) - 1, i, [&] { return to_string(a); });
    }
    return acc;
}

inline Acc suite_d_order_preservation(const VerifyContext& ctx) {
    const std::size_t n = ctx.reduced.size();
    std::vector<OrdinalCNF> dv;
    dv.reserve(n);
    for (const OrdinalCNF& a : ctx.reduced) dv.push_back(d(a));
    Acc acc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            acc.require(dv[i] <= dv[j], i * n + j,
                        [&] { return pair_msg(ctx.reduced[i], ctx.reduced[j]); });
    return acc;
}

inline Acc suite_phi_l_omega_degree_map(const VerifyContext& ctx) {
    const OrdinalCNF w = OrdinalCNF::omega_power(1);
    return run_sharded(ctx.full.size(), ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i) {
            const OrdinalCNF& a = ctx.full[i];
            if (a.is_zero()) continue;
            const OrdinalCNF phi = phi_l_omega(a);
            acc.require(phi == OrdinalCNF::omega_power(degree(a)) &&
                            phi == condense_cnf_oracle(prod(w, a)),
                        i, [&] { return to_string(a); });
        }
    });
}

inline Acc suite_phi_l_omega_order_preservation(const VerifyContext& ctx) {
    const std::size_t n = ctx.reduced.size();
    std::vector<OrdinalCNF> pv;
    pv.reserve(n);
    for (const OrdinalCNF& a : ctx.reduced) pv.push_back(phi_l_omega(a));
    Acc acc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            acc.require(pv[i] <= pv[j], i * n + j,
                        [&] { return pair_msg(ctx.reduced[i], ctx.reduced[j]); });
    return acc;
}

inline Acc suite_preimage(const VerifyContext& ctx) {
    Acc acc;
    // Soundness: every described member maps back under d.
    for (std::size_t i = 0; i < ctx.reduced.size(); ++i) {
        const OrdinalCNF& a = ctx.reduced[i];
        if (a.is_zero()) continue;
        const PreimageSet p = i_preimage(a);
        for (const OrdinalCNF& f : p.fixed)
            acc.require(d(f) == a, i, [&] { return "fixed member of I(" + to_string(a) + ")"; });
        if (p.parametric_base) {
            for (Nat j = 1; j <= 8; ++j)
                acc.require(d(add(*p.parametric_base, OrdinalCNF::finite(j))) == a, i, [&] {
                    return "family member j=" + std::to_string(j) + " of I(" + to_string(a) + ")";
                });
        }
    }
    // Completeness: every enumerated preimage is described.
    const std::uint64_t base = acc.checks;
    for (std::size_t i = 0; i < ctx.full.size(); ++i) {
        const OrdinalCNF& b = ctx.full[i];
        if (b.is_zero()) continue;
        acc.require(i_preimage(d(b)).describes(b), base + i,
                    [&] { return to_string(b) + " not described by I(d(.))"; });
    }
    return acc;
}

inline Acc suite_limit_inverse(const VerifyContext& ctx) {
    Acc acc;
    for (std::size_t i = 0; i < ctx.full.size(); ++i) {
        const OrdinalCNF& a = ctx.full[i];
        if (classify(a) != OrdinalKind::Limit) continue;
        acc.require(d(i_limit(a)) == a, 2 * i, [&] { return to_string(a); });
        // i_limit inverts d exactly on limits whose least exponent is >= 2.
        if (a.terms().back().exponent >= 2) {
            acc.require(i_limit(d(a)) == a, 2 * i + 1, [&] { return to_string(a); });
        } else {
            bool rejected = false;
            try {
                (void)i_limit(d(a));
            } catch (const NotALimitError&) {
                rejected = true;
            }
            acc.require(rejected, 2 * i + 1,
                        [&] { return "d(" + to_string(a) + ") accepted by Ilim"; });
        }
    }
    return acc;
}

inline Acc suite_defect_dichotomy(const VerifyContext& ctx) {
    Acc acc;
    const std::size_t n = ctx.reduced.size();
    std::array<std::uint64_t, 10> case_hits{};  // [0] = left limit, [1..9] = successor cases
    auto proof_case = [](const OrdinalCNF& a, const OrdinalCNF& b) -> std::size_t {
        if (classify(a) == OrdinalKind::Limit) return 0;
        const Nat da = degree(a);
        const Nat db = degree(b);
        if (db >= 2) {
            if (da < db) return 1;
            if (da == db) return 2;
            return 3;
        }
        if (da >= 2) return db == 1 ? 4 : 5;
        if (da == 0) return db == 0 ? 6 : 7;
        return db == 0 ? 8 : 9;
    };
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) {
            const OrdinalCNF& a = ctx.reduced[i];
            const OrdinalCNF& b = ctx.reduced[j];
            const OrdinalCNF lhs = d(ctx.add_table[i][j]);
            const OrdinalCNF rhs = add(d(a), d(b));
            const bool equal = lhs == rhs;
            const bool plus_one = add(lhs, OrdinalCNF::finite(1)) == rhs;
            const DefectClass predicted = distribute_defect(a, b);
            acc.require(equal != plus_one, 2 * (i * n + j), [&] { return pair_msg(a, b); });
            acc.require(predicted == (equal ? DefectClass::Equal : DefectClass::PlusOne),
                        2 * (i * n + j) + 1, [&] { return "prediction for " + pair_msg(a, b); });
            ++case_hits[proof_case(a, b)];
        }
    // Coverage of each proof case, where the enumerated degrees can reach it.
    const Nat dmax = std::min<Nat>(3, ctx.bounds.max_degree);
    const std::array<Nat, 10> needs_degree = {0, 2, 2, 3, 2, 2, 0, 1, 1, 1};
    for (std::size_t c = 1; c <= 9; ++c) {
        if (dmax < needs_degree[c]) continue;
        acc.require(case_hits[c] > 0, 2 * n * n + c,
                    [&] { return "proof case " + std::to_string(c) + " never exercised"; });
    }
    return acc;
}

inline Acc suite_linear_combo(const VerifyContext& ctx) {
    std::vector<OrdinalCNF> limits;
    for (const OrdinalCNF& a : ctx.reduced)
        if (classify(a) == OrdinalKind::Limit && degree(a) >= 2) limits.push_back(a);
    const std::size_t n = limits.size();
    const Nat pmax = ctx.bounds.max_scalar;
    Acc rejections;
    for (const OrdinalCNF& bad :
         {OrdinalCNF::omega_power(1), OrdinalCNF::finite(3),
          add(OrdinalCNF::omega_power(2), OrdinalCNF::finite(1))}) {
        bool rejected = false;
        try {
            (void)d_linear_combo(1, bad, 1, bad);
        } catch (const PreconditionError&) {
            rejected = true;
        }
        rejections.require(rejected, rejections.checks,
                           [&] { return to_string(bad) + " accepted despite precondition"; });
    }
    Acc main = run_sharded(n, ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (Nat p = 1; p <= pmax; ++p)
                    for (Nat q = 1; q <= pmax; ++q) {
                        // d_linear_combo cross-checks the generic route, the
                        // linearity form and the case formulas internally.
                        const OrdinalCNF r = d_linear_combo(p, limits[i], q, limits[j]);
                        acc.require(
                            r == add(scale_left(p, d(limits[i])), scale_left(q, d(limits[j]))),
                            ((i * n + j) * pmax + p) * pmax + q,
                            [&] { return pair_msg(limits[i], limits[j]); });
                    }
    });
    main.merge(std::move(rejections));
    return main;
}

inline Acc suite_sum_distribution(const VerifyContext& ctx) {
    Acc acc;
    const Nat pmax = ctx.bounds.max_scalar;
    const std::vector<OrdinalCNF> small =
        enumerate_limits(std::min<Nat>(2, ctx.bounds.max_degree), std::min<Nat>(3, ctx.bounds.max_coeff));
    // Unscaled triples of limits.
    for (const OrdinalCNF& a : small)
        for (const OrdinalCNF& b : small)
            for (const OrdinalCNF& g : small)
                acc.require(d(add(add(a, b), g)) == add(add(d(a), d(b)), d(g)), acc.checks,
                            [&] { return triple_msg(a, b, g); });
    // Scaled sequences of length 1 and 2 over the reduced limits, length 3
    // over the small ones; d_sum_scaled verifies both expansions internally.
    std::vector<OrdinalCNF> reduced_limits;
    for (const OrdinalCNF& a : ctx.reduced)
        if (classify(a) == OrdinalKind::Limit) reduced_limits.push_back(a);
    auto check = [&acc](std::vector<std::pair<Nat, OrdinalCNF>> terms) {
        bool ok = true;
        std::string message;
        try {
            (void)d_sum_scaled(terms);
        } catch (const Error& e) {
            ok = false;
            message = e.what();
        }
        acc.require(ok, acc.checks, [&] { return message; });
    };
    for (const OrdinalCNF& a : reduced_limits)
        for (Nat p = 1; p <= pmax; ++p) check({{p, a}});
    for (const OrdinalCNF& a : reduced_limits)
        for (const OrdinalCNF& b : reduced_limits)
            for (Nat p = 1; p <= pmax; ++p)
                for (Nat q = 1; q <= pmax; ++q) check({{p, a}, {q, b}});
    for (const OrdinalCNF& a : small)
        for (const OrdinalCNF& b : small)
            for (const OrdinalCNF& g : small)
                for (Nat p = 1; p <= pmax; ++p)
                    for (Nat q = 1; q <= pmax; ++q)
                        for (Nat r = 1; r <= pmax; ++r) check({{p, a}, {q, b}, {r, g}});
    return acc;
}

inline Acc suite_right_scalar_invariance(const VerifyContext& ctx) {
    const Nat pmax = ctx.bounds.max_scalar;
    return run_sharded(ctx.full.size(), ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i)
            for (Nat p = 1; p <= pmax; ++p)
                acc.require(d_right_scale_invariance(ctx.full[i], p), i * pmax + p, [&] {
                    return "alpha=" + to_string(ctx.full[i]) + ", p=" + std::to_string(p);
                });
    });
}

inline Acc suite_representation_cases(const VerifyContext& ctx) {
    Acc acc;
    for (std::size_t i = 0; i < ctx.full.size(); ++i) {
        const OrdinalCNF& a = ctx.full[i];
        const OrdinalCNF da = d(a);
        acc.require(phi_r_omega(phi_r_omega(a)) == a && phi_r_omega(da) == da &&
                        d(phi_r_omega(a)) == da,
                    i, [&] { return to_string(a); });
    }
    const auto witness = homomorphism_witness();
    const OrdinalCNF& w2 = std::get<0>(witness);
    const OrdinalCNF& first = std::get<1>(witness);
    const OrdinalCNF& second = std::get<2>(witness);
    acc.require(w2 == OrdinalCNF::omega_power(2) && first == OrdinalCNF::omega_power(1) &&
                    second == OrdinalCNF::finite(1),
                ctx.full.size(), [&] {
                    return "witness (" + to_string(w2) + ", " + to_string(first) + ", " +
                           to_string(second) + ")";
                });
    return acc;
}

inline Acc suite_iteration_agreement(const VerifyContext& ctx) {
    return run_sharded(ctx.full.size(), ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i) {
            const OrdinalCNF& a = ctx.full[i];
            OrdinalCNF by_d = a;
            OrdinalCNF by_oracle = a;
            for (Nat n = 1; n <= 5; ++n) {
                by_d = d(by_d);
                by_oracle = condense_cnf_oracle(by_oracle);
                acc.require(by_d == by_oracle, i * 5 + n, [&] {
                    return "alpha=" + to_string(a) + ", n=" + std::to_string(n);
                });
            }
            if (!a.is_zero()) {
                const Nat deg = degree(a);
                const OrdinalCNF settled = d_iter(a, deg);
                acc.require(!settled.is_zero() && degree(settled) == 0 &&
                                d_iter(a, deg + 1) == OrdinalCNF::finite(1),
                            ctx.full.size() * 5 + i, [&] { return to_string(a); });
            }
        }
    });
}

inline Acc suite_scalar_derivative_laws(const VerifyContext& ctx) {
    const Nat pmax = ctx.bounds.max_scalar;
    return run_sharded(ctx.full.size(), ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i) {
            const OrdinalCNF& a = ctx.full[i];
            if (a.is_zero() || degree(a) == 0) continue;
            const Nat n = degree(a);
            const OrdinalCNF da = d(a);
            for (Nat p = 1; p <= pmax; ++p) {
                const OrdinalCNF lhs = d(scale_left(p, a));
                const OrdinalCNF head =
                    OrdinalCNF::omega_power(n - 1, checked_mul(p - 1, a.leading().coefficient));
                const OrdinalCNF expansion = add(head, da);
                if (n >= 2) {
                    acc.require(lhs == scale_left(p, da) && lhs == expansion, i * pmax + p, [&] {
                        return "alpha=" + to_string(a) + ", p=" + std::to_string(p);
                    });
                } else {
                    // Degree 1: the expansion is exact; p*d(a) may overshoot
                    // in the constant only, by (p-1) when a is a successor.
                    const OrdinalCNF scaled = scale_left(p, da);
                    const Nat defect = (p - 1) * (a.constant_term() >= 1 ? 1 : 0);
                    acc.require(lhs == expansion &&
                                    scaled.limit_part() == lhs.limit_part() &&
                                    scaled.constant_term() ==
                                        checked_add(lhs.constant_term(), defect),
                                i * pmax + p, [&] {
                                    return "alpha=" + to_string(a) + ", p=" + std::to_string(p);
                                });
                }
            }
        }
    });
}

inline Acc suite_parser_roundtrip(const VerifyContext& ctx) {
    return run_sharded(ctx.full.size(), ctx.shards, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        for (std::size_t i = lo; i < hi; ++i) {
            const std::string text = to_string(ctx.full[i]);
            const EvalResult r = eval_string(text);
            acc.require(r.kind() == EvalResult::Kind::Ordinal && r.ordinal() == ctx.full[i], i,
                        [&] { return text; });
        }
    });
}

}  // namespace verify_detail

/// Every registered property suite, in a fixed order.
inline std::vector<Suite> verification_suites() {
    using namespace verify_detail;
    return {
        {"cnf/add-right-strict-monotonicity", suite_add_right_strict},
        {"cnf/add-left-weak-monotonicity", suite_add_left_weak},
        {"cnf/prod-left-strict-monotonicity", suite_prod_left_strict},
        {"cnf/prod-right-weak-monotonicity", suite_prod_right_weak},
        {"cnf/associativity", suite_associativity},
        {"cnf/scale-left-iterated-add", suite_scale_left_iterated_add},
        {"cnf/initial-segments", suite_initial_segments},
        {"cnf/compare-vs-additive-order", suite_compare_vs_additive_order},
        {"cnf/canonical-closure", suite_canonical_closure},
        {"band/laws", suite_band_laws},
        {"band/table-vs-condensation", suite_band_table_vs_condensation},
        {"band/poset", suite_band_poset},
        {"oracle/term-roundtrip", suite_term_roundtrip},
        {"oracle/closed-form-agreement", suite_oracle_agreement},
        {"oracle/right-absorption", suite_right_absorption},
        {"oracle/block-sum-distribution", suite_block_sum_distribution},
        {"oracle/weak-order-preservation", suite_condensation_order_preservation},
        {"derivative/degree-drop", suite_degree_drop},
        {"derivative/weak-order-preservation", suite_d_order_preservation},
        {"derivative/phi-l-omega-degree-map", suite_phi_l_omega_degree_map},
        {"derivative/phi-l-omega-order-preservation", suite_phi_l_omega_order_preservation},
        {"derivative/preimage", suite_preimage},
        {"derivative/limit-inverse", suite_limit_inverse},
        {"derivative/defect-dichotomy", suite_defect_dichotomy},
        {"derivative/linear-combo", suite_linear_combo},
        {"derivative/sum-distribution", suite_sum_distribution},
        {"derivative/right-scalar-invariance", suite_right_scalar_invariance},
        {"derivative/representation-cases", suite_representation_cases},
        {"derivative/iteration-agreement", suite_iteration_agreement},
        {"derivative/scalar-derivative-laws", suite_scalar_derivative_laws},
        {"cli/parser-roundtrip", suite_parser_roundtrip},
    };
}

/// Run every suite at the given bounds, optionally sharding the enumeration
/// loops across worker threads. Failures are data, never exceptions.
inline VerificationReport run_verify(const VerifyBounds& bounds = {}, unsigned shard_count = 1) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport report;
    report.bounds = bounds;
    report.shards = std::max(1u, shard_count);
    const VerifyContext ctx = make_verify_context(bounds, report.shards);
    for (const Suite& suite : verification_suites()) {
        const auto s0 = std::chrono::steady_clock::now();
        verify_detail::Acc acc = suite.run(ctx);
        const auto s1 = std::chrono::steady_clock::now();
        SuiteResult result;
        result.name = suite.name;
        result.checks = acc.checks;
        result.failures = acc.failures;
        result.first_counterexample = acc.first_message;
        result.millis = std::chrono::duration<double, std::milli>(s1 - s0).count();
        report.suites.push_back(std::move(result));
    }
    report.wall_millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace ordcalc
