#include <catch2/catch_amalgamated.hpp>

#include "ordcalc/condense.hpp"
#include "ordcalc/derivative.hpp"
#include "ordcalc/enumerate.hpp"

using namespace ordcalc;

namespace {

OrdinalCNF cnf(std::vector<std::pair<Nat, Nat>> pairs) { return make_cnf(std::move(pairs)); }

const OrdinalCNF w = OrdinalCNF::omega_power(1);

}  // namespace

TEST_CASE("derivative shifts exponents down with a successor correction") {
    REQUIRE(d(cnf({{2, 1}})) == w);
    REQUIRE(d(cnf({{2, 3}, {1, 2}, {0, 5}})) == cnf({{1, 3}, {0, 3}}));
    REQUIRE(d(OrdinalCNF::finite(7)) == OrdinalCNF::finite(1));
    REQUIRE(d(OrdinalCNF::zero()) == OrdinalCNF::zero());
    REQUIRE(d(cnf({{1, 1}, {0, 1}})) == OrdinalCNF::finite(2));
}

TEST_CASE("derivative agrees with the condensation oracle") {
    for (const OrdinalCNF& a : enumerate_cnf(3, 3)) REQUIRE(d(a) == condense_cnf_oracle(a));
}

TEST_CASE("left multiplication by w is the degree map") {
    REQUIRE(phi_l_omega(cnf({{2, 5}, {0, 3}})) == cnf({{2, 1}}));
    REQUIRE(phi_l_omega(OrdinalCNF::finite(7)) == OrdinalCNF::finite(1));
    REQUIRE(phi_l_omega(w) == w);
    REQUIRE(phi_l_omega(OrdinalCNF::zero()) == OrdinalCNF::zero());
    for (const OrdinalCNF& a : enumerate_cnf(3, 3)) {
        if (a.is_zero()) continue;
        REQUIRE(phi_l_omega(a) == condense_cnf_oracle(prod(w, a)));
    }
}

TEST_CASE("right multiplication by w is the identity") {
    const OrdinalCNF a = cnf({{2, 1}, {0, 1}});
    REQUIRE(phi_r_omega(a) == a);
    REQUIRE(phi_r_omega(OrdinalCNF::zero()) == OrdinalCNF::zero());
    REQUIRE(phi_r_omega(cnf({{1, 3}})) == cnf({{1, 3}}));
}

TEST_CASE("iterated derivative") {
    REQUIRE(d_iter(cnf({{3, 1}, {1, 2}}), 2) == cnf({{1, 1}, {0, 1}}));
    const OrdinalCNF a = cnf({{2, 2}, {1, 1}});
    REQUIRE(d_iter(a, 0) == a);
    REQUIRE(d_iter(OrdinalCNF::finite(4), 1) == OrdinalCNF::finite(1));
    for (const OrdinalCNF& x : enumerate_cnf(2, 2))
        for (Nat n = 0; n <= 4; ++n) REQUIRE(d_iter(x, n) == iterate_condense(x, n));
}

TEST_CASE("preimage descriptions split on the constant term") {
    // No constant: a single preimage, the exponent upshift.
    const PreimageSet p0 = i_preimage(cnf({{1, 2}}));
    REQUIRE(p0.fixed == std::vector<OrdinalCNF>{cnf({{2, 2}})});
    REQUIRE(!p0.parametric_base.has_value());

    // Constant 1: the upshift ends in w, plus the family base + j.
    const PreimageSet p1 = i_preimage(cnf({{1, 1}, {0, 1}}));
    REQUIRE(p1.fixed == std::vector<OrdinalCNF>{cnf({{2, 1}, {1, 1}})});
    REQUIRE(p1.parametric_base == cnf({{2, 1}}));

    // Constant k > 1 at degree 0.
    const PreimageSet p3 = i_preimage(OrdinalCNF::finite(3));
    REQUIRE(p3.fixed == std::vector<OrdinalCNF>{cnf({{1, 3}})});
    REQUIRE(p3.parametric_base == cnf({{1, 2}}));

    // Constant 1 at degree 0: every positive natural, plus w itself.
    const PreimageSet pk = i_preimage(OrdinalCNF::finite(1));
    REQUIRE(pk.fixed == std::vector<OrdinalCNF>{w});
    REQUIRE(pk.parametric_base == OrdinalCNF::zero());
    REQUIRE(pk.describes(OrdinalCNF::finite(6)));

    REQUIRE_THROWS_AS(i_preimage(OrdinalCNF::zero()), ZeroArgumentError);
}

TEST_CASE("preimage soundness and completeness on a small enumeration") {
    const auto xs = enumerate_cnf(3, 3);
    for (const OrdinalCNF& a : xs) {
        if (a.is_zero()) continue;
        const PreimageSet p = i_preimage(a);
        for (const OrdinalCNF& f : p.fixed) REQUIRE(d(f) == a);
        if (p.parametric_base)
            for (Nat j = 1; j <= 8; ++j)
                REQUIRE(d(add(*p.parametric_base, OrdinalCNF::finite(j))) == a);
    }
    for (const OrdinalCNF& b : xs) {
        if (b.is_zero()) continue;
        REQUIRE(i_preimage(d(b)).describes(b));
    }
}

TEST_CASE("the antiderivative inverts d on limits") {
    REQUIRE(i_limit(cnf({{2, 2}, {1, 1}})) == cnf({{3, 2}, {2, 1}}));
    REQUIRE(i_limit(w) == cnf({{2, 1}}));
    REQUIRE_THROWS_AS(i_limit(OrdinalCNF::finite(5)), NotALimitError);
    REQUIRE_THROWS_AS(i_limit(OrdinalCNF::zero()), NotALimitError);
    for (const OrdinalCNF& a : enumerate_cnf(3, 3)) {
        if (classify(a) != OrdinalKind::Limit) continue;
        REQUIRE(d(i_limit(a)) == a);
    }
}

TEST_CASE("defect classification matches the computed relation") {
    REQUIRE(distribute_defect(w, OrdinalCNF::finite(5)) == DefectClass::Equal);
    REQUIRE(distribute_defect(OrdinalCNF::finite(3), OrdinalCNF::finite(4)) ==
            DefectClass::PlusOne);
    REQUIRE(distribute_defect(cnf({{1, 1}, {0, 1}}), cnf({{2, 1}})) == DefectClass::Equal);
    REQUIRE(distribute_defect(cnf({{2, 1}, {0, 1}}), cnf({{1, 1}, {0, 1}})) ==
            DefectClass::PlusOne);
    REQUIRE_THROWS_AS(distribute_defect(OrdinalCNF::zero(), w), ZeroArgumentError);
    REQUIRE(distribute_defect(OrdinalCNF::zero(), w, /*allow_zero=*/true) == DefectClass::Equal);

    for (const OrdinalCNF& a : enumerate_cnf(2, 3)) {
        for (const OrdinalCNF& b : enumerate_cnf(2, 3)) {
            if (a.is_zero() || b.is_zero()) continue;
            const OrdinalCNF lhs = d(add(a, b));
            const OrdinalCNF rhs = add(d(a), d(b));
            const bool equal = lhs == rhs;
            REQUIRE(equal != (add(lhs, OrdinalCNF::finite(1)) == rhs));
            REQUIRE(distribute_defect(a, b) ==
                    (equal ? DefectClass::Equal : DefectClass::PlusOne));
        }
    }
}

TEST_CASE("linearity on limits of degree at least two") {
    REQUIRE(d_linear_combo(2, cnf({{2, 1}}), 3, cnf({{2, 1}, {1, 1}})) == cnf({{1, 5}, {0, 1}}));
    REQUIRE(d_linear_combo(1, cnf({{3, 1}}), 1, cnf({{2, 1}})) == cnf({{2, 1}, {1, 1}}));
    REQUIRE(d_linear_combo(2, cnf({{2, 1}}), 2, cnf({{3, 1}})) == cnf({{2, 2}}));
    REQUIRE_THROWS_AS(d_linear_combo(2, w, 2, cnf({{2, 1}})), PreconditionError);
    REQUIRE_THROWS_AS(d_linear_combo(0, cnf({{2, 1}}), 1, cnf({{2, 1}})), PreconditionError);
    REQUIRE_THROWS_AS(d_linear_combo(1, cnf({{2, 1}, {0, 1}}), 1, cnf({{2, 1}})),
                      PreconditionError);
}

TEST_CASE("derivative of scaled sums of limits") {
    REQUIRE(d_sum_scaled({{1, w}, {1, cnf({{2, 1}})}, {1, w}}) == cnf({{1, 1}, {0, 1}}));
    REQUIRE(d_sum_scaled({{2, cnf({{2, 1}})}}) == cnf({{1, 2}}));
    REQUIRE(d_sum_scaled({{3, w}}) == OrdinalCNF::finite(3));
    REQUIRE_THROWS_AS(d_sum_scaled({{1, OrdinalCNF::finite(2)}}), PreconditionError);
    REQUIRE_THROWS_AS(d_sum_scaled({}), PreconditionError);
}

TEST_CASE("right scalar factors do not change the derivative") {
    REQUIRE(d_right_scale_invariance(cnf({{1, 2}, {0, 3}}), 5));
    REQUIRE(d_right_scale_invariance(cnf({{2, 1}}), 2));
    REQUIRE(d_right_scale_invariance(cnf({{2, 1}, {0, 4}}), 1));
    REQUIRE_THROWS_AS(d_right_scale_invariance(w, 0), PreconditionError);
}

TEST_CASE("the composition defect has a canonical witness") {
    const auto [a, first, second] = homomorphism_witness();
    REQUIRE(a == cnf({{2, 1}}));
    REQUIRE(first == w);
    REQUIRE(second == OrdinalCNF::finite(1));
    // Degree 0 and 1 inputs settle at the fixed point 1 and witness nothing.
    REQUIRE(d(d(w)) == d(w));
    REQUIRE(d(d(OrdinalCNF::finite(9))) == d(OrdinalCNF::finite(9)));
}
