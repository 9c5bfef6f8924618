#include <catch2/catch_amalgamated.hpp>

#include "ordcalc/enumerate.hpp"
#include "ordcalc/ordinal.hpp"

using namespace ordcalc;

namespace {

OrdinalCNF cnf(std::vector<std::pair<Nat, Nat>> pairs) { return make_cnf(std::move(pairs)); }

const OrdinalCNF w = OrdinalCNF::omega_power(1);

}  // namespace

TEST_CASE("make_cnf canonicalizes input pairs") {
    REQUIRE(cnf({}) == OrdinalCNF::zero());
    REQUIRE(cnf({{2, 3}, {0, 5}}) == cnf({{0, 5}, {2, 3}}));
    REQUIRE(cnf({{1, 0}, {0, 2}}) == OrdinalCNF::finite(2));  // zero coefficients dropped
    REQUIRE_THROWS_AS(cnf({{1, 2}, {1, 3}}), DuplicateExponentError);
    REQUIRE_THROWS_AS(OrdinalCNF({CnfTerm{1, 2}, CnfTerm{2, 1}}), InvariantViolation);
    REQUIRE_THROWS_AS(OrdinalCNF({CnfTerm{1, 0}}), InvariantViolation);
}

TEST_CASE("degree and classification") {
    REQUIRE(degree(cnf({{2, 3}, {0, 5}})) == 2);
    REQUIRE(degree(OrdinalCNF::finite(7)) == 0);
    REQUIRE(degree(w) == 1);
    REQUIRE_THROWS_AS(degree(OrdinalCNF::zero()), ZeroHasNoDegreeError);

    REQUIRE(classify(OrdinalCNF::zero()) == OrdinalKind::Zero);
    REQUIRE(classify(cnf({{1, 2}, {0, 3}})) == OrdinalKind::Successor);
    REQUIRE(classify(cnf({{2, 2}, {1, 1}})) == OrdinalKind::Limit);
}

TEST_CASE("comparison is the ordinal order") {
    REQUIRE(compare(w, w) == std::strong_ordering::equal);
    REQUIRE(compare(w, add(w, OrdinalCNF::finite(1))) == std::strong_ordering::less);
    // 2w+3 < 3w: frozen from the term expansion; 2w+3 embeds into the first
    // three copies of w inside 3w, with room to spare.
    REQUIRE(compare(cnf({{1, 2}, {0, 3}}), cnf({{1, 3}})) == std::strong_ordering::less);
    REQUIRE(cnf({{2, 1}}) > cnf({{1, 3}, {0, 4}}));
    REQUIRE(OrdinalCNF::zero() < OrdinalCNF::finite(1));
}

TEST_CASE("addition absorbs lower terms on the left") {
    REQUIRE(add(OrdinalCNF::finite(1), w) == w);
    REQUIRE(add(w, OrdinalCNF::finite(1)) == cnf({{1, 1}, {0, 1}}));
    REQUIRE(add(cnf({{2, 3}, {1, 2}}), cnf({{2, 2}, {0, 5}})) == cnf({{2, 5}, {0, 5}}));
    REQUIRE(add(OrdinalCNF::zero(), w) == w);
    REQUIRE(add(w, OrdinalCNF::zero()) == w);
}

TEST_CASE("scale_left multiplies the leading coefficient only") {
    REQUIRE(scale_left(3, cnf({{2, 1}, {1, 1}, {0, 1}})) == cnf({{2, 3}, {1, 1}, {0, 1}}));
    const OrdinalCNF a = cnf({{3, 2}, {1, 4}});
    REQUIRE(scale_left(1, a) == a);
    REQUIRE(scale_left(0, cnf({{1, 5}})) == OrdinalCNF::zero());
}

TEST_CASE("prod replaces each point of the left factor with the right") {
    REQUIRE(prod(OrdinalCNF::finite(2), w) == cnf({{1, 2}}));          // 2*w = w + w
    REQUIRE(prod(w, OrdinalCNF::finite(2)) == w);                      // w*2 = w
    REQUIRE(prod(w, cnf({{2, 3}, {1, 2}, {0, 5}})) == cnf({{3, 1}}));  // w*(3w^2+2w+5) = w^3
    REQUIRE(prod(cnf({{2, 1}, {0, 1}}), w) == cnf({{3, 1}, {1, 1}}));  // (w^2+1)*w = w^3+w
    REQUIRE(prod(OrdinalCNF::zero(), w) == OrdinalCNF::zero());
    REQUIRE(prod(w, OrdinalCNF::zero()) == OrdinalCNF::zero());
}

TEST_CASE("scale_right multiplies the constant term only") {
    REQUIRE(scale_right(cnf({{1, 2}, {0, 3}}), 4) == cnf({{1, 2}, {0, 12}}));
    const OrdinalCNF a = cnf({{2, 3}, {0, 1}});
    REQUIRE(scale_right(a, 1) == a);
    REQUIRE(scale_right(cnf({{2, 1}}), 7) == cnf({{2, 1}}));
    REQUIRE(scale_right(a, 0) == OrdinalCNF::zero());
    // scale_right must agree with prod against a finite right factor.
    for (Nat p = 1; p <= 5; ++p)
        for (const OrdinalCNF& x : enumerate_cnf(2, 3))
            REQUIRE(scale_right(x, p) == prod(x, OrdinalCNF::finite(p)));
}

TEST_CASE("subtract_first is the left difference by one") {
    REQUIRE(subtract_first(OrdinalCNF::finite(5)) == OrdinalCNF::finite(4));
    REQUIRE(subtract_first(w) == w);
    // Removing the first point of an infinite successor does not change its
    // order type; only 1 + result = argument holds, not result + 1.
    REQUIRE(subtract_first(cnf({{2, 1}, {0, 1}})) == cnf({{2, 1}, {0, 1}}));
    REQUIRE_THROWS_AS(subtract_first(OrdinalCNF::zero()), ZeroArgumentError);
    for (const OrdinalCNF& a : enumerate_cnf(3, 3)) {
        if (a.is_zero()) continue;
        REQUIRE(add(OrdinalCNF::finite(1), subtract_first(a)) == a);
    }
}

TEST_CASE("checked arithmetic reports overflow instead of wrapping") {
    const Nat huge = std::numeric_limits<Nat>::max() - 1;
    REQUIRE_THROWS_AS(scale_left(3, cnf({{1, huge}})), OverflowError);
    REQUIRE_THROWS_AS(add(cnf({{1, huge}}), cnf({{1, huge}})), OverflowError);
    REQUIRE_THROWS_AS(scale_right(cnf({{0, huge}}), 5), OverflowError);
}

TEST_CASE("to_string renders the canonical text form") {
    REQUIRE(to_string(cnf({{2, 3}, {1, 1}, {0, 4}})) == "3*w^2 + w + 4");
    REQUIRE(to_string(w) == "w");
    REQUIRE(to_string(OrdinalCNF::zero()) == "0");
    REQUIRE(to_string(cnf({{3, 1}, {1, 2}})) == "w^3 + 2*w");
}

TEST_CASE("enumeration is ascending and complete") {
    const auto xs = enumerate_cnf(4, 5);
    REQUIRE(xs.size() == 7776);  // 6^5 tuples, 7775 nonzero plus 0
    REQUIRE(xs.front() == OrdinalCNF::zero());
    for (std::size_t i = 1; i < xs.size(); ++i) REQUIRE(xs[i - 1] < xs[i]);

    const auto small = enumerate_cnf(3, 3);
    REQUIRE(small.size() == 256);
}
