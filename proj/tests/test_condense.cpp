#include <catch2/catch_amalgamated.hpp>

#include "ordcalc/condense.hpp"
#include "ordcalc/enumerate.hpp"

using namespace ordcalc;

namespace {

OrdinalCNF cnf(std::vector<std::pair<Nat, Nat>> pairs) { return make_cnf(std::move(pairs)); }

const LinTerm gw = LinTerm::gen(Generator::Omega);
const LinTerm gws = LinTerm::gen(Generator::OmegaStar);
const LinTerm gz = LinTerm::gen(Generator::Zeta);

}  // namespace

TEST_CASE("term_of_cnf expands coefficients into repeated summands") {
    REQUIRE(term_of_cnf(OrdinalCNF::zero()) == LinTerm::zero());
    REQUIRE(term_of_cnf(cnf({{1, 2}})) == LinTerm::sum({gw, gw}));
    REQUIRE(term_of_cnf(cnf({{2, 1}, {0, 3}})) ==
            LinTerm::sum({LinTerm::prod(gw, gw), LinTerm::fin(3)}));
}

TEST_CASE("eval_term folds sums and products") {
    REQUIRE(eval_term(LinTerm::sum({gw, LinTerm::fin(1)})) == cnf({{1, 1}, {0, 1}}));
    REQUIRE(eval_term(LinTerm::prod(LinTerm::fin(2), gw)) == cnf({{1, 2}}));
    REQUIRE(eval_term(LinTerm::prod(gw, LinTerm::fin(2))) == cnf({{1, 1}}));
    REQUIRE_THROWS_AS(eval_term(gws), NotWellOrderedError);
    REQUIRE_THROWS_AS(eval_term(LinTerm::sum({gw, gz})), NotWellOrderedError);
}

TEST_CASE("generators and finite blocks condense to a point") {
    REQUIRE(condense_term(LinTerm::fin(7)) == LinTerm::fin(1));
    REQUIRE(condense_term(gw) == LinTerm::fin(1));
    REQUIRE(condense_term(gws) == LinTerm::fin(1));
    REQUIRE(condense_term(gz) == LinTerm::fin(1));
    REQUIRE(condense_term(LinTerm::zero()) == LinTerm::zero());
}

TEST_CASE("a generator on the right of a product is absorbed") {
    REQUIRE(condense_term(LinTerm::prod(gw, gws)) == gw);
    REQUIRE(condense_term(LinTerm::prod(gws, gw)) == gws);
    REQUIRE(condense_term(LinTerm::prod(LinTerm::fin(3), gz)) == LinTerm::fin(3));
}

TEST_CASE("boundary classes merge where a last element meets a first") {
    // w* + w is a single class, the integers.
    REQUIRE(condense_term(LinTerm::sum({gws, gw})) == LinTerm::fin(1));
    // w + w* keeps two classes: no last element on the left part.
    REQUIRE(eval_term(condense_term(LinTerm::sum({gw, gws}))) == OrdinalCNF::finite(2));
    REQUIRE(eval_term(condense_term(LinTerm::sum({gws, gws}))) == OrdinalCNF::finite(2));
    // w* + 2 + w collapses entirely.
    REQUIRE(eval_term(condense_term(LinTerm::sum({gws, LinTerm::fin(2), gw}))) ==
            OrdinalCNF::finite(1));
    // 2 + z stays two classes: z has no first element.
    REQUIRE(eval_term(condense_term(LinTerm::sum({LinTerm::fin(2), gz}))) ==
            OrdinalCNF::finite(2));
    // Within the well-ordered fragment: w^2 + 3 + w^2 condenses like 2w^2.
    const LinTerm ww = LinTerm::prod(gw, gw);
    REQUIRE(eval_term(condense_term(LinTerm::sum({ww, LinTerm::fin(3), ww}))) == cnf({{1, 2}}));
}

TEST_CASE("the merge drops the first class of the right part") {
    // 2 + (w+1)*w = 2 + w^2 + w; its condensation is w + 1, and the finite
    // prefix fuses into the first copy of w.
    const LinTerm t = LinTerm::sum(
        {LinTerm::fin(2), LinTerm::prod(LinTerm::sum({gw, LinTerm::fin(1)}), gw)});
    REQUIRE(eval_term(condense_term(t)) == cnf({{1, 1}, {0, 1}}));
}

TEST_CASE("terms outside the supported scattered fragment are rejected") {
    const LinTerm ww = LinTerm::prod(gw, gw);
    REQUIRE_THROWS_AS(condense_term(LinTerm::sum({ww, gz, ww})), UnsupportedTermError);
    REQUIRE_THROWS_AS(condense_term(LinTerm::prod(gws, LinTerm::fin(2))), UnsupportedTermError);
}

TEST_CASE("oracle on Cantor normal forms") {
    REQUIRE(condense_cnf_oracle(cnf({{2, 1}})) == cnf({{1, 1}}));  // w^2 -> w
    REQUIRE(condense_cnf_oracle(OrdinalCNF::zero()) == OrdinalCNF::zero());
    REQUIRE(condense_cnf_oracle(cnf({{2, 3}, {1, 2}, {0, 5}})) == cnf({{1, 3}, {0, 3}}));
}

TEST_CASE("iterated condensation") {
    REQUIRE(iterate_condense(cnf({{3, 1}}), 3) == OrdinalCNF::finite(1));
    const OrdinalCNF a = cnf({{2, 2}, {0, 1}});
    REQUIRE(iterate_condense(a, 0) == a);
    REQUIRE(iterate_condense(OrdinalCNF::finite(5), 2) == OrdinalCNF::finite(1));
}

TEST_CASE("round trip and absorption over a small enumeration") {
    const OrdinalCNF w = OrdinalCNF::omega_power(1);
    for (const OrdinalCNF& a : enumerate_cnf(3, 3)) {
        REQUIRE(eval_term(term_of_cnf(a)) == a);
        REQUIRE(condense_cnf_oracle(prod(a, w)) == a);
    }
}

TEST_CASE("rewrite traces record one rule per line") {
    std::vector<std::string> trace;
    condense_cnf_oracle(cnf({{2, 1}, {0, 2}}), &trace);
    REQUIRE(!trace.empty());
    bool saw_absorption = false;
    for (const std::string& line : trace)
        if (line.find("absorbed") != std::string::npos) saw_absorption = true;
    REQUIRE(saw_absorption);
}
