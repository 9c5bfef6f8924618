#include <catch2/catch_amalgamated.hpp>

#include "ordcalc/parser.hpp"

using namespace ordcalc;

TEST_CASE("operator precedence and associativity") {
    // 3*w^2 + 2*w + 5 parses as ((3*w^2) + (2*w)) + 5.
    const Expr e = parse("3*w^2 + 2*w + 5");
    REQUIRE(e.kind() == Expr::Kind::Add);
    REQUIRE(e.right().kind() == Expr::Kind::Number);
    REQUIRE(e.right().number() == 5);
    const Expr& first = e.left().left();
    REQUIRE(first.kind() == Expr::Kind::Mul);
    REQUIRE(first.left().number() == 3);
    REQUIRE(first.right().kind() == Expr::Kind::OmegaPow);
    REQUIRE(first.right().exponent() == 2);
}

TEST_CASE("calls, band constants and parentheses") {
    const Expr call = parse("d(w^2)");
    REQUIRE(call.kind() == Expr::Kind::Call);
    REQUIRE(call.call_name() == "d");
    REQUIRE(call.args().size() == 1);

    const Expr band = parse("timesF(w, zeta)");
    REQUIRE(band.args().size() == 2);
    REQUIRE(band.args()[1].kind() == Expr::Kind::BandConst);
    REQUIRE(band.args()[1].band() == BandElement::Zeta);

    REQUIRE(parse("omega_star").band() == BandElement::OmegaStar);
    REQUIRE(parse("z").band() == BandElement::Zeta);
    REQUIRE(parse("(w + 1)").kind() == Expr::Kind::Add);
}

TEST_CASE("a glued star is the reverse order unless a factor follows") {
    REQUIRE(parse("w*").kind() == Expr::Kind::BandConst);
    REQUIRE(parse("w* + w").left().band() == BandElement::OmegaStar);
    REQUIRE(parse("condF(w*+w)").args()[0].left().band() == BandElement::OmegaStar);
    REQUIRE(parse("w*w").kind() == Expr::Kind::Mul);
    REQUIRE(parse("w*2").kind() == Expr::Kind::Mul);
    REQUIRE(parse("w * 2").kind() == Expr::Kind::Mul);
    // "w* *w" multiplies the reverse order by w.
    const Expr e = parse("w* *w");
    REQUIRE(e.kind() == Expr::Kind::Mul);
    REQUIRE(e.left().band() == BandElement::OmegaStar);
}

TEST_CASE("syntax errors carry a 1-based column inside the input") {
    const std::vector<std::string> bad = {"3*)w", "w^", "d(w", "1 + + 2", "5 $ 3", "", "w^x"};
    for (const std::string& input : bad) {
        try {
            parse(input);
            FAIL("expected a syntax error for: " << input);
        } catch (const SyntaxError& e) {
            REQUIRE(e.column >= 1);
            REQUIRE(e.column <= input.size() + 1);
            REQUIRE(!e.expected.empty());
        }
    }
}

TEST_CASE("numbers out of range are rejected, not wrapped") {
    REQUIRE_THROWS_AS(parse("999999999999999999999999999999"), SyntaxError);
}
