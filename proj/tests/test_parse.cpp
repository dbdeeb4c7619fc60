#include "mstar/expr.hpp"
#include "mstar/parse.hpp"
#include "mstar/random.hpp"

#include <catch2/catch.hpp>

using namespace mstar;

TEST_CASE("grammar examples") {
    Expr psq = parse_expr("p1^2+p2^2+p3^2");
    CHECK(psq.num_terms() == 3);
    CHECK(psq == Expr::p(1).pow(2) + Expr::p(2).pow(2) + Expr::p(3).pow(2));

    Expr exps = parse_expr("exp(i*(1*p1))+exp(i*(1*p2))");
    CHECK(exps.num_terms() == 2);
    CHECK(exps == Expr::exp_ip({mpq_class(1), mpq_class(0), mpq_class(0)}) +
                      Expr::exp_ip({mpq_class(0), mpq_class(1), mpq_class(0)}));

    CHECK(parse_expr("q1*p1 - p1*q1").is_zero());
}

TEST_CASE("rationals, i, parentheses, powers") {
    CHECK(parse_expr("3/6") == Expr::rational(1, 2));
    CHECK(parse_expr("-3/6") == Expr::rational(-1, 2));
    CHECK(parse_expr("i*i") == Expr::rational(-1));
    CHECK(parse_expr("(q1+p1)^2") ==
          Expr::q(1).pow(2) + (Expr::q(1) * Expr::p(1)).scaled(Scalar(2)) +
              Expr::p(1).pow(2));
    CHECK(parse_expr("2*i*q1") == Expr::q(1).scaled(Scalar(0, mpq_class(2))));
    CHECK(parse_expr("exp(i*(1/2*p1+-1/3*p2))") ==
          Expr::exp_ip({mpq_class(1, 2), mpq_class(-1, 3), mpq_class(0)}));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("q4"), ParseError);
    CHECK_THROWS_AS(parse_expr("q1^"), ParseError);
    CHECK_THROWS_AS(parse_expr("q1^(1/2)"), ParseError);
    CHECK_THROWS_AS(parse_expr("q1+"), ParseError);
    CHECK_THROWS_AS(parse_expr("1/0"), ParseError);
    CHECK_THROWS_AS(parse_expr("exp(q1)"), ParseError);
    CHECK_THROWS_AS(parse_expr("exp(i*(1*q1))"), ParseError);
    CHECK_THROWS_AS(parse_expr("exp(i*(p1))"), ParseError);

    try {
        parse_expr("q1 + q9");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("exp argument must be a p-linear combination") {
    try {
        parse_expr("exp(i*(2*q2))");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("momentum") != std::string::npos);
    }
}

TEST_CASE("parse-print-parse is a fixpoint") {
    Rng rng(201);
    for (int k = 0; k < 60; ++k) {
        Expr e = rng.expr(4, 3, true, true, true);
        std::string printed = e.str();
        Expr reparsed = parse_expr(printed);
        CHECK(reparsed == e);
        CHECK(reparsed.str() == printed);
    }
    // negative leading coefficients and mixed complex coefficients
    Expr tricky = Expr::q(1).scaled(Scalar(-1)) +
                  Expr::p(2).scaled(Scalar(mpq_class(1, 2), mpq_class(-3, 4))) +
                  Expr::constant(Scalar(0, mpq_class(-1)));
    CHECK(parse_expr(tricky.str()) == tricky);
    CHECK(parse_expr(parse_expr(tricky.str()).str()) == tricky);
}
