#include "mstar/expr.hpp"
#include "mstar/parse.hpp"
#include "mstar/random.hpp"

#include <catch2/catch.hpp>

using namespace mstar;

TEST_CASE("classical product examples") {
    Expr q1 = Expr::q(1), p1 = Expr::p(1);
    CHECK(q1 * p1 == p1 * q1);
    CHECK((q1 * p1).str() == "q1*p1");

    // exponent addition on exp factors
    Expr e1 = Expr::exp_ip({mpq_class(1), mpq_class(0), mpq_class(0)});
    Expr e2 = Expr::exp_ip({mpq_class(0), mpq_class(1), mpq_class(0)});
    Expr prod = e1 * e2;
    CHECK(prod.num_terms() == 1);
    CHECK(prod == Expr::exp_ip({mpq_class(1), mpq_class(1), mpq_class(0)}));

    CHECK((q1 + q1.scaled(Scalar(-1))).is_zero());
}

TEST_CASE("partial derivative examples") {
    Expr q1 = Expr::q(1);
    CHECK(q1.pow(2).partial(VarIndex::q(1)) == q1.scaled(Scalar(2)));

    // chain rule on the exponential factor
    Expr e = Expr::exp_ip({mpq_class(0), mpq_class(2), mpq_class(0)});
    CHECK(e.partial(VarIndex::p(2)) == e.scaled(Scalar(0, mpq_class(2))));

    // product rule with the momentum polynomial part
    Expr p1 = Expr::p(1);
    Expr f = p1 * Expr::exp_ip({mpq_class(1), mpq_class(0), mpq_class(0)});
    Expr expected = Expr::exp_ip({mpq_class(1), mpq_class(0), mpq_class(0)}) +
                    f.scaled(Scalar::i());
    CHECK(f.partial(VarIndex::p(1)) == expected);
}

TEST_CASE("classical algebra is associative and commutative") {
    Rng rng(101);
    for (int k = 0; k < 30; ++k) {
        Expr a = rng.expr(3, 2, true, true, true);
        Expr b = rng.expr(3, 2, true, true, true);
        Expr c = rng.expr(3, 2, true, true, true);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("partials commute and satisfy Leibniz") {
    Rng rng(102);
    for (int k = 0; k < 30; ++k) {
        Expr a = rng.expr(3, 2, true, true, true);
        Expr b = rng.expr(2, 2, true, true, true);
        for (auto u : VarIndex::all()) {
            for (auto v : VarIndex::all()) {
                CHECK(a.partial(u).partial(v) == a.partial(v).partial(u));
            }
            CHECK((a * b).partial(u) ==
                  a.partial(u) * b + a * b.partial(u));
        }
    }
}

TEST_CASE("canonical form: same function built two ways") {
    Rng rng(103);
    for (int k = 0; k < 30; ++k) {
        Expr a = rng.expr(3, 2, true, true, true);
        Expr b = rng.expr(3, 2, true, true, true);
        Expr left = (a + b) * (a - b);
        Expr right = a * a - b * b;
        CHECK(left == right);
        CHECK(left.str() == right.str());
    }
}

TEST_CASE("closure under product and derivative") {
    Rng rng(104);
    Expr a = rng.expr(4, 3, true, true, true);
    Expr b = rng.expr(4, 3, true, true, true);
    Expr prod = a * b;
    for (auto v : VarIndex::all()) {
        Expr d = prod.partial(v);
        // round-trips through the grammar, so it is a well-formed Expr
        CHECK(parse_expr(d.str()) == d);
    }
}
