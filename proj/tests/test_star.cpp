#include "mstar/field.hpp"
#include "mstar/parse.hpp"
#include "mstar/random.hpp"
#include "mstar/series.hpp"
#include "mstar/star.hpp"

#include <catch2/catch.hpp>

using namespace mstar;

namespace {

FieldConfig linear_field() {
    return FieldConfig::make(parse_expr("1/3*q1"), parse_expr("1/3*q2"),
                             parse_expr("1/3*q3"));
}

} // namespace

TEST_CASE("weyl B2 is symmetric with no (1,1) part and kills linear pairs") {
    Rng rng(501);
    FieldConfig cfg = FieldConfig::make(rng.q_polynomial(), rng.q_polynomial(),
                                        rng.q_polynomial());
    Bivector pi(cfg);
    BiDiffOp b2 = weyl_B2(pi);
    for (auto I : VarIndex::all())
        for (auto J : VarIndex::all())
            CHECK(b2(Expr::variable(I), Expr::variable(J)).is_zero());
    for (int k = 0; k < 10; ++k) {
        Expr f = rng.expr(2, 2, true, true, true);
        Expr g = rng.expr(2, 2, true, true, true);
        CHECK(b2(f, g) == b2(g, f));
    }
    CHECK_FALSE(has_11_part(b2));
}

TEST_CASE("unit function is the unit of the star algebra") {
    FieldConfig cfg = linear_field();
    Bivector pi(cfg);
    StarProduct sp = StarProduct::weyl(pi, random_b3(7));
    Rng rng(502);
    for (int k = 0; k < 10; ++k) {
        Expr f = rng.expr(3, 2, true, true, true);
        LambdaSeries F = LambdaSeries::from_expr(f, sp.order());
        CHECK(star_multiply(sp, Expr::one(), f) == F);
        CHECK(star_multiply(sp, f, Expr::one()) == F);
    }
}

TEST_CASE("canonical commutation relations as series") {
    FieldConfig cfg = linear_field();
    Bivector pi(cfg);
    StarProduct sp = StarProduct::weyl(pi);
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            LambdaSeries qq = star_commutator(sp, Expr::q(i), Expr::q(j));
            CHECK(qq.is_zero());

            LambdaSeries qp = star_commutator(sp, Expr::q(i), Expr::p(j));
            LambdaSeries expected(sp.order());
            if (i == j) expected.coeff(1) = Expr::rational(2);
            CHECK(qp == expected);
        }
    }
    // [p1,p2] = 2 lambda B^3
    LambdaSeries pp = star_commutator(sp, Expr::p(1), Expr::p(2));
    LambdaSeries expected(sp.order());
    expected.coeff(1) = cfg.component[2].scaled(Scalar(2));
    CHECK(pp == expected);
}

TEST_CASE("commutator lambda^2 coefficient vanishes on coordinate pairs") {
    Rng rng(503);
    FieldConfig cfg = FieldConfig::make(rng.q_polynomial(), rng.q_polynomial(),
                                        rng.q_polynomial());
    Bivector pi(cfg);
    StarProduct sp = StarProduct::weyl(pi);
    for (auto I : VarIndex::all())
        for (auto J : VarIndex::all())
            CHECK(star_commutator(sp, Expr::variable(I), Expr::variable(J))
                      .coeff(2)
                      .is_zero());
}

TEST_CASE("commutator and jordan structure") {
    FieldConfig cfg = linear_field();
    Bivector pi(cfg);
    StarProduct sp = StarProduct::weyl(pi, random_b3(11));
    Rng rng(504);
    for (int k = 0; k < 8; ++k) {
        Expr f = rng.expr(2, 2, true, true, true);
        Expr g = rng.expr(2, 2, true, true, true);
        LambdaSeries c = star_commutator(sp, f, g);
        CHECK(c == -star_commutator(sp, g, f));
        CHECK(c.coeff(1) == sp.b1(f, g).scaled(Scalar(2)));
        LambdaSeries j = star_jordan(sp, f, g);
        CHECK(j == star_jordan(sp, g, f));
        CHECK(star_jordan(sp, f, f) == star_multiply(sp, f, f));
    }
}

TEST_CASE("star multiply is bilinear and respects the grading") {
    FieldConfig cfg = linear_field();
    Bivector pi(cfg);
    StarProduct sp = StarProduct::weyl(pi, random_b3(13));
    Rng rng(505);
    Expr f = rng.expr(2, 2), g = rng.expr(2, 2), h = rng.expr(2, 2);
    Scalar s = Scalar::rational(-5, 3);
    CHECK(star_multiply(sp, f.scaled(s) + g, h) ==
          star_multiply(sp, f, h).scaled(s) + star_multiply(sp, g, h));

    // coefficient j of F*G only sees input coefficients of total order <= j
    LambdaSeries F(sp.order()), G(sp.order());
    F.coeff(0) = f;
    F.coeff(2) = g;
    G.coeff(1) = h;
    LambdaSeries prod = star_multiply(sp, F, G);
    CHECK(prod.coeff(0).is_zero());
    CHECK(prod.coeff(1) == f * h);
    CHECK(prod.coeff(2) == sp.b1(f, h));
}

TEST_CASE("lambda^3 commutator coefficient sees only the antisymmetric B3") {
    FieldConfig cfg = linear_field();
    Bivector pi(cfg);
    Rng rng(506);
    BiDiffOp b3 = rng.bidiff();
    StarProduct with = StarProduct::weyl(pi, b3);
    StarProduct without = StarProduct::weyl(pi);
    BiDiffOp b3a = antisym_part(b3);
    for (int k = 0; k < 6; ++k) {
        Expr f = rng.expr(2, 2, true, true, true);
        Expr g = rng.expr(2, 2, true, true, true);
        Expr c3 = star_commutator(with, f, g).coeff(3);
        Expr base = star_commutator(without, f, g).coeff(3);
        CHECK(c3 == base + b3a(f, g).scaled(Scalar(2)));
        CHECK(base.is_zero());
        // symmetric B3 drops out entirely
        StarProduct sym = StarProduct::weyl(pi, sym_part(b3));
        CHECK(star_commutator(sym, f, g).coeff(3) == base);
    }
}

TEST_CASE("series order mismatch is rejected") {
    FieldConfig cfg = linear_field();
    Bivector pi(cfg);
    StarProduct sp = StarProduct::weyl(pi);
    LambdaSeries F(2), G(3);
    CHECK_THROWS_AS(star_multiply(sp, F, G), std::invalid_argument);
}

TEST_CASE("gauge transformation: identity when D1 = 0") {
    FieldConfig cfg = linear_field();
    Bivector pi(cfg);
    StarProduct sp = StarProduct::weyl(pi, random_b3(17));
    StarProduct spp = gauge_transform(sp, DiffOp());
    Rng rng(507);
    for (int k = 0; k < 6; ++k) {
        Expr f = rng.expr(2, 2);
        Expr g = rng.expr(2, 2);
        CHECK(star_multiply(spp, f, g) == star_multiply(sp, f, g));
    }
}

TEST_CASE("gauge transformation first order and unit") {
    FieldConfig cfg = linear_field();
    Bivector pi(cfg);
    StarProduct sp = StarProduct::weyl(pi, random_b3(19));
    Rng rng(508);
    for (int k = 0; k < 6; ++k) {
        DiffOp d1 = rng.diffop();
        StarProduct spp = gauge_transform(sp, d1);
        Cochain dd1 = hochschild_d(Cochain::from_diffop(d1));
        Expr f = rng.expr(2, 2);
        Expr g = rng.expr(2, 2);
        CHECK(spp.b1(f, g) == sp.b1(f, g) - dd1({f, g}));
        CHECK(star_multiply(spp, Expr::one(), f) ==
              LambdaSeries::from_expr(f, sp.order()));
        CHECK(star_multiply(spp, f, Expr::one()) ==
              LambdaSeries::from_expr(f, sp.order()));
    }
}

TEST_CASE("gauge transformation requires D1 to vanish on constants") {
    FieldConfig cfg = linear_field();
    Bivector pi(cfg);
    StarProduct sp = StarProduct::weyl(pi);
    DiffOp bad({DiffTerm{Expr::one(), MultiIndex{}}});
    CHECK_THROWS_AS(gauge_transform(sp, bad), std::invalid_argument);
}

TEST_CASE("gauge-transformed product is associative-equivalent") {
    // D(f) *' D(g) = D(f*g) exactly, through the truncation order
    FieldConfig cfg = linear_field();
    Bivector pi(cfg);
    StarProduct sp = StarProduct::weyl(pi, random_b3(23));
    Rng rng(509);
    DiffOp d1 = rng.diffop();
    StarProduct spp = gauge_transform(sp, d1);
    auto apply_d = [&](const LambdaSeries& s) {
        LambdaSeries out(s.order());
        for (int j = 0; j <= s.order(); ++j) {
            out.coeff(j) = s.coeff(j);
            if (j > 0) out.coeff(j) += d1(s.coeff(j - 1));
        }
        return out;
    };
    for (int k = 0; k < 5; ++k) {
        Expr f = rng.expr(2, 2);
        Expr g = rng.expr(2, 2);
        LambdaSeries lhs = star_multiply(
            spp, apply_d(LambdaSeries::from_expr(f, sp.order())),
            apply_d(LambdaSeries::from_expr(g, sp.order())));
        LambdaSeries rhs = apply_d(star_multiply(sp, f, g));
        CHECK(lhs == rhs);
    }
}
