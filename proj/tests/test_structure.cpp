#include "mstar/field.hpp"
#include "mstar/parse.hpp"
#include "mstar/random.hpp"

#include <catch2/catch.hpp>

using namespace mstar;

namespace {

// Independent oracle: the twisted bracket written out by hand,
//   {f,g} = sum_i (dq_i f dp_i g - dp_i f dq_i g)
//         + sum_{i<j} eps_{ijk} B^k (dp_i f dp_j g - dp_j f dp_i g)
Expr oracle_bracket(const FieldConfig& cfg, const Expr& f, const Expr& g) {
    Expr out;
    for (int i = 1; i <= 3; ++i) {
        out += f.partial(VarIndex::q(i)) * g.partial(VarIndex::p(i));
        out -= f.partial(VarIndex::p(i)) * g.partial(VarIndex::q(i));
    }
    struct {
        int i, j, k;
    } eps[3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (auto [i, j, k] : eps) {
        Expr b = cfg.component[k - 1];
        out += b * (f.partial(VarIndex::p(i)) * g.partial(VarIndex::p(j)) -
                    f.partial(VarIndex::p(j)) * g.partial(VarIndex::p(i)));
    }
    return out;
}

Expr oracle_jacobiator(const FieldConfig& cfg, const Expr& f, const Expr& g,
                       const Expr& h) {
    return oracle_bracket(cfg, f, oracle_bracket(cfg, g, h)) +
           oracle_bracket(cfg, h, oracle_bracket(cfg, f, g)) +
           oracle_bracket(cfg, g, oracle_bracket(cfg, h, f));
}

FieldConfig linear_field() {
    return FieldConfig::make(parse_expr("1/3*q1"), parse_expr("1/3*q2"),
                             parse_expr("1/3*q3"));
}

} // namespace

TEST_CASE("field validation") {
    CHECK_THROWS_AS(FieldConfig::make(Expr::p(1), Expr::zero(), Expr::zero()),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        FieldConfig::make(Expr::exp_ip({mpq_class(1), mpq_class(0), mpq_class(0)}),
                          Expr::zero(), Expr::zero()),
        std::invalid_argument);
    FieldConfig cfg = linear_field();
    CHECK(cfg.monopole);
    CHECK(monopole_density(cfg) == Expr::one());
}

TEST_CASE("monopole density examples") {
    CHECK(monopole_density(FieldConfig::make(parse_expr("1/2*q1^2"),
                                             parse_expr("0"), parse_expr("0"))) ==
          Expr::q(1));
    CHECK(monopole_density(FieldConfig::make(parse_expr("5"), parse_expr("-2"),
                                             parse_expr("7/3")))
              .is_zero());
}

TEST_CASE("bivector antisymmetry and q-only entries") {
    Rng rng(301);
    FieldConfig cfg = FieldConfig::make(rng.q_polynomial(), rng.q_polynomial(),
                                        rng.q_polynomial());
    Bivector pi(cfg);
    for (int I = 0; I < 6; ++I)
        for (int J = 0; J < 6; ++J) {
            CHECK(pi.entry(I, J) == -pi.entry(J, I));
            CHECK(pi.entry(I, J).depends_only_on_q());
        }
}

TEST_CASE("bracket on canonical pairs") {
    FieldConfig cfg = linear_field();
    Bivector pi(cfg);
    CHECK(bracket(pi, Expr::q(1), Expr::p(1)) == Expr::one());
    CHECK(bracket(pi, Expr::p(1), Expr::p(2)) == cfg.component[2]);
    CHECK(bracket(pi, Expr::q(1), Expr::q(2)).is_zero());
}

TEST_CASE("bracket is an antisymmetric bi-derivation") {
    Rng rng(302);
    FieldConfig cfg = FieldConfig::make(rng.q_polynomial(), rng.q_polynomial(),
                                        rng.q_polynomial());
    Bivector pi(cfg);
    for (int k = 0; k < 15; ++k) {
        Expr f = rng.expr(2, 2, true, true, true);
        Expr g = rng.expr(2, 2, true, true, true);
        Expr h = rng.expr(2, 2, true, true, true);
        CHECK(bracket(pi, f, g) == -bracket(pi, g, f));
        CHECK(bracket(pi, f * g, h) ==
              f * bracket(pi, g, h) + bracket(pi, f, h) * g);
        CHECK(bracket(pi, f, g) == oracle_bracket(cfg, f, g));
    }
}

TEST_CASE("jacobiator examples against the brute-force oracle") {
    Rng rng(303);
    FieldConfig cfg = FieldConfig::make(parse_expr("q1"), parse_expr("0"),
                                        parse_expr("0"));
    Bivector pi(cfg);

    // position slot kills it
    for (int k = 0; k < 10; ++k) {
        Expr f = rng.expr(2, 2);
        Expr g = rng.expr(2, 2);
        CHECK(jacobiator(pi, Expr::q(1), f, g).is_zero());
        CHECK(oracle_jacobiator(cfg, Expr::q(1), f, g).is_zero());
    }

    // momenta triple is the divergence up to the convention constant
    Expr j = jacobiator(pi, Expr::p(1), Expr::p(2), Expr::p(3));
    CHECK(j == -cfg.divergence);
    CHECK(j == oracle_jacobiator(cfg, Expr::p(1), Expr::p(2), Expr::p(3)));

    // antisymmetry with a repeated argument
    Expr f = rng.expr(2, 2, true, true, true);
    Expr g = rng.expr(2, 2, true, true, true);
    CHECK(jacobiator(pi, f, f, g).is_zero());
}

TEST_CASE("jacobiator vanishes identically for divergence-free fields") {
    // B = rot A for A = (0, 0, q1*q2): B = (q1, -q2, 0)
    FieldConfig cfg = FieldConfig::make(parse_expr("q1"), parse_expr("-1*q2"),
                                        parse_expr("0"));
    CHECK_FALSE(cfg.monopole);
    Bivector pi(cfg);
    Rng rng(304);
    for (int k = 0; k < 12; ++k) {
        Expr f = rng.expr(2, 2, true, true, true);
        Expr g = rng.expr(2, 2, true, true, true);
        Expr h = rng.expr(2, 2, true, true, true);
        CHECK(jacobiator(pi, f, g, h).is_zero());
    }
}

TEST_CASE("jacobiator is totally antisymmetric on random inputs") {
    Rng rng(305);
    FieldConfig cfg = FieldConfig::make(rng.q_polynomial(), rng.q_polynomial(),
                                        rng.q_polynomial());
    Bivector pi(cfg);
    for (int k = 0; k < 8; ++k) {
        Expr f = rng.expr(2, 2);
        Expr g = rng.expr(2, 2);
        Expr h = rng.expr(2, 2);
        Expr base = jacobiator(pi, f, g, h);
        CHECK(jacobiator(pi, g, f, h) == -base);
        CHECK(jacobiator(pi, f, h, g) == -base);
        CHECK(jacobiator(pi, h, g, f) == -base);
    }
}
