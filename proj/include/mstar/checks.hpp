#pragma once

// Named check registry for the verification front end. Every check runs a
// set of exact identities and returns raw pass/fail verdicts plus the
// structural expectation ("pass" for identities, "nonzero" where a nonzero
// witness is the point, e.g. non-associativity of monopole products). A run
// reproduces the expected structure iff no identity check fails and no
// expected witness vanishes.

#include "mstar/associator.hpp"
#include "mstar/bidiff.hpp"
#include "mstar/cochain.hpp"
#include "mstar/expr.hpp"
#include "mstar/field.hpp"
#include "mstar/parse.hpp"
#include "mstar/random.hpp"
#include "mstar/series.hpp"
#include "mstar/star.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mstar {

struct B3Mode {
    enum class Kind { zero, random, pair } kind = Kind::zero;
    std::uint64_t seed = 0;

    static constexpr std::uint64_t default_seed = 20240917;

    std::string describe() const {
        switch (kind) {
        case Kind::zero:
            return "zero";
        case Kind::random:
            return "random:" + std::to_string(seed);
        case Kind::pair:
            return "pair:" + std::to_string(seed);
        }
        return "zero";
    }
};

struct CheckContext {
    FieldConfig field;
    Bivector pi;
    StarProduct sp;        // primary product, B3 per mode
    StarProduct sp_b3a;    // two products with distinct seeded random B3,
    StarProduct sp_b3b;    // used by the B3-independence checks
    B3Mode b3_mode;
    std::uint64_t b3_seed_a = 0, b3_seed_b = 0;
    std::vector<Expr> witnesses;                  // shipped + user functions
    std::vector<std::pair<Expr, Expr>> fuzz_pairs;
    int fuzz_triples = 12;
    int fuzz_quadruples = 6;

    static CheckContext make(const FieldConfig& cfg, B3Mode mode,
                             const std::vector<Expr>& extra_functions = {},
                             int order = 3) {
        Bivector pi(cfg);
        std::uint64_t sa = B3Mode::default_seed, sb = B3Mode::default_seed + 1;
        BiDiffOp primary;
        switch (mode.kind) {
        case B3Mode::Kind::zero:
            primary = BiDiffOp::zero();
            sa = B3Mode::default_seed;
            sb = B3Mode::default_seed + 1;
            break;
        case B3Mode::Kind::random:
        case B3Mode::Kind::pair:
            primary = random_b3(mode.seed);
            sa = mode.seed;
            sb = mode.seed + 1;
            break;
        }
        CheckContext ctx{cfg,
                         pi,
                         StarProduct::weyl(pi, primary, order),
                         StarProduct::weyl(pi, random_b3(sa), order),
                         StarProduct::weyl(pi, random_b3(sb), order),
                         mode,
                         sa,
                         sb,
                         {},
                         {},
                         12,
                         6};

        ctx.witnesses = {
            parse_expr("p1^2+p2^2+p3^2"),
            parse_expr("q3*p3"),
            parse_expr("exp(i*(1*p1))+exp(i*(1*p2))+exp(i*(1*p3))"),
            parse_expr("q1*p2"),
            parse_expr("p1*p2"),
        };
        for (const auto& f : extra_functions) ctx.witnesses.push_back(f);

        Rng rng(9001);
        for (int k = 0; k < 16; ++k)
            ctx.fuzz_pairs.emplace_back(rng.expr(2, 2, true, true, true),
                                        rng.expr(2, 2, true, true, true));
        return ctx;
    }
};

struct CheckOutcome {
    Verdict verdict;
    std::string expected; // "pass" | "nonzero"
};

struct CheckDef {
    std::string id;
    std::string description;
    std::function<std::vector<CheckOutcome>(const CheckContext&)> run;
    int min_order = 0; // smallest truncation order the check needs
};

namespace checks_detail {

inline CheckOutcome identity(std::string id, const Expr& diff,
                             std::string inputs, std::string lhs = "",
                             std::string rhs = "0") {
    if (diff.is_zero())
        return {Verdict::ok(std::move(id), lhs.empty() ? "0" : lhs,
                            std::move(rhs)),
                "pass"};
    return {Verdict::fail(std::move(id), lhs.empty() ? diff.str() : lhs,
                          std::move(rhs), std::move(inputs), diff),
            "pass"};
}

// A quantity the structure needs to be nonzero (witness checks). Raw status
// is the zero test; expectation flips with the field.
inline CheckOutcome witness(std::string id, const Expr& value,
                            std::string inputs, bool expect_nonzero) {
    CheckOutcome out = identity(id, value, std::move(inputs));
    out.expected = expect_nonzero ? "nonzero" : "pass";
    return out;
}

inline Expr coordinate(int code) { return Expr::variable(VarIndex{code}); }

// First nonzero coefficient of a series, as the exact witness for a
// series-level mismatch.
inline Expr first_nonzero(const LambdaSeries& s) {
    for (int j = 0; j <= s.order(); ++j)
        if (!s.coeff(j).is_zero()) return s.coeff(j);
    return Expr::zero();
}

} // namespace checks_detail

inline const std::vector<CheckDef>& check_registry() {
    using checks_detail::coordinate;
    using checks_detail::identity;
    using checks_detail::witness;

    static const std::vector<CheckDef> registry = [] {
        std::vector<CheckDef> defs;

        defs.push_back(CheckDef{
            "unit_element",
            "1 * f = f * 1 = f for the truncated star product",
            [](const CheckContext& ctx) {
                std::vector<CheckOutcome> out;
                Expr one = Expr::one();
                for (const auto& f : ctx.witnesses) {
                    LambdaSeries lf = star_multiply(ctx.sp, one, f);
                    LambdaSeries rf = star_multiply(ctx.sp, f, one);
                    LambdaSeries target = LambdaSeries::from_expr(f, ctx.sp.order());
                    if (lf != target || rf != target) {
                        Expr diff =
                            checks_detail::first_nonzero(lf - target) +
                            checks_detail::first_nonzero(rf - target);
                        out.push_back(identity("unit_element", diff,
                                               "f = " + f.str(), lf.str(),
                                               target.str()));
                        return out;
                    }
                }
                out.push_back(identity("unit_element", Expr::zero(), ""));
                return out;
            }});

        defs.push_back(CheckDef{
            "low_order_associator",
            "A0 = 0 and A1 = 0 identically",
            [](const CheckContext& ctx) {
                Rng rng(11);
                for (int k = 0; k < ctx.fuzz_triples; ++k) {
                    Expr f = rng.expr(2, 2, true, true, true);
                    Expr g = rng.expr(2, 2, true, true, true);
                    Expr h = rng.expr(2, 2, true, true, true);
                    auto a = associator_series(ctx.sp, f, g, h);
                    if (!a.coeff(0).is_zero())
                        return std::vector<CheckOutcome>{identity(
                            "low_order_associator", a.coeff(0),
                            "A0 at f=" + f.str() + " g=" + g.str() +
                                " h=" + h.str())};
                    if (!a.coeff(1).is_zero())
                        return std::vector<CheckOutcome>{identity(
                            "low_order_associator", a.coeff(1),
                            "A1 at f=" + f.str() + " g=" + g.str() +
                                " h=" + h.str())};
                }
                return std::vector<CheckOutcome>{
                    identity("low_order_associator", Expr::zero(), "")};
            },
            1});

        defs.push_back(CheckDef{
            "commutation_relations",
            "[q_i,q_j]=0, [q_i,p_j]=2 lambda delta_ij, [p_i,p_j]=2 lambda "
            "eps_ijk B^k as lambda-series",
            [](const CheckContext& ctx) {
                std::vector<CheckOutcome> out;
                const int N = ctx.sp.order();
                for (int i = 1; i <= 3; ++i) {
                    for (int j = 1; j <= 3; ++j) {
                        LambdaSeries qq =
                            star_commutator(ctx.sp, Expr::q(i), Expr::q(j));
                        if (!qq.is_zero()) {
                            out.push_back(identity(
                                "commutation_relations", qq.coeff(1),
                                "[q" + std::to_string(i) + ",q" +
                                    std::to_string(j) + "]",
                                qq.str(), "0"));
                            return out;
                        }
                        LambdaSeries qp =
                            star_commutator(ctx.sp, Expr::q(i), Expr::p(j));
                        LambdaSeries target(N);
                        if (i == j) target.coeff(1) = Expr::rational(2);
                        if (qp != target) {
                            out.push_back(identity(
                                "commutation_relations",
                                checks_detail::first_nonzero(qp - target),
                                "[q" + std::to_string(i) + ",p" +
                                    std::to_string(j) + "]",
                                qp.str(), target.str()));
                            return out;
                        }
                    }
                }
                static const int eps[3][3] = {{0, 3, -2}, {-3, 0, 1}, {2, -1, 0}};
                for (int i = 1; i <= 3; ++i) {
                    for (int j = 1; j <= 3; ++j) {
                        LambdaSeries pp =
                            star_commutator(ctx.sp, Expr::p(i), Expr::p(j));
                        LambdaSeries target(N);
                        int e = eps[i - 1][j - 1];
                        if (e != 0) {
                            Expr b = ctx.field.component[std::abs(e) - 1];
                            target.coeff(1) =
                                (e > 0 ? b : -b).scaled(Scalar(2));
                        }
                        if (pp != target) {
                            out.push_back(identity(
                                "commutation_relations",
                                checks_detail::first_nonzero(pp - target),
                                "[p" + std::to_string(i) + ",p" +
                                    std::to_string(j) + "]",
                                pp.str(), target.str()));
                            return out;
                        }
                    }
                }
                out.push_back(identity("commutation_relations", Expr::zero(), ""));
                return out;
            },
            1});

        defs.push_back(CheckDef{
            "distinguished_coordinates",
            "the order-2 coefficient of [x^I, x^J] vanishes on all 36 "
            "coordinate pairs",
            [](const CheckContext& ctx) {
                for (auto I : VarIndex::all()) {
                    for (auto J : VarIndex::all()) {
                        Expr c2 = star_commutator(ctx.sp, coordinate(I.code),
                                                  coordinate(J.code))
                                      .coeff(2);
                        if (!c2.is_zero())
                            return std::vector<CheckOutcome>{identity(
                                "distinguished_coordinates", c2,
                                "[" + I.name() + "," + J.name() + "] at order 2")};
                    }
                }
                return std::vector<CheckOutcome>{
                    identity("distinguished_coordinates", Expr::zero(), "")};
            },
            2});

        defs.push_back(CheckDef{
            "weyl_b2_symmetric",
            "the second Weyl coefficient is symmetric",
            [](const CheckContext& ctx) {
                for (auto I : VarIndex::all())
                    for (auto J : VarIndex::all()) {
                        Expr d = ctx.sp.b_antisym(2, coordinate(I.code),
                                                  coordinate(J.code));
                        if (!d.is_zero())
                            return std::vector<CheckOutcome>{identity(
                                "weyl_b2_symmetric", d,
                                "B2^-(" + I.name() + "," + J.name() + ")")};
                    }
                Rng rng(13);
                for (int k = 0; k < 10; ++k) {
                    Expr f = rng.expr(2, 2, true, true, true);
                    Expr g = rng.expr(2, 2, true, true, true);
                    Expr d = ctx.sp.b2(f, g) - ctx.sp.b2(g, f);
                    if (!d.is_zero())
                        return std::vector<CheckOutcome>{identity(
                            "weyl_b2_symmetric", d,
                            "B2(f,g)-B2(g,f) at f=" + f.str() + " g=" + g.str())};
                }
                return std::vector<CheckOutcome>{
                    identity("weyl_b2_symmetric", Expr::zero(), "")};
            }});

        defs.push_back(CheckDef{
            "weyl_b2_no_11_part",
            "the second Weyl coefficient has no bi-differential degree (1,1) "
            "component (and B1 does)",
            [](const CheckContext& ctx) {
                bool b2_has = ctx.sp.b2_op() && has_11_part(*ctx.sp.b2_op());
                bool b1_has = ctx.sp.b1_op() && has_11_part(*ctx.sp.b1_op());
                if (b2_has)
                    return std::vector<CheckOutcome>{
                        {Verdict::fail("weyl_b2_no_11_part", "has (1,1) part",
                                       "none",
                                       "antisymmetric part on coordinate pairs",
                                       Expr::one()),
                         "pass"}};
                if (!b1_has)
                    return std::vector<CheckOutcome>{
                        {Verdict::fail("weyl_b2_no_11_part",
                                       "B1 lost its (1,1) part", "(1,1)",
                                       "bracket on coordinate pairs",
                                       Expr::one()),
                         "pass"}};
                return std::vector<CheckOutcome>{
                    identity("weyl_b2_no_11_part", Expr::zero(), "")};
            }});

        defs.push_back(CheckDef{
            "a2_alternation_vs_jacobiator",
            "the alternating part of A2 equals 2/3 of the bracket Jacobiator "
            "on all coordinate triples (measured constant, recorded in the "
            "conventions)",
            [](const CheckContext& ctx) {
                const Scalar ratio = Scalar::rational(2, 3);
                for (auto I : VarIndex::all())
                    for (auto J : VarIndex::all())
                        for (auto K : VarIndex::all()) {
                            Expr lhs =
                                A2_antisym(ctx.sp, coordinate(I.code),
                                           coordinate(J.code), coordinate(K.code));
                            Expr rhs = jacobiator(ctx.pi, coordinate(I.code),
                                                  coordinate(J.code),
                                                  coordinate(K.code))
                                           .scaled(ratio);
                            if (lhs != rhs)
                                return std::vector<CheckOutcome>{identity(
                                    "a2_alternation_vs_jacobiator", lhs - rhs,
                                    "(" + I.name() + "," + J.name() + "," +
                                        K.name() + ")",
                                    lhs.str(), rhs.str())};
                        }
                return std::vector<CheckOutcome>{identity(
                    "a2_alternation_vs_jacobiator", Expr::zero(),
                    "", "A2^-(x,y,z)", "2/3 * J(x,y,z)")};
            }});

        defs.push_back(CheckDef{
            "jacobiator_structure",
            "J(p1,p2,p3) = -div B; J vanishes whenever a position coordinate "
            "is inserted",
            [](const CheckContext& ctx) {
                Expr lhs = jacobiator(ctx.pi, Expr::p(1), Expr::p(2), Expr::p(3));
                Expr rhs = -ctx.field.divergence;
                if (lhs != rhs)
                    return std::vector<CheckOutcome>{
                        identity("jacobiator_structure", lhs - rhs,
                                 "(p1,p2,p3)", lhs.str(), rhs.str())};
                Rng rng(17);
                for (int i = 1; i <= 3; ++i) {
                    Expr f = rng.expr(2, 2);
                    Expr g = rng.expr(2, 2);
                    Expr j = jacobiator(ctx.pi, Expr::q(i), f, g);
                    if (!j.is_zero())
                        return std::vector<CheckOutcome>{identity(
                            "jacobiator_structure", j,
                            "J(q" + std::to_string(i) + ", f, g) with f=" +
                                f.str() + " g=" + g.str())};
                }
                return std::vector<CheckOutcome>{
                    identity("jacobiator_structure", Expr::zero(), "",
                             "J(p1,p2,p3)", (-ctx.field.divergence).str())};
            }});

        defs.push_back(CheckDef{
            "monopole_product_conditions",
            "the defining conditions of a monopole star product (nonzero "
            "momentum associator expected only for div B != 0)",
            [](const CheckContext& ctx) {
                std::vector<CheckOutcome> out;
                for (auto& v : validate_monopole(ctx.sp)) {
                    std::string expected = "pass";
                    if (v.check_id == "monopole_a2_momenta_nonzero")
                        expected = ctx.field.monopole ? "pass" : "nonzero";
                    out.push_back({v, expected});
                }
                return out;
            }});

        defs.push_back(CheckDef{
            "flexibility_order2",
            "A2(f,g,f) = 0 (flexibility of the order-2 associator)",
            [](const CheckContext& ctx) {
                Verdict v = check_flexible2(ctx.sp, ctx.fuzz_pairs);
                return std::vector<CheckOutcome>{{v, "pass"}};
            }});

        defs.push_back(CheckDef{
            "flexibility_perturbation",
            "an antisymmetric degree-(2,2) perturbation of B2 breaks "
            "A2(f,g,f) = 0 (witness expected)",
            [](const CheckContext& ctx) {
                std::uint64_t seed = 23;
                BiDiffOp pert;
                while (pert.is_zero()) pert = Rng(seed++).antisym_22_perturbation();
                BiDiffOp b2 = *ctx.sp.b2_op() + pert;
                BiDiffOp b1 = *ctx.sp.b1_op();
                StarProduct perturbed = StarProduct::from_cochains(
                    [b1](const Expr& f, const Expr& g) { return b1(f, g); },
                    [b2](const Expr& f, const Expr& g) { return b2(f, g); },
                    [](const Expr&, const Expr&) { return Expr::zero(); },
                    ctx.sp.order());
                for (const auto& [f, g] : ctx.fuzz_pairs) {
                    Expr a = A2_formula(perturbed, f, g, f);
                    if (!a.is_zero())
                        return std::vector<CheckOutcome>{witness(
                            "flexibility_perturbation", a,
                            "A2(f,g,f) with f=" + f.str() + " g=" + g.str(),
                            true)};
                }
                return std::vector<CheckOutcome>{witness(
                    "flexibility_perturbation", Expr::zero(),
                    "no witness found on the fuzz set", true)};
            }});

        defs.push_back(CheckDef{
            "a3_alternation_zero",
            "the totally antisymmetric part of A3 vanishes for symmetric B2, "
            "independently of B3 (closed formula and direct alternation)",
            [](const CheckContext& ctx) {
                Rng rng(29);
                for (int k = 0; k < ctx.fuzz_triples; ++k) {
                    Expr f = rng.expr(2, 2, true, true, true);
                    Expr g = rng.expr(2, 2, true, true, true);
                    Expr h = rng.expr(2, 2, true, true, true);
                    for (const StarProduct* sp : {&ctx.sp_b3a, &ctx.sp_b3b}) {
                        Expr closed = A3_antisym(*sp, f, g, h);
                        if (!closed.is_zero())
                            return std::vector<CheckOutcome>{identity(
                                "a3_alternation_zero", closed,
                                "closed formula at f=" + f.str() +
                                    " g=" + g.str() + " h=" + h.str())};
                        Expr alt = detail::alternation3(
                            [&](const Expr& a, const Expr& b, const Expr& c) {
                                return A3_direct(*sp, a, b, c);
                            },
                            f, g, h);
                        if (!alt.is_zero())
                            return std::vector<CheckOutcome>{identity(
                                "a3_alternation_zero", alt,
                                "direct alternation at f=" + f.str() +
                                    " g=" + g.str() + " h=" + h.str())};
                    }
                }
                return std::vector<CheckOutcome>{
                    identity("a3_alternation_zero", Expr::zero(), "")};
            }});

        defs.push_back(CheckDef{
            "a3_alternation_consistency",
            "the cyclic closed form of A3^- equals the direct alternation of "
            "A3 once an antisymmetric part is injected into B2, for two "
            "different B3",
            [](const CheckContext& ctx) {
                std::uint64_t seed = 31;
                BiDiffOp pert;
                while (pert.is_zero()) pert = Rng(seed++).antisym_22_perturbation();
                BiDiffOp b2 = *ctx.sp.b2_op() + pert;
                BiDiffOp b1 = *ctx.sp.b1_op();
                Rng rng(37);
                for (std::uint64_t s : {ctx.b3_seed_a, ctx.b3_seed_b}) {
                    BiDiffOp b3 = random_b3(s);
                    StarProduct sp = StarProduct::from_cochains(
                        [b1](const Expr& f, const Expr& g) { return b1(f, g); },
                        [b2](const Expr& f, const Expr& g) { return b2(f, g); },
                        [b3](const Expr& f, const Expr& g) { return b3(f, g); },
                        ctx.sp.order());
                    for (int k = 0; k < 4; ++k) {
                        Expr f = rng.expr(2, 2);
                        Expr g = rng.expr(2, 2);
                        Expr h = rng.expr(2, 2);
                        Expr closed = A3_antisym(sp, f, g, h);
                        Expr alt = detail::alternation3(
                            [&](const Expr& a, const Expr& b, const Expr& c) {
                                return A3_direct(sp, a, b, c);
                            },
                            f, g, h);
                        if (closed != alt)
                            return std::vector<CheckOutcome>{identity(
                                "a3_alternation_consistency", closed - alt,
                                "f=" + f.str() + " g=" + g.str() + " h=" + h.str(),
                                closed.str(), alt.str())};
                    }
                }
                return std::vector<CheckOutcome>{
                    identity("a3_alternation_consistency", Expr::zero(), "")};
            }});

        defs.push_back(CheckDef{
            "obstruction_coboundary_routes",
            "O(f,g,h,k) equals dA3 computed three ways (coboundary of A3, "
            "Pentagon rearrangement, dB2 expansion), independent of B3",
            [](const CheckContext& ctx) {
                Rng rng(41);
                Expr first_route_value;
                for (int k = 0; k < ctx.fuzz_quadruples; ++k) {
                    Expr a = rng.expr(2, 2);
                    Expr b = rng.expr(2, 2);
                    Expr c = rng.expr(2, 2);
                    Expr d = rng.expr(2, 2);
                    Expr prev;
                    bool have_prev = false;
                    for (const StarProduct* sp : {&ctx.sp_b3a, &ctx.sp_b3b}) {
                        Expr O = obstruction_O(*sp, a, b, c, d);
                        auto routes = dA3_two_ways(*sp, a, b, c, d);
                        for (const Expr* r :
                             {&routes.coboundary, &routes.pentagon,
                              &routes.direct_expansion}) {
                            if (*r != O)
                                return std::vector<CheckOutcome>{identity(
                                    "obstruction_coboundary_routes", *r - O,
                                    "f=" + a.str() + " g=" + b.str() +
                                        " h=" + c.str() + " k=" + d.str(),
                                    r->str(), O.str())};
                        }
                        if (have_prev && O != prev)
                            return std::vector<CheckOutcome>{identity(
                                "obstruction_coboundary_routes", O - prev,
                                "B3 dependence at f=" + a.str() + " g=" + b.str() +
                                    " h=" + c.str() + " k=" + d.str(),
                                O.str(), prev.str())};
                        prev = O;
                        have_prev = true;
                    }
                }
                return std::vector<CheckOutcome>{
                    identity("obstruction_coboundary_routes", Expr::zero(), "")};
            },
            2});

        defs.push_back(CheckDef{
            "obstruction_constant",
            "constant monopole density: O(p1,p2,p3,q3*p3) is nonzero and only "
            "its first summand contributes (runs on the canonical field "
            "(q1/3,q2/3,q3/3))",
            [](const CheckContext&) {
                FieldConfig cfg = FieldConfig::make(parse_expr("1/3*q1"),
                                                    parse_expr("1/3*q2"),
                                                    parse_expr("1/3*q3"));
                Bivector pi(cfg);
                StarProduct sp = StarProduct::weyl(pi);
                Expr p1 = Expr::p(1), p2 = Expr::p(2), p3 = Expr::p(3);
                Expr k = Expr::q(3) * Expr::p(3);
                std::vector<CheckOutcome> out;
                Expr O = obstruction_O(sp, p1, p2, p3, k);
                out.push_back(witness("obstruction_constant", O,
                                      "O(p1,p2,p3,q3*p3)", true));
                Expr s1 = A2_formula(sp, p1, p2, sp.b1(p3, k));
                Expr rest = O - s1;
                out.push_back(identity("obstruction_constant_structure", rest,
                                       "O minus its first summand", rest.str(),
                                       "0"));
                return out;
            }});

        defs.push_back(CheckDef{
            "obstruction_nonconstant",
            "non-constant monopole density: O(p2,p1,p3,p1) is nonzero and "
            "reduces to -B1(A2(p2,p1,p3),p1) (runs on the canonical field "
            "(q1^2/2,0,0))",
            [](const CheckContext&) {
                FieldConfig cfg = FieldConfig::make(parse_expr("1/2*q1^2"),
                                                    parse_expr("0"),
                                                    parse_expr("0"));
                Bivector pi(cfg);
                StarProduct sp = StarProduct::weyl(pi);
                Expr p1 = Expr::p(1), p2 = Expr::p(2), p3 = Expr::p(3);
                std::vector<CheckOutcome> out;
                Expr O = obstruction_O(sp, p2, p1, p3, p1);
                out.push_back(witness("obstruction_nonconstant", O,
                                      "O(p2,p1,p3,p1)", true));
                Expr reduced = -sp.b1(A2_formula(sp, p2, p1, p3), p1);
                out.push_back(identity("obstruction_nonconstant_structure",
                                       O - reduced, "O + B1(A2(p2,p1,p3),p1)",
                                       O.str(), reduced.str()));
                Expr other = A2_formula(sp, sp.b1(p2, p1), p3, p1);
                out.push_back(identity("obstruction_nonconstant_vanishing_term",
                                       other, "A2(B1(p2,p1),p3,p1)"));
                return out;
            }});

        defs.push_back(CheckDef{
            "a3_diagonal_psquared",
            "A3(f,f,f) = 32/3 i (p.B) div B for f = |p|^2, and the closed "
            "diagonal form agrees",
            [](const CheckContext& ctx) {
                Expr f = parse_expr("p1^2+p2^2+p3^2");
                Expr cad = A3_cadabra(ctx.pi, f);
                Expr pdotB = Expr::p(1) * ctx.field.component[0] +
                             Expr::p(2) * ctx.field.component[1] +
                             Expr::p(3) * ctx.field.component[2];
                Expr target = (pdotB * ctx.field.divergence)
                                  .scaled(Scalar(0, mpq_class(32, 3)));
                std::vector<CheckOutcome> out;
                out.push_back(identity("a3_diagonal_psquared", cad - target,
                                       "f = |p|^2", cad.str(), target.str()));
                Expr closed = A3_closed_form(ctx.pi, f);
                out.push_back(identity("a3_diagonal_psquared_closed_form",
                                       closed - cad, "closed vs contraction",
                                       closed.str(), cad.str()));
                return out;
            }});

        defs.push_back(CheckDef{
            "a3_diagonal_bounded",
            "A3(f,f,f) for f = sum_k exp(i a_k p_k) reproduces "
            "-4/3 a1^2 a2^2 a3^2 e^{i a.p} (sum B^k/a_k) div B",
            [](const CheckContext& ctx) {
                const std::array<std::array<mpq_class, 3>, 3> alphas = {{
                    {mpq_class(1), mpq_class(1), mpq_class(1)},
                    {mpq_class(1), mpq_class(2), mpq_class(3)},
                    {mpq_class(1, 2), mpq_class(1), mpq_class(2)},
                }};
                for (const auto& a : alphas) {
                    Expr f;
                    for (int k = 0; k < 3; ++k) {
                        std::array<mpq_class, 3> alpha{mpq_class(0), mpq_class(0),
                                                       mpq_class(0)};
                        alpha[k] = a[k];
                        f += Expr::exp_ip(alpha);
                    }
                    Expr cad = A3_cadabra(ctx.pi, f);
                    Expr expo = Expr::exp_ip(a);
                    Expr bsum;
                    for (int k = 0; k < 3; ++k)
                        bsum += ctx.field.component[k].scaled(
                            Scalar(mpq_class(1) / a[k]));
                    mpq_class pref = a[0] * a[0] * a[1] * a[1] * a[2] * a[2] *
                                     mpq_class(-4, 3);
                    Expr target =
                        (expo * bsum * ctx.field.divergence).scaled(Scalar(pref));
                    if (cad != target)
                        return std::vector<CheckOutcome>{identity(
                            "a3_diagonal_bounded", cad - target,
                            "alpha = (" + a[0].get_str() + "," + a[1].get_str() +
                                "," + a[2].get_str() + ")",
                            cad.str(), target.str())};
                    Expr closed = A3_closed_form(ctx.pi, f);
                    if (closed != cad)
                        return std::vector<CheckOutcome>{identity(
                            "a3_diagonal_bounded", closed - cad,
                            "closed form disagreement", closed.str(), cad.str())};
                }
                return std::vector<CheckOutcome>{
                    identity("a3_diagonal_bounded", Expr::zero(), "")};
            }});

        defs.push_back(CheckDef{
            "power_associativity",
            "A3(f,f,f) for f = |p|^2: nonzero exactly for monopole fields "
            "(power associativity fails at order 3)",
            [](const CheckContext& ctx) {
                Verdict v = check_power_assoc(ctx.pi, parse_expr("p1^2+p2^2+p3^2"));
                return std::vector<CheckOutcome>{
                    {v, ctx.field.monopole ? "nonzero" : "pass"}};
            }});

        defs.push_back(CheckDef{
            "alternativity",
            "A2(f,f,g), A2(f,g,g) and A3(f,f,f) on the witness set: any "
            "nonzero value disproves alternativity (expected for monopole "
            "fields)",
            [](const CheckContext& ctx) {
                Verdict v = check_alternative(ctx.sp, ctx.pi, ctx.witnesses);
                return std::vector<CheckOutcome>{
                    {v, ctx.field.monopole ? "nonzero" : "pass"}};
            }});

        defs.push_back(CheckDef{
            "hochschild_d_squared",
            "d(d(phi)) = 0 for random 1- and 2-cochains",
            [](const CheckContext& ctx) {
                Rng rng(47);
                for (int k = 0; k < 6; ++k) {
                    Cochain one = Cochain::from_diffop(rng.diffop());
                    Cochain dd1 = hochschild_d(hochschild_d(one));
                    Expr v = dd1({rng.expr(2, 2), rng.expr(2, 2), rng.expr(2, 2)});
                    if (!v.is_zero())
                        return std::vector<CheckOutcome>{identity(
                            "hochschild_d_squared", v, "arity-1 case")};
                    Cochain two = Cochain::from_bidiff(rng.bidiff());
                    Cochain dd2 = hochschild_d(hochschild_d(two));
                    Expr w = dd2({rng.expr(2, 2), rng.expr(2, 2), rng.expr(2, 2),
                                  rng.expr(2, 2)});
                    if (!w.is_zero())
                        return std::vector<CheckOutcome>{identity(
                            "hochschild_d_squared", w, "arity-2 case")};
                }
                (void)ctx;
                return std::vector<CheckOutcome>{
                    identity("hochschild_d_squared", Expr::zero(), "")};
            }});

        defs.push_back(CheckDef{
            "gauge_first_order",
            "for D = id + lambda D1, the transformed product satisfies "
            "B1' = B1 - dD1 and keeps the unit",
            [](const CheckContext& ctx) {
                Rng rng(53);
                for (int k = 0; k < 5; ++k) {
                    DiffOp d1 = rng.diffop();
                    StarProduct spp = gauge_transform(ctx.sp, d1);
                    Cochain dd1 = hochschild_d(Cochain::from_diffop(d1));
                    for (int t = 0; t < 3; ++t) {
                        Expr f = rng.expr(2, 2);
                        Expr g = rng.expr(2, 2);
                        Expr lhs = spp.b1(f, g);
                        Expr rhs = ctx.sp.b1(f, g) - dd1({f, g});
                        if (lhs != rhs)
                            return std::vector<CheckOutcome>{identity(
                                "gauge_first_order", lhs - rhs,
                                "f=" + f.str() + " g=" + g.str(), lhs.str(),
                                rhs.str())};
                        LambdaSeries unit = star_multiply(spp, Expr::one(), f);
                        LambdaSeries target =
                            LambdaSeries::from_expr(f, ctx.sp.order());
                        if (unit != target)
                            return std::vector<CheckOutcome>{identity(
                                "gauge_first_order",
                                checks_detail::first_nonzero(unit - target),
                                "unit preservation at f=" + f.str(), unit.str(),
                                f.str())};
                    }
                }
                return std::vector<CheckOutcome>{
                    identity("gauge_first_order", Expr::zero(), "")};
            }});

        defs.push_back(CheckDef{
            "pentagon_identity",
            "f*A(g,h,k) + A(f,g,h)*k - A(f*g,h,k) + A(f,g*h,k) - A(f,g,h*k) "
            "= 0 at every truncation order",
            [](const CheckContext& ctx) {
                Rng rng(59);
                for (int k = 0; k < ctx.fuzz_quadruples; ++k) {
                    const StarProduct& sp =
                        (k % 2 == 0) ? ctx.sp_b3a : ctx.sp_b3b;
                    const int N = sp.order();
                    LambdaSeries F = LambdaSeries::from_expr(rng.expr(2, 2), N);
                    LambdaSeries G = LambdaSeries::from_expr(rng.expr(2, 2), N);
                    LambdaSeries H = LambdaSeries::from_expr(rng.expr(2, 2), N);
                    LambdaSeries K = LambdaSeries::from_expr(rng.expr(2, 2), N);
                    LambdaSeries residual =
                        star_multiply(sp, F, associator_series(sp, G, H, K)) +
                        star_multiply(sp, associator_series(sp, F, G, H), K) -
                        associator_series(sp, star_multiply(sp, F, G), H, K) +
                        associator_series(sp, F, star_multiply(sp, G, H), K) -
                        associator_series(sp, F, G, star_multiply(sp, H, K));
                    if (!residual.is_zero()) {
                        Expr diff;
                        for (int j = 0; j <= N; ++j) diff += residual.coeff(j);
                        return std::vector<CheckOutcome>{identity(
                            "pentagon_identity", diff, "quadruple #" +
                                std::to_string(k),
                            residual.str(), "0")};
                    }
                }
                return std::vector<CheckOutcome>{
                    identity("pentagon_identity", Expr::zero(), "")};
            }});

        return defs;
    }();
    return registry;
}

inline const CheckDef* find_check(const std::string& id) {
    for (const auto& def : check_registry())
        if (def.id == id) return &def;
    return nullptr;
}

} // namespace mstar
