#pragma once

// Associator-level structure of a truncated star product: the expansion
// A(f,g,h) = f*(g*h) - (f*g)*h = sum_j lambda^j A_j(f,g,h), the closed
// order-2 and order-3 formulas, total antisymmetrizations, the obstruction
// 4-cochain O, the coboundary dA3 computed along three independent routes,
// the self-associator contraction formulas, and the alternativity /
// flexibility / power-associativity verdicts built from them.

#include "mstar/cochain.hpp"
#include "mstar/expr.hpp"
#include "mstar/field.hpp"
#include "mstar/series.hpp"
#include "mstar/star.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstar {

// --- associator as a series -------------------------------------------------

struct AssociatorSeries {
    LambdaSeries coeffs;

    const Expr& coeff(int j) const { return coeffs.coeff(j); }
    int order() const { return coeffs.order(); }
};

inline AssociatorSeries associator_series(const StarProduct& sp, const Expr& f,
                                          const Expr& g, const Expr& h) {
    LambdaSeries F = LambdaSeries::from_expr(f, sp.order());
    LambdaSeries GH = star_multiply(sp, g, h);
    LambdaSeries FG = star_multiply(sp, f, g);
    LambdaSeries H = LambdaSeries::from_expr(h, sp.order());
    return {star_multiply(sp, F, GH) - star_multiply(sp, FG, H)};
}

// Series-level associator for series arguments (used by the Pentagon check).
inline LambdaSeries associator_series(const StarProduct& sp,
                                      const LambdaSeries& F,
                                      const LambdaSeries& G,
                                      const LambdaSeries& H) {
    return star_multiply(sp, F, star_multiply(sp, G, H)) -
           star_multiply(sp, star_multiply(sp, F, G), H);
}

// --- order-2 -----------------------------------------------------------------

// A2 = f B2(g,h) - B2(f,g) h + B2(f,gh) - B2(fg,h)
//      + B1(f,B1(g,h)) - B1(B1(f,g),h)
inline Expr A2_formula(const StarProduct& sp, const Expr& f, const Expr& g,
                       const Expr& h) {
    return f * sp.b2(g, h) - sp.b2(f, g) * h + sp.b2(f, g * h) -
           sp.b2(f * g, h) + sp.b1(f, sp.b1(g, h)) - sp.b1(sp.b1(f, g), h);
}

namespace detail {

// 1/6 alternating sum over the six permutations of a 3-argument evaluator.
template <typename F3>
Expr alternation3(F3&& eval, const Expr& f, const Expr& g, const Expr& h) {
    Expr sum = eval(f, g, h) + eval(h, f, g) + eval(g, h, f) - eval(f, h, g) -
               eval(g, f, h) - eval(h, g, f);
    return sum.scaled(Scalar::rational(1, 6));
}

} // namespace detail

inline Expr A2_antisym(const StarProduct& sp, const Expr& f, const Expr& g,
                       const Expr& h) {
    return detail::alternation3(
        [&](const Expr& a, const Expr& b, const Expr& c) {
            return A2_formula(sp, a, b, c);
        },
        f, g, h);
}

// --- order-3 -----------------------------------------------------------------

// A3 = dB3(f,g,h) + B2(f,B1(g,h)) - B2(B1(f,g),h)
//      + B1(f,B2(g,h)) - B1(B2(f,g),h)
inline Expr A3_direct(const StarProduct& sp, const Expr& f, const Expr& g,
                      const Expr& h) {
    Expr db3 = f * sp.b3(g, h) - sp.b3(f * g, h) + sp.b3(f, g * h) -
               sp.b3(f, g) * h;
    return db3 + sp.b2(f, sp.b1(g, h)) - sp.b2(sp.b1(f, g), h) +
           sp.b1(f, sp.b2(g, h)) - sp.b1(sp.b2(f, g), h);
}

// Cyclically symmetrized form of the totally antisymmetric part,
//   3 A3^- = 2 sum_cyc [ B2^-(f, B1^-(g,h)) + B1^-(f, B2^-(g,h)) ],
// independent of B3. Identically zero whenever B2 is symmetric.
inline Expr A3_antisym(const StarProduct& sp, const Expr& f, const Expr& g,
                       const Expr& h) {
    auto cyc = [&](int bi, int bj, const Expr& a, const Expr& b, const Expr& c) {
        return sp.b_antisym(bi, a, sp.b_antisym(bj, b, c));
    };
    Expr sum;
    const std::array<std::array<const Expr*, 3>, 3> cycles = {
        {{&f, &g, &h}, {&h, &f, &g}, {&g, &h, &f}}};
    for (const auto& t : cycles) {
        sum += cyc(2, 1, *t[0], *t[1], *t[2]);
        sum += cyc(1, 2, *t[0], *t[1], *t[2]);
    }
    return sum.scaled(Scalar::rational(2, 3));
}

// --- obstruction and dA3 -----------------------------------------------------

// O(f,g,h,k) = A2(f,g,B1(h,k)) - A2(f,B1(g,h),k) + A2(B1(f,g),h,k)
//              + B1(A2(g,h,k),f) - B1(A2(f,g,h),k)
inline Expr obstruction_O(const StarProduct& sp, const Expr& f, const Expr& g,
                          const Expr& h, const Expr& k) {
    return A2_formula(sp, f, g, sp.b1(h, k)) -
           A2_formula(sp, f, sp.b1(g, h), k) +
           A2_formula(sp, sp.b1(f, g), h, k) +
           sp.b1(A2_formula(sp, g, h, k), f) -
           sp.b1(A2_formula(sp, f, g, h), k);
}

struct DA3Routes {
    Expr coboundary;       // Hochschild d applied to the A3 cochain
    Expr pentagon;         // order-3 rearrangement of the Pentagon identity
    Expr direct_expansion; // via dB2, no A2/A3/B3 involved
};

inline DA3Routes dA3_two_ways(const StarProduct& sp, const Expr& f,
                              const Expr& g, const Expr& h, const Expr& k) {
    if (sp.order() < 2)
        throw std::invalid_argument(
            "dA3 routes need truncation order >= 2 for the star-expansion path");
    DA3Routes out;

    // Route 1: d(A3) with A3 evaluated from the closed order-3 formula.
    Cochain a3(3, [&sp](const std::vector<Expr>& a) {
        return A3_direct(sp, a[0], a[1], a[2]);
    });
    out.coboundary = hochschild_d(a3)({f, g, h, k});

    // Route 2: Pentagon identity at order 3, with A2 taken from the star
    // expansion rather than the closed formula.
    auto a2 = [&sp](const Expr& a, const Expr& b, const Expr& c) {
        return associator_series(sp, a, b, c).coeff(2);
    };
    out.pentagon = a2(sp.b1(f, g), h, k) - a2(f, sp.b1(g, h), k) +
                   a2(f, g, sp.b1(h, k)) - sp.b1(f, a2(g, h, k)) -
                   sp.b1(a2(f, g, h), k);

    // Route 3: direct expansion through dB2; manifestly B3-free.
    Cochain b2(2, [&sp](const std::vector<Expr>& a) {
        return sp.b2(a[0], a[1]);
    });
    Cochain db2 = hochschild_d(b2);
    out.direct_expansion = db2({f, g, sp.b1(h, k)}) - db2({f, sp.b1(g, h), k}) +
                           db2({sp.b1(f, g), h, k}) +
                           sp.b1(db2({g, h, k}), f) - sp.b1(db2({f, g, h}), k);
    return out;
}

// --- self-associator contractions -------------------------------------------

// Four-term bivector contraction for A3(f,f,f) of the Weyl product; the
// value of the full product including its third-order coefficient, so it is
// meaningful for any f regardless of the pluggable B3.
inline Expr A3_cadabra(const Bivector& pi, const Expr& f) {
    std::array<Expr, 6> df;
    std::array<std::array<Expr, 6>, 6> ddf;
    for (int v = 0; v < 6; ++v) df[v] = f.partial(VarIndex{v});
    for (int v = 0; v < 6; ++v)
        for (int w = v; w < 6; ++w) {
            ddf[v][w] = df[v].partial(VarIndex{w});
            ddf[w][v] = ddf[v][w];
        }

    // d_L Pi^{NO}, cached; only position derivatives survive.
    auto dpi = [&pi](int L, int N, int O) {
        return pi.entry(N, O).partial(VarIndex{L});
    };

    Expr sum;
    const auto& nz = pi.nonzero_entries();
    for (auto [L, M] : nz) {
        const Expr& piLM = pi.entry(L, M);
        // Terms with Pi^{LM} dL Pi^{NO} dN Pi^{PQ}
        for (int N = 0; N < 6; ++N) {
            for (int O = 0; O < 6; ++O) {
                Expr d1 = dpi(L, N, O);
                if (d1.is_zero()) continue;
                for (int P = 0; P < 6; ++P) {
                    for (int Q = 0; Q < 6; ++Q) {
                        Expr d2 = dpi(N, P, Q);
                        if (d2.is_zero()) continue;
                        Expr head = piLM * d1 * d2;
                        // + dM f dP f dO dQ f
                        if (!df[M].is_zero() && !df[P].is_zero() &&
                            !ddf[O][Q].is_zero())
                            sum += head * df[M] * df[P] * ddf[O][Q];
                        // - dO f dP f dM dQ f
                        if (!df[O].is_zero() && !df[P].is_zero() &&
                            !ddf[M][Q].is_zero())
                            sum -= head * df[O] * df[P] * ddf[M][Q];
                    }
                }
            }
        }
        // Terms with Pi^{LM} Pi^{NO} dL Pi^{PQ}
        for (auto [N, O] : nz) {
            const Expr& piNO = pi.entry(N, O);
            for (int P = 0; P < 6; ++P) {
                for (int Q = 0; Q < 6; ++Q) {
                    Expr d1 = dpi(L, P, Q);
                    if (d1.is_zero()) continue;
                    Expr head = piLM * piNO * d1;
                    // -2 dP f dM dN f dO dQ f
                    if (!df[P].is_zero() && !ddf[M][N].is_zero() &&
                        !ddf[O][Q].is_zero())
                        sum -= (head * df[P] * ddf[M][N] * ddf[O][Q])
                                   .scaled(Scalar(2));
                    // + dM f dN dP f dO dQ f
                    if (!df[M].is_zero() && !ddf[N][P].is_zero() &&
                        !ddf[O][Q].is_zero())
                        sum += head * df[M] * ddf[N][P] * ddf[O][Q];
                }
            }
        }
    }
    return sum.scaled(Scalar(0, mpq_class(2, 3))); // prefactor 2i/3
}

// Closed diagonal form, valid when f depends on the momenta only and has no
// mixed second momentum derivatives:
//   A3(f,f,f) = 4i/3 (d_{q1} Pi^{p2 p3} + d_{q2} Pi^{p3 p1} + d_{q3} Pi^{p1 p2})
//               * sum_{cyc} Pi^{p_a p_b} d_{p_c} f d^2_{p_a} f d^2_{p_b} f
inline Expr A3_closed_form(const Bivector& pi, const Expr& f) {
    if (!f.depends_only_on_p())
        throw std::invalid_argument(
            "A3_closed_form requires a function of the momenta only");
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            Expr mixed = f.partial(VarIndex::p(a + 1)).partial(VarIndex::p(b + 1));
            if (!mixed.is_zero())
                throw std::invalid_argument(
                    "A3_closed_form requires d2 f / dp" + std::to_string(a + 1) +
                    " dp" + std::to_string(b + 1) + " = 0; got " + mixed.str());
        }
    }
    Expr prefactor =
        pi.entry(VarIndex::p(2), VarIndex::p(3)).partial(VarIndex::q(1)) +
        pi.entry(VarIndex::p(3), VarIndex::p(1)).partial(VarIndex::q(2)) +
        pi.entry(VarIndex::p(1), VarIndex::p(2)).partial(VarIndex::q(3));

    Expr cyc;
    const int idx[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (const auto& s : idx) {
        Expr piab = pi.entry(VarIndex::p(s[0]), VarIndex::p(s[1]));
        if (piab.is_zero()) continue;
        Expr d1 = f.partial(VarIndex::p(s[2]));
        Expr d2a = f.partial(VarIndex::p(s[0])).partial(VarIndex::p(s[0]));
        Expr d2b = f.partial(VarIndex::p(s[1])).partial(VarIndex::p(s[1]));
        cyc += piab * d1 * d2a * d2b;
    }
    return (prefactor * cyc).scaled(Scalar(0, mpq_class(4, 3)));
}

// --- verdicts ----------------------------------------------------------------

struct Verdict {
    std::string check_id;
    bool pass = true;
    std::string lhs, rhs;
    std::optional<std::string> witness_inputs;
    std::optional<Expr> witness_difference;

    static Verdict ok(std::string id, std::string lhs = "0",
                      std::string rhs = "0") {
        Verdict v;
        v.check_id = std::move(id);
        v.pass = true;
        v.lhs = std::move(lhs);
        v.rhs = std::move(rhs);
        return v;
    }
    static Verdict fail(std::string id, std::string lhs, std::string rhs,
                        std::string inputs, Expr difference) {
        Verdict v;
        v.check_id = std::move(id);
        v.pass = false;
        v.lhs = std::move(lhs);
        v.rhs = std::move(rhs);
        v.witness_inputs = std::move(inputs);
        v.witness_difference = std::move(difference);
        return v;
    }
};

// Flexibility at order 2: A2(f,g,f) = 0 on the supplied pairs.
inline Verdict check_flexible2(const StarProduct& sp,
                               const std::vector<std::pair<Expr, Expr>>& pairs) {
    for (const auto& [f, g] : pairs) {
        Expr v = A2_formula(sp, f, g, f);
        if (!v.is_zero())
            return Verdict::fail("flexibility_order2", v.str(), "0",
                                 "(f,g) = (" + f.str() + ", " + g.str() + ")", v);
    }
    return Verdict::ok("flexibility_order2");
}

// Power associativity at order 3 for a single generator: nonzero
// A3(f,f,f) means f*(f*f) != (f*f)*f.
inline Verdict check_power_assoc(const Bivector& pi, const Expr& f) {
    Expr v = A3_cadabra(pi, f);
    if (!v.is_zero())
        return Verdict::fail("power_associativity", v.str(), "0",
                             "f = " + f.str(), v);
    return Verdict::ok("power_associativity");
}

// Alternativity probes on a witness set: total antisymmetry of the
// associator requires A2 to vanish when two arguments coincide and the
// diagonal third-order associator to vanish.
inline Verdict check_alternative(const StarProduct& sp, const Bivector& pi,
                                 const std::vector<Expr>& witnesses) {
    for (const auto& f : witnesses) {
        for (const auto& g : witnesses) {
            Expr a = A2_formula(sp, f, f, g);
            if (!a.is_zero())
                return Verdict::fail("alternativity", a.str(), "0",
                                     "A2(f,f,g) with f = " + f.str() +
                                         ", g = " + g.str(),
                                     a);
            Expr b = A2_formula(sp, f, g, g);
            if (!b.is_zero())
                return Verdict::fail("alternativity", b.str(), "0",
                                     "A2(f,g,g) with f = " + f.str() +
                                         ", g = " + g.str(),
                                     b);
        }
        Expr d = A3_cadabra(pi, f);
        if (!d.is_zero())
            return Verdict::fail("alternativity", d.str(), "0",
                                 "A3(f,f,f) with f = " + f.str(), d);
    }
    return Verdict::ok("alternativity");
}

// The defining conditions of a monopole star product, checked exactly:
//   1. A2(p1,p2,p3) != 0
//   2. A2(q_i,x^I,x^J) = 0 for all i, I, J
//   3. B1(q_i, A2(p1,p2,p3)) = 0 for i = 1,2,3
//   4. A2 totally antisymmetric on all ordered coordinate triples
//   5. B2^-(x^I,x^J) = 0 on all coordinate pairs (distinguished coordinates)
inline std::vector<Verdict> validate_monopole(const StarProduct& sp) {
    std::vector<Verdict> out;
    const Expr p1 = Expr::p(1), p2 = Expr::p(2), p3 = Expr::p(3);

    Expr a2p = A2_formula(sp, p1, p2, p3);
    if (a2p.is_zero())
        out.push_back(Verdict::fail("monopole_a2_momenta_nonzero", "0", "!= 0",
                                    "(p1,p2,p3)", a2p));
    else
        out.push_back(
            Verdict::ok("monopole_a2_momenta_nonzero", a2p.str(), "!= 0"));

    {
        Verdict v = Verdict::ok("monopole_a2_position_slots_zero");
        for (int i = 1; i <= 3 && v.pass; ++i) {
            Expr qi = Expr::q(i);
            for (auto I : VarIndex::all()) {
                for (auto J : VarIndex::all()) {
                    Expr a = A2_formula(sp, qi, Expr::variable(I),
                                        Expr::variable(J));
                    if (!a.is_zero()) {
                        v = Verdict::fail("monopole_a2_position_slots_zero",
                                          a.str(), "0",
                                          "A2(q" + std::to_string(i) + "," +
                                              I.name() + "," + J.name() + ")",
                                          a);
                        break;
                    }
                }
                if (!v.pass) break;
            }
        }
        out.push_back(v);
    }

    {
        Verdict v = Verdict::ok("monopole_bracket_position_a2_zero");
        for (int i = 1; i <= 3; ++i) {
            Expr b = sp.b1(Expr::q(i), a2p);
            if (!b.is_zero()) {
                v = Verdict::fail("monopole_bracket_position_a2_zero", b.str(),
                                  "0", "B1(q" + std::to_string(i) +
                                           ", A2(p1,p2,p3))",
                                  b);
                break;
            }
        }
        out.push_back(v);
    }

    {
        Verdict v = Verdict::ok("monopole_a2_total_antisymmetry");
        auto vars = VarIndex::all();
        for (auto I : vars) {
            for (auto J : vars) {
                for (auto K : vars) {
                    Expr a = A2_formula(sp, Expr::variable(I), Expr::variable(J),
                                        Expr::variable(K));
                    Expr target =
                        A2_antisym(sp, Expr::variable(I), Expr::variable(J),
                                   Expr::variable(K));
                    Expr d = a - target;
                    if (!d.is_zero()) {
                        v = Verdict::fail(
                            "monopole_a2_total_antisymmetry", a.str(),
                            target.str(),
                            "(" + I.name() + "," + J.name() + "," + K.name() + ")",
                            d);
                        break;
                    }
                }
                if (!v.pass) break;
            }
            if (!v.pass) break;
        }
        out.push_back(v);
    }

    {
        Verdict v = Verdict::ok("monopole_b2_antisym_coordinates_zero");
        for (auto I : VarIndex::all()) {
            for (auto J : VarIndex::all()) {
                Expr d = sp.b_antisym(2, Expr::variable(I), Expr::variable(J));
                if (!d.is_zero()) {
                    v = Verdict::fail("monopole_b2_antisym_coordinates_zero",
                                      d.str(), "0",
                                      "B2^-(" + I.name() + "," + J.name() + ")",
                                      d);
                    break;
                }
            }
            if (!v.pass) break;
        }
        out.push_back(v);
    }

    return out;
}

} // namespace mstar
