#pragma once

// Star products truncated at order lambda^3:
//
//   f * g = f g + lambda B1(f,g) + lambda^2 B2(f,g) + lambda^3 B3(f,g)
//
// B1 is the twisted Poisson bracket. B2 is the second-order Weyl coefficient
//
//   B2(f,g) = 1/2 Pi^{IJ} Pi^{KL} (dI dK f)(dJ dL g)
//           + 1/3 Pi^{IJ} (dJ Pi^{KL}) ((dI dK f)(dL g) - (dK f)(dI dL g))
//
// whose sign is fixed so that the order-2 associator is totally
// antisymmetric on coordinates for every field and so that the constant-Pi
// limit reproduces the Moyal expansion 1/2 (Pi dd)^2. B3 is pluggable and
// defaults to zero; every shipped identity is either B3-independent or run
// under two different B3 choices.

#include "mstar/bidiff.hpp"
#include "mstar/cochain.hpp"
#include "mstar/expr.hpp"
#include "mstar/field.hpp"
#include "mstar/series.hpp"

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mstar {

using BiCochain = std::function<Expr(const Expr&, const Expr&)>;

// B1 as a concrete bi-differential operator; evaluates identically to
// bracket(pi, f, g).
inline BiDiffOp weyl_B1(const Bivector& pi) {
    std::vector<BiDiffTerm> terms;
    for (auto [I, J] : pi.nonzero_entries()) {
        MultiIndex l{}, r{};
        l[I] = 1;
        r[J] = 1;
        terms.push_back({pi.entry(I, J), l, r});
    }
    return BiDiffOp(std::move(terms));
}

inline BiDiffOp weyl_B2(const Bivector& pi) {
    std::vector<BiDiffTerm> terms;
    const Scalar half = Scalar::rational(1, 2);
    const Scalar third = Scalar::rational(1, 3);
    for (auto [I, J] : pi.nonzero_entries()) {
        const Expr& piIJ = pi.entry(I, J);
        for (auto [K, L] : pi.nonzero_entries()) {
            // 1/2 Pi^{IJ} Pi^{KL} (dI dK f)(dJ dL g)
            {
                MultiIndex l{}, r{};
                l[I] += 1;
                l[K] += 1;
                r[J] += 1;
                r[L] += 1;
                terms.push_back({(piIJ * pi.entry(K, L)).scaled(half), l, r});
            }
            // 1/3 Pi^{IJ} dJ Pi^{KL} ((dI dK f)(dL g) - (dK f)(dI dL g))
            Expr dPi = pi.entry(K, L).partial(VarIndex{J});
            if (dPi.is_zero()) continue;
            Expr c = (piIJ * dPi).scaled(third);
            {
                MultiIndex l{}, r{};
                l[I] += 1;
                l[K] += 1;
                r[L] += 1;
                terms.push_back({c, l, r});
            }
            {
                MultiIndex l{}, r{};
                l[K] += 1;
                r[I] += 1;
                r[L] += 1;
                terms.push_back({-c, l, r});
            }
        }
    }
    return BiDiffOp(std::move(terms));
}

class StarProduct {
public:
    static constexpr int max_order = 3;

    // Weyl star product for a twisted Poisson bivector, with pluggable B3.
    static StarProduct weyl(const Bivector& pi, BiDiffOp b3 = BiDiffOp::zero(),
                            int order = 3) {
        StarProduct sp(order);
        BiDiffOp b1 = weyl_B1(pi);
        BiDiffOp b2 = weyl_B2(pi);
        sp.coeff_[1] = [b1](const Expr& f, const Expr& g) { return b1(f, g); };
        sp.coeff_[2] = [b2](const Expr& f, const Expr& g) { return b2(f, g); };
        sp.coeff_[3] = [b3](const Expr& f, const Expr& g) { return b3(f, g); };
        sp.b1_op_ = std::move(b1);
        sp.b2_op_ = std::move(b2);
        sp.b3_op_ = std::move(b3);
        return sp;
    }

    static StarProduct from_cochains(BiCochain b1, BiCochain b2, BiCochain b3,
                                     int order = 3) {
        StarProduct sp(order);
        sp.coeff_[1] = std::move(b1);
        sp.coeff_[2] = std::move(b2);
        sp.coeff_[3] = std::move(b3);
        return sp;
    }

    int order() const { return order_; }

    // B_j(f,g); j = 0 is the pointwise product.
    Expr b(int j, const Expr& f, const Expr& g) const {
        if (j == 0) return f * g;
        if (j < 0 || j > max_order)
            throw std::invalid_argument("star coefficient index out of range");
        return coeff_[j](f, g);
    }
    Expr b1(const Expr& f, const Expr& g) const { return b(1, f, g); }
    Expr b2(const Expr& f, const Expr& g) const { return b(2, f, g); }
    Expr b3(const Expr& f, const Expr& g) const { return b(3, f, g); }

    Expr b_antisym(int j, const Expr& f, const Expr& g) const {
        return (b(j, f, g) - b(j, g, f)).scaled(Scalar::rational(1, 2));
    }
    Expr b_sym(int j, const Expr& f, const Expr& g) const {
        return (b(j, f, g) + b(j, g, f)).scaled(Scalar::rational(1, 2));
    }

    const std::optional<BiDiffOp>& b1_op() const { return b1_op_; }
    const std::optional<BiDiffOp>& b2_op() const { return b2_op_; }
    const std::optional<BiDiffOp>& b3_op() const { return b3_op_; }

private:
    explicit StarProduct(int order) : order_(order) {
        if (order < 0 || order > max_order)
            throw std::invalid_argument("truncation order must be in 0..3");
        auto zero = [](const Expr&, const Expr&) { return Expr::zero(); };
        for (auto& c : coeff_) c = zero;
    }

    int order_;
    std::array<BiCochain, max_order + 1> coeff_; // index 1..3 used
    std::optional<BiDiffOp> b1_op_, b2_op_, b3_op_;
};

// Cauchy-product truncation: [F*G]_j = sum_{a+b+c=j} B_c(F_a, G_b).
inline LambdaSeries star_multiply(const StarProduct& sp, const LambdaSeries& F,
                                  const LambdaSeries& G) {
    if (F.order() != sp.order() || G.order() != sp.order())
        throw std::invalid_argument(
            "lambda-series truncation order mismatch with star product");
    LambdaSeries out(sp.order());
    for (int a = 0; a <= sp.order(); ++a) {
        if (F.coeff(a).is_zero()) continue;
        for (int b = 0; a + b <= sp.order(); ++b) {
            if (G.coeff(b).is_zero()) continue;
            for (int c = 0; a + b + c <= sp.order(); ++c)
                out.coeff(a + b + c) += sp.b(c, F.coeff(a), G.coeff(b));
        }
    }
    return out;
}

inline LambdaSeries star_multiply(const StarProduct& sp, const Expr& f,
                                  const Expr& g) {
    return star_multiply(sp, LambdaSeries::from_expr(f, sp.order()),
                         LambdaSeries::from_expr(g, sp.order()));
}

inline LambdaSeries star_commutator(const StarProduct& sp, const Expr& f,
                                    const Expr& g) {
    return star_multiply(sp, f, g) - star_multiply(sp, g, f);
}

// Jordan product 1/2 (f*g + g*f); symmetric, and equal to f*f on the diagonal.
inline LambdaSeries star_jordan(const StarProduct& sp, const Expr& f,
                                const Expr& g) {
    return (star_multiply(sp, f, g) + star_multiply(sp, g, f))
        .scaled(Scalar::rational(1, 2));
}

// Equivalence transformation D = id + lambda D1: the product
// f *' g := D( D^{-1}f * D^{-1}g ) satisfies B1' = B1 - dD1.
inline StarProduct gauge_transform(const StarProduct& sp, const DiffOp& d1) {
    if (!d1.vanishes_on_constants())
        throw std::invalid_argument(
            "gauge transformation requires D1 to vanish on constants");
    const int order = sp.order();
    auto shared_sp = std::make_shared<StarProduct>(sp);
    auto shared_d1 = std::make_shared<DiffOp>(d1);

    auto apply_d = [shared_d1](const LambdaSeries& s) {
        LambdaSeries out(s.order());
        for (int j = 0; j <= s.order(); ++j) {
            out.coeff(j) = s.coeff(j);
            if (j > 0) out.coeff(j) += shared_d1->apply(s.coeff(j - 1));
        }
        return out;
    };
    auto apply_d_inv = [shared_d1](const LambdaSeries& s) {
        LambdaSeries out(s.order());
        out.coeff(0) = s.coeff(0);
        for (int j = 1; j <= s.order(); ++j)
            out.coeff(j) = s.coeff(j) - shared_d1->apply(out.coeff(j - 1));
        return out;
    };

    auto transformed = [shared_sp, apply_d, apply_d_inv, order](
                           int j, const Expr& f, const Expr& g) {
        LambdaSeries F = LambdaSeries::from_expr(f, order);
        LambdaSeries G = LambdaSeries::from_expr(g, order);
        LambdaSeries prod =
            apply_d(star_multiply(*shared_sp, apply_d_inv(F), apply_d_inv(G)));
        return prod.coeff(j);
    };

    return StarProduct::from_cochains(
        [transformed](const Expr& f, const Expr& g) { return transformed(1, f, g); },
        [transformed](const Expr& f, const Expr& g) { return transformed(2, f, g); },
        [transformed](const Expr& f, const Expr& g) { return transformed(3, f, g); },
        order);
}

} // namespace mstar
