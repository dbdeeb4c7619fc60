#pragma once

// n-linear maps on phase-space functions ("cochains") realized as
// evaluation objects, plus the Hochschild coboundary of the classical
// commutative product:
//
//   d phi(a0,...,an) = a0*phi(a1,...,an)
//                    + sum_{j=0}^{n-1} (-1)^{j+1} phi(..., a_j*a_{j+1}, ...)
//                    + (-1)^{n+1} phi(a0,...,a_{n-1})*an
//
// d is a coboundary operator (d^2 = 0) because the pointwise product is
// associative; only that product is ever used here, never the star product.

#include "mstar/bidiff.hpp"
#include "mstar/expr.hpp"

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mstar {

// Differential operator in one argument (a 1-cochain with teeth); used for
// gauge/equivalence transformations.
struct DiffTerm {
    Expr coeff;
    MultiIndex deriv{};
};

class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(std::vector<DiffTerm> terms) : terms_(std::move(terms)) {}

    Expr apply(const Expr& f) const {
        Expr out;
        for (const auto& t : terms_) {
            Expr df = apply_derivatives(f, t.deriv);
            if (!df.is_zero()) out += t.coeff * df;
        }
        return out;
    }
    Expr operator()(const Expr& f) const { return apply(f); }

    bool vanishes_on_constants() const {
        for (const auto& t : terms_)
            if (multi_order(t.deriv) == 0 && !t.coeff.is_zero()) return false;
        return true;
    }

    const std::vector<DiffTerm>& terms() const { return terms_; }

private:
    std::vector<DiffTerm> terms_;
};

class Cochain {
public:
    using Fn = std::function<Expr(const std::vector<Expr>&)>;

    Cochain() : arity_(1), fn_([](const std::vector<Expr>&) { return Expr(); }) {}
    Cochain(int arity, Fn fn) : arity_(arity), fn_(std::move(fn)) {
        if (arity_ < 1) throw std::invalid_argument("cochain arity must be >= 1");
    }

    static Cochain from_bidiff(BiDiffOp op) {
        return Cochain(2, [op = std::move(op)](const std::vector<Expr>& a) {
            return op.apply(a[0], a[1]);
        });
    }
    static Cochain from_diffop(DiffOp op) {
        return Cochain(1, [op = std::move(op)](const std::vector<Expr>& a) {
            return op.apply(a[0]);
        });
    }

    int arity() const { return arity_; }

    Expr eval(const std::vector<Expr>& args) const {
        if (static_cast<int>(args.size()) != arity_)
            throw std::invalid_argument("cochain arity mismatch: expected " +
                                        std::to_string(arity_) + ", got " +
                                        std::to_string(args.size()));
        return fn_(args);
    }
    Expr operator()(const std::vector<Expr>& args) const { return eval(args); }

private:
    int arity_;
    Fn fn_;
};

inline Cochain hochschild_d(const Cochain& phi) {
    int n = phi.arity();
    return Cochain(n + 1, [phi, n](const std::vector<Expr>& a) {
        Expr out = a[0] * phi(std::vector<Expr>(a.begin() + 1, a.end()));
        int sign = -1;
        for (int j = 0; j < n; ++j) {
            std::vector<Expr> args;
            args.reserve(n);
            for (int k = 0; k <= n; ++k) {
                if (k == j)
                    args.push_back(a[j] * a[j + 1]);
                else if (k != j + 1)
                    args.push_back(a[k]);
            }
            Expr v = phi(args);
            out += (sign > 0) ? v : -v;
            sign = -sign;
        }
        Expr tail = phi(std::vector<Expr>(a.begin(), a.end() - 1)) * a[n];
        out += (sign > 0) ? tail : -tail;
        return out;
    });
}

} // namespace mstar
