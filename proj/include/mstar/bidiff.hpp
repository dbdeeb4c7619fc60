#pragma once

// Bi-differential operators with q-dependent coefficient functions:
//
//   op(f,g) = sum_t  c_t(q) * (d^{L_t} f) * (d^{R_t} g)
//
// where L_t, R_t are derivative multi-indices over the six coordinates.
// Terms are kept merged and sorted, so the representation is canonical.

#include "mstar/expr.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace mstar {

using MultiIndex = std::array<std::uint8_t, 6>; // derivative order per variable

inline int multi_order(const MultiIndex& m) {
    int n = 0;
    for (auto e : m) n += e;
    return n;
}

inline Expr apply_derivatives(Expr f, const MultiIndex& m) {
    for (int v = 0; v < 6 && !f.is_zero(); ++v)
        for (int k = 0; k < m[v]; ++k) f = f.partial(VarIndex{v});
    return f;
}

struct BiDiffTerm {
    Expr coeff;
    MultiIndex left{};
    MultiIndex right{};
};

class BiDiffOp {
public:
    BiDiffOp() = default;
    explicit BiDiffOp(std::vector<BiDiffTerm> terms) { assign(std::move(terms)); }

    static BiDiffOp zero() { return BiDiffOp(); }

    static BiDiffOp single(Expr coeff, const MultiIndex& left,
                           const MultiIndex& right) {
        return BiDiffOp({BiDiffTerm{std::move(coeff), left, right}});
    }

    const std::vector<BiDiffTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Expr apply(const Expr& f, const Expr& g) const {
        Expr out;
        for (const auto& t : terms_) {
            Expr df = apply_derivatives(f, t.left);
            if (df.is_zero()) continue;
            Expr dg = apply_derivatives(g, t.right);
            if (dg.is_zero()) continue;
            out += t.coeff * df * dg;
        }
        return out;
    }
    Expr operator()(const Expr& f, const Expr& g) const { return apply(f, g); }

    // op^T(f,g) := op(g,f); swapping the multi-indices realizes it exactly.
    BiDiffOp transpose() const {
        std::vector<BiDiffTerm> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) ts.push_back({t.coeff, t.right, t.left});
        return BiDiffOp(std::move(ts));
    }

    BiDiffOp scaled(const Scalar& s) const {
        std::vector<BiDiffTerm> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_)
            ts.push_back({t.coeff.scaled(s), t.left, t.right});
        return BiDiffOp(std::move(ts));
    }

    friend BiDiffOp operator+(const BiDiffOp& a, const BiDiffOp& b) {
        std::vector<BiDiffTerm> ts = a.terms_;
        ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
        return BiDiffOp(std::move(ts));
    }
    friend BiDiffOp operator-(const BiDiffOp& a, const BiDiffOp& b) {
        return a + b.scaled(Scalar(-1));
    }

    std::set<std::pair<int, int>> degree_profile() const {
        std::set<std::pair<int, int>> prof;
        for (const auto& t : terms_)
            prof.insert({multi_order(t.left), multi_order(t.right)});
        return prof;
    }

private:
    void assign(std::vector<BiDiffTerm> raw) {
        for (const auto& t : raw)
            if (!t.coeff.depends_only_on_q())
                throw std::invalid_argument(
                    "bi-differential operator coefficients must depend on the "
                    "position variables only");
        std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
            if (a.left != b.left) return a.left < b.left;
            return a.right < b.right;
        });
        terms_.clear();
        for (auto& t : raw) {
            if (t.coeff.is_zero()) continue;
            if (!terms_.empty() && terms_.back().left == t.left &&
                terms_.back().right == t.right) {
                terms_.back().coeff += t.coeff;
                if (terms_.back().coeff.is_zero()) terms_.pop_back();
            } else {
                terms_.push_back(std::move(t));
            }
        }
    }

    std::vector<BiDiffTerm> terms_;
};

inline BiDiffOp sym_part(const BiDiffOp& op) {
    return (op + op.transpose()).scaled(Scalar::rational(1, 2));
}

inline BiDiffOp antisym_part(const BiDiffOp& op) {
    return (op - op.transpose()).scaled(Scalar::rational(1, 2));
}

// True iff the antisymmetric part has a nonzero (1,1)-degree component,
// decided by evaluating on the 36 coordinate pairs (only the (1,1) part of
// an operator that kills constants can survive on linear functions).
inline bool has_11_part(const BiDiffOp& op) {
    for (auto I : VarIndex::all()) {
        Expr x = Expr::variable(I);
        for (auto J : VarIndex::all()) {
            Expr y = Expr::variable(J);
            Expr d = op.apply(x, y) - op.apply(y, x);
            if (!d.is_zero()) return true;
        }
    }
    return false;
}

} // namespace mstar
