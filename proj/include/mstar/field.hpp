#pragma once

// Magnetic field configurations and the twisted Poisson structure they
// induce on T*R^3.
//
// Conventions, printed in every report:
//   Pi^{q_i p_j} = delta_ij,  Pi^{p_i p_j} = eps_{ijk} B^k,  Pi^{q_i q_j} = 0
//   {f,g} = sum_{I,J} Pi^{IJ} dI f dJ g   =>   {q_i,p_j} = delta_ij,
//                                              {p_1,p_2} = B^3, ...
// The bracket is an antisymmetric bi-derivation; its Jacobiator is
// proportional to div B and vanishes exactly for divergence-free fields.

#include "mstar/expr.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mstar {

struct FieldConfig {
    std::array<Expr, 3> component; // B^1, B^2, B^3, functions of q only
    Expr divergence;
    bool monopole = false; // div B != 0

    static FieldConfig make(const Expr& b1, const Expr& b2, const Expr& b3) {
        FieldConfig cfg;
        cfg.component = {b1, b2, b3};
        for (int k = 0; k < 3; ++k) {
            if (!cfg.component[k].depends_only_on_q())
                throw std::invalid_argument(
                    "field component B" + std::to_string(k + 1) +
                    " must be a polynomial in the position variables only");
        }
        cfg.divergence = b1.partial(VarIndex::q(1)) + b2.partial(VarIndex::q(2)) +
                         b3.partial(VarIndex::q(3));
        cfg.monopole = !cfg.divergence.is_zero();
        return cfg;
    }
};

inline Expr monopole_density(const FieldConfig& cfg) { return cfg.divergence; }

class Bivector {
public:
    explicit Bivector(const FieldConfig& cfg) : field_(cfg) {
        for (auto& row : m_)
            for (auto& e : row) e = Expr::zero();
        // Pi^{q_i p_i} = 1
        for (int i = 0; i < 3; ++i) {
            m_[i][i + 3] = Expr::one();
            m_[i + 3][i] = -Expr::one();
        }
        // Pi^{p_i p_j} = eps_{ijk} B^k
        static const int eps[3][3] = {{0, 3, -2}, {-3, 0, 1}, {2, -1, 0}};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                int e = eps[i][j];
                if (e == 0) continue;
                Expr b = cfg.component[std::abs(e) - 1];
                m_[i + 3][j + 3] = (e > 0) ? b : -b;
            }
        }
        for (int I = 0; I < 6; ++I)
            for (int J = 0; J < 6; ++J)
                if (!m_[I][J].is_zero()) nonzero_.push_back({I, J});
    }

    const Expr& entry(VarIndex I, VarIndex J) const { return m_[I.code][J.code]; }
    const Expr& entry(int I, int J) const { return m_[I][J]; }
    const std::vector<std::pair<int, int>>& nonzero_entries() const {
        return nonzero_;
    }
    const FieldConfig& field() const { return field_; }

private:
    FieldConfig field_;
    Expr m_[6][6];
    std::vector<std::pair<int, int>> nonzero_;
};

// {f,g} = sum_{I,J} Pi^{IJ} dI f dJ g
inline Expr bracket(const Bivector& pi, const Expr& f, const Expr& g) {
    Expr out;
    for (auto [I, J] : pi.nonzero_entries()) {
        Expr df = f.partial(VarIndex{I});
        if (df.is_zero()) continue;
        Expr dg = g.partial(VarIndex{J});
        if (dg.is_zero()) continue;
        out += pi.entry(I, J) * df * dg;
    }
    return out;
}

// {f,{g,h}} + {h,{f,g}} + {g,{h,f}}; totally antisymmetric, and zero
// exactly when the field is divergence-free.
inline Expr jacobiator(const Bivector& pi, const Expr& f, const Expr& g,
                       const Expr& h) {
    return bracket(pi, f, bracket(pi, g, h)) +
           bracket(pi, h, bracket(pi, f, g)) +
           bracket(pi, g, bracket(pi, h, f));
}

} // namespace mstar
