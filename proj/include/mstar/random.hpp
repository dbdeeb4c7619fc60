#pragma once

// Seeded deterministic generators for fuzz inputs: random phase-space
// polynomials (optionally with momentum exponentials), random
// bi-differential operators for pluggable B3 and perturbation tests, and
// random first-order differential operators for gauge checks. Identical
// seeds must yield identical objects across runs, so every report that
// logs its seed is reproducible.

#include "mstar/bidiff.hpp"
#include "mstar/cochain.hpp"
#include "mstar/expr.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace mstar {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    Scalar rational_scalar(int num_range = 4, int den_range = 3) {
        long num = uniform(-num_range, num_range);
        if (num == 0) num = 1;
        long den = uniform(1, den_range);
        return Scalar::rational(num, den);
    }

    mpq_class rational(int num_range = 2, int den_range = 2) {
        long num = uniform(-num_range, num_range);
        long den = uniform(1, den_range);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    // Random polynomial in the allowed variables, degree <= max_deg per
    // variable, with an optional exp(i*alpha.p) factor per term.
    Expr expr(int max_terms = 3, int max_deg = 2, bool allow_q = true,
              bool allow_p = true, bool allow_exp = false) {
        Expr out;
        int terms = uniform(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            Expr mono = Expr::constant(rational_scalar());
            if (allow_q)
                for (int k = 1; k <= 3; ++k) {
                    int e = uniform(0, max_deg);
                    if (e > 0) mono *= Expr::q(k).pow(e);
                }
            if (allow_p)
                for (int k = 1; k <= 3; ++k) {
                    int e = uniform(0, max_deg);
                    if (e > 0) mono *= Expr::p(k).pow(e);
                }
            if (allow_exp && uniform(0, 2) == 0) {
                std::array<mpq_class, 3> alpha{mpq_class(0), mpq_class(0),
                                               mpq_class(0)};
                alpha[uniform(0, 2)] = rational(2, 2);
                mono *= Expr::exp_ip(alpha);
            }
            out += mono;
        }
        return out;
    }

    Expr q_polynomial(int max_terms = 3, int max_deg = 2) {
        return expr(max_terms, max_deg, true, false, false);
    }

    MultiIndex multi_index(int min_total, int max_total) {
        MultiIndex m{};
        int total = uniform(min_total, max_total);
        for (int k = 0; k < total; ++k) m[uniform(0, 5)] += 1;
        return m;
    }

    // Random bi-differential operator, degrees in [1,3] on each side and
    // random q-polynomial coefficients: zero on constants by construction.
    BiDiffOp bidiff(int max_terms = 3, int max_side_degree = 3) {
        std::vector<BiDiffTerm> terms;
        int n = uniform(1, max_terms);
        for (int t = 0; t < n; ++t)
            terms.push_back({q_polynomial(2, 2), multi_index(1, max_side_degree),
                             multi_index(1, max_side_degree)});
        return BiDiffOp(std::move(terms));
    }

    // Antisymmetric operator of bi-differential degree (2,2), for the
    // flexibility counterexample construction. Left and right multi-indices
    // are forced distinct so the antisymmetrization cannot collapse to zero.
    BiDiffOp antisym_22_perturbation() {
        std::vector<BiDiffTerm> terms;
        int n = uniform(1, 2);
        for (int t = 0; t < n; ++t) {
            MultiIndex l = multi_index(2, 2);
            MultiIndex r = multi_index(2, 2);
            while (r == l) r = multi_index(2, 2);
            Expr coeff = q_polynomial(2, 1);
            if (coeff.is_zero()) coeff = Expr::one();
            terms.push_back({coeff, l, r});
        }
        return antisym_part(BiDiffOp(std::move(terms)));
    }

    DiffOp diffop(int max_terms = 2, int max_degree = 2) {
        std::vector<DiffTerm> terms;
        int n = uniform(1, max_terms);
        for (int t = 0; t < n; ++t)
            terms.push_back({expr(2, 1, true, true, false),
                             multi_index(1, max_degree)});
        return DiffOp(std::move(terms));
    }

private:
    std::mt19937_64 eng_;
};

inline BiDiffOp random_b3(std::uint64_t seed) {
    Rng rng(seed);
    return rng.bidiff(3, 3);
}

} // namespace mstar
