#pragma once

// Truncated formal power series in the deformation parameter lambda with
// Expr coefficients. The parameter itself is never given a value; with
// lambda = i*hbar/2 the series carries all hbar bookkeeping exactly.

#include "mstar/expr.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mstar {

class LambdaSeries {
public:
    explicit LambdaSeries(int order = 3) : order_(order), c_(order + 1) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }

    static LambdaSeries from_expr(const Expr& f, int order = 3) {
        LambdaSeries s(order);
        s.c_[0] = f;
        return s;
    }

    int order() const { return order_; }
    const Expr& coeff(int j) const { return c_.at(j); }
    Expr& coeff(int j) { return c_.at(j); }

    bool is_zero() const {
        for (const auto& e : c_)
            if (!e.is_zero()) return false;
        return true;
    }

    LambdaSeries operator-() const {
        LambdaSeries r(order_);
        for (int j = 0; j <= order_; ++j) r.c_[j] = -c_[j];
        return r;
    }

    LambdaSeries& operator+=(const LambdaSeries& o) {
        check_order(o);
        for (int j = 0; j <= order_; ++j) c_[j] += o.c_[j];
        return *this;
    }
    LambdaSeries& operator-=(const LambdaSeries& o) {
        check_order(o);
        for (int j = 0; j <= order_; ++j) c_[j] -= o.c_[j];
        return *this;
    }

    friend LambdaSeries operator+(LambdaSeries a, const LambdaSeries& b) {
        return a += b;
    }
    friend LambdaSeries operator-(LambdaSeries a, const LambdaSeries& b) {
        return a -= b;
    }

    LambdaSeries scaled(const Scalar& s) const {
        LambdaSeries r(order_);
        for (int j = 0; j <= order_; ++j) r.c_[j] = c_[j].scaled(s);
        return r;
    }

    friend bool operator==(const LambdaSeries& a, const LambdaSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LambdaSeries& a, const LambdaSeries& b) {
        return !(a == b);
    }

    std::string str() const {
        std::string out;
        for (int j = 0; j <= order_; ++j) {
            if (j > 0) out += " + ";
            out += "(" + c_[j].str() + ")";
            if (j == 1) out += "*lambda";
            if (j > 1) out += "*lambda^" + std::to_string(j);
        }
        return out;
    }

private:
    void check_order(const LambdaSeries& o) const {
        if (o.order_ != order_)
            throw std::invalid_argument("lambda-series truncation order mismatch");
    }

    int order_;
    std::vector<Expr> c_;
};

} // namespace mstar
