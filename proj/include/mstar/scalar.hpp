#pragma once

// Exact Gaussian-rational scalars: re + im*i with arbitrary-precision
// rational parts. This is the coefficient field of the whole engine, so
// every identity downstream is decided as an exact zero, never by tolerance.

#include <gmpxx.h>

#include <string>
#include <utility>

namespace mstar {

class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    explicit Scalar(mpq_class re) : re_(std::move(re)), im_(0) {
        re_.canonicalize();
    }
    Scalar(mpq_class re, mpq_class im)
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    // num/den need not be in lowest terms; den != 0.
    static Scalar rational(long num, long den) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(q);
    }

    static Scalar imaginary(const mpq_class& b) { return Scalar(mpq_class(0), b); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_imaginary() const { return re_ == 0 && im_ != 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
        mpq_class re = re_ * o.re_ - im_ * o.im_;
        mpq_class im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar conj() const { return Scalar(re_, -im_); }

    // Debug form "a" / "b*i" / "a+b*i"; grammar-conforming output lives in
    // the Expr printer, which needs term context to place signs.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (re_ != 0) out += re_.get_str();
        if (im_ != 0) {
            if (!out.empty() && im_ > 0) out += "+";
            out += im_.get_str() + "*i";
        }
        return out;
    }

private:
    mpq_class re_, im_;
};

} // namespace mstar
