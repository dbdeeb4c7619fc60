#pragma once

// Canonical exact symbolic phase-space functions on T*R^3.
//
// An Expr is a finite sum of monomials
//
//     c * q1^a1 q2^a2 q3^a3 * p1^b1 p2^b2 p3^b3 * exp(i*(s1*p1+s2*p2+s3*p3))
//
// with Gaussian-rational coefficient c and rational exponential slopes s.
// The class is closed under multiplication and all first partial
// derivatives, and the term map is kept in canonical form at all times, so
// structural equality is semantic equality. Values are immutable once
// built (every operation returns a new Expr), so expressions can be shared
// and evaluated concurrently.

#include "mstar/scalar.hpp"

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstar {

// One of the six canonical coordinates, ordered (q1,q2,q3,p1,p2,p3).
struct VarIndex {
    int code = 0; // 0..2 -> q1..q3, 3..5 -> p1..p3

    constexpr bool is_position() const { return code < 3; }
    constexpr bool is_momentum() const { return code >= 3; }
    constexpr int axis() const { return code % 3 + 1; } // 1..3

    static constexpr VarIndex q(int axis) { return VarIndex{axis - 1}; }
    static constexpr VarIndex p(int axis) { return VarIndex{axis + 2}; }

    static std::array<VarIndex, 6> all() {
        return {VarIndex{0}, VarIndex{1}, VarIndex{2},
                VarIndex{3}, VarIndex{4}, VarIndex{5}};
    }

    std::string name() const {
        static const char* names[6] = {"q1", "q2", "q3", "p1", "p2", "p3"};
        return names[code];
    }

    friend bool operator==(VarIndex a, VarIndex b) { return a.code == b.code; }
    friend bool operator!=(VarIndex a, VarIndex b) { return a.code != b.code; }
};

namespace detail {

struct Monomial {
    std::array<std::uint32_t, 3> qe{0, 0, 0};
    std::array<std::uint32_t, 3> pe{0, 0, 0};
    std::array<mpq_class, 3> alpha{mpq_class(0), mpq_class(0), mpq_class(0)};

    bool is_constant() const {
        return qe == std::array<std::uint32_t, 3>{0, 0, 0} &&
               pe == std::array<std::uint32_t, 3>{0, 0, 0} && !has_exp();
    }
    bool has_exp() const {
        return alpha[0] != 0 || alpha[1] != 0 || alpha[2] != 0;
    }
    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : qe) d += e;
        for (auto e : pe) d += e;
        return d;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.qe == b.qe && a.pe == b.pe && a.alpha == b.alpha;
    }
};

// Canonical term order: exponential slopes first, then total degree, then
// exponents with earlier axes dominating. Chosen so printed sums read in the
// usual textbook order (q1^2 + q2^2, p1 + p2, ...).
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        for (int k = 0; k < 3; ++k) {
            int c = cmp(a.alpha[k], b.alpha[k]);
            if (c != 0) return c < 0;
        }
        std::uint64_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (int k = 0; k < 3; ++k)
            if (a.qe[k] != b.qe[k]) return a.qe[k] > b.qe[k];
        for (int k = 0; k < 3; ++k)
            if (a.pe[k] != b.pe[k]) return a.pe[k] > b.pe[k];
        return false;
    }
};

} // namespace detail

class Expr {
public:
    using Monomial = detail::Monomial;
    using TermMap = std::map<Monomial, Scalar, detail::MonomialLess>;

    Expr() = default;

    static Expr zero() { return Expr(); }
    static Expr one() { return constant(Scalar(1)); }

    static Expr constant(const Scalar& c) {
        Expr e;
        if (!c.is_zero()) e.terms_.emplace(Monomial{}, c);
        return e;
    }
    static Expr rational(long num, long den = 1) {
        return constant(Scalar::rational(num, den));
    }
    static Expr i() { return constant(Scalar::i()); }

    static Expr variable(VarIndex v) {
        Monomial m;
        if (v.is_position())
            m.qe[v.code] = 1;
        else
            m.pe[v.code - 3] = 1;
        Expr e;
        e.terms_.emplace(m, Scalar(1));
        return e;
    }
    static Expr q(int axis) { return variable(VarIndex::q(axis)); }
    static Expr p(int axis) { return variable(VarIndex::p(axis)); }

    // exp(i*(a1*p1 + a2*p2 + a3*p3))
    static Expr exp_ip(const std::array<mpq_class, 3>& a) {
        Monomial m;
        m.alpha = a;
        Expr e;
        e.terms_.emplace(m, Scalar(1));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool depends_only_on_q() const {
        for (const auto& [m, c] : terms_)
            if (m.pe != std::array<std::uint32_t, 3>{0, 0, 0} || m.has_exp())
                return false;
        return true;
    }
    bool depends_only_on_p() const {
        for (const auto& [m, c] : terms_)
            if (m.qe != std::array<std::uint32_t, 3>{0, 0, 0}) return false;
        return true;
    }
    bool has_exp_factor() const {
        for (const auto& [m, c] : terms_)
            if (m.has_exp()) return true;
        return false;
    }

    Expr operator-() const {
        Expr r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Expr& operator+=(const Expr& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Expr& operator-=(const Expr& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a -= b; }

    friend Expr operator*(const Expr& a, const Expr& b) {
        Expr r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                for (int k = 0; k < 3; ++k) {
                    m.qe[k] = ma.qe[k] + mb.qe[k];
                    m.pe[k] = ma.pe[k] + mb.pe[k];
                    m.alpha[k] = ma.alpha[k] + mb.alpha[k];
                }
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }
    Expr& operator*=(const Expr& o) { return *this = *this * o; }

    Expr scaled(const Scalar& s) const {
        Expr r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) {
            Scalar cc = c * s;
            if (!cc.is_zero()) r.terms_.emplace(m, cc);
        }
        return r;
    }

    Expr pow(unsigned n) const {
        Expr r = one();
        for (unsigned k = 0; k < n; ++k) r *= *this;
        return r;
    }

    // Exact partial derivative. Momentum derivatives act on both the
    // polynomial part and the exponential factor (product rule).
    Expr partial(VarIndex v) const {
        Expr r;
        for (const auto& [m, c] : terms_) {
            if (v.is_position()) {
                int k = v.code;
                if (m.qe[k] == 0) continue;
                Monomial d = m;
                d.qe[k] -= 1;
                r.add_term(d, c * Scalar(static_cast<long>(m.qe[k])));
            } else {
                int k = v.code - 3;
                if (m.pe[k] > 0) {
                    Monomial d = m;
                    d.pe[k] -= 1;
                    r.add_term(d, c * Scalar(static_cast<long>(m.pe[k])));
                }
                if (m.alpha[k] != 0)
                    r.add_term(m, c * Scalar::imaginary(m.alpha[k]));
            }
        }
        return r;
    }

    friend bool operator==(const Expr& a, const Expr& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    // Canonical printing; the output conforms to the input grammar and
    // re-parses to an equal Expr.
    std::string str() const;

private:
    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline Expr partial(const Expr& e, VarIndex v) { return e.partial(v); }

namespace detail {

inline std::string rational_str(const mpq_class& q) { return q.get_str(); }

// Magnitude factors of a coefficient, plus the sign handled at the term
// join level. Mixed complex coefficients are parenthesized; their sign
// stays inside the parentheses.
struct CoeffPieces {
    int sign = +1;            // +1 or -1; mixed complex always +1
    std::string factor;       // "" when |coeff| == 1 and a monomial follows
    bool needs_explicit_one = false;
};

inline std::string complex_in_parens(const Scalar& c) {
    // "(re+im*i)" with the grammar's signed-rational leading term
    std::string out = "(" + rational_str(c.re());
    mpq_class im = c.im();
    if (im > 0)
        out += "+";
    else {
        out += "-";
        im = -im;
    }
    if (im == 1)
        out += "i";
    else
        out += rational_str(im) + "*i";
    return out + ")";
}

inline CoeffPieces coeff_pieces(const Scalar& c, bool has_monomial) {
    CoeffPieces p;
    if (c.is_real()) {
        mpq_class r = c.re();
        if (r < 0) {
            p.sign = -1;
            r = -r;
        }
        if (r == 1 && has_monomial)
            p.factor = "";
        else
            p.factor = rational_str(r);
    } else if (c.re() == 0) {
        mpq_class b = c.im();
        if (b < 0) {
            p.sign = -1;
            b = -b;
        }
        p.factor = (b == 1) ? "i" : rational_str(b) + "*i";
    } else {
        p.factor = complex_in_parens(c);
    }
    return p;
}

} // namespace detail

inline std::string Expr::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::vector<std::string> factors;
        for (int k = 0; k < 3; ++k) {
            if (m.qe[k] == 0) continue;
            std::string f = "q" + std::to_string(k + 1);
            if (m.qe[k] > 1) f += "^" + std::to_string(m.qe[k]);
            factors.push_back(f);
        }
        for (int k = 0; k < 3; ++k) {
            if (m.pe[k] == 0) continue;
            std::string f = "p" + std::to_string(k + 1);
            if (m.pe[k] > 1) f += "^" + std::to_string(m.pe[k]);
            factors.push_back(f);
        }
        if (m.has_exp()) {
            std::string lin;
            for (int k = 0; k < 3; ++k) {
                if (m.alpha[k] == 0) continue;
                if (!lin.empty()) lin += "+";
                lin += detail::rational_str(m.alpha[k]) + "*p" + std::to_string(k + 1);
            }
            factors.push_back("exp(i*(" + lin + "))");
        }

        auto cp = detail::coeff_pieces(c, !factors.empty());
        std::string body = cp.factor;
        for (const auto& f : factors) {
            if (!body.empty()) body += "*";
            body += f;
        }

        if (first) {
            if (cp.sign < 0) {
                // leading minus is not in the grammar; fold it into the
                // rational ("-3/2*q1", "-1*i*q1")
                if (cp.factor.empty() || !std::isdigit(cp.factor[0]))
                    out += "-1*" + body;
                else
                    out += "-" + body;
            } else {
                out += body;
            }
            first = false;
        } else {
            out += (cp.sign < 0) ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

} // namespace mstar
