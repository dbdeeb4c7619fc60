#pragma once

// Parser for the expression grammar that all textual inputs flow through:
//
//   expr   := term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := base ("^" nonneg_int)?
//   base   := rational | "i" | "q1".."q3" | "p1".."p3" | "(" expr ")"
//           | "exp" "(" "i" "*" "(" linp ")" ")"
//   linp   := rational "*" pvar ("+" rational "*" pvar)*
//   rational := int ("/" posint)?
//
// Accepted extensions (never emitted by the printer): unary minus in front
// of any factor, and "-" as a separator inside linp.

#include "mstar/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace mstar {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Expr parse() {
        skip_ws();
        if (eof()) throw ParseError("empty expression", 0);
        Expr e = parse_expr();
        skip_ws();
        if (!eof()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    Expr parse_expr() {
        Expr e = parse_term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                e += parse_term();
            else if (accept('-'))
                e -= parse_term();
            else
                break;
        }
        return e;
    }

    Expr parse_term() {
        Expr e = parse_factor();
        for (;;) {
            skip_ws();
            if (accept('*'))
                e *= parse_factor();
            else
                break;
        }
        return e;
    }

    Expr parse_factor() {
        Expr b = parse_base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            if (eof() || !std::isdigit(peek()))
                throw ParseError("exponent must be a non-negative integer", pos_);
            unsigned long n = parse_uint_bounded();
            return b.pow(static_cast<unsigned>(n));
        }
        return b;
    }

    Expr parse_base() {
        skip_ws();
        if (eof()) throw ParseError("expected a factor", pos_);
        char c = peek();
        if (c == '(') {
            ++pos_;
            Expr e = parse_expr();
            expect(')');
            return e;
        }
        if (c == '-' || std::isdigit(c)) {
            return Expr::constant(Scalar(parse_rational()));
        }
        if (std::isalpha(c)) {
            std::size_t start = pos_;
            std::string id = parse_ident();
            if (id == "i") return Expr::i();
            if (id == "exp") return parse_exp_factor(start);
            if (id.size() == 2 && (id[0] == 'q' || id[0] == 'p') && id[1] >= '1' &&
                id[1] <= '3') {
                int axis = id[1] - '0';
                return id[0] == 'q' ? Expr::q(axis) : Expr::p(axis);
            }
            throw ParseError("unknown symbol '" + id + "'", start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    // exp "(" "i" "*" "(" linp ")" ")"
    Expr parse_exp_factor(std::size_t start) {
        const char* bad =
            "exp argument must have the form i*(rational linear combination "
            "of p-variables)";
        skip_ws();
        expect('(');
        skip_ws();
        if (!accept('i')) throw ParseError(bad, pos_);
        skip_ws();
        if (!accept('*')) throw ParseError(bad, pos_);
        skip_ws();
        expect('(');
        std::array<mpq_class, 3> alpha{mpq_class(0), mpq_class(0), mpq_class(0)};
        bool negate = false;
        for (;;) {
            skip_ws();
            mpq_class r = parse_rational();
            if (negate) r = -r;
            skip_ws();
            if (!accept('*')) throw ParseError(bad, pos_);
            skip_ws();
            std::size_t vpos = pos_;
            std::string id = parse_ident();
            if (id.size() != 2 || id[0] != 'p' || id[1] < '1' || id[1] > '3') {
                if (id.size() == 2 && id[0] == 'q')
                    throw ParseError(
                        "exp argument may only involve momentum variables", vpos);
                throw ParseError(bad, vpos);
            }
            alpha[id[1] - '1'] += r;
            skip_ws();
            if (accept('+')) {
                negate = false;
                continue;
            }
            if (accept('-')) {
                negate = true;
                continue;
            }
            break;
        }
        expect(')');
        skip_ws();
        expect(')');
        (void)start;
        return Expr::exp_ip(alpha);
    }

    mpq_class parse_rational() {
        skip_ws();
        bool neg = accept('-');
        skip_ws();
        if (eof() || !std::isdigit(peek()))
            throw ParseError("expected a number", pos_);
        mpz_class num = parse_integer();
        mpz_class den = 1;
        if (accept('/')) {
            skip_ws();
            if (eof() || !std::isdigit(peek()))
                throw ParseError("expected a positive denominator", pos_);
            std::size_t dpos = pos_;
            den = parse_integer();
            if (den == 0) throw ParseError("zero denominator", dpos);
        }
        mpq_class q(num, den);
        q.canonicalize();
        return neg ? mpq_class(-q) : q;
    }

    mpz_class parse_integer() {
        std::string digits;
        while (!eof() && std::isdigit(peek())) digits += s_[pos_++];
        return mpz_class(digits, 10);
    }

    unsigned long parse_uint_bounded() {
        std::size_t start = pos_;
        mpz_class n = parse_integer();
        if (n > 1000000)
            throw ParseError("exponent too large", start);
        return n.get_ui();
    }

    std::string parse_ident() {
        std::string id;
        while (!eof() && (std::isalnum(peek()))) id += s_[pos_++];
        return id;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    bool accept(char c) {
        if (!eof() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Expr parse_expr(const std::string& text) {
    return detail::Parser(text).parse();
}

} // namespace mstar
