#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "hstar/polynomial.hpp"

namespace hstar {

namespace detail {

class PolyParser {
    std::string_view s_;
    std::size_t pos_ = 0;
    RingPtr ring_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    Int parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    QPoly parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            QPoly p = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_uint();
            if (accept('/')) {
                Int den = parse_uint();
                if (den == 0) fail("zero denominator");
                return QPoly::constant(ring_, Rat(num, den));
            }
            return QPoly::constant(ring_, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            int idx = ring_->index_of(name);
            if (idx < 0) {
                // Same alphabetic stem as the ring's variables means the index
                // is out of range; anything else is an unknown variable.
                std::size_t stem = 0;
                while (stem < name.size() &&
                       !std::isdigit(static_cast<unsigned char>(name[stem])))
                    ++stem;
                const std::string& first = ring_->names.front();
                pos_ = start;
                if (stem > 0 && first.rfind(name.substr(0, stem), 0) == 0)
                    fail("variable index out of range: " + name);
                fail("unknown variable: " + name);
            }
            return QPoly::variable(ring_, static_cast<std::size_t>(idx), Rat(1));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    QPoly parse_factor() {
        QPoly base = parse_atom();
        if (accept('^')) {
            Int e = parse_uint();
            if (e > 1000000) fail("exponent too large");
            return base.pow(e.convert_to<std::uint32_t>());
        }
        return base;
    }

    QPoly parse_term() {
        QPoly p = parse_factor();
        while (accept('*')) p = p * parse_factor();
        return p;
    }

    QPoly parse_expr() {
        skip_ws();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        QPoly p = parse_term();
        if (neg) p = -p;
        for (;;) {
            if (accept('+'))
                p = p + parse_term();
            else if (accept('-'))
                p = p - parse_term();
            else
                break;
        }
        return p;
    }

  public:
    PolyParser(std::string_view s, RingPtr ring) : s_(s), ring_(std::move(ring)) {}

    QPoly run() {
        QPoly p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }
};

}  // namespace detail

/// Parses a polynomial in the text grammar: variables from the ring, operators
/// + - * ^, rational literals a/b, parentheses.
inline QPoly parse_polynomial(std::string_view text, const RingPtr& ring) {
    return detail::PolyParser(text, ring).run();
}

inline std::string monomial_to_string(const Monomial& m, const Ring& ring) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.names[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

/// Canonical printing: terms in descending graded-lex order; round-trips
/// through parse_polynomial.
inline std::string to_string(const QPoly& p) {
    if (p.is_zero_poly()) return "0";
    const Ring& ring = *p.ring();
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (sign_of(a) < 0) {
                out += "-";
                a = -a;
            }
            first = false;
        } else {
            if (sign_of(a) < 0) {
                out += " - ";
                a = -a;
            } else {
                out += " + ";
            }
        }
        std::string mono = monomial_to_string(m, ring);
        if (mono.empty()) {
            out += rat_to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += rat_to_string(a) + "*" + mono;
        }
    }
    return out;
}

}  // namespace hstar
