#pragma once

// Canonical text form for scalars. The printer is deterministic (terms in
// descending graded-lex order, symbols in registry order) and the parser
// accepts exactly the printed grammar:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ('-')? digits)?
//   atom   := digits | name | '(' expr ')'
// so parse(print(s)) == s structurally.

#include <cctype>
#include <sstream>
#include <string>

#include "reflectq/scalar.hpp"

namespace reflectq {

struct parse_error : error {
    explicit parse_error(const std::string& what) : error("parse error: " + what) {}
};

inline std::string to_string(const Rat& r) { return rat_to_string(r); }

inline std::string monomial_string(const ExpVec& e) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += sym_name(static_cast<Symbol>(i));
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const Rat& c = it->second;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = monomial_string(it->first);
        if (mono.empty()) {
            out += rat_to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += rat_to_string(mag) + "*" + mono;
        }
    }
    return out;
}

inline std::string to_string(const Scalar& s) {
    if (s.den().is_one()) return to_string(s.num());
    return "(" + to_string(s.num()) + ")/(" + to_string(s.den()) + ")";
}

namespace detail {

class ScalarParser {
  public:
    explicit ScalarParser(const std::string& src) : s_(src) {}

    Scalar parse() {
        Scalar r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

  private:
    Scalar expr() {
        Scalar r = term();
        for (;;) {
            skip_ws();
            if (consume('+'))
                r += term();
            else if (consume('-'))
                r -= term();
            else
                return r;
        }
    }

    Scalar term() {
        Scalar r = unary();
        for (;;) {
            skip_ws();
            if (consume('*'))
                r *= unary();
            else if (consume('/'))
                r /= unary();
            else
                return r;
        }
    }

    Scalar unary() {
        skip_ws();
        if (consume('-')) return -unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        skip_ws();
        if (consume('^')) {
            skip_ws();
            bool neg = consume('-');
            std::string digits = read_digits();
            if (digits.empty()) fail("integer exponent expected after '^'");
            long e = 0;
            try {
                e = std::stol(digits);
            } catch (...) {
                fail("exponent out of range");
            }
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            Scalar r = expr();
            skip_ws();
            if (!consume(')')) fail("')' expected");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            return Scalar(rat_from_string(read_digits()));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            return Scalar::symbol(name);
        }
        fail(std::string("unexpected character '") + ch + "'");
        return Scalar();
    }

    std::string read_digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return d;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool consume(char ch) {
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw parse_error(why + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace detail

inline Scalar parse_scalar(const std::string& text) { return detail::ScalarParser(text).parse(); }

// shorthand used heavily by catalogs and tests
inline Scalar S(const std::string& text) { return parse_scalar(text); }

}  // namespace reflectq
