#pragma once

// Exact elements of the rational-function field over the symbol table.
// Invariant held by every Scalar:
//   * den is a true polynomial, not divisible by any variable, with
//     graded-lex leading coefficient +1;
//   * num may be Laurent (any monomial factor of the fraction sits there);
//   * the polynomial parts of num and den are coprime.
// Under that normal form equality is structural and is_zero is trivial.

#include <map>
#include <vector>

#include "reflectq/errors.hpp"
#include "reflectq/laurent.hpp"

namespace reflectq {

class Scalar {
  public:
    Scalar() : num_(), den_(Rat(1)) {}
    explicit Scalar(const Rat& c) : num_(c), den_(Rat(1)) {}
    Scalar(long c) : num_(Rat(c)), den_(Rat(1)) {}

    static Scalar symbol(Symbol v, int e = 1) {
        Scalar s;
        s.num_ = LaurentPoly::variable(v, e);
        return s;
    }
    static Scalar symbol(const std::string& name, int e = 1) { return symbol(sym(name), e); }

    static Scalar from_num_den(LaurentPoly n, LaurentPoly d) {
        Scalar s;
        s.num_ = std::move(n);
        s.den_ = std::move(d);
        s.canonicalize();
        return s;
    }
    static Scalar from_poly(LaurentPoly n) {
        Scalar s;
        s.num_ = std::move(n);
        return s;
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_one(); }
    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("scalar is not a rational constant");
        return num_.constant_value();
    }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Scalar r;
        if (a.den_ == b.den_) {
            r.num_ = a.num_ + b.num_;
            r.den_ = a.den_;
            r.canonicalize();
            return r;
        }
        LaurentPoly g = gcd_poly(a.den_, b.den_);
        if (g.is_one()) {
            // coprime denominators: the sum is already in lowest terms
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
            r.canonicalize(false);
        } else {
            LaurentPoly da = exact_div(a.den_, g), db = exact_div(b.den_, g);
            r.num_ = a.num_ * db + b.num_ * da;
            r.den_ = a.den_ * db;
            r.canonicalize();
        }
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        Scalar r;
        if (a.is_rational()) {
            r.num_ = b.num_.scaled(a.num_.constant_value());
            r.den_ = b.den_;
            return r;
        }
        if (b.is_rational()) {
            r.num_ = a.num_.scaled(b.num_.constant_value());
            r.den_ = a.den_;
            return r;
        }
        // cross-cancel against the opposite denominator; each factor is
        // canonical, so what survives is coprime and needs no further gcd
        ExpVec ma = a.num_.min_exponents(), mb = b.num_.min_exponents();
        LaurentPoly pa = a.num_.shifted(negated(ma));
        LaurentPoly pb = b.num_.shifted(negated(mb));
        LaurentPoly g1 = gcd_poly(pa, b.den_);
        LaurentPoly g2 = gcd_poly(pb, a.den_);
        if (!g1.is_one()) pa = exact_div(pa, g1);
        if (!g2.is_one()) pb = exact_div(pb, g2);
        LaurentPoly da = g2.is_one() ? a.den_ : exact_div(a.den_, g2);
        LaurentPoly db = g1.is_one() ? b.den_ : exact_div(b.den_, g1);
        ExpVec shift(std::max(ma.size(), mb.size()), 0);
        for (size_t i = 0; i < shift.size(); ++i) shift[i] = exp_at(ma, i) + exp_at(mb, i);
        trim_exp(shift);
        r.num_ = (pa * pb).shifted(shift);
        r.den_ = da * db;
        r.canonicalize(false);
        return r;
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        if (is_zero()) throw division_by_zero();
        Scalar r;
        r.num_ = den_;
        r.den_ = num_;
        r.canonicalize(false);  // swap of a canonical pair stays coprime
        return r;
    }

    Scalar pow(long e) const {
        if (e == 0) return Scalar(1);
        Scalar b = e < 0 ? inverse() : *this;
        unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
        Scalar acc(1);
        while (n) {
            if (n & 1) acc *= b;
            b *= b;
            n >>= 1;
        }
        return acc;
    }

    // substitute v -> value everywhere; exact
    Scalar substitute(Symbol v, const Scalar& value) const {
        Scalar n = substitute_into(num_, v, value);
        Scalar d = substitute_into(den_, v, value);
        if (d.is_zero()) throw pole_error("denominator vanishes under substitution of " + sym_name(v));
        return n / d;
    }

    Scalar substitute(const std::map<Symbol, Scalar>& bindings) const {
        Scalar r = *this;
        for (auto& [v, val] : bindings) r = r.substitute(v, val);
        return r;
    }

    // exact evaluation at an all-rational point (indexed by symbol id)
    Rat eval_rat(const std::vector<Rat>& point) const {
        Rat d = den_.eval_rat(point);
        if (d == 0) throw pole_error("denominator vanishes at evaluation point");
        return num_.eval_rat(point) / d;
    }

    // cheap size measure used for pivot selection
    size_t complexity() const { return num_.term_count() + den_.term_count(); }

    bool depends_on(Symbol v) const { return num_.depends_on(v) || den_.depends_on(v); }

  private:
    static Scalar substitute_into(const LaurentPoly& p, Symbol v, const Scalar& value) {
        // split into powers of v, then Horner-free exact combination
        std::map<int, LaurentPoly> parts;
        for (auto& [e, c] : p.terms()) {
            int k = exp_at(e, static_cast<size_t>(v));
            ExpVec ne = e;
            if (static_cast<size_t>(v) < ne.size()) ne[static_cast<size_t>(v)] = 0;
            trim_exp(ne);
            parts[k].add_term(std::move(ne), c);
        }
        Scalar acc;
        for (auto& [k, coeff] : parts) acc += Scalar::from_poly(coeff) * value.pow(k);
        return acc;
    }

    static ExpVec negated(ExpVec e) {
        for (auto& x : e) x = -x;
        return e;
    }

    void canonicalize(bool with_gcd = true) {
        if (den_.is_zero()) throw division_by_zero();
        if (num_.is_zero()) {
            den_ = LaurentPoly(Rat(1));
            return;
        }
        ExpVec mn = num_.min_exponents();
        ExpVec md = den_.min_exponents();
        LaurentPoly n = num_.shifted(negated(mn));  // true poly, no variable divides it
        LaurentPoly d = den_.shifted(negated(md));
        if (with_gcd && !d.is_constant()) {
            LaurentPoly g = gcd_poly(n, d);
            if (!g.is_one()) {
                n = exact_div(n, g);
                d = exact_div(d, g);
            }
        }
        Rat lead = d.leading_coeff();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            n.scale(inv);
            d.scale(inv);
        }
        // net monomial factor goes to the numerator
        ExpVec shift(std::max(mn.size(), md.size()), 0);
        for (size_t i = 0; i < shift.size(); ++i) shift[i] = exp_at(mn, i) - exp_at(md, i);
        trim_exp(shift);
        num_ = n.shifted(shift);
        den_ = std::move(d);
    }

    LaurentPoly num_, den_;
};

// q-integer [n]_q = (q^n - q^-n)/(q - q^-1) as a Laurent polynomial scalar
inline Scalar qnum(long n) {
    if (n == 0) return Scalar();
    long a = n < 0 ? -n : n;
    LaurentPoly p;
    Symbol q = sym("q");
    for (long i = 0; i < a; ++i) p += LaurentPoly::variable(q, static_cast<int>(a - 1 - 2 * i));
    if (n < 0) p = -p;
    return Scalar::from_poly(p);
}

inline Scalar qfactorial(long n) {
    if (n < 0) throw std::domain_error("q-factorial of negative integer");
    Scalar r(1);
    for (long k = 2; k <= n; ++k) r *= qnum(k);
    return r;
}

// Gaussian binomial via the factorial recurrence; always a Laurent polynomial
inline Scalar qbinom(long n, long m) {
    if (m < 0 || n < 0 || m > n) throw std::domain_error("q-binomial out of range");
    Scalar r = qfactorial(n) / (qfactorial(m) * qfactorial(n - m));
    return r;
}

}  // namespace reflectq
