#pragma once

// Truncated Laurent series in a formal parameter h with Scalar coefficients.
// Every series knows the largest exponent it is sound for (trunc): arithmetic
// propagates the tightest bound the inputs justify, so a coefficient can be
// read back only when it is actually determined.  Used for the q -> 1 limit
// via the bindings q = e^{alpha h}, z = e^{-2hu} (and friends).

#include <map>
#include <string>

#include "reflectq/errors.hpp"
#include "reflectq/scalar.hpp"
#include "reflectq/scalar_io.hpp"

namespace reflectq {

class HSeries {
  public:
    static constexpr int default_trunc = 3;

    explicit HSeries(int trunc = default_trunc) : trunc_(trunc) {}

    static HSeries constant(const Scalar& c, int trunc = default_trunc) {
        return monomial(c, 0, trunc);
    }
    static HSeries monomial(const Scalar& c, int k, int trunc = default_trunc) {
        HSeries s(trunc);
        if (!c.is_zero() && k <= trunc) s.coeffs_[k] = c;
        return s;
    }
    static HSeries one(int trunc = default_trunc) { return constant(Scalar(1), trunc); }

    int trunc() const { return trunc_; }
    // order of the truncated-zero series is one past the sound window
    int order() const { return coeffs_.empty() ? trunc_ + 1 : coeffs_.begin()->first; }
    bool is_truncated_zero() const { return coeffs_.empty(); }
    const std::map<int, Scalar>& coeffs() const { return coeffs_; }

    // the coefficient of h^k; asking past the sound window is an error
    Scalar coeff(int k) const {
        if (k > trunc_) throw series_error("coefficient requested beyond truncation order");
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Scalar() : it->second;
    }

    // strict equality: same sound window and same coefficients
    bool operator==(const HSeries& o) const { return trunc_ == o.trunc_ && coeffs_ == o.coeffs_; }
    bool operator!=(const HSeries& o) const { return !(*this == o); }

    // equality on the common sound window
    bool agrees_with(const HSeries& o) const {
        int t = std::min(trunc_, o.trunc_);
        for (auto& [k, c] : coeffs_)
            if (k <= t && c != o.coeff(k)) return false;
        for (auto& [k, c] : o.coeffs_)
            if (k <= t && c != coeff(k)) return false;
        return true;
    }

    HSeries operator-() const {
        HSeries r = *this;
        for (auto& [k, c] : r.coeffs_) c = -c;
        return r;
    }

    friend HSeries operator+(const HSeries& a, const HSeries& b) {
        HSeries r(std::min(a.trunc_, b.trunc_));
        for (auto& [k, c] : a.coeffs_)
            if (k <= r.trunc_) r.coeffs_[k] = c;
        for (auto& [k, c] : b.coeffs_)
            if (k <= r.trunc_) {
                auto [it, fresh] = r.coeffs_.try_emplace(k, c);
                if (!fresh) it->second += c;
            }
        r.drop_zeros();
        return r;
    }
    friend HSeries operator-(const HSeries& a, const HSeries& b) { return a + (-b); }

    friend HSeries operator*(const HSeries& a, const HSeries& b) {
        // h^k of the product is sound only when every contributing pair is
        HSeries r(std::min(a.trunc_ + b.order(), b.trunc_ + a.order()));
        for (auto& [i, ai] : a.coeffs_)
            for (auto& [j, bj] : b.coeffs_) {
                if (i + j > r.trunc_) continue;
                Scalar piece = ai * bj;
                auto [it, fresh] = r.coeffs_.try_emplace(i + j, piece);
                if (!fresh) it->second += piece;
            }
        r.drop_zeros();
        return r;
    }
    friend HSeries operator/(const HSeries& a, const HSeries& b) { return a * b.inverse(); }

    HSeries scaled(const Scalar& c) const {
        if (c.is_zero()) return HSeries(trunc_);
        HSeries r(trunc_);
        for (auto& [k, x] : coeffs_) r.coeffs_[k] = x * c;
        return r;
    }

    HSeries inverse() const {
        if (is_truncated_zero()) throw series_error("division by truncated-zero series");
        int ob = order();
        int m = trunc_ - ob;  // sound window of the unit part 1 + x
        Scalar lead = coeffs_.begin()->second;
        HSeries x(m);
        for (auto& [k, c] : coeffs_)
            if (k > ob) x.coeffs_[k - ob] = c / lead;
        HSeries acc = one(m), xp = one(m);
        int sign = 1;
        for (int j = 1; j <= m && !x.is_truncated_zero(); ++j) {
            xp = xp * x;
            sign = -sign;
            acc = sign > 0 ? acc + xp : acc - xp;
        }
        HSeries r(m - ob);
        for (auto& [k, c] : acc.coeffs_)
            if (k - ob <= r.trunc_) r.coeffs_[k - ob] = c / lead;
        r.drop_zeros();
        return r;
    }

    HSeries pow(long e) const {
        if (e == 0) return one(trunc_);
        HSeries base = e < 0 ? inverse() : *this;
        long n = e < 0 ? -e : e;
        HSeries acc = base;
        for (long i = 1; i < n; ++i) acc = acc * base;
        return acc;
    }

  private:
    void drop_zeros() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
    }

    std::map<int, Scalar> coeffs_;
    int trunc_;
};

// e^{gamma h} truncated: sum over k of gamma^k h^k / k!
inline HSeries exp_linear(const Scalar& gamma, int trunc = HSeries::default_trunc) {
    HSeries s(trunc);
    Scalar term(1);
    if (trunc >= 0) s = HSeries::constant(term, trunc);
    for (int k = 1; k <= trunc; ++k) {
        term = term * gamma * Scalar(Rat(1, k));
        s = s + HSeries::monomial(term, k, trunc);
    }
    return s;
}

// substitute series for the bound symbols of a Scalar; unbound symbols ride
// along inside the coefficients
inline HSeries lift(const Scalar& a, const std::map<Symbol, HSeries>& bindings,
                    int trunc = HSeries::default_trunc) {
    auto eval_poly = [&](const LaurentPoly& p) {
        HSeries acc(trunc);
        for (auto& [e, c] : p.terms()) {
            Scalar spectator(c);
            HSeries factor = HSeries::one(trunc);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                Symbol v = static_cast<Symbol>(i);
                auto it = bindings.find(v);
                if (it == bindings.end())
                    spectator *= Scalar::symbol(v, e[i]);
                else
                    factor = factor * it->second.pow(e[i]);
            }
            acc = acc + factor.scaled(spectator);
        }
        return acc;
    };
    HSeries n = eval_poly(a.num());
    if (a.den().is_one()) return n;
    return n * eval_poly(a.den()).inverse();
}

inline std::string to_string(const HSeries& s) {
    std::string out;
    for (auto& [k, c] : s.coeffs()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (k == 1)
            out += "*h";
        else if (k != 0)
            out += "*h^" + std::to_string(k);
    }
    if (!out.empty()) out += " + ";
    out += "O(h^" + std::to_string(s.trunc() + 1) + ")";
    return out;
}

}  // namespace reflectq
