#pragma once

// Multivariate Laurent polynomials with exact rational coefficients.
// Terms live in a map keyed by exponent vector under graded-lex order, so the
// leading term is *rbegin(). Exponent vectors are kept trimmed of trailing
// zeros; that makes keys canonical even when new symbols are registered later.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "reflectq/rational.hpp"
#include "reflectq/symbols.hpp"

namespace reflectq {

using ExpVec = std::vector<int>;

inline void trim_exp(ExpVec& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

inline int exp_at(const ExpVec& e, size_t v) { return v < e.size() ? e[v] : 0; }

inline long exp_degree(const ExpVec& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

// Graded order, ties broken lexicographically with later symbols weighing
// more (so parameters like c, t dominate q and the spectral variables and
// printed denominators come out parameter-first). Total on all integer
// vectors, a genuine monomial order on the nonnegative ones.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = exp_degree(a), db = exp_degree(b);
        if (da != db) return da < db;
        size_t n = std::max(a.size(), b.size());
        for (size_t i = n; i-- > 0;) {
            int xa = exp_at(a, i), xb = exp_at(b, i);
            if (xa != xb) return xa < xb;
        }
        return false;
    }
};

class LaurentPoly {
  public:
    using TermMap = std::map<ExpVec, Rat, GrlexLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) {
        if (c != 0) t_[ExpVec{}] = c;
    }
    static LaurentPoly monomial(ExpVec e, const Rat& c) {
        LaurentPoly p;
        if (c != 0) {
            trim_exp(e);
            p.t_[std::move(e)] = c;
        }
        return p;
    }
    static LaurentPoly variable(Symbol v, int e = 1) {
        ExpVec ev(static_cast<size_t>(v) + 1, 0);
        ev[static_cast<size_t>(v)] = e;
        return monomial(std::move(ev), Rat(1));
    }

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    Rat constant_value() const {
        if (t_.empty()) return Rat(0);
        if (!is_constant()) throw std::domain_error("not a constant polynomial");
        return t_.begin()->second;
    }
    bool is_one() const { return is_constant() && constant_value() == 1; }
    size_t term_count() const { return t_.size(); }

    // number of exponent slots in use (= 1 + highest symbol index present)
    size_t width() const {
        size_t w = 0;
        for (auto& [e, c] : t_) w = std::max(w, e.size());
        return w;
    }

    bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    void add_term(ExpVec e, const Rat& c) {
        if (c == 0) return;
        trim_exp(e);
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) {
                ExpVec e(std::max(ea.size(), eb.size()), 0);
                for (size_t i = 0; i < e.size(); ++i) e[i] = exp_at(ea, i) + exp_at(eb, i);
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    LaurentPoly& scale(const Rat& c) {
        if (c == 0) {
            t_.clear();
            return *this;
        }
        for (auto& [e, cc] : t_) cc *= c;
        return *this;
    }
    LaurentPoly scaled(const Rat& c) const {
        LaurentPoly r = *this;
        r.scale(c);
        return r;
    }

    // multiply by the monomial x^shift
    LaurentPoly shifted(const ExpVec& shift) const {
        if (shift.empty()) return *this;
        LaurentPoly r;
        for (auto& [e, c] : t_) {
            ExpVec ne(std::max(e.size(), shift.size()), 0);
            for (size_t i = 0; i < ne.size(); ++i) ne[i] = exp_at(e, i) + exp_at(shift, i);
            trim_exp(ne);
            r.t_.emplace(std::move(ne), c);
        }
        return r;
    }

    // per-variable minimum exponent across all terms (0 for absent variables)
    ExpVec min_exponents() const {
        ExpVec m(width(), 0);
        bool first = true;
        for (auto& [e, c] : t_) {
            for (size_t i = 0; i < m.size(); ++i) {
                int x = exp_at(e, i);
                if (first)
                    m[i] = x;
                else
                    m[i] = std::min(m[i], x);
            }
            first = false;
        }
        trim_exp(m);
        return m;
    }

    bool is_true_poly() const {
        for (auto& [e, c] : t_)
            for (int x : e)
                if (x < 0) return false;
        return true;
    }

    const ExpVec& leading_exp() const {
        if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
        return t_.rbegin()->first;
    }
    const Rat& leading_coeff() const {
        if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
        return t_.rbegin()->second;
    }

    bool depends_on(Symbol v) const {
        for (auto& [e, c] : t_)
            if (exp_at(e, static_cast<size_t>(v)) != 0) return true;
        return false;
    }

    int degree_in(Symbol v) const {
        int d = 0;
        bool any = false;
        for (auto& [e, c] : t_) {
            int x = exp_at(e, static_cast<size_t>(v));
            if (!any || x > d) d = x;
            any = true;
        }
        return any ? d : 0;
    }

    // highest symbol index actually appearing, or -1 for constants
    int top_variable() const {
        int v = -1;
        for (auto& [e, c] : t_) v = std::max(v, static_cast<int>(e.size()) - 1);
        return v;
    }

    // coefficient of v^k, as a polynomial in the remaining variables
    LaurentPoly coeff_in(Symbol v, int k) const {
        LaurentPoly r;
        for (auto& [e, c] : t_) {
            if (exp_at(e, static_cast<size_t>(v)) != k) continue;
            ExpVec ne = e;
            if (static_cast<size_t>(v) < ne.size()) ne[static_cast<size_t>(v)] = 0;
            trim_exp(ne);
            r.add_term(std::move(ne), c);
        }
        return r;
    }

    LaurentPoly derivative_in(Symbol v) const {
        LaurentPoly r;
        for (auto& [e, c] : t_) {
            int x = exp_at(e, static_cast<size_t>(v));
            if (x == 0) continue;
            ExpVec ne = e;
            ne[static_cast<size_t>(v)] = x - 1;
            trim_exp(ne);
            r.add_term(std::move(ne), c * x);
        }
        return r;
    }

    // positive gcd of all rational coefficients
    Rat content() const {
        Rat g(0);
        for (auto& [e, c] : t_) {
            g = rat_gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    Rat eval_rat(const std::vector<Rat>& point) const {
        Rat acc(0);
        for (auto& [e, c] : t_) {
            Rat term = c;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (i >= point.size()) throw std::domain_error("evaluation point too short");
                term *= rat_pow(point[i], e[i]);
            }
            acc += term;
        }
        return acc;
    }

  private:
    TermMap t_;
};

// ---- division and gcd on true (non-Laurent) polynomials ----

// exact multivariate division; throws std::domain_error if not exact
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    if (b.is_constant()) return a.scaled(Rat(1) / b.constant_value());
    LaurentPoly r = a, q;
    const ExpVec& eb = b.leading_exp();
    const Rat& cb = b.leading_coeff();
    while (!r.is_zero()) {
        const ExpVec& er = r.leading_exp();
        ExpVec de(std::max(er.size(), eb.size()), 0);
        for (size_t i = 0; i < de.size(); ++i) {
            de[i] = exp_at(er, i) - exp_at(eb, i);
            if (de[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        trim_exp(de);
        Rat qc = r.leading_coeff() / cb;
        LaurentPoly m = LaurentPoly::monomial(de, qc);
        q += m;
        r -= m * b;
    }
    return q;
}

inline bool divides(const LaurentPoly& b, const LaurentPoly& a, LaurentPoly* quot = nullptr) {
    try {
        LaurentPoly q = exact_div(a, b);
        if (quot) *quot = std::move(q);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// pseudo-remainder of a by b viewed as univariate in v
inline LaurentPoly pseudo_rem(const LaurentPoly& a, const LaurentPoly& b, Symbol v) {
    int db = b.degree_in(v);
    LaurentPoly lcb = b.coeff_in(v, db);
    LaurentPoly r = a;
    while (!r.is_zero()) {
        int dr = r.degree_in(v);
        if (dr < db) break;
        LaurentPoly lcr = r.coeff_in(v, dr);
        LaurentPoly xk = LaurentPoly::variable(v, dr - db);
        r = lcb * r - lcr * xk * b;
    }
    return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b, the scaling the subresultant
// divisions rely on, so missing reduction steps are padded with lc(b)
inline LaurentPoly pseudo_rem_scaled(const LaurentPoly& a, const LaurentPoly& b, Symbol v) {
    int db = b.degree_in(v);
    LaurentPoly lcb = b.coeff_in(v, db);
    LaurentPoly r = a;
    int steps = 0, needed = a.degree_in(v) - db + 1;
    while (!r.is_zero()) {
        int dr = r.degree_in(v);
        if (dr < db) break;
        LaurentPoly lcr = r.coeff_in(v, dr);
        LaurentPoly xk = LaurentPoly::variable(v, dr - db);
        r = lcb * r - lcr * xk * b;
        ++steps;
    }
    for (; steps < needed; ++steps) r = lcb * r;
    return r;
}

inline LaurentPoly poly_pow(const LaurentPoly& p, int e) {
    LaurentPoly acc(Rat(1));
    for (int i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

inline LaurentPoly gcd_poly(const LaurentPoly& a, const LaurentPoly& b);

inline LaurentPoly lcm_poly(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    LaurentPoly g = gcd_poly(a, b);
    LaurentPoly l = exact_div(a * b, g);
    Rat c = l.leading_coeff();
    if (c != 1) l.scale(Rat(1) / c);
    return l;
}

inline LaurentPoly gcd_poly(const LaurentPoly& a, const LaurentPoly& b);

// gcd of the univariate-in-v coefficient polynomials
inline LaurentPoly poly_content_in(const LaurentPoly& p, Symbol v) {
    LaurentPoly g;
    int d = p.degree_in(v);
    for (int k = 0; k <= d; ++k) {
        LaurentPoly ck = p.coeff_in(v, k);
        if (ck.is_zero()) continue;
        g = g.is_zero() ? ck : gcd_poly(g, ck);
        if (g.is_constant()) break;
    }
    return g;
}

// divide out rational content, make the graded-lex leading coefficient positive
inline LaurentPoly make_primitive(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Rat c = p.content();
    LaurentPoly r = p.scaled(Rat(1) / c);
    if (r.leading_coeff() < 0) r.scale(Rat(-1));
    return r;
}

// primitive gcd of true polynomials over the rationals: content/primitive
// split in the highest variable present, then a subresultant remainder
// sequence (divisions by g*h^d are exact and keep coefficient growth tame)
inline LaurentPoly gcd_poly(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return make_primitive(b);
    if (b.is_zero()) return make_primitive(a);
    if (a.is_constant() || b.is_constant()) return LaurentPoly(Rat(1));
    if (a == b) return make_primitive(a);

    int va = a.top_variable(), vb = b.top_variable();
    Symbol v = static_cast<Symbol>(std::max(va, vb));

    // single-term fast path: gcd with a monomial is the shared monomial part
    auto monomial_gcd = [](const LaurentPoly& mono, const LaurentPoly& other) {
        const ExpVec& em = mono.leading_exp();
        ExpVec shared = other.min_exponents();
        ExpVec e(std::max(em.size(), shared.size()), 0);
        for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(exp_at(em, i), exp_at(shared, i));
        trim_exp(e);
        return LaurentPoly::monomial(e, Rat(1));
    };
    if (a.term_count() == 1) return monomial_gcd(a, b);
    if (b.term_count() == 1) return monomial_gcd(b, a);

    // disjoint variable support forces a constant gcd
    {
        ExpVec sa(SymbolTable::instance().size(), 0), sb = sa;
        for (const auto& [e, c] : a.terms())
            for (size_t i = 0; i < e.size(); ++i) sa[i] |= (e[i] != 0);
        for (const auto& [e, c] : b.terms())
            for (size_t i = 0; i < e.size(); ++i) sb[i] |= (e[i] != 0);
        bool shared = false;
        for (size_t i = 0; i < sa.size() && !shared; ++i) shared = sa[i] && sb[i];
        if (!shared) return LaurentPoly(Rat(1));
    }

    LaurentPoly ca = poly_content_in(a, v);
    LaurentPoly cb = poly_content_in(b, v);
    LaurentPoly pa = exact_div(a, ca);
    LaurentPoly pb = exact_div(b, cb);
    LaurentPoly cg = gcd_poly(ca, cb);

    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    LaurentPoly g(Rat(1)), h(Rat(1));
    for (;;) {
        int delta = pa.degree_in(v) - pb.degree_in(v);
        LaurentPoly r = pseudo_rem_scaled(pa, pb, v);
        if (r.is_zero()) break;
        pa = std::move(pb);
        pb = exact_div(r, g * poly_pow(h, delta));
        if (pb.degree_in(v) == 0) return make_primitive(cg);
        g = pa.coeff_in(v, pa.degree_in(v));
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact_div(poly_pow(g, delta), poly_pow(h, delta - 1));
        }
    }
    LaurentPoly cp = poly_content_in(pb, v);
    return make_primitive(cg * exact_div(pb, cp));
}

}  // namespace reflectq
