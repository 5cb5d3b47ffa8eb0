#pragma once

// Exact linear algebra over the scalar field: row reduction with
// swell-aware pivoting, nullspace bases, and the parameter-constraint
// solver that mimics how the boundary intertwining systems pin down d+-, t.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "reflectq/matrix.hpp"

namespace reflectq {

struct Elimination {
    ScalarMatrix rref;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

// reduced row echelon form over the fraction field; pivot rows chosen by
// minimal term count to limit expression swell
inline Elimination eliminate(ScalarMatrix m) {
    Elimination out;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t best = m.rows();
        size_t best_size = 0;
        for (size_t r = row; r < m.rows(); ++r) {
            const Scalar& x = m.at(r, col);
            if (x.is_zero()) continue;
            if (best == m.rows() || x.complexity() < best_size) {
                best = r;
                best_size = x.complexity();
            }
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(best, c));
        Scalar inv = m.at(row, col).inverse();
        for (size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            Scalar f = m.at(r, col);
            if (f.is_zero()) continue;
            for (size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = out.pivot_cols.size();
    out.rref = std::move(m);
    return out;
}

inline size_t rank(const ScalarMatrix& m) { return eliminate(m).rank; }

// scale a column vector so entries are polynomial with trivial common
// content and the first nonzero entry has a positive leading coefficient
inline void normalize_null_vector(ScalarMatrix& v) {
    LaurentPoly den_lcm(Rat(1));
    for (size_t i = 0; i < v.rows(); ++i)
        if (!v.at(i, 0).is_zero()) den_lcm = lcm_poly(den_lcm, v.at(i, 0).den());
    Scalar clear = Scalar::from_poly(den_lcm);
    for (size_t i = 0; i < v.rows(); ++i) v.at(i, 0) *= clear;

    LaurentPoly content;
    ExpVec mono;
    bool first = true;
    for (size_t i = 0; i < v.rows(); ++i) {
        const Scalar& x = v.at(i, 0);
        if (x.is_zero()) continue;
        ExpVec m = x.num().min_exponents();
        ExpVec neg = m;
        for (auto& e : neg) e = -e;
        LaurentPoly p = x.num().shifted(neg);
        if (first) {
            content = p;
            mono = m;
            first = false;
        } else {
            content = gcd_poly(content, p);
            if (mono.size() < m.size()) mono.resize(m.size(), 0);
            for (size_t j = 0; j < mono.size(); ++j) mono[j] = std::min(mono[j], exp_at(m, j));
        }
    }
    if (first) return;
    trim_exp(mono);
    Scalar divisor = Scalar::from_poly(content.shifted(mono));
    bool negate = false;
    bool seen = false;
    for (size_t i = 0; i < v.rows(); ++i) {
        Scalar& x = v.at(i, 0);
        if (x.is_zero()) continue;
        x /= divisor;
        if (!seen) {
            seen = true;
            negate = x.num().leading_coeff() < 0;
        }
    }
    if (negate)
        for (size_t i = 0; i < v.rows(); ++i) v.at(i, 0) = -v.at(i, 0);
}

// basis of {x : Mx = 0} as column vectors, denominator-cleared and
// content-normalized; empty list means the kernel is trivial
inline std::vector<ScalarMatrix> nullspace(const ScalarMatrix& m) {
    Elimination e = eliminate(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<ScalarMatrix> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        ScalarMatrix v(m.cols(), 1);
        v.at(f, 0) = Scalar(1);
        for (size_t i = 0; i < e.pivot_cols.size(); ++i)
            v.at(e.pivot_cols[i], 0) = -e.rref.at(i, f);
        normalize_null_vector(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

// coefficient matrix of A X = X B on vec(X) with vec(X)[i*n + j] = X(i,j)
inline ScalarMatrix intertwiner_system(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw dimension_mismatch("intertwiner endpoints must be square");
    return kron(a, ScalarMatrix::identity(b.rows())) -
           kron(ScalarMatrix::identity(a.rows()), b.transpose());
}

inline Scalar determinant(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return Scalar(1);
    if (n == 1) return m.at(0, 0);
    Scalar det;
    for (size_t k = 0; k < n; ++k) {
        const Scalar& pivot = m.at(0, k);
        if (pivot.is_zero()) continue;
        ScalarMatrix sub(n - 1, n - 1);
        for (size_t i = 1; i < n; ++i) {
            size_t jc = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                sub.at(i - 1, jc++) = m.at(i, j);
            }
        }
        Scalar term = pivot * determinant(sub);
        det += (k % 2 == 0) ? term : -term;
    }
    return det;
}

struct ConstraintReport {
    std::map<Symbol, Scalar> bindings;  // solved parameter values
    std::vector<Symbol> free_params;    // parameters the system leaves free
    std::vector<Symbol> gauge_symbols;  // fresh names introduced by reparametrization
    std::vector<Scalar> residual;       // leftover polynomial conditions (must vanish)
    size_t achieved_nullity = 0;
};

namespace detail {

// split p into monomial-in-the-marked-symbols -> coefficient-in-the-rest
inline std::map<ExpVec, LaurentPoly, GrlexLess> split_by_symbols(const LaurentPoly& p,
                                                                 const std::set<Symbol>& marked) {
    std::map<ExpVec, LaurentPoly, GrlexLess> parts;
    for (auto& [e, c] : p.terms()) {
        ExpVec me(e.size(), 0), rest = e;
        for (Symbol v : marked) {
            size_t i = static_cast<size_t>(v);
            if (i < e.size()) {
                me[i] = e[i];
                rest[i] = 0;
            }
        }
        trim_exp(me);
        trim_exp(rest);
        parts[me].add_term(std::move(rest), c);
    }
    return parts;
}

// a condition f(q,c,...) * g(params) = 0 with f identically nonzero is
// equivalent to g(params) = 0, so divide out the gcd of the coefficients
inline LaurentPoly strip_param_content(const LaurentPoly& p, const std::set<Symbol>& params) {
    auto parts = split_by_symbols(p, params);
    LaurentPoly content;
    for (auto& [pe, coeff] : parts) {
        ExpVec neg = coeff.min_exponents();
        for (auto& x : neg) x = -x;
        LaurentPoly poly = coeff.shifted(neg);
        content = content.is_zero() ? poly : gcd_poly(content, poly);
        if (content.is_one()) break;
    }
    if (content.is_zero() || content.is_one()) return p;
    LaurentPoly out;
    for (auto& [pe, coeff] : parts) {
        ExpVec m = coeff.min_exponents();
        ExpVec neg = m;
        for (auto& x : neg) x = -x;
        LaurentPoly quot = exact_div(coeff.shifted(neg), content).shifted(m);
        for (auto& [re, c] : quot.terms()) {
            ExpVec full = re;
            if (full.size() < pe.size()) full.resize(pe.size(), 0);
            for (size_t i = 0; i < pe.size(); ++i) full[i] += pe[i];
            trim_exp(full);
            out.add_term(std::move(full), c);
        }
    }
    return out;
}

}  // namespace detail

// Parameter-constraint extraction.  The kernel unknowns are eliminated
// linearly through the parameter-free rows; the rows carrying parameters
// then admit a nontrivial solution only where all minors of the reduced
// block of size (k - expected_nullity + 1) vanish.  Each minor is expanded
// in the spectral symbols (z, u) and the coefficient equations are solved
// for the parameters by successive linear elimination.  An optional gauge
// map {fresh -> expression in params} renames the surviving free parameter
// the way the closed-form answers are usually quoted.
inline ConstraintReport param_constraints(const ScalarMatrix& m, const std::set<Symbol>& params,
                                          size_t expected_nullity,
                                          const std::map<Symbol, Scalar>& gauge = {}) {
    ConstraintReport report;

    auto row_has_params = [&](size_t r) {
        for (size_t c = 0; c < m.cols(); ++c)
            for (Symbol v : params)
                if (m.at(r, c).depends_on(v)) return true;
        return false;
    };
    std::vector<size_t> plain_rows, param_rows;
    for (size_t r = 0; r < m.rows(); ++r)
        (row_has_params(r) ? param_rows : plain_rows).push_back(r);

    auto take_rows = [&](const std::vector<size_t>& which) {
        ScalarMatrix s(which.size(), m.cols());
        for (size_t i = 0; i < which.size(); ++i)
            for (size_t c = 0; c < m.cols(); ++c) s.at(i, c) = m.at(which[i], c);
        return s;
    };

    // stage 1: kernel of the parameter-free block
    std::vector<ScalarMatrix> base;
    if (plain_rows.empty()) {
        for (size_t c = 0; c < m.cols(); ++c) {
            ScalarMatrix v(m.cols(), 1);
            v.at(c, 0) = Scalar(1);
            base.push_back(std::move(v));
        }
    } else {
        base = nullspace(take_rows(plain_rows));
    }
    size_t k = base.size();
    if (k < expected_nullity)
        throw underdetermined_system("parameter-free block already caps the kernel below target");

    ScalarMatrix X(m.cols(), k);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < m.cols(); ++i) X.at(i, j) = base[j].at(i, 0);

    auto finish = [&](const ScalarMatrix& with_bindings) -> ConstraintReport& {
        report.achieved_nullity = nullspace(with_bindings).size();
        if (report.residual.empty() && report.achieved_nullity < expected_nullity)
            throw underdetermined_system("no parameter values reach the requested nullity");
        return report;
    };

    if (param_rows.empty()) {
        report.free_params.assign(params.begin(), params.end());
        return finish(m);
    }

    // stage 2: minors of the reduced block must vanish
    ScalarMatrix R = take_rows(param_rows) * X;
    size_t s = k - expected_nullity + 1;

    std::set<Symbol> spectral;
    for (const char* name : {"z", "u"}) {
        Symbol v = sym(name);
        if (m.depends_on(v) && !params.count(v)) spectral.insert(v);
    }

    // expand the numerator in the spectral symbols, strip parameter-free
    // content, reject inconsistencies, dedupe into the worklist
    auto normalize_into = [&](const Scalar& value, std::vector<LaurentPoly>& sink) {
        if (value.is_zero()) return;
        auto parts = detail::split_by_symbols(value.num(), spectral);
        for (auto& [se, coeff] : parts) {
            // clear Laurent tails, but keep positive powers of the params:
            // a factor p^k carries the root p = 0
            ExpVec mins = coeff.min_exponents();
            ExpVec shift(mins.size(), 0);
            for (size_t i = 0; i < mins.size(); ++i) {
                bool is_param = params.count(static_cast<Symbol>(i)) != 0;
                shift[i] = (is_param && mins[i] > 0) ? 0 : -mins[i];
            }
            trim_exp(shift);
            LaurentPoly c = detail::strip_param_content(coeff.shifted(shift), params);
            bool has_param = false;
            for (Symbol v : params) has_param = has_param || c.depends_on(v);
            if (!has_param) {
                if (!c.is_zero())
                    throw inconsistent_system("condition free of parameters does not vanish");
                continue;
            }
            c = make_primitive(c);
            if (std::find(sink.begin(), sink.end(), c) == sink.end()) sink.push_back(std::move(c));
        }
    };

    std::vector<LaurentPoly> conditions;
    if (s <= std::min(R.rows(), R.cols())) {
        std::vector<size_t> rsel(s), csel(s);
        auto choose = [&](auto&& self, std::vector<size_t>& sel, size_t depth, size_t start,
                          size_t limit, auto&& body) -> void {
            if (depth == s) {
                body();
                return;
            }
            for (size_t i = start; i + (s - depth) <= limit; ++i) {
                sel[depth] = i;
                self(self, sel, depth + 1, i + 1, limit, body);
            }
        };
        choose(choose, rsel, 0, 0, R.rows(), [&] {
            choose(choose, csel, 0, 0, R.cols(), [&] {
                ScalarMatrix sub(s, s);
                for (size_t i = 0; i < s; ++i)
                    for (size_t j = 0; j < s; ++j) sub.at(i, j) = R.at(rsel[i], csel[j]);
                normalize_into(determinant(sub), conditions);
            });
        });
    }

    // successive linear elimination of parameters
    std::map<Symbol, Scalar> bound;
    for (;;) {
        size_t best = conditions.size();
        Symbol best_param{};
        size_t best_size = 0;
        for (size_t i = 0; i < conditions.size(); ++i) {
            for (Symbol p : params) {
                if (bound.count(p) || !conditions[i].depends_on(p)) continue;
                if (conditions[i].degree_in(p) != 1) continue;
                LaurentPoly lead = conditions[i].coeff_in(p, 1);
                bool lead_clean = true;
                for (Symbol other : params)
                    if (lead.depends_on(other)) lead_clean = false;
                if (!lead_clean) continue;
                size_t sz = conditions[i].term_count();
                if (best == conditions.size() || sz < best_size) {
                    best = i;
                    best_param = p;
                    best_size = sz;
                }
            }
        }
        if (best == conditions.size()) break;
        LaurentPoly cond = std::move(conditions[best]);
        conditions.erase(conditions.begin() + static_cast<long>(best));
        Scalar value = Scalar::from_num_den(-cond.coeff_in(best_param, 0),
                                            cond.coeff_in(best_param, 1));
        for (auto& [p, v] : bound) v = v.substitute(best_param, value);
        bound[best_param] = value;
        std::vector<LaurentPoly> next;
        for (auto& c : conditions)
            normalize_into(Scalar::from_poly(c).substitute(best_param, value), next);
        conditions = std::move(next);
    }

    report.bindings = bound;
    for (auto& c : conditions) report.residual.push_back(Scalar::from_poly(c));
    for (Symbol p : params)
        if (!bound.count(p)) report.free_params.push_back(p);

    // gauge renaming: fresh := expr(params), solved for a free parameter
    for (auto& [fresh, raw_expr] : gauge) {
        // express the gauge definition through the surviving free parameters
        Scalar expr = raw_expr.substitute(report.bindings);
        Symbol target{};
        bool found = false;
        for (Symbol p : report.free_params) {
            if (!expr.depends_on(p)) continue;
            if (expr.num().degree_in(p) == 1 && !expr.den().depends_on(p)) {
                target = p;
                found = true;
                break;
            }
        }
        if (!found) continue;
        LaurentPoly a = expr.num().coeff_in(target, 1);
        LaurentPoly b = expr.num().coeff_in(target, 0);
        Scalar solved = (Scalar::symbol(fresh) * Scalar::from_poly(expr.den()) -
                         Scalar::from_poly(b)) /
                        Scalar::from_poly(a);
        for (auto& [p, v] : report.bindings) v = v.substitute(target, solved);
        report.bindings[target] = solved;
        report.free_params.erase(
            std::find(report.free_params.begin(), report.free_params.end(), target));
        report.gauge_symbols.push_back(fresh);
    }

    return finish(m.substitute(report.bindings));
}

}  // namespace reflectq
