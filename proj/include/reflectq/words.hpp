#pragma once

// Formal words in a generator alphabet and linear combinations of them,
// together with tensor-square counterparts.  This is deliberately free of
// normal forms: expressions are only ever compared after evaluation in a
// representation, so products just concatenate words and track Koszul signs
// through a caller-supplied parity function.

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "reflectq/matrix.hpp"
#include "reflectq/scalar.hpp"

namespace reflectq {

template <typename Id>
struct Term {
    std::vector<Id> word;  // empty word means the unit
    Scalar coeff;
};

template <typename Id>
using Expr = std::vector<Term<Id>>;

// a1 (x) a2 with scalar coefficient; building block of coproduct tables
template <typename Id>
struct TensorTerm {
    std::vector<Id> left;
    std::vector<Id> right;
    Scalar coeff;
};

template <typename Id>
using CoproductTable = std::vector<TensorTerm<Id>>;

template <typename Id>
Expr<Id> expr_unit(Scalar c = Scalar(1)) {
    return {Term<Id>{{}, std::move(c)}};
}

template <typename Id>
Expr<Id> expr_gen(Id g, Scalar c = Scalar(1)) {
    return {Term<Id>{{g}, std::move(c)}};
}

template <typename Id>
Expr<Id> expr_word(std::vector<Id> w, Scalar c = Scalar(1)) {
    return {Term<Id>{std::move(w), std::move(c)}};
}

template <typename Id>
Expr<Id> operator+(Expr<Id> a, const Expr<Id>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

template <typename Id>
Expr<Id> scaled(Expr<Id> a, const Scalar& c) {
    for (auto& t : a) t.coeff *= c;
    return a;
}

template <typename Id>
Expr<Id> operator-(Expr<Id> a, const Expr<Id>& b) {
    return std::move(a) + scaled(b, Scalar(-1));
}

template <typename Id>
Expr<Id> operator*(const Expr<Id>& a, const Expr<Id>& b) {
    Expr<Id> out;
    out.reserve(a.size() * b.size());
    for (const auto& ta : a)
        for (const auto& tb : b) {
            Term<Id> t;
            t.word = ta.word;
            t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
            t.coeff = ta.coeff * tb.coeff;
            out.push_back(std::move(t));
        }
    return out;
}

// parity of a word: sum of token parities mod 2
template <typename Id, typename ParityFn>
int word_parity(const std::vector<Id>& w, ParityFn parity) {
    int p = 0;
    for (const Id& g : w) p ^= parity(g) & 1;
    return p;
}

// graded commutator [a,b] = ab - (-1)^{|a||b|} ba, expanded term by term
template <typename Id, typename ParityFn>
Expr<Id> graded_bracket(const Expr<Id>& a, const Expr<Id>& b, ParityFn parity) {
    Expr<Id> out;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            int s = word_parity(ta.word, parity) * word_parity(tb.word, parity);
            Term<Id> fwd;
            fwd.word = ta.word;
            fwd.word.insert(fwd.word.end(), tb.word.begin(), tb.word.end());
            fwd.coeff = ta.coeff * tb.coeff;
            Term<Id> rev;
            rev.word = tb.word;
            rev.word.insert(rev.word.end(), ta.word.begin(), ta.word.end());
            // -(-1)^{|a||b|}: odd*odd flips the minus into a plus
            rev.coeff = tb.coeff * ta.coeff * Scalar(s ? 1 : -1);
            out.push_back(std::move(fwd));
            out.push_back(std::move(rev));
        }
    return out;
}

// anticommutator {a,b} = ab + ba (no sign; used for explicitly printed
// anticommutators rather than as the graded bracket of two odd elements)
template <typename Id>
Expr<Id> anticommutator(const Expr<Id>& a, const Expr<Id>& b) {
    return a * b + b * a;
}

// ---- tensor-square algebra ----------------------------------------------

template <typename Id>
CoproductTable<Id> tensor_term(std::vector<Id> l, std::vector<Id> r,
                               Scalar c = Scalar(1)) {
    return {TensorTerm<Id>{std::move(l), std::move(r), std::move(c)}};
}

template <typename Id>
CoproductTable<Id> operator+(CoproductTable<Id> a, const CoproductTable<Id>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

template <typename Id>
CoproductTable<Id> scaled(CoproductTable<Id> a, const Scalar& c) {
    for (auto& t : a) t.coeff *= c;
    return a;
}

template <typename Id>
CoproductTable<Id> operator-(CoproductTable<Id> a, const CoproductTable<Id>& b) {
    return std::move(a) + scaled(b, Scalar(-1));
}

// (a1 (x) a2)(b1 (x) b2) = (-1)^{|a2||b1|} a1 b1 (x) a2 b2
template <typename Id, typename ParityFn>
CoproductTable<Id> tensor_mul(const CoproductTable<Id>& a,
                              const CoproductTable<Id>& b, ParityFn parity) {
    CoproductTable<Id> out;
    out.reserve(a.size() * b.size());
    for (const auto& ta : a)
        for (const auto& tb : b) {
            int s = word_parity(ta.right, parity) * word_parity(tb.left, parity);
            TensorTerm<Id> t;
            t.left = ta.left;
            t.left.insert(t.left.end(), tb.left.begin(), tb.left.end());
            t.right = ta.right;
            t.right.insert(t.right.end(), tb.right.begin(), tb.right.end());
            t.coeff = ta.coeff * tb.coeff;
            if (s) t.coeff = -t.coeff;
            out.push_back(std::move(t));
        }
    return out;
}

// graded flip: sigma(a (x) b) = (-1)^{|a||b|} b (x) a
template <typename Id, typename ParityFn>
CoproductTable<Id> tensor_flip(const CoproductTable<Id>& a, ParityFn parity) {
    CoproductTable<Id> out;
    out.reserve(a.size());
    for (const auto& ta : a) {
        int s = word_parity(ta.left, parity) * word_parity(ta.right, parity);
        TensorTerm<Id> t;
        t.left = ta.right;
        t.right = ta.left;
        t.coeff = s ? -ta.coeff : ta.coeff;
        out.push_back(std::move(t));
    }
    return out;
}

// ---- evaluation ----------------------------------------------------------

// multiply out a word left to right: T(g1 g2 ... gk) = T(g1) T(g2) ... T(gk)
template <typename Id, typename MatFn>
ScalarMatrix eval_word(const std::vector<Id>& w, std::size_t dim, MatFn mat) {
    ScalarMatrix m = ScalarMatrix::identity(dim);
    for (const Id& g : w) m = m * mat(g);
    return m;
}

template <typename Id, typename MatFn>
ScalarMatrix eval_expr(const Expr<Id>& e, std::size_t dim, MatFn mat) {
    ScalarMatrix out(dim, dim);
    for (const auto& t : e)
        out = out + eval_word(t.word, dim, mat).scaled(t.coeff);
    return out;
}

// evaluate a tensor-square table in a pair of representations given by
// entry-wise matrix lookups; Koszul signs come from kron_graded driven by the
// operator parity of the left word
template <typename Id, typename MatFnL, typename MatFnR, typename ParityFn>
ScalarMatrix eval_table(const CoproductTable<Id>& tab, std::size_t dl,
                        MatFnL matl, const Grading& gl, std::size_t dr,
                        MatFnR matr, const Grading& gr, ParityFn parity) {
    ScalarMatrix out(dl * dr, dl * dr);
    for (const auto& t : tab) {
        ScalarMatrix a = eval_word(t.left, dl, matl);
        ScalarMatrix b = eval_word(t.right, dr, matr);
        int pa = word_parity(t.left, parity);
        int pb = word_parity(t.right, parity);
        out = out + kron_graded(a, pa, b, pb, gl, gr).scaled(t.coeff);
    }
    return out;
}

}  // namespace reflectq
