#pragma once

// Dense exact matrices over the scalar field, with the graded tensor
// machinery the gl(1|1) computations need.  Convention: entry (r,c) is the
// coefficient of basis vector v_r in the image of v_c, so matrices act on
// column vectors and e_{r,c} maps v_c to v_r.  Indices are 0-based in code.

#include <vector>

#include "reflectq/errors.hpp"
#include "reflectq/scalar.hpp"

namespace reflectq {

// parity of each basis vector: 0 even, 1 odd
using Grading = std::vector<int>;

inline Grading even_grading(size_t n) { return Grading(n, 0); }

class ScalarMatrix {
  public:
    ScalarMatrix() : rows_(0), cols_(0) {}
    ScalarMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static ScalarMatrix identity(size_t n) {
        ScalarMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }
    // v * e_{r,c}
    static ScalarMatrix unit(size_t rows, size_t cols, size_t r, size_t c,
                             Scalar v = Scalar(1)) {
        ScalarMatrix m(rows, cols);
        m.at(r, c) = std::move(v);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

    bool operator==(const ScalarMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const ScalarMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    ScalarMatrix operator-() const {
        ScalarMatrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }

    friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
        a.require_same_shape(b);
        ScalarMatrix r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a + (-b);
    }
    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.cols_ != b.rows_)
            throw dimension_mismatch("matrix product shape mismatch");
        ScalarMatrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    ScalarMatrix scaled(const Scalar& s) const {
        ScalarMatrix r = *this;
        for (auto& x : r.e_) x = x * s;
        return r;
    }

    ScalarMatrix transpose() const {
        ScalarMatrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    template <typename F>
    ScalarMatrix map_entries(F&& f) const {
        ScalarMatrix r = *this;
        for (auto& x : r.e_) x = f(x);
        return r;
    }

    ScalarMatrix substitute(Symbol v, const Scalar& value) const {
        return map_entries([&](const Scalar& x) { return x.substitute(v, value); });
    }
    ScalarMatrix substitute(const std::map<Symbol, Scalar>& bindings) const {
        return map_entries([&](const Scalar& x) { return x.substitute(bindings); });
    }

    bool depends_on(Symbol v) const {
        for (auto& x : e_)
            if (x.depends_on(v)) return true;
        return false;
    }

  private:
    void require_same_shape(const ScalarMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_mismatch("matrix shape mismatch");
    }

    size_t rows_, cols_;
    std::vector<Scalar> e_;
};

// (A (x) B)(v (x) w) = (-1)^{pB * |v|} (A v) (x) (B w); basis of the product
// space ordered v_0 (x) w_0, v_0 (x) w_1, ..., v_1 (x) w_0, ...
// g1 grades the domain of A and g2 the domain of B; pA is carried so callers
// can track the parity of operator products.
inline ScalarMatrix kron_graded(const ScalarMatrix& a, int pa, const ScalarMatrix& b, int pb,
                                const Grading& g1, const Grading& g2) {
    (void)pa;
    if (g1.size() != a.cols() || g2.size() != b.cols())
        throw dimension_mismatch("grading length does not match operand dimension");
    ScalarMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            bool flip = pb == 1 && g1[k] == 1;
            for (size_t j = 0; j < b.rows(); ++j)
                for (size_t l = 0; l < b.cols(); ++l) {
                    const Scalar& bjl = b.at(j, l);
                    if (bjl.is_zero()) continue;
                    Scalar v = aik * bjl;
                    r.at(i * b.rows() + j, k * b.cols() + l) = flip ? -v : v;
                }
        }
    return r;
}

// ordinary Kronecker product (all-even grading)
inline ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b) {
    return kron_graded(a, 0, b, 0, even_grading(a.cols()), even_grading(b.cols()));
}

// graded flip P(v (x) w) = (-1)^{|v||w|} w (x) v
inline ScalarMatrix graded_perm(const Grading& g1, const Grading& g2) {
    size_t n1 = g1.size(), n2 = g2.size();
    ScalarMatrix p(n2 * n1, n1 * n2);
    for (size_t k = 0; k < n1; ++k)
        for (size_t l = 0; l < n2; ++l)
            p.at(l * n1 + k, k * n2 + l) = Scalar(g1[k] && g2[l] ? -1 : 1);
    return p;
}

}  // namespace reflectq
