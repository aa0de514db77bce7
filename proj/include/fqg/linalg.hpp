#ifndef FQG_LINALG_HPP
#define FQG_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "fqg/error.hpp"
#include "fqg/field.hpp"
#include "fqg/poly.hpp"

namespace fqg {

template <FiniteField F>
using Vec = std::vector<typename F::value_type>;

// Dense row-major matrix over F. The field must outlive the matrix.
template <FiniteField F>
class Matrix {
public:
    using value_type = typename F::value_type;

    Matrix(const F& field, std::size_t rows, std::size_t cols)
        : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    static Matrix from_rows(const F& field, const std::vector<Vec<F>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(field, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw Error("Matrix::from_rows: ragged rows");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    const F& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec<F> row(std::size_t r) const {
        return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (v.size() != cols_) throw Error("Matrix::apply: dimension mismatch");
        const F& f = *field_;
        Vec<F> out(rows_, f.zero());
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                out[r] = f.add(out[r], f.mul((*this)(r, c), v[c]));
            }
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("Matrix product: dimension mismatch");
        const F& f = *a.field_;
        Matrix out(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (f.is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    const F* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

template <FiniteField F>
struct ReducedForm {
    Matrix<F> matrix;                 // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

template <FiniteField F>
ReducedForm<F> row_reduce(Matrix<F> m) {
    const F& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        }
        const auto inv = f.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || f.is_zero(m(r, col))) continue;
            const auto factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

// Forward elimination only; cheaper than row_reduce when just the rank is needed.
template <FiniteField F>
std::size_t rank(Matrix<F> m) {
    const F& f = m.field();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        }
        const auto inv = f.inv(m(row, col));
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (f.is_zero(m(r, col))) continue;
            const auto factor = f.mul(m(r, col), inv);
            for (std::size_t c = col; c < m.cols(); ++c) {
                m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
            }
        }
        ++row;
    }
    return row;
}

// Basis of {x : M x = 0}.
template <FiniteField F>
std::vector<Vec<F>> kernel(const Matrix<F>& m) {
    const F& f = m.field();
    auto reduced = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : reduced.pivots) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec<F> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < reduced.pivots.size(); ++r) {
            v[reduced.pivots[r]] = f.neg(reduced.matrix(r, free));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Incrementally maintained echelon basis that also records, for each stored
// vector, the combination of inserted vectors producing it.
template <FiniteField F>
class TrackedBasis {
public:
    explicit TrackedBasis(const F& field) : field_(&field) {}

    // Reduces v against the basis. Returns the combination c (over inserted
    // vectors 0..n-1 plus v itself at index n) with Σ c_i v_i = reduced v.
    // If the reduced vector is nonzero it is stored.
    std::pair<bool, Vec<F>> insert(const Vec<F>& v) {
        const F& f = *field_;
        const std::size_t n = inserted_;
        Vec<F> residual = v;
        Vec<F> combo(n + 1, f.zero());
        combo[n] = f.one();
        for (std::size_t b = 0; b < vectors_.size(); ++b) {
            const auto& coef = residual[pivots_[b]];
            if (f.is_zero(coef)) continue;
            const auto c = coef;
            for (std::size_t i = 0; i < residual.size(); ++i) {
                residual[i] = f.sub(residual[i], f.mul(c, vectors_[b][i]));
            }
            for (std::size_t i = 0; i < combos_[b].size(); ++i) {
                combo[i] = f.sub(combo[i], f.mul(c, combos_[b][i]));
            }
        }
        ++inserted_;
        std::size_t pivot = 0;
        while (pivot < residual.size() && f.is_zero(residual[pivot])) ++pivot;
        if (pivot == residual.size()) return {false, combo};
        const auto inv = f.inv(residual[pivot]);
        for (auto& x : residual) x = f.mul(x, inv);
        for (auto& x : combo) x = f.mul(x, inv);
        vectors_.push_back(std::move(residual));
        combos_.push_back(combo);
        pivots_.push_back(pivot);
        return {true, combo};
    }

    std::size_t size() const noexcept { return vectors_.size(); }

private:
    const F* field_;
    std::size_t inserted_ = 0;
    std::vector<Vec<F>> vectors_;  // each normalized to 1 at its pivot
    std::vector<Vec<F>> combos_;
    std::vector<std::size_t> pivots_;
};

// Monic least-degree m with m(A) v = 0, from the Krylov sequence v, Av, A²v, ...
template <FiniteField F, class Apply>
Polynomial<F> krylov_minpoly(const F& field, Apply&& apply, const Vec<F>& v) {
    TrackedBasis<F> basis(field);
    Vec<F> w = v;
    while (true) {
        auto [independent, combo] = basis.insert(w);
        if (!independent) return monic(Polynomial<F>(field, std::move(combo)));
        w = apply(w);
    }
}

// Minimal polynomial of an operator on F^dim: lcm of the Krylov minimal
// polynomials of the standard basis vectors.
template <FiniteField F, class Apply>
Polynomial<F> operator_minpoly(const F& field, Apply&& apply, std::size_t dim) {
    auto result = Polynomial<F>::constant(field, field.one());
    for (std::size_t i = 0; i < dim; ++i) {
        Vec<F> e(dim, field.zero());
        e[i] = field.one();
        result = lcm(result, krylov_minpoly(field, apply, e));
    }
    return result;
}

template <FiniteField F>
Polynomial<F> matrix_minpoly(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw Error("matrix_minpoly: matrix must be square");
    return operator_minpoly(m.field(), [&m](const Vec<F>& v) { return m.apply(v); }, m.cols());
}

}  // namespace fqg

#endif  // FQG_LINALG_HPP
