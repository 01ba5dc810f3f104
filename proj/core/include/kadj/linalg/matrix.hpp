#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices and row/column vectors over an exact ring.
 *
 * Storage is row-major. Kernels count one multiplication per product of
 * ring elements in the thread-local OpCounts.
 */

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kadj/errors.hpp"
#include "kadj/instrument.hpp"
#include "kadj/rings/concepts.hpp"
#include "kadj/rings/series.hpp"

namespace kadj {

template <RingElement E>
class Matrix {
public:
    using Element = E;

    Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<E> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix data size does not match its shape");
    }

    template <CommutativeRing R>
    static Matrix zero(const R& ring, std::size_t rows, std::size_t cols) {
        return Matrix(rows, cols, ring.zero());
    }

    template <CommutativeRing R>
    static Matrix identity(const R& ring, std::size_t n) {
        Matrix m(n, n, ring.zero());
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
        return m;
    }

    /// Builds from small integer literals, row by row.
    template <CommutativeRing R>
    static Matrix from_ints(const R& ring, const std::vector<std::vector<std::int64_t>>& rows) {
        const std::size_t m = rows.size();
        const std::size_t n = m ? rows.front().size() : 0;
        std::vector<E> data;
        data.reserve(m * n);
        for (const auto& row : rows) {
            if (row.size() != n) throw DimensionMismatch("ragged matrix literal");
            for (std::int64_t x : row) data.push_back(ring.from_int(x));
        }
        return Matrix(m, n, std::move(data));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    E& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const E& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    const std::vector<E>& data() const noexcept { return data_; }
    std::vector<E>& data() noexcept { return data_; }

    Matrix transpose() const {
        std::vector<E> out;
        out.reserve(data_.size());
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return Matrix(cols_, rows_, std::move(out));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        std::vector<E> out;
        out.reserve(a.data_.size());
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.push_back(a.data_[k] + b.data_[k]);
        count_add(out.size());
        return Matrix(a.rows_, a.cols_, std::move(out));
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        std::vector<E> out;
        out.reserve(a.data_.size());
        for (std::size_t k = 0; k < a.data_.size(); ++k) out.push_back(a.data_[k] - b.data_[k]);
        count_add(out.size());
        return Matrix(a.rows_, a.cols_, std::move(out));
    }

    Matrix& operator+=(const Matrix& b) {
        check_same_shape(*this, b);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
        count_add(data_.size());
        return *this;
    }

    Matrix scaled(const E& c) const {
        std::vector<E> out;
        out.reserve(data_.size());
        for (const E& x : data_) out.push_back(c * x);
        count_mul(out.size());
        return Matrix(rows_, cols_, std::move(out));
    }

    /// Applies `f` to every entry, possibly changing the element type.
    template <class F>
    auto map(F&& f) const -> Matrix<std::invoke_result_t<F, const E&>> {
        using Out = std::invoke_result_t<F, const E&>;
        std::vector<Out> out;
        out.reserve(data_.size());
        for (const E& x : data_) out.push_back(f(x));
        return Matrix<Out>(rows_, cols_, std::move(out));
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw DimensionMismatch("shape " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " vs " +
                                    std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<E> data_;
};

/// 1 x n vector.
template <RingElement E>
struct RowVector {
    std::vector<E> entries;

    std::size_t size() const noexcept { return entries.size(); }
    E& operator[](std::size_t i) { return entries[i]; }
    const E& operator[](std::size_t i) const { return entries[i]; }
    friend bool operator==(const RowVector&, const RowVector&) = default;
};

/// n x 1 vector.
template <RingElement E>
struct ColVector {
    std::vector<E> entries;

    std::size_t size() const noexcept { return entries.size(); }
    E& operator[](std::size_t i) { return entries[i]; }
    const E& operator[](std::size_t i) const { return entries[i]; }
    friend bool operator==(const ColVector&, const ColVector&) = default;
};

template <CommutativeRing R>
RowVector<ElementOf<R>> zero_row(const R& ring, std::size_t n) {
    return {std::vector<ElementOf<R>>(n, ring.zero())};
}

template <CommutativeRing R>
ColVector<ElementOf<R>> zero_col(const R& ring, std::size_t n) {
    return {std::vector<ElementOf<R>>(n, ring.zero())};
}

/// Records the operand degrees of X*Y if a ProductLog is active.
template <RingElement E>
void log_product(const Matrix<E>& x, const Matrix<E>& y) {
    ProductLog* log = active_product_log();
    if (!log) return;
    ProductRecord rec{x.rows(), x.cols(), y.cols(), 0, 0, 0, 0};
    for (const E& e : x.data()) {
        rec.lhs_degree = std::max(rec.lhs_degree, poly_degree(e));
        rec.lhs_coeff_degree = std::max(rec.lhs_coeff_degree, coefficient_degree(e));
    }
    for (const E& e : y.data()) {
        rec.rhs_degree = std::max(rec.rhs_degree, poly_degree(e));
        rec.rhs_coeff_degree = std::max(rec.rhs_coeff_degree, coefficient_degree(e));
    }
    log->push_back(rec);
}

/// Classical product; throws DimensionMismatch unless x.cols() == y.rows().
template <RingElement E>
Matrix<E> mat_mul(const Matrix<E>& x, const Matrix<E>& y) {
    if (x.cols() != y.rows()) {
        throw DimensionMismatch("mat_mul: " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " times " +
                                std::to_string(y.rows()) + "x" + std::to_string(y.cols()));
    }
    if (x.cols() == 0) throw DimensionMismatch("mat_mul: empty inner dimension");
    log_product(x, y);
    std::vector<E> out;
    out.reserve(x.rows() * y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < y.cols(); ++j) {
            E acc = x(i, 0) * y(0, j);
            for (std::size_t k = 1; k < x.cols(); ++k) acc += x(i, k) * y(k, j);
            out.push_back(std::move(acc));
        }
    }
    count_mul(x.rows() * x.cols() * y.cols());
    count_add(x.rows() * (x.cols() - 1) * y.cols());
    return Matrix<E>(x.rows(), y.cols(), std::move(out));
}

/// p * M for a row vector p.
template <RingElement E>
RowVector<E> vec_mat(const RowVector<E>& p, const Matrix<E>& m) {
    if (p.size() != m.rows() || p.size() == 0) throw DimensionMismatch("vec_mat: vector/matrix size mismatch");
    std::vector<E> out;
    out.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        E acc = p[0] * m(0, j);
        for (std::size_t k = 1; k < p.size(); ++k) acc += p[k] * m(k, j);
        out.push_back(std::move(acc));
    }
    count_mul(p.size() * m.cols());
    count_add((p.size() - 1) * m.cols());
    return {std::move(out)};
}

/// M * v for a column vector v.
template <RingElement E>
ColVector<E> mat_vec(const Matrix<E>& m, const ColVector<E>& v) {
    if (v.size() != m.cols() || v.size() == 0) throw DimensionMismatch("mat_vec: matrix/vector size mismatch");
    std::vector<E> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        E acc = m(i, 0) * v[0];
        for (std::size_t k = 1; k < v.size(); ++k) acc += m(i, k) * v[k];
        out.push_back(std::move(acc));
    }
    count_mul(m.rows() * v.size());
    count_add(m.rows() * (v.size() - 1));
    return {std::move(out)};
}

/// u * v for a row u and a column v.
template <RingElement E>
E dot(const RowVector<E>& u, const ColVector<E>& v) {
    if (u.size() != v.size() || u.size() == 0) throw DimensionMismatch("dot: size mismatch");
    E acc = u[0] * v[0];
    for (std::size_t k = 1; k < u.size(); ++k) acc += u[k] * v[k];
    count_mul(u.size());
    count_add(u.size() - 1);
    return acc;
}

/// acc += c * x, entrywise.
template <RingElement E, class Vec>
void axpy(Vec& acc, const E& c, const Vec& x) {
    if (acc.size() != x.size()) throw DimensionMismatch("axpy: size mismatch");
    for (std::size_t k = 0; k < x.size(); ++k) acc[k] += c * x[k];
    count_mul(x.size());
    count_add(x.size());
}

/// M += a * b where a is n x 1 and b is 1 x m (rank-one update).
template <RingElement E>
void add_outer(Matrix<E>& m, const ColVector<E>& a, const RowVector<E>& b) {
    if (m.rows() != a.size() || m.cols() != b.size()) throw DimensionMismatch("add_outer: shape mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) += a[i] * b[j];
    count_mul(a.size() * b.size());
    count_add(a.size() * b.size());
}

template <RingElement E>
RowVector<E> to_row(const ColVector<E>& c) {
    return {c.entries};
}

template <RingElement E>
ColVector<E> to_col(const RowVector<E>& r) {
    return {r.entries};
}

template <RingElement E>
RowVector<E> row_of(const Matrix<E>& m, std::size_t i) {
    return {std::vector<E>(m.data().begin() + static_cast<std::ptrdiff_t>(i * m.cols()),
                           m.data().begin() + static_cast<std::ptrdiff_t>((i + 1) * m.cols()))};
}

}  // namespace kadj
