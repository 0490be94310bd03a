#pragma once

#include <gammalink/numeric.hpp>
#include <gammalink/poly.hpp>

#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace gammalink {

/// Dense row-major matrix over an exact ring (Integer or Poly).
template <typename T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw error("matrix entry count does not match shape");
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw error("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(one());
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// The matrix with row i and column j deleted.
    Matrix minor(std::size_t i, std::size_t j) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t r = 0, mr = 0; r < rows_; ++r) {
            if (r == i) continue;
            for (std::size_t c = 0, mc = 0; c < cols_; ++c) {
                if (c == j) continue;
                m(mr, mc++) = (*this)(r, c);
            }
            ++mr;
        }
        return m;
    }

    template <typename F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.data_[k] + b.data_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = r.data_[k] - b.data_[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw error("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }

    friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
        if (a.cols_ != v.size()) throw error("matrix-vector shape mismatch");
        std::vector<T> r(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r[i] = r[i] + a(i, j) * v[j];
        return r;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        return a * std::span<const T>(v);
    }

    Matrix scaled(const T& s) const {
        Matrix r = *this;
        for (auto& x : r.data_) x = x * s;
        return r;
    }

private:
    static T one() {
        if constexpr (std::is_same_v<T, Poly>) return Poly::constant(1);
        else return T(1);
    }

    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw error("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using PolyMatrix = Matrix<Poly>;
using IntVector = std::vector<Integer>;

template <typename T>
T dot(std::span<const T> a, std::span<const T> b) {
    if (a.size() != b.size()) throw error("dot product length mismatch");
    T acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
    return acc;
}

inline Integer dot(const IntVector& a, const IntVector& b) {
    return dot<Integer>(std::span<const Integer>(a), std::span<const Integer>(b));
}

/// Determinant by fraction-free (Bareiss) elimination. Every division is exact
/// in the coefficient ring, so no fractions appear for Integer or Poly entries.
template <typename T>
T det(const Matrix<T>& m) {
    if (!m.is_square()) throw error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Matrix<T>::identity(1)(0, 0);
    Matrix<T> a = m;
    T prev = Matrix<T>::identity(1)(0, 0);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(a(p, k))) ++p;
            if (p == n) return T{};
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = exact_divide(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            }
            a(i, k) = T{};
        }
        prev = a(k, k);
    }
    T d = a(n - 1, n - 1);
    if (negate) d = -d;
    return d;
}

/// Classical adjoint: adj(M)(j, i) = (-1)^{i+j} det(minor(M, i, j)), so M adj(M) = det(M) I.
template <typename T>
Matrix<T> adjugate(const Matrix<T>& m) {
    if (!m.is_square()) throw error("adjugate of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 1) return Matrix<T>::identity(1);
    Matrix<T> adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            T c = det(m.minor(i, j));
            adj(j, i) = ((i + j) % 2 == 0) ? c : T(-c);
        }
    return adj;
}

class not_unimodular : public error {
public:
    explicit not_unimodular(Integer determinant)
        : error("matrix not unimodular (determinant " + determinant.get_str() + ")"),
          det_(std::move(determinant)) {}

    const Integer& determinant() const noexcept { return det_; }

private:
    Integer det_;
};

/// Exact inverse of an integer matrix with determinant +1 or -1.
inline IntMatrix int_inverse(const IntMatrix& m) {
    if (!m.is_square()) throw error("inverse of non-square matrix");
    const Integer d = det(m);
    if (abs(d) != 1) throw not_unimodular(d);
    // 1/d = d when d = +-1.
    return adjugate(m).scaled(d);
}

}  // namespace gammalink
