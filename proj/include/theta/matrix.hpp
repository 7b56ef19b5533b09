#pragma once

#include <vector>

#include "theta/errors.hpp"
#include "theta/numeric.hpp"

namespace theta {

// Conjugation hooks used by Matrix<T>::conj_transpose and friends.
inline Rational conj_value(const Rational& x) { return x; }

/// Dense matrix over an exact field.  T needs +, -, *, ==, a zero default
/// constructor, construction from long, and (for solve paths) inverse via
/// field_inverse(T).
template <typename T>
class Matrix {
   public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c, T()) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        require(x.cols_ == y.rows_, "matrix size mismatch");
        Matrix r(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t k = 0; k < x.cols_; ++k) {
                const T& v = x(i, k);
                if (v == T()) continue;
                for (size_t j = 0; j < y.cols_; ++j) r(i, j) += v * y(k, j);
            }
        return r;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix size mismatch");
        Matrix r = x;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix size mismatch");
        Matrix r = x;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
        return r;
    }

    friend Matrix operator*(const T& s, const Matrix& x) {
        Matrix r = x;
        for (auto& v : r.a_) v = s * v;
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix conj_transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = conj_value((*this)(i, j));
        return r;
    }

    T trace() const {
        require(rows_ == cols_, "trace of a non-square matrix");
        T t{};
        for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!(v == T())) return false;
        return true;
    }

    // True iff the matrix is s * I for some scalar s (returned through out).
    bool is_scalar(T& out) const {
        if (rows_ != cols_ || rows_ == 0) return false;
        out = (*this)(0, 0);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                if (i == j && !((*this)(i, j) == out)) return false;
                if (i != j && !((*this)(i, j) == T())) return false;
            }
        return true;
    }

    /// Determinant by Gaussian elimination with exact division.
    T det() const {
        require(rows_ == cols_, "determinant of a non-square matrix");
        Matrix m = *this;
        T d(1);
        bool neg = false;
        for (size_t col = 0; col < cols_; ++col) {
            size_t piv = col;
            while (piv < rows_ && m(piv, col) == T()) ++piv;
            if (piv == rows_) return T();
            if (piv != col) {
                for (size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(col, j));
                neg = !neg;
            }
            const T p = m(col, col);
            d = d * p;
            const T pinv = field_inverse(p);
            for (size_t i = col + 1; i < rows_; ++i) {
                if (m(i, col) == T()) continue;
                T f = m(i, col) * pinv;
                for (size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        if (neg) d = T() - d;
        return d;
    }

    /// Rank by Gaussian elimination.
    size_t rank() const {
        Matrix m = *this;
        size_t r = 0;
        for (size_t col = 0; col < cols_ && r < rows_; ++col) {
            size_t piv = r;
            while (piv < rows_ && m(piv, col) == T()) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(r, j));
            const T pinv = field_inverse(m(r, col));
            for (size_t i = r + 1; i < rows_; ++i) {
                if (m(i, col) == T()) continue;
                T f = m(i, col) * pinv;
                for (size_t j = col; j < cols_; ++j) m(i, j) -= f * m(r, j);
            }
            ++r;
        }
        return r;
    }

    size_t nullity() const { return cols_ - rank(); }

    Matrix inverse() const {
        require(rows_ == cols_, "inverse of a non-square matrix");
        Matrix m = *this;
        Matrix inv = identity(rows_);
        for (size_t col = 0; col < cols_; ++col) {
            size_t piv = col;
            while (piv < rows_ && m(piv, col) == T()) ++piv;
            ensure(piv < rows_, "singular matrix");
            if (piv != col)
                for (size_t j = 0; j < cols_; ++j) {
                    std::swap(m(piv, j), m(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            const T pinv = field_inverse(m(col, col));
            for (size_t j = 0; j < cols_; ++j) {
                m(col, j) = pinv * m(col, j);
                inv(col, j) = pinv * inv(col, j);
            }
            for (size_t i = 0; i < rows_; ++i) {
                if (i == col || m(i, col) == T()) continue;
                T f = m(i, col);
                for (size_t j = 0; j < cols_; ++j) {
                    m(i, j) -= f * m(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    Matrix pow(unsigned long e) const {
        require(rows_ == cols_, "power of a non-square matrix");
        Matrix acc = identity(rows_);
        Matrix base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

   private:
    size_t rows_, cols_;
    std::vector<T> a_;
};

inline Rational field_inverse(const Rational& x) {
    require(x != 0, "division by zero");
    return Rational(1) / x;
}

}  // namespace theta
