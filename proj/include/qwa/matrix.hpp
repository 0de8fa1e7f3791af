#pragma once

// Dense matrices over the exact rings of this library. The element type
// carries its own context (prime, truncation order), so every matrix keeps
// a zero prototype to build fresh entries.

#include <functional>
#include <string>
#include <vector>

#include "qwa/error.hpp"

namespace qwa {

template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const T& zero() const noexcept { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& b) {
        check_shape(b);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& b) {
        check_shape(b);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw StructuralError("matrix product of " + shape(a) + " by " + shape(b));
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    /// Left scalar multiplication c*A.
    friend Matrix operator*(const T& c, const Matrix& a) {
        Matrix r = a;
        for (auto& v : r.data_) v = c * v;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    /// Scalar matrix test: off-diagonal zero and all diagonal entries equal.
    bool is_scalar() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if (i == j) {
                    if ((*this)(i, i) != (*this)(0, 0)) return false;
                } else if (!(*this)(i, j).is_zero()) {
                    return false;
                }
            }
        return true;
    }

    Matrix pow(unsigned k, const T& one) const {
        Matrix r = identity(rows_, zero_, one);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(zero_));
        Matrix<U> r(rows_, cols_, f(zero_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    static std::string shape(const Matrix& m) { return std::to_string(m.rows_) + "x" + std::to_string(m.cols_); }

private:
    void check_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw StructuralError("shape mismatch " + shape(*this) + " vs " + shape(b));
    }

    std::size_t rows_;
    std::size_t cols_;
    T zero_;
    std::vector<T> data_;
};

} // namespace qwa
