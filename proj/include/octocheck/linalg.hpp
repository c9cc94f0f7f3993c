#pragma once

// Small dense matrices and vectors over Rational. Nothing in this project
// exceeds 16x16, so the implementations favour clarity over asymptotics.

#include "octocheck/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octo {

using Vector = std::vector<Rational>;

inline Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("Matrix: zero dimension");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
        if (rows.size() == 0)
            throw std::invalid_argument("Matrix: no rows");
        const std::size_t cols = rows.begin()->size();
        Matrix m(rows.size(), cols);
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != cols)
                throw std::invalid_argument("Matrix: ragged rows");
            std::size_t c = 0;
            for (const auto& x : row)
                m(r, c++) = x;
            ++r;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o, "Matrix::operator+");
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i)
            m.e_[i] = e_[i] + o.e_[i];
        return m;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o, "Matrix::operator-");
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i)
            m.e_[i] = e_[i] - o.e_[i];
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("Matrix::operator*: dimension mismatch");
        Matrix m(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(r, k);
                if (a.is_zero())
                    continue;
                for (std::size_t c = 0; c < o.cols_; ++c)
                    m(r, c) += a * o(k, c);
            }
        return m;
    }

    friend Matrix operator*(const Rational& s, const Matrix& m) {
        Matrix out(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.e_.size(); ++i)
            out.e_[i] = s * m.e_[i];
        return out;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                m(c, r) = (*this)(r, c);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void require_same_shape(const Matrix& o, const char* who) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string(who) + ": shape mismatch");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> e_;
};

// Coordinates of the first entry where the two matrices differ, if any.
inline std::optional<std::pair<std::size_t, std::size_t>>
first_difference(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return std::make_pair(std::size_t(0), std::size_t(0));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != b(r, c))
                return std::make_pair(r, c);
    return std::nullopt;
}

inline Matrix gram(const std::vector<Vector>& vs) {
    if (vs.empty())
        throw std::invalid_argument("gram: no vectors");
    const std::size_t dim = vs.front().size();
    for (const auto& v : vs)
        if (v.size() != dim)
            throw std::invalid_argument("gram: dimension mismatch");
    Matrix m(vs.size(), vs.size());
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (std::size_t c = 0; c < vs.size(); ++c)
            m(r, c) = dot(vs[r], vs[c]);
    return m;
}

// Cofactor expansion along the first row; fine for the sizes used here.
inline Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 1)
        return m(0, 0);
    Rational det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero())
            continue;
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == c)
                    continue;
                minor(r - 1, cc++) = m(r, k);
            }
        }
        const Rational term = m(0, c) * determinant(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

inline std::string to_string(const Matrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += (r == 0) ? "[" : ", [";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                s += ", ";
            s += m(r, c).str();
        }
        s += "]";
    }
    s += "]";
    return s;
}

}  // namespace octo
