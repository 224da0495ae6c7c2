#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cs/scalar.hpp"

namespace cs {

// Dense exact matrix over the Gaussian rationals. Rectangular shapes are
// allowed so the echelon machinery can serve stacked-basis rank checks and
// interpolation right-hand sides; operations that need a square input check
// for one. Matrices read from files are always square (the parser enforces
// it).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t n) { return Matrix(n, n); }
    static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix transpose() const;
    Scalar trace() const;
    Matrix pow(std::size_t k) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, Matrix a);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

struct MatrixPair {
    Matrix a, b;
};

using Vector = std::vector<Scalar>;

// Exact determinant by fraction-free (Bareiss) elimination with the
// first-nonzero pivot rule.
Scalar det(const Matrix& m);

// Exact rank over Q(i); works for rectangular inputs.
std::size_t rank(const Matrix& m);

// Exact basis of the right null space; empty when m is nonsingular.
std::vector<Vector> null_space(const Matrix& m);

// Coefficients (1, c1, ..., cn) of det(lambda I - m) = lambda^n + c1
// lambda^{n-1} + ... + cn, by the Faddeev-LeVerrier recursion. Read in
// ascending powers the same vector gives det(I - s m).
std::vector<Scalar> charpoly(const Matrix& m);

// Solves a x = rhs for square nonsingular a (throws std::domain_error when
// singular); rhs may have any number of columns.
Matrix solve(const Matrix& a, const Matrix& rhs);
Matrix inverse(const Matrix& a);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix columns_matrix(const std::vector<Vector>& cols, std::size_t nrows);
Vector mat_vec(const Matrix& m, const Vector& v);

}  // namespace cs
