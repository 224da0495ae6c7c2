#pragma once

#include <vector>

#include "cs/matrix.hpp"

namespace cs {

// Coefficient grid of f(s,t) = det(I - sA - tB): at(p,q) multiplies s^p t^q.
// Row p = 0 carries the coefficients of det(I - tB), column q = 0 those of
// det(I - sA); every entry with p + q > n is zero.
struct BivarPoly {
    std::size_t n = 0;  // dimension of the source matrices
    std::vector<Scalar> coeffs;  // (n+1)^2 entries, row-major in p

    BivarPoly() = default;
    explicit BivarPoly(std::size_t dim) : n(dim), coeffs((dim + 1) * (dim + 1)) {}

    std::size_t side() const { return n + 1; }
    Scalar& at(std::size_t p, std::size_t q) { return coeffs[p * side() + q]; }
    const Scalar& at(std::size_t p, std::size_t q) const { return coeffs[p * side() + q]; }

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
        return a.n == b.n && a.coeffs == b.coeffs;
    }
};

// det(I - sA - tB) at one exact point.
Scalar evaluate(const Matrix& a, const Matrix& b, const Scalar& s, const Scalar& t);

// Grid by evaluation on the integer nodes 0..n and two one-dimensional
// exact Vandermonde solves (left in s, right in t).
BivarPoly coeff_grid_interp(const Matrix& a, const Matrix& b);

// Grid assembled entry-by-entry from sums of mixed principal minors;
// combinatorial, intended for n up to ~8. Independent of the
// interpolation route by construction.
BivarPoly coeff_grid_minors(const Matrix& a, const Matrix& b);

// Determinant of the principal submatrix on rows_a (taken from A) and
// rows_b (taken from B), index sets disjoint, 0-based, columns restricted
// to the sorted union.
Scalar mixed_minor(const Matrix& a, const Matrix& b,
                   const std::vector<std::size_t>& rows_a,
                   const std::vector<std::size_t>& rows_b);

// Coefficients of det(I - sA) in ascending powers of s.
std::vector<Scalar> univariate_coeffs(const Matrix& a);

// Sum of all order x order principal minors (order 0 gives 1), by direct
// subset enumeration.
Scalar principal_minor_sum(const Matrix& x, std::size_t order);

Scalar grid_eval(const BivarPoly& g, const Scalar& s, const Scalar& t);
Matrix grid_matrix(const BivarPoly& g);

}  // namespace cs
