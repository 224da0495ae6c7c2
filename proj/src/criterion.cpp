#include "cs/criterion.hpp"

#include <stdexcept>

namespace cs {

namespace {

// Compares the grid against the outer product of column 0 and row 0 and
// fills factors/witness accordingly. Both vectors start with m_00 = 1, so
// no renormalization is needed.
void fill_factors_or_witness(CsVerdict& v, const BivarPoly& g,
                             const std::vector<Scalar>& k, const std::vector<Scalar>& l) {
    for (std::size_t p = 0; p <= g.n; ++p) {
        for (std::size_t q = 0; q <= g.n; ++q) {
            Scalar expect = k[p] * l[q];
            if (g.at(p, q) != expect) {
                v.witness = CsWitness{p, q, g.at(p, q), expect};
                return;
            }
        }
    }
    v.factor_k = k;
    v.factor_l = l;
}

}  // namespace

CsVerdict cs_rank_test(const BivarPoly& grid) {
    CsVerdict v;
    v.rank_of_m = rank(grid_matrix(grid));
    v.holds = (v.rank_of_m == 1);
    std::vector<Scalar> k(grid.n + 1), l(grid.n + 1);
    for (std::size_t p = 0; p <= grid.n; ++p) k[p] = grid.at(p, 0);
    for (std::size_t q = 0; q <= grid.n; ++q) l[q] = grid.at(0, q);
    fill_factors_or_witness(v, grid, k, l);
    if (v.holds != !v.witness.has_value())
        throw std::logic_error("cs_rank_test: rank and factorization disagree");
    return v;
}

CsVerdict cs_direct(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("dimension mismatch: A and B must be square of equal size");
    std::vector<Scalar> k = univariate_coeffs(a);
    std::vector<Scalar> l = univariate_coeffs(b);
    BivarPoly g = coeff_grid_interp(a, b);
    CsVerdict v;
    v.rank_of_m = rank(grid_matrix(g));
    fill_factors_or_witness(v, g, k, l);
    v.holds = !v.witness.has_value();
    return v;
}

std::vector<IdentityViolation> cs_identity_check(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("dimension mismatch: A and B must be square of equal size");
    std::size_t n = a.rows();
    std::vector<Scalar> sum_a(n + 1), sum_b(n + 1);
    for (std::size_t p = 0; p <= n; ++p) {
        sum_a[p] = principal_minor_sum(a, p);
        sum_b[p] = principal_minor_sum(b, p);
    }
    BivarPoly mixed = coeff_grid_minors(a, b);
    std::vector<IdentityViolation> violations;
    for (std::size_t p = 0; p <= n; ++p) {
        for (std::size_t q = 0; q <= n; ++q) {
            Scalar product = sum_a[p] * sum_b[q];
            Scalar target;
            if (p + q <= n) {
                // mixed sum recovered from the grid entry built out of minors
                target = mixed.at(p, q);
                if ((p + q) % 2 != 0) target = -target;
            }  // else identity demands the product itself vanish
            if (product != target) violations.push_back({p, q, product, target});
        }
    }
    return violations;
}

}  // namespace cs
