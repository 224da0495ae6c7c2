#pragma once

#include <optional>
#include <vector>

#include "cs/bivar.hpp"

namespace cs {

struct CsWitness {
    std::size_t p = 0, q = 0;
    Scalar lhs, rhs;  // m_pq and the factored value a_p * b_q
};

// Outcome of a CS test. holds is equivalent to rank_of_m == 1; when the
// property holds the factors satisfy factor_k[0] = factor_l[0] = 1 and
// their outer product reproduces the grid exactly.
struct CsVerdict {
    bool holds = false;
    std::size_t rank_of_m = 0;
    std::optional<std::vector<Scalar>> factor_k;  // det(I - sA) coefficients
    std::optional<std::vector<Scalar>> factor_l;  // det(I - tB) coefficients
    std::optional<CsWitness> witness;             // smallest violated (p,q)
};

// Rank-1 criterion on the coefficient grid.
CsVerdict cs_rank_test(const BivarPoly& grid);

// Direct comparison of the grid against the product of the two univariate
// coefficient vectors.
CsVerdict cs_direct(const Matrix& a, const Matrix& b);

struct IdentityViolation {
    std::size_t p = 0, q = 0;
    Scalar lhs, rhs;  // product of pure-minor sums vs mixed-minor sum (or zero)
};

// Mixed principal-minor identities: for p+q <= n, the product of the pure
// minor sums must equal the mixed sum; for p+q > n it must vanish. All
// sums are recomputed by subset enumeration, independent of the other two
// routes. Empty result means the CS property holds. Practical for n <= ~8.
std::vector<IdentityViolation> cs_identity_check(const Matrix& a, const Matrix& b);

}  // namespace cs
