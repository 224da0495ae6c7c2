#pragma once

#include <utility>
#include <vector>

#include "cs/scalar.hpp"

namespace cs {

// Univariate polynomials over Q(i), coefficients in ascending powers.
using Poly = std::vector<Scalar>;

int poly_degree(const Poly& p);  // -1 for the zero polynomial
Poly poly_trim(Poly p);
Poly poly_derivative(const Poly& p);
Scalar poly_eval(const Poly& p, const Scalar& x);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_monic(const Poly& p);

// Exact euclidean division; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Monic gcd by the euclidean algorithm; gcd(p, 0) = monic(p).
Poly poly_gcd(const Poly& a, const Poly& b);

// Yun's square-free decomposition (characteristic zero): returns monic
// square-free factors with their multiplicities, product of factor^mult
// equal to monic(p). Factors of degree zero are dropped.
std::vector<std::pair<Poly, int>> poly_squarefree(const Poly& p);

}  // namespace cs
