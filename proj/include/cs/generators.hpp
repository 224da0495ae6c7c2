#pragma once

#include <random>

#include "cs/matrix.hpp"

namespace cs {

// Structured test families. Everything is deterministic given the RNG
// state; entries are small integers or ratios of small integers so grids
// stay readable.

// The two 3x3 matrices parameterized by gamma (gamma != 0); the pair has
// the CS property exactly when gamma = 1.
MatrixPair gen_example1(const Scalar& gamma);

// A = A1 (+) O_k, B = O_{n-k} (+) B1 with nonsingular random blocks;
// AB = BA = O and the pair always has the CS property.
MatrixPair gen_block_abzero(std::size_t n, std::size_t k, std::mt19937& rng);

// Strictly upper triangular (nilpotent) A with an unconstrained random B.
MatrixPair gen_nilpotent(std::size_t n, std::mt19937& rng);

// Independent dense random pair; density is the probability an entry is
// nonzero.
MatrixPair gen_random(std::size_t n, std::mt19937& rng, double density);

// Symmetric pair with AB = BA = O: conjugate complementary diagonals by a
// rational orthogonal matrix (Cayley transform of a random skew matrix).
MatrixPair gen_normal_commuting(std::size_t n, std::mt19937& rng);

// Upper triangular A with strictly upper triangular B: I - sA - tB stays
// triangular, so the pair has the CS property with B nilpotent.
MatrixPair gen_triangular_cs(std::size_t n, std::mt19937& rng);

Matrix random_int_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng, long lo, long hi,
                         double density = 1.0);
Matrix random_nonsingular(std::size_t n, std::mt19937& rng, long lo, long hi);
Matrix random_symmetric(std::size_t n, std::mt19937& rng, long lo, long hi);
Matrix cayley_orthogonal(std::size_t n, std::mt19937& rng);
Matrix jordan_block(std::size_t n, const Scalar& lambda);

}  // namespace cs
