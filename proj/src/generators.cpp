#include "cs/generators.hpp"

#include <stdexcept>

namespace cs {

MatrixPair gen_example1(const Scalar& gamma) {
    if (gamma.is_zero()) throw std::invalid_argument("example1: gamma must be nonzero");
    Scalar one(1);
    Matrix a(3, 3);
    a(1, 1) = one - gamma;
    a(1, 2) = one;
    a(2, 2) = one - gamma;
    Matrix b(3, 3);
    b(0, 1) = gamma;
    b(1, 0) = one / gamma;
    return {a, b};
}

Matrix random_int_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng, long lo, long hi,
                         double density) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            long v = dist(rng);
            if (density < 1.0 && keep(rng) >= density) v = 0;
            m(i, j) = Scalar(v);
        }
    return m;
}

Matrix random_nonsingular(std::size_t n, std::mt19937& rng, long lo, long hi) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix m = random_int_matrix(n, n, rng, lo, hi);
        if (!det(m).is_zero()) return m;
    }
    throw std::runtime_error("random_nonsingular: no nonsingular draw in 1000 attempts");
}

Matrix random_symmetric(std::size_t n, std::mt19937& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar v(dist(rng));
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

Matrix cayley_orthogonal(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<long> dist(-3, 3);
    Matrix skew(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar v(dist(rng));
            skew(i, j) = v;
            skew(j, i) = -v;
        }
    // (I - S)(I + S)^{-1}; I + S is always invertible for real skew S
    Matrix eye = Matrix::identity(n);
    return (eye - skew) * inverse(eye + skew);
}

Matrix jordan_block(std::size_t n, const Scalar& lambda) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = lambda;
        if (i + 1 < n) m(i, i + 1) = Scalar(1);
    }
    return m;
}

MatrixPair gen_block_abzero(std::size_t n, std::size_t k, std::mt19937& rng) {
    if (n < 2 || k < 1 || k >= n)
        throw std::invalid_argument("block-abzero: need n >= 2 and 1 <= k < n");
    std::size_t m = n - k;
    Matrix a1 = random_nonsingular(m, rng, -3, 3);
    Matrix b1 = random_nonsingular(k, rng, -3, 3);
    Matrix a(n, n), b(n, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = a1(i, j);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) b(m + i, m + j) = b1(i, j);
    return {a, b};
}

MatrixPair gen_nilpotent(std::size_t n, std::mt19937& rng) {
    if (n < 1) throw std::invalid_argument("nilpotent: need n >= 1");
    std::uniform_int_distribution<long> dist(-3, 3);
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a(i, j) = Scalar(dist(rng));
    return {a, random_int_matrix(n, n, rng, -3, 3)};
}

MatrixPair gen_random(std::size_t n, std::mt19937& rng, double density) {
    if (n < 1) throw std::invalid_argument("random: need n >= 1");
    if (density <= 0.0 || density > 1.0)
        throw std::invalid_argument("random: density must be in (0, 1]");
    return {random_int_matrix(n, n, rng, -3, 3, density),
            random_int_matrix(n, n, rng, -3, 3, density)};
}

MatrixPair gen_normal_commuting(std::size_t n, std::mt19937& rng) {
    if (n < 1) throw std::invalid_argument("normal-commuting: need n >= 1");
    std::uniform_int_distribution<long> value(1, 4);
    std::uniform_int_distribution<int> side(0, 1);
    std::uniform_int_distribution<int> sign(0, 1);
    Matrix da(n, n), db(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar v(sign(rng) ? value(rng) : -value(rng));
        if (side(rng))
            da(i, i) = v;
        else
            db(i, i) = v;
    }
    Matrix q = cayley_orthogonal(n, rng);
    Matrix qt = q.transpose();
    return {q * da * qt, q * db * qt};
}

MatrixPair gen_triangular_cs(std::size_t n, std::mt19937& rng) {
    if (n < 1) throw std::invalid_argument("triangular: need n >= 1");
    std::uniform_int_distribution<long> dist(-3, 3);
    Matrix a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            a(i, j) = Scalar(dist(rng));
            if (j > i) b(i, j) = Scalar(dist(rng));
        }
    return {a, b};
}

}  // namespace cs
