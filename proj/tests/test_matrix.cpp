#include <doctest.h>

#include <random>

#include "cs/generators.hpp"
#include "cs/matrix.hpp"
#include "oracles.hpp"

using cs::Matrix;
using cs::Scalar;

TEST_CASE("det matches the paper's structured matrices") {
    CHECK(cs::det(Matrix::identity(3)) == Scalar(1));
    // row-substituted matrices with known determinants
    CHECK(cs::det(Matrix::from_ints({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}})) == Scalar(1));
    CHECK(cs::det(Matrix::from_ints({{1, 0, 0}, {0, 0, 1}, {0, 0, 1}})) == Scalar(0));
}

TEST_CASE("det equals permutation expansion on random matrices") {
    std::mt19937 rng(101);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            Matrix m = cs::random_int_matrix(n, n, rng, -4, 4);
            CHECK(cs::det(m) == oracle::leibniz_det(m));
        }
    }
}

TEST_CASE("det is multiplicative") {
    std::mt19937 rng(102);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 12; ++trial) {
            Matrix x = cs::random_int_matrix(n, n, rng, -3, 3);
            Matrix y = cs::random_int_matrix(n, n, rng, -3, 3);
            CHECK(cs::det(x * y) == cs::det(x) * cs::det(y));
        }
    }
}

TEST_CASE("det handles rational and gaussian entries") {
    std::mt19937 rng(103);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 6);
    for (int trial = 0; trial < 15; ++trial) {
        Matrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                m(i, j) = Scalar::rational(num(rng), den(rng)) +
                          Scalar::i() * Scalar::rational(num(rng), den(rng));
        CHECK(cs::det(m) == oracle::leibniz_det(m));
    }
}

TEST_CASE("rank basics and a stacked nilpotent pair") {
    CHECK(cs::rank(Matrix::zero(3)) == 0);
    Matrix a = Matrix::from_ints({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(cs::rank(a) == 2);
    Matrix b = Matrix::from_ints({{1, 0, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(cs::rank(cs::vstack(a, b)) == 3);
}

TEST_CASE("rank agrees with minor scanning and nullity") {
    std::mt19937 rng(104);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            // products of thin factors give interesting ranks
            std::size_t inner = 1 + (static_cast<std::size_t>(trial) % n);
            Matrix m = cs::random_int_matrix(n, inner, rng, -3, 3) *
                       cs::random_int_matrix(inner, n, rng, -3, 3);
            std::size_t r = cs::rank(m);
            CHECK(r == oracle::rank_by_minor_scan(m));
            CHECK(r + cs::null_space(m).size() == n);
        }
    }
}

TEST_CASE("null space basics") {
    CHECK(cs::null_space(Matrix::identity(2)).empty());
    CHECK(cs::null_space(Matrix::zero(2)).size() == 2);
    auto basis = cs::null_space(Matrix::from_ints({{0, 1}, {0, 0}}));
    REQUIRE(basis.size() == 1);
    CHECK(!basis[0][0].is_zero());
    CHECK(basis[0][1].is_zero());
}

TEST_CASE("null space vectors are annihilated exactly") {
    std::mt19937 rng(105);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        Matrix m = cs::random_int_matrix(n, 2, rng, -3, 3) * cs::random_int_matrix(2, n, rng, -3, 3);
        for (const auto& v : cs::null_space(m)) {
            for (const auto& entry : cs::mat_vec(m, v)) CHECK(entry.is_zero());
        }
    }
}

TEST_CASE("charpoly on fixed cases") {
    CHECK(cs::charpoly(Matrix::zero(2)) == std::vector<Scalar>{1, 0, 0});
    // nilpotent Jordan matrix: lambda^3
    Matrix a = Matrix::from_ints({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(cs::charpoly(a) == std::vector<Scalar>{1, 0, 0, 0});
    // the gamma = 1 partner matrix: lambda^3 - lambda
    Matrix b = Matrix::from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
    CHECK(cs::charpoly(b) == std::vector<Scalar>{1, 0, -1, 0});
}

TEST_CASE("charpoly agrees with interpolation oracle, det and trace") {
    std::mt19937 rng(106);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            Matrix m = cs::random_int_matrix(n, n, rng, -4, 4);
            auto cp = cs::charpoly(m);
            CHECK(cp == oracle::charpoly_by_interpolation(m));
            Scalar sign(n % 2 == 0 ? 1 : -1);
            CHECK(cp[n] == sign * cs::det(m));
            CHECK(cp[1] == -m.trace());
        }
    }
}

TEST_CASE("solve and inverse are exact") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        Matrix a = cs::random_nonsingular(n, rng, -4, 4);
        CHECK(a * cs::inverse(a) == Matrix::identity(n));
        Matrix rhs = cs::random_int_matrix(n, 2, rng, -5, 5);
        CHECK(a * cs::solve(a, rhs) == rhs);
    }
    CHECK_THROWS_AS(cs::solve(Matrix::zero(2), Matrix::identity(2)), std::domain_error);
}

TEST_CASE("repeat runs give identical results") {
    std::mt19937 rng(108);
    Matrix m = cs::random_int_matrix(4, 4, rng, -9, 9);
    CHECK(cs::det(m) == cs::det(m));
    CHECK(cs::charpoly(m) == cs::charpoly(m));
}
