#include <doctest.h>

#include "cs/poly.hpp"

using cs::Poly;
using cs::Scalar;

TEST_CASE("poly divmod is exact") {
    // (x^2 - 1) = (x - 1)(x + 1)
    Poly a{-1, 0, 1};
    Poly b{-1, 1};
    auto [q, r] = cs::poly_divmod(a, b);
    CHECK(q == Poly{1, 1});
    CHECK(r.empty());
    // x^3 + 1 by x^2: quotient x, remainder 1
    auto [q2, r2] = cs::poly_divmod(Poly{1, 0, 0, 1}, Poly{0, 0, 1});
    CHECK(q2 == Poly{0, 1});
    CHECK(r2 == Poly{1});
}

TEST_CASE("poly gcd") {
    // gcd((x-1)^2 (x+2), (x-1)(x+3)) = x - 1
    Poly p = cs::poly_mul(cs::poly_mul(Poly{-1, 1}, Poly{-1, 1}), Poly{2, 1});
    Poly q = cs::poly_mul(Poly{-1, 1}, Poly{3, 1});
    CHECK(cs::poly_gcd(p, q) == Poly{-1, 1});
    CHECK(cs::poly_gcd(p, Poly{}) == cs::poly_monic(p));
}

TEST_CASE("square-free decomposition") {
    // x^3 - x^2 = (x - 1) x^2
    auto factors = cs::poly_squarefree(Poly{0, 0, -1, 1});
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].first == Poly{-1, 1});
    CHECK(factors[0].second == 1);
    CHECK(factors[1].first == Poly{0, 1});
    CHECK(factors[1].second == 2);

    // (x^2 + 1)^2 stays irreducible over the rationals
    Poly sq = cs::poly_mul(Poly{1, 0, 1}, Poly{1, 0, 1});
    auto f2 = cs::poly_squarefree(sq);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].first == Poly{1, 0, 1});
    CHECK(f2[0].second == 2);

    // square-free input comes back whole
    auto f3 = cs::poly_squarefree(Poly{-2, 1, 1});
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].second == 1);
}

TEST_CASE("square-free multiplicities reconstruct the polynomial") {
    // (x-1)^3 (x+2)^2 (x-3)
    Poly p{1};
    auto power = [&](Poly base, int e) {
        for (int i = 0; i < e; ++i) p = cs::poly_mul(p, base);
    };
    power(Poly{-1, 1}, 3);
    power(Poly{2, 1}, 2);
    power(Poly{-3, 1}, 1);
    Poly rebuilt{1};
    for (const auto& [factor, mult] : cs::poly_squarefree(p))
        for (int i = 0; i < mult; ++i) rebuilt = cs::poly_mul(rebuilt, factor);
    CHECK(rebuilt == cs::poly_monic(p));
}

TEST_CASE("poly eval and derivative") {
    Poly p{1, 2, 3};  // 1 + 2x + 3x^2
    CHECK(cs::poly_eval(p, Scalar(2)) == Scalar(17));
    CHECK(cs::poly_derivative(p) == Poly{2, 6});
}
