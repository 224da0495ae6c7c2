#pragma once

// Test-only oracles, kept independent of the library's elimination /
// Faddeev-LeVerrier paths: determinants by permutation expansion, rank by
// minor scanning, characteristic polynomials by Lagrange interpolation of
// det(x I - A) with self-contained polynomial arithmetic.

#include <algorithm>
#include <numeric>
#include <vector>

#include "cs/matrix.hpp"

namespace oracle {

inline cs::Scalar leibniz_det(const cs::Matrix& m) {
    std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    cs::Scalar total;
    do {
        // sign by inversion count
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        cs::Scalar term(inversions % 2 == 0 ? 1 : -1);
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

template <typename Visit>
inline void subsets_of_size(std::size_t n, std::size_t k, Visit&& visit) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        visit(idx);
        std::size_t i = k;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
}

// Largest k admitting a nonzero k x k minor (any rows, any columns).
inline std::size_t rank_by_minor_scan(const cs::Matrix& m) {
    std::size_t bound = std::min(m.rows(), m.cols());
    for (std::size_t k = bound; k >= 1; --k) {
        bool found = false;
        subsets_of_size(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            if (found) return;
            subsets_of_size(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                if (found) return;
                cs::Matrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
                if (!leibniz_det(sub).is_zero()) found = true;
            });
        });
        if (found) return k;
    }
    return 0;
}

// ascending-coefficient helpers local to the oracle
inline std::vector<cs::Scalar> o_mul(const std::vector<cs::Scalar>& a,
                                     const std::vector<cs::Scalar>& b) {
    std::vector<cs::Scalar> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Monic-order coefficients (1, c1, ..., cn) of det(x I - A) by Lagrange
// interpolation on the nodes 0..n.
inline std::vector<cs::Scalar> charpoly_by_interpolation(const cs::Matrix& a) {
    std::size_t n = a.rows();
    std::vector<cs::Scalar> acc(n + 1);  // ascending in x
    for (std::size_t node = 0; node <= n; ++node) {
        cs::Matrix shifted = cs::Matrix::identity(n);
        cs::Scalar x(static_cast<long>(node));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                shifted(i, j) = (i == j ? x : cs::Scalar(0)) - a(i, j);
        cs::Scalar value = leibniz_det(shifted);
        // Lagrange basis polynomial for this node
        std::vector<cs::Scalar> basis{cs::Scalar(1)};
        cs::Scalar denom(1);
        for (std::size_t other = 0; other <= n; ++other) {
            if (other == node) continue;
            basis = o_mul(basis, {cs::Scalar(-static_cast<long>(other)), cs::Scalar(1)});
            denom *= x - cs::Scalar(static_cast<long>(other));
        }
        for (std::size_t k = 0; k <= n; ++k) acc[k] += value * basis[k] / denom;
    }
    // ascending in x -> monic order (1, c1, ..., cn)
    std::vector<cs::Scalar> monic(acc.rbegin(), acc.rend());
    return monic;
}

}  // namespace oracle
