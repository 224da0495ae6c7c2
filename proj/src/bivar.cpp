#include "cs/bivar.hpp"

#include <algorithm>
#include <stdexcept>

namespace cs {

namespace {

void require_pair(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("dimension mismatch: A and B must be square of equal size");
}

// Visits all k-subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(const_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

}  // namespace

Scalar evaluate(const Matrix& a, const Matrix& b, const Scalar& s, const Scalar& t) {
    require_pair(a, b);
    Matrix m = Matrix::identity(a.rows());
    m -= s * a;
    m -= t * b;
    return det(m);
}

BivarPoly coeff_grid_interp(const Matrix& a, const Matrix& b) {
    require_pair(a, b);
    std::size_t n = a.rows();
    std::size_t m = n + 1;
    Matrix values(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            values(i, j) = evaluate(a, b, Scalar(static_cast<long>(i)), Scalar(static_cast<long>(j)));
    // values = V * M * V^T with V(i,p) = i^p; two one-dimensional solves.
    Matrix vand(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        Scalar node(static_cast<long>(i));
        Scalar power(1);
        for (std::size_t p = 0; p < m; ++p) {
            vand(i, p) = power;
            power *= node;
        }
    }
    Matrix left = solve(vand, values);              // M * V^T
    Matrix grid_t = solve(vand, left.transpose());  // (M)^T
    BivarPoly g(n);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) g.at(p, q) = grid_t(q, p);
    return g;
}

Scalar mixed_minor(const Matrix& a, const Matrix& b,
                   const std::vector<std::size_t>& rows_a,
                   const std::vector<std::size_t>& rows_b) {
    require_pair(a, b);
    std::size_t n = a.rows();
    std::vector<std::size_t> all = rows_a;
    all.insert(all.end(), rows_b.begin(), rows_b.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i] >= n) throw std::invalid_argument("mixed_minor: index out of range");
        if (i > 0 && all[i] == all[i - 1])
            throw std::invalid_argument("mixed_minor: overlapping index sets");
    }
    std::size_t k = all.size();
    Matrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        bool from_a = std::find(rows_a.begin(), rows_a.end(), all[i]) != rows_a.end();
        const Matrix& src = from_a ? a : b;
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = src(all[i], all[j]);
    }
    return det(sub);
}

BivarPoly coeff_grid_minors(const Matrix& a, const Matrix& b) {
    require_pair(a, b);
    std::size_t n = a.rows();
    BivarPoly g(n);
    g.at(0, 0) = Scalar(1);
    // m_pq = (-1)^{p+q} sum over all splits of a (p+q)-subset into p A-rows
    // and q B-rows; entries past the degree bound p+q > n stay zero.
    for (std::size_t size = 1; size <= n; ++size) {
        for_each_subset(n, size, [&](const std::vector<std::size_t>& subset) {
            for (std::size_t p = 0; p <= size; ++p) {
                std::size_t q = size - p;
                Scalar sum;
                for_each_subset(size, p, [&](const std::vector<std::size_t>& pick) {
                    std::vector<std::size_t> rows_a, rows_b;
                    std::vector<bool> in_a(size, false);
                    for (std::size_t i : pick) in_a[i] = true;
                    for (std::size_t i = 0; i < size; ++i)
                        (in_a[i] ? rows_a : rows_b).push_back(subset[i]);
                    sum += mixed_minor(a, b, rows_a, rows_b);
                });
                if ((p + q) % 2 != 0) sum = -sum;
                g.at(p, q) += sum;
            }
        });
    }
    return g;
}

std::vector<Scalar> univariate_coeffs(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("univariate_coeffs: matrix not square");
    return charpoly(a);
}

Scalar principal_minor_sum(const Matrix& x, std::size_t order) {
    if (!x.is_square()) throw std::invalid_argument("principal_minor_sum: matrix not square");
    std::size_t n = x.rows();
    if (order == 0) return Scalar(1);
    if (order > n) return Scalar(0);
    Scalar sum;
    for_each_subset(n, order, [&](const std::vector<std::size_t>& subset) {
        Matrix sub(order, order);
        for (std::size_t i = 0; i < order; ++i)
            for (std::size_t j = 0; j < order; ++j) sub(i, j) = x(subset[i], subset[j]);
        sum += det(sub);
    });
    return sum;
}

Scalar grid_eval(const BivarPoly& g, const Scalar& s, const Scalar& t) {
    Scalar acc;
    Scalar sp(1);
    for (std::size_t p = 0; p <= g.n; ++p) {
        Scalar tq(1);
        for (std::size_t q = 0; q <= g.n; ++q) {
            acc += g.at(p, q) * sp * tq;
            tq *= t;
        }
        sp *= s;
    }
    return acc;
}

Matrix grid_matrix(const BivarPoly& g) {
    Matrix m(g.side(), g.side());
    for (std::size_t p = 0; p <= g.n; ++p)
        for (std::size_t q = 0; q <= g.n; ++q) m(p, q) = g.at(p, q);
    return m;
}

}  // namespace cs
