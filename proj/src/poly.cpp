#include "cs/poly.hpp"

#include <stdexcept>

namespace cs {

int poly_degree(const Poly& p) {
    for (std::size_t k = p.size(); k-- > 0;)
        if (!p[k].is_zero()) return static_cast<int>(k);
    return -1;
}

Poly poly_trim(Poly p) {
    int d = poly_degree(p);
    p.resize(static_cast<std::size_t>(d + 1));
    return p;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(Scalar(static_cast<long>(k)) * p[k]);
    return poly_trim(std::move(d));
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
    Scalar acc;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return poly_trim(std::move(c));
}

Poly poly_monic(const Poly& p) {
    Poly q = poly_trim(p);
    if (q.empty()) return q;
    Scalar lead = q.back();
    for (auto& c : q) c /= lead;
    return q;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    Poly rem = poly_trim(a);
    Poly div = poly_trim(b);
    if (div.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    int db = poly_degree(div);
    if (poly_degree(rem) < db) return {Poly{}, rem};
    Poly quot(rem.size() - div.size() + 1);
    for (int k = poly_degree(rem); k >= db; --k) {
        std::size_t ku = static_cast<std::size_t>(k);
        if (rem[ku].is_zero()) continue;
        Scalar f = rem[ku] / div.back();
        quot[ku - static_cast<std::size_t>(db)] = f;
        for (std::size_t j = 0; j < div.size(); ++j)
            rem[ku - static_cast<std::size_t>(db) + j] -= f * div[j];
    }
    return {poly_trim(std::move(quot)), poly_trim(std::move(rem))};
}

namespace {

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly c = a;
    if (b.size() > c.size()) c.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) c[k] -= b[k];
    return poly_trim(std::move(c));
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = poly_trim(a), y = poly_trim(b);
    while (!y.empty()) {
        Poly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return poly_monic(x);
}

std::vector<std::pair<Poly, int>> poly_squarefree(const Poly& p) {
    Poly f = poly_monic(p);
    std::vector<std::pair<Poly, int>> out;
    if (poly_degree(f) < 1) return out;
    Poly fp = poly_derivative(f);
    Poly a = poly_gcd(f, fp);
    if (poly_degree(a) == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    Poly b = poly_divmod(f, a).first;   // product of distinct factors
    Poly c = poly_divmod(fp, a).first;
    Poly d = poly_trim(poly_sub(c, poly_derivative(b)));
    int i = 1;
    while (poly_degree(b) > 0) {
        Poly q = poly_gcd(b, d);
        if (poly_degree(q) > 0) out.emplace_back(q, i);
        b = poly_divmod(b, q).first;
        c = poly_divmod(d, q).first;
        d = poly_trim(poly_sub(c, poly_derivative(b)));
        ++i;
    }
    return out;
}

}  // namespace cs
