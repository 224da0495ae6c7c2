#include "cs/complementary.hpp"

#include <stdexcept>

#include "cs/criterion.hpp"
#include "cs/spectral.hpp"

namespace cs {

Matrix structured_matrix(const Matrix& a, const Matrix& b, const SubstitutionPattern& pattern) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("dimension mismatch: A and B must be square of equal size");
    std::size_t n = a.rows();
    for (std::size_t i = 0; i < pattern.indices.size(); ++i) {
        if (pattern.indices[i] >= n)
            throw std::invalid_argument("structured_matrix: index out of range");
        if (i > 0 && pattern.indices[i] <= pattern.indices[i - 1])
            throw std::invalid_argument("structured_matrix: indices must be strictly increasing");
    }
    Matrix m = a;
    for (std::size_t i : pattern.indices)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = b(i, j);
    return m;
}

ComplementaryReport is_r_complementary(const Matrix& a, const Matrix& b, std::size_t r,
                                       SubstitutionAxis axis) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("dimension mismatch: A and B must be square of equal size");
    if (axis == SubstitutionAxis::Columns)
        return is_r_complementary(a.transpose(), b.transpose(), r, SubstitutionAxis::Rows);
    std::size_t n = a.rows();
    if (r > n) throw std::invalid_argument("is_r_complementary: r out of range");
    ComplementaryReport rep;
    rep.r = r;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        SubstitutionPattern pat{idx};
        Scalar d = det(structured_matrix(a, b, pat));
        rep.theta += d;
        if (!d.is_zero()) rep.witnesses.push_back(pat);
        // next lexicographic r-combination of {0..n-1}
        std::size_t i = r;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] + (r - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    rep.is_complementary = !rep.witnesses.empty();
    return rep;
}

namespace {

Prop4Direction run_direction(const Matrix& first, const Matrix& second,
                             std::size_t mult_zero_first, std::size_t mult_zero_second,
                             bool cs_holds) {
    Prop4Direction dir;
    std::size_t n = first.rows();
    if (mult_zero_first == 0) dir.unmet.push_back("first matrix nonsingular");
    if (mult_zero_second == 0) dir.unmet.push_back("second matrix nonsingular");
    dir.r = n - mult_zero_second;
    ComplementaryReport comp = is_r_complementary(first, second, dir.r);
    dir.theta = comp.theta;
    dir.complementary = comp.is_complementary;
    if (!comp.is_complementary) dir.unmet.push_back("not r-complementary");
    if (comp.theta.is_zero()) dir.unmet.push_back("theta = 0");
    if (!cs_holds) dir.unmet.push_back("CS equation fails");
    dir.applicable = dir.unmet.empty();
    if (dir.applicable) {
        dir.conclusion = (mult_zero_first + mult_zero_second == n);
        dir.flag = dir.conclusion ? Flag::Pass : Flag::Fail;
    }
    return dir;
}

}  // namespace

Prop4Report check_prop4(const Matrix& a, const Matrix& b) {
    Prop4Report rep;
    rep.mult_zero_a = mult_zero(a);
    rep.mult_zero_b = mult_zero(b);
    bool cs_holds = cs_direct(a, b).holds;
    rep.forward = run_direction(a, b, rep.mult_zero_a, rep.mult_zero_b, cs_holds);
    rep.mirror = run_direction(b, a, rep.mult_zero_b, rep.mult_zero_a, cs_holds);
    return rep;
}

}  // namespace cs
