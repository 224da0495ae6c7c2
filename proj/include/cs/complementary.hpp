#pragma once

#include <string>
#include <vector>

#include "cs/matrix.hpp"
#include "cs/report.hpp"

namespace cs {

// Set of row indices (0-based here; reports print them 1-based) whose rows
// of A get substituted by the corresponding rows of B.
struct SubstitutionPattern {
    std::vector<std::size_t> indices;  // strictly increasing
};

// A with each row in the pattern replaced by the matching row of B.
Matrix structured_matrix(const Matrix& a, const Matrix& b, const SubstitutionPattern& pattern);

struct ComplementaryReport {
    std::size_t r = 0;
    std::vector<SubstitutionPattern> witnesses;  // patterns with nonsingular N
    Scalar theta;                                // sum of det N over all size-r patterns
    bool is_complementary = false;
};

enum class SubstitutionAxis { Rows, Columns };

// Enumerates all C(n,r) substitution patterns of exactly size r, in
// lexicographic order. The column-oriented variant transposes both inputs
// first and runs the same row path.
ComplementaryReport is_r_complementary(const Matrix& a, const Matrix& b, std::size_t r,
                                       SubstitutionAxis axis = SubstitutionAxis::Rows);

struct Prop4Direction {
    std::size_t r = 0;
    Scalar theta;
    bool complementary = false;
    std::vector<std::string> unmet;  // names of failed hypotheses
    bool applicable = false;
    bool conclusion = false;  // m_A(0) + m_B(0) == n, meaningful when applicable
    Flag flag = Flag::NotApplicable;
};

struct Prop4Report {
    std::size_t mult_zero_a = 0, mult_zero_b = 0;
    Prop4Direction forward;  // A,B [n - m_B(0)]-complementary
    Prop4Direction mirror;   // B,A [n - m_A(0)]-complementary
};

// Hypotheses: both matrices singular, the pair [n - m_B(0)]-complementary
// with theta != 0, and the CS equation satisfied; conclusion is
// m_A(0) + m_B(0) = n. The mirror direction swaps the roles of A and B.
Prop4Report check_prop4(const Matrix& a, const Matrix& b);

}  // namespace cs
