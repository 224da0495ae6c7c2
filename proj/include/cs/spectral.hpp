#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cs/criterion.hpp"
#include "cs/poly.hpp"
#include "cs/report.hpp"

namespace cs {

// Everything decidable over Q(i) (ranks, multiplicities at zero,
// nilpotency, semisimplicity of 0, subspace sums at 0) is computed
// exactly; only nonzero eigenvalues and their eigenspaces go through
// floating point, with these knobs.
struct Tolerances {
    double cluster = 1e-8;  // relative root clustering
    double rank = 1e-9;     // relative singular-value threshold
    double match = 1e-7;    // eigenvalue multiset matching
};

struct Eigenvalue {
    std::complex<double> value;
    std::size_t multiplicity = 0;
    bool exact_zero = false;
};

struct Spectrum {
    std::vector<Eigenvalue> eigenvalues;  // sorted by (re, im)
    std::vector<Scalar> source_charpoly;  // exact (1, c1, ..., cn)
};

// Roots with multiplicities of an exact polynomial (ascending
// coefficients). Multiplicities come from exact square-free decomposition,
// so repeated roots are located from well-conditioned simple-root factors;
// clustering at tol.cluster only merges numerically coincident roots of
// different factors.
std::vector<Eigenvalue> poly_roots(const Poly& ascending, const Tolerances& tol = {});

Spectrum spectrum(const Matrix& x, const Tolerances& tol = {});

// Trailing zero coefficients of the exact characteristic polynomial.
std::size_t mult_zero(const Matrix& x);

// rank(X) == rank(X^2), i.e. no Jordan chains at 0. Vacuously true for
// nonsingular X.
bool is_semisimple_zero(const Matrix& x);

bool is_nilpotent(const Matrix& x);

struct EigenspaceBasis {
    std::complex<double> eigenvalue;
    bool exact_zero = false;
    Eigen::MatrixXcd basis;                 // columns span E_X(lambda)
    std::vector<Vector> exact_basis;        // filled when exact_zero
    std::size_t order = 0;                  // power of (X - lambda I) used
};

// Generalized eigenspace null((X - lambda I)^n). For exact zero use
// gen_eigenspace_zero, which needs no tolerance.
EigenspaceBasis gen_eigenspace(const Matrix& x, std::complex<double> lambda, double tol);
EigenspaceBasis gen_eigenspace_zero(const Matrix& x);

// Jordan block sizes of x at lambda (descending), from the rank sequence
// of powers of (x - lambda I).
std::vector<std::size_t> jordan_block_sizes(const Eigen::MatrixXcd& x,
                                            std::complex<double> lambda, double tol_rank);

struct Sample {
    Scalar s, t;  // exact (dyadic) so matrices built from them stay exact
};

// Deterministic sample pairs with |s|,|t| in [1/2, 2], avoiding detectable
// eigenvalue collisions s*lambda = t*mu between nonzero spectra; when a
// collision cannot be avoided it is reported, not silently accepted.
std::vector<Sample> make_samples(const Matrix& a, const Matrix& b, std::size_t count,
                                 unsigned seed, const Tolerances& tol = {},
                                 bool* collision_warning = nullptr);

struct PairingReport {
    bool ok = false;
    int first_failing = -1;       // sample index, -1 when all match
    double worst_distance = 0.0;  // largest bottleneck over the samples
};

// Eigenvalue pairing check at each sample: spectrum(sA) u
// spectrum(tB) against spectrum(sA+tB) u {0,...,0}, matched by optimal
// (bottleneck) assignment with per-pair distance <= tol.
PairingReport pairing_check(const Matrix& a, const Matrix& b,
                            const std::vector<Sample>& samples, double tol);

struct Prop2Report {
    bool cs_holds = false;
    Flag cond_i = Flag::NotApplicable;    // m_A(0) + m_B(0) >= n
    Flag cond_ii = Flag::NotApplicable;   // A nonsingular => B nilpotent
    Flag cond_iii = Flag::NotApplicable;  // semisimple zeros => rank A + rank B <= n
};
Prop2Report check_prop2(const Matrix& a, const Matrix& b);

struct Prop3Report {
    bool applicable = false;
    std::string unmet;
    bool cond_cs = false;       // CS equation
    bool cond_sum = false;      // E_A(0) + E_B(0) = C^n
    bool cond_ab_zero = false;  // AB = O
    bool agree = false;         // the three conditions coincide
};
Prop3Report check_prop3(const Matrix& a, const Matrix& b);

struct Prop5Report {
    bool applicable = false;
    std::string unmet;
    bool cs_holds = false;
    bool chains_ok = false;              // bidiagonal chain action at all samples
    bool bside_containment_ok = false;   // derived E_B(mu) in E_A(0), reported not assumed
    std::string detail;                  // first failure, if any
};

// Eigenspace-containment pipeline: checks the hypotheses, then asserts
// CS and the chain action of I - sA - tB on Jordan chains of each nonzero
// eigenvalue at every sample.
Prop5Report check_prop5(const Matrix& a, const Matrix& b,
                        const std::vector<Sample>& samples, const Tolerances& tol = {});

struct NuFReport {
    bool applicable = false;
    std::string unmet;
    std::size_t nu = 0;            // n - (rank A + rank B)
    Eigen::MatrixXcd f;            // I_nu plus one bidiagonal block per chain
    std::size_t mult_one_in_f = 0; // multiplicity of eigenvalue 1 in F
    bool similar = false;          // rank-sequence fingerprint match
};

// Bidiagonal model matrix F and similarity check against I - sA - tB at
// one exact (s, t).
NuFReport nu_and_f(const Matrix& a, const Matrix& b, const Scalar& s, const Scalar& t,
                   const Tolerances& tol = {});

struct SpectralReport {
    std::size_t mult_zero_a = 0, mult_zero_b = 0;
    bool zero_eigenvalue_a = false, zero_eigenvalue_b = false;
    bool semisimple_zero_a = false, semisimple_zero_b = false;
    std::size_t rank_a = 0, rank_b = 0;
    std::optional<std::size_t> nu;
    bool pairing_ok = false;
    bool sample_collision_warning = false;
    std::map<std::string, Flag> prop_flags;
};

// Aggregates the spectral diagnostics and proposition checks for one pair.
SpectralReport spectral_report(const Matrix& a, const Matrix& b, const Tolerances& tol = {},
                               unsigned seed = 1);

Eigen::MatrixXcd to_eigen(const Matrix& m);

}  // namespace cs
