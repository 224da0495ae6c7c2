#include "cs/spectral.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cs {

Eigen::MatrixXcd to_eigen(const Matrix& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
    return out;
}

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using cd = std::complex<double>;

bool complex_less(const cd& a, const cd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

Eigen::JacobiSVD<MatrixXcd> svd_of(const MatrixXcd& m, bool want_v) {
    return Eigen::JacobiSVD<MatrixXcd>(m, want_v ? Eigen::ComputeFullV : 0);
}

int rank_svd(const MatrixXcd& m, double tol_rel) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto svd = svd_of(m, false);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double thresh = tol_rel * sv(0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++r;
    return r;
}

MatrixXcd nullspace_svd(const MatrixXcd& m, double tol_rel) {
    if (m.cols() == 0) return MatrixXcd(m.cols(), 0);
    auto svd = svd_of(m, true);
    const auto& sv = svd.singularValues();
    double thresh = (sv.size() > 0) ? tol_rel * sv(0) : 0.0;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++r;
    return svd.matrixV().rightCols(m.cols() - r);
}

MatrixXcd mat_power(const MatrixXcd& m, std::size_t k) {
    MatrixXcd acc = MatrixXcd::Identity(m.rows(), m.cols());
    for (std::size_t i = 0; i < k; ++i) acc = m * acc;
    return acc;
}

// Each column of u lies in span(w), to tolerance.
bool subspace_contained(const MatrixXcd& u, const MatrixXcd& w, double tol_rank) {
    int rw = rank_svd(w, tol_rank);
    for (int j = 0; j < u.cols(); ++j) {
        MatrixXcd aug(w.rows(), w.cols() + 1);
        if (w.cols() > 0) aug.leftCols(w.cols()) = w;
        aug.col(w.cols()) = u.col(j);
        if (rank_svd(aug, tol_rank) != rw) return false;
    }
    return true;
}

std::vector<cd> companion_roots(const Poly& monic) {
    int d = poly_degree(monic);
    std::vector<cd> roots;
    if (d < 1) return roots;
    if (d == 1) {
        // x + c0
        roots.push_back((-monic[0] / monic[1]).to_complex());
        return roots;
    }
    MatrixXcd comp = MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -(monic[static_cast<std::size_t>(i)] /
                                                   monic[static_cast<std::size_t>(d)])
                                                      .to_complex();
    Eigen::ComplexEigenSolver<MatrixXcd> es(comp, false);
    for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()(i));
    return roots;
}

std::vector<Eigenvalue> cluster_eigenvalues(std::vector<Eigenvalue> vals, double tol_cluster) {
    std::sort(vals.begin(), vals.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
        if (a.exact_zero != b.exact_zero) return a.exact_zero;
        return complex_less(a.value, b.value);
    });
    std::vector<Eigenvalue> out;
    for (const auto& ev : vals) {
        bool merged = false;
        for (auto& existing : out) {
            if (existing.exact_zero != ev.exact_zero) continue;
            double scale = std::max(1.0, std::abs(existing.value));
            if (std::abs(existing.value - ev.value) <= tol_cluster * scale) {
                existing.multiplicity += ev.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(ev);
    }
    std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
        return complex_less(a.value, b.value);
    });
    return out;
}

std::vector<cd> nonzero_values(const Spectrum& sp) {
    std::vector<cd> out;
    for (const auto& ev : sp.eigenvalues)
        if (!ev.exact_zero) out.push_back(ev.value);
    return out;
}

void require_pair(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("dimension mismatch: A and B must be square of equal size");
}

}  // namespace

std::vector<Eigenvalue> poly_roots(const Poly& ascending, const Tolerances& tol) {
    Poly p = poly_trim(ascending);
    std::vector<Eigenvalue> out;
    if (poly_degree(p) < 1) return out;
    // exact zero roots first: strip the power of x
    std::size_t m0 = 0;
    while (m0 < p.size() && p[m0].is_zero()) ++m0;
    if (m0 > 0) {
        out.push_back({cd(0.0, 0.0), m0, true});
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(m0));
    }
    for (const auto& [factor, mult] : poly_squarefree(p)) {
        for (const cd& root : companion_roots(factor))
            out.push_back({root, static_cast<std::size_t>(mult), false});
    }
    return cluster_eigenvalues(std::move(out), tol.cluster);
}

Spectrum spectrum(const Matrix& x, const Tolerances& tol) {
    Spectrum sp;
    sp.source_charpoly = charpoly(x);
    Poly delta(sp.source_charpoly.rbegin(), sp.source_charpoly.rend());
    sp.eigenvalues = poly_roots(delta, tol);
    std::size_t total = 0;
    for (const auto& ev : sp.eigenvalues) total += ev.multiplicity;
    if (total != x.rows()) throw std::logic_error("spectrum: multiplicities do not sum to n");
    return sp;
}

std::size_t mult_zero(const Matrix& x) {
    std::vector<Scalar> cp = charpoly(x);
    std::size_t m = 0;
    for (std::size_t k = cp.size(); k-- > 1 && cp[k].is_zero();) ++m;
    return m;
}

bool is_semisimple_zero(const Matrix& x) {
    if (!x.is_square()) throw std::invalid_argument("is_semisimple_zero: matrix not square");
    return rank(x) == rank(x * x);
}

bool is_nilpotent(const Matrix& x) {
    std::vector<Scalar> cp = charpoly(x);
    for (std::size_t k = 1; k < cp.size(); ++k)
        if (!cp[k].is_zero()) return false;
    return true;
}

EigenspaceBasis gen_eigenspace_zero(const Matrix& x) {
    if (!x.is_square()) throw std::invalid_argument("gen_eigenspace_zero: matrix not square");
    EigenspaceBasis e;
    e.eigenvalue = cd(0.0, 0.0);
    e.exact_zero = true;
    e.order = x.rows();
    e.exact_basis = null_space(x.pow(x.rows()));
    e.basis = to_eigen(columns_matrix(e.exact_basis, x.rows()));
    return e;
}

EigenspaceBasis gen_eigenspace(const Matrix& x, cd lambda, double tol) {
    if (lambda == cd(0.0, 0.0)) return gen_eigenspace_zero(x);
    if (tol <= 0) throw std::invalid_argument("gen_eigenspace: tol must be positive");
    EigenspaceBasis e;
    e.eigenvalue = lambda;
    e.order = x.rows();
    MatrixXcd shifted = to_eigen(x) - lambda * MatrixXcd::Identity(x.rows(), x.rows());
    e.basis = nullspace_svd(mat_power(shifted, x.rows()), tol);
    return e;
}

std::vector<std::size_t> jordan_block_sizes(const MatrixXcd& x, cd lambda, double tol_rank) {
    std::size_t n = static_cast<std::size_t>(x.rows());
    MatrixXcd shifted = x - lambda * MatrixXcd::Identity(x.rows(), x.rows());
    std::vector<std::size_t> ranks{n};  // rank of shifted^0
    MatrixXcd power = MatrixXcd::Identity(x.rows(), x.rows());
    for (std::size_t k = 1; k <= n; ++k) {
        power = shifted * power;
        ranks.push_back(static_cast<std::size_t>(rank_svd(power, tol_rank)));
        if (ranks[k] == ranks[k - 1]) break;
    }
    // blocks of size >= k number rank^{k-1} - rank^k
    std::vector<std::size_t> at_least;
    for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
    std::vector<std::size_t> sizes;
    for (std::size_t k = at_least.size(); k-- > 0;) {
        std::size_t next = (k + 1 < at_least.size()) ? at_least[k + 1] : 0;
        for (std::size_t c = 0; c < at_least[k] - next; ++c) sizes.push_back(k + 1);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

std::vector<Sample> make_samples(const Matrix& a, const Matrix& b, std::size_t count,
                                 unsigned seed, const Tolerances& tol, bool* collision_warning) {
    require_pair(a, b);
    if (collision_warning) *collision_warning = false;
    std::vector<cd> nza = nonzero_values(spectrum(a, tol));
    std::vector<cd> nzb = nonzero_values(spectrum(b, tol));
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> numer(8, 32);  // 16ths in [1/2, 2]
    std::uniform_int_distribution<int> coin(0, 1);
    auto draw = [&]() {
        long k = numer(rng);
        if (coin(rng)) k = -k;
        return Scalar::rational(k, 16);
    };
    std::vector<Sample> samples;
    while (samples.size() < count) {
        Sample cand;
        bool ok = false;
        for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
            cand = {draw(), draw()};
            cd s = cand.s.to_complex(), t = cand.t.to_complex();
            ok = true;
            for (const cd& la : nza)
                for (const cd& mu : nzb)
                    if (std::abs(s * la - t * mu) <= 1e-6 * std::max(1.0, std::abs(s * la)))
                        ok = false;
        }
        if (!ok && collision_warning) *collision_warning = true;
        samples.push_back(cand);
    }
    return samples;
}

namespace {

bool kuhn_augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj,
                  std::vector<int>& match_right, std::vector<bool>& used) {
    for (std::size_t v : adj[u]) {
        if (used[v]) continue;
        used[v] = true;
        if (match_right[v] < 0 ||
            kuhn_augment(static_cast<std::size_t>(match_right[v]), adj, match_right, used)) {
            match_right[v] = static_cast<int>(u);
            return true;
        }
    }
    return false;
}

bool perfect_matching_within(const std::vector<cd>& left, const std::vector<cd>& right,
                             double thresh) {
    std::size_t n = left.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(left[i] - right[j]) <= thresh) adj[i].push_back(j);
    std::vector<int> match_right(n, -1);
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<bool> used(n, false);
        if (!kuhn_augment(u, adj, match_right, used)) return false;
    }
    return true;
}

// Smallest threshold admitting a perfect matching (optimal bottleneck
// assignment); greedy nearest-neighbour matching is deliberately avoided.
double bottleneck_distance(const std::vector<cd>& left, const std::vector<cd>& right) {
    std::vector<double> cand;
    cand.reserve(left.size() * right.size());
    for (const cd& l : left)
        for (const cd& r : right) cand.push_back(std::abs(l - r));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::size_t lo = 0, hi = cand.size() - 1;
    if (perfect_matching_within(left, right, cand[lo])) return cand[lo];
    while (lo + 1 < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (perfect_matching_within(left, right, cand[mid]))
            hi = mid;
        else
            lo = mid;
    }
    return cand[hi];
}

std::vector<cd> scaled_spectrum_values(const Spectrum& sp, const cd& factor) {
    std::vector<cd> out;
    for (const auto& ev : sp.eigenvalues)
        for (std::size_t i = 0; i < ev.multiplicity; ++i)
            out.push_back(ev.exact_zero ? cd(0.0, 0.0) : factor * ev.value);
    return out;
}

}  // namespace

PairingReport pairing_check(const Matrix& a, const Matrix& b,
                            const std::vector<Sample>& samples, double tol) {
    require_pair(a, b);
    if (samples.empty()) throw std::invalid_argument("pairing_check: no samples");
    if (tol <= 0) throw std::invalid_argument("pairing_check: tol must be positive");
    std::size_t n = a.rows();
    Tolerances tols;
    Spectrum sa = spectrum(a, tols), sb = spectrum(b, tols);
    PairingReport rep;
    rep.ok = true;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const Sample& smp = samples[k];
        std::vector<cd> left = scaled_spectrum_values(sa, smp.s.to_complex());
        std::vector<cd> right_tail = scaled_spectrum_values(sb, smp.t.to_complex());
        left.insert(left.end(), right_tail.begin(), right_tail.end());

        Matrix combo = smp.s * a;
        combo += smp.t * b;
        std::vector<cd> right = scaled_spectrum_values(spectrum(combo, tols), cd(1.0, 0.0));
        right.insert(right.end(), n, cd(0.0, 0.0));

        double dist = bottleneck_distance(left, right);
        rep.worst_distance = std::max(rep.worst_distance, dist);
        if (dist > tol && rep.ok) {
            rep.ok = false;
            rep.first_failing = static_cast<int>(k);
        }
    }
    return rep;
}

Prop2Report check_prop2(const Matrix& a, const Matrix& b) {
    require_pair(a, b);
    std::size_t n = a.rows();
    Prop2Report rep;
    rep.cs_holds = cs_direct(a, b).holds;
    if (!rep.cs_holds) return rep;  // conditional necessities; nothing to assert
    rep.cond_i = (mult_zero(a) + mult_zero(b) >= n) ? Flag::Pass : Flag::Fail;
    if (mult_zero(a) == 0) rep.cond_ii = is_nilpotent(b) ? Flag::Pass : Flag::Fail;
    if (is_semisimple_zero(a) && is_semisimple_zero(b))
        rep.cond_iii = (rank(a) + rank(b) <= n) ? Flag::Pass : Flag::Fail;
    return rep;
}

namespace {

// Exact basis of E_X(0) for a matrix with semisimple zero (null(X) then).
Matrix zero_eigenspace_basis(const Matrix& x) {
    return columns_matrix(null_space(x), x.rows());
}

bool invariant_under(const Matrix& basis, const Matrix& op) {
    std::size_t r = rank(basis);
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        Vector v(basis.rows());
        for (std::size_t i = 0; i < basis.rows(); ++i) v[i] = basis(i, j);
        Matrix image = columns_matrix({mat_vec(op, v)}, basis.rows());
        if (rank(hstack(basis, image)) != r) return false;
    }
    return true;
}

}  // namespace

Prop3Report check_prop3(const Matrix& a, const Matrix& b) {
    require_pair(a, b);
    std::size_t n = a.rows();
    Prop3Report rep;
    if (!is_semisimple_zero(a)) {
        rep.unmet = "0 not semisimple for A";
        return rep;
    }
    if (!is_semisimple_zero(b)) {
        rep.unmet = "0 not semisimple for B";
        return rep;
    }
    Matrix ea0 = zero_eigenspace_basis(a);
    Matrix eb0 = zero_eigenspace_basis(b);
    if (!invariant_under(ea0, b)) {
        rep.unmet = "B E_A(0) not contained in E_A(0)";
        return rep;
    }
    rep.applicable = true;
    rep.cond_cs = cs_direct(a, b).holds;
    rep.cond_sum = (rank(hstack(ea0, eb0)) == n);
    rep.cond_ab_zero = (a * b == Matrix::zero(n));
    rep.agree = (rep.cond_cs == rep.cond_sum) && (rep.cond_sum == rep.cond_ab_zero);
    return rep;
}

namespace {

struct Prop5Hypotheses {
    bool ok = false;
    std::string unmet;
    Matrix ea0_exact, eb0_exact;  // exact zero-eigenspace bases (columns)
    std::vector<cd> nza, nzb;     // nonzero eigenvalues
};

Prop5Hypotheses prop5_hypotheses(const Matrix& a, const Matrix& b, const Tolerances& tol) {
    Prop5Hypotheses h;
    std::size_t n = a.rows();
    if (!is_semisimple_zero(a) || !is_semisimple_zero(b)) {
        h.unmet = "0 not semisimple for both matrices";
        return h;
    }
    h.ea0_exact = zero_eigenspace_basis(a);
    h.eb0_exact = zero_eigenspace_basis(b);
    if (rank(hstack(h.ea0_exact, h.eb0_exact)) != n) {
        h.unmet = "E_A(0) + E_B(0) != C^n";
        return h;
    }
    h.nza = nonzero_values(spectrum(a, tol));
    h.nzb = nonzero_values(spectrum(b, tol));
    MatrixXcd eb0 = to_eigen(h.eb0_exact);
    MatrixXcd ac = to_eigen(a);
    for (const cd& la : h.nza) {
        MatrixXcd shifted = ac - la * MatrixXcd::Identity(ac.rows(), ac.cols());
        MatrixXcd ea_lambda = nullspace_svd(mat_power(shifted, n), tol.rank);
        if (!subspace_contained(ea_lambda, eb0, tol.rank)) {
            h.unmet = "E_A(lambda) not contained in E_B(0)";
            return h;
        }
    }
    h.ok = true;
    return h;
}

// One maximal Jordan chain of x at lambda: columns v_1..v_d with
// (x - lambda) v_j = v_{j-1}, v_0 = 0.
MatrixXcd jordan_chain(const MatrixXcd& x, cd lambda, double tol_rank) {
    MatrixXcd shifted = x - lambda * MatrixXcd::Identity(x.rows(), x.cols());
    std::vector<std::size_t> sizes = jordan_block_sizes(x, lambda, tol_rank);
    if (sizes.empty()) return MatrixXcd(x.rows(), 0);
    std::size_t d = sizes.front();
    MatrixXcd nd = nullspace_svd(mat_power(shifted, d), tol_rank);
    MatrixXcd nprev = (d == 1) ? MatrixXcd(x.rows(), 0)
                               : nullspace_svd(mat_power(shifted, d - 1), tol_rank);
    // top-grade vector: the N_d column with the largest residual off N_{d-1}
    VectorXcd best = VectorXcd::Zero(x.rows());
    double best_norm = -1.0;
    for (int j = 0; j < nd.cols(); ++j) {
        VectorXcd u = nd.col(j);
        if (nprev.cols() > 0) u -= nprev * (nprev.adjoint() * u);
        if (u.norm() > best_norm) {
            best_norm = u.norm();
            best = u;
        }
    }
    best.normalize();
    MatrixXcd chain(x.rows(), d);
    chain.col(static_cast<int>(d) - 1) = best;
    for (std::size_t j = d - 1; j-- > 0;)
        chain.col(static_cast<int>(j)) = shifted * chain.col(static_cast<int>(j) + 1);
    return chain;
}

MatrixXcd bidiagonal_block(std::size_t size, cd diag, cd super) {
    MatrixXcd t = MatrixXcd::Zero(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        t(i, i) = diag;
        if (i + 1 < size) t(i, i + 1) = super;
    }
    return t;
}

// max |G X - X T| over entries, scaled
bool chain_action_ok(const MatrixXcd& g, const MatrixXcd& chain, const MatrixXcd& t,
                     double tol) {
    double scale = (1.0 + g.cwiseAbs().maxCoeff()) * (1.0 + chain.cwiseAbs().maxCoeff());
    return ((g * chain) - (chain * t)).cwiseAbs().maxCoeff() <= tol * scale;
}

}  // namespace

Prop5Report check_prop5(const Matrix& a, const Matrix& b,
                        const std::vector<Sample>& samples, const Tolerances& tol) {
    require_pair(a, b);
    Prop5Report rep;
    Prop5Hypotheses h = prop5_hypotheses(a, b, tol);
    if (!h.ok) {
        rep.unmet = h.unmet;
        return rep;
    }
    rep.applicable = true;
    rep.cs_holds = cs_direct(a, b).holds;

    MatrixXcd ac = to_eigen(a), bc = to_eigen(b);
    MatrixXcd ea0 = to_eigen(h.ea0_exact);
    std::size_t n = a.rows();

    // derived consequence, verified rather than assumed
    rep.bside_containment_ok = true;
    for (const cd& mu : h.nzb) {
        MatrixXcd shifted = bc - mu * MatrixXcd::Identity(bc.rows(), bc.cols());
        MatrixXcd eb_mu = nullspace_svd(mat_power(shifted, n), tol.rank);
        if (!subspace_contained(eb_mu, ea0, tol.rank)) {
            rep.bside_containment_ok = false;
            rep.detail = "E_B(mu) escaped E_A(0)";
            break;
        }
    }

    rep.chains_ok = true;
    MatrixXcd eye = MatrixXcd::Identity(ac.rows(), ac.cols());
    for (const Sample& smp : samples) {
        cd s = smp.s.to_complex(), t = smp.t.to_complex();
        MatrixXcd g = eye - s * ac - t * bc;
        for (const cd& la : h.nza) {
            MatrixXcd chain = jordan_chain(ac, la, tol.rank);
            if (chain.cols() == 0) continue;
            MatrixXcd tt = bidiagonal_block(static_cast<std::size_t>(chain.cols()),
                                            1.0 - s * la, -s);
            if (!chain_action_ok(g, chain, tt, tol.match)) {
                rep.chains_ok = false;
                rep.detail = "chain action failed for an eigenvalue of A";
            }
        }
        for (const cd& mu : h.nzb) {
            MatrixXcd chain = jordan_chain(bc, mu, tol.rank);
            if (chain.cols() == 0) continue;
            MatrixXcd tt = bidiagonal_block(static_cast<std::size_t>(chain.cols()),
                                            1.0 - t * mu, -t);
            if (!chain_action_ok(g, chain, tt, tol.match)) {
                rep.chains_ok = false;
                rep.detail = "chain action failed for an eigenvalue of B";
            }
        }
    }
    return rep;
}

NuFReport nu_and_f(const Matrix& a, const Matrix& b, const Scalar& s, const Scalar& t,
                   const Tolerances& tol) {
    require_pair(a, b);
    NuFReport rep;
    Prop5Hypotheses h = prop5_hypotheses(a, b, tol);
    if (!h.ok) {
        rep.unmet = h.unmet;
        return rep;
    }
    rep.applicable = true;
    std::size_t n = a.rows();
    rep.nu = n - (rank(a) + rank(b));

    MatrixXcd ac = to_eigen(a), bc = to_eigen(b);
    cd sc = s.to_complex(), tc = t.to_complex();
    std::vector<MatrixXcd> blocks;
    blocks.push_back(MatrixXcd::Identity(rep.nu, rep.nu));
    for (const cd& la : h.nza)
        for (std::size_t size : jordan_block_sizes(ac, la, tol.rank))
            blocks.push_back(bidiagonal_block(size, 1.0 - sc * la, -sc));
    for (const cd& mu : h.nzb)
        for (std::size_t size : jordan_block_sizes(bc, mu, tol.rank))
            blocks.push_back(bidiagonal_block(size, 1.0 - tc * mu, -tc));

    std::size_t total = 0;
    for (const auto& blk : blocks) total += static_cast<std::size_t>(blk.rows());
    if (total != n) throw std::logic_error("nu_and_f: model matrix dimension mismatch");
    rep.f = MatrixXcd::Zero(n, n);
    std::size_t offset = 0;
    for (const auto& blk : blocks) {
        std::size_t sz = static_cast<std::size_t>(blk.rows());
        rep.f.block(offset, offset, sz, sz) = blk;
        offset += sz;
    }

    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(rep.f(i, i) - cd(1.0, 0.0)) <= tol.cluster) ++rep.mult_one_in_f;

    // similarity by equal rank sequences at every eigenvalue of F
    Matrix lin = Matrix::identity(n);
    lin -= s * a;
    lin -= t * b;
    MatrixXcd g = to_eigen(lin);
    std::vector<cd> diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back(rep.f(i, i));
    std::sort(diag.begin(), diag.end(), complex_less);
    std::vector<cd> distinct;
    for (const cd& v : diag)
        if (distinct.empty() || std::abs(v - distinct.back()) > tol.cluster * std::max(1.0, std::abs(v)))
            distinct.push_back(v);
    rep.similar = true;
    for (const cd& phi : distinct) {
        MatrixXcd pf = MatrixXcd::Identity(n, n), pg = pf;
        MatrixXcd sf = rep.f - phi * MatrixXcd::Identity(n, n);
        MatrixXcd sg = g - phi * MatrixXcd::Identity(n, n);
        int prev_f = static_cast<int>(n), prev_g = static_cast<int>(n);
        for (std::size_t k = 1; k <= n; ++k) {
            pf = sf * pf;
            pg = sg * pg;
            int rf = rank_svd(pf, tol.rank);
            int rg = rank_svd(pg, tol.rank);
            if (rf != rg) {
                rep.similar = false;
                break;
            }
            if (rf == prev_f && rg == prev_g) break;
            prev_f = rf;
            prev_g = rg;
        }
        if (!rep.similar) break;
    }
    return rep;
}

SpectralReport spectral_report(const Matrix& a, const Matrix& b, const Tolerances& tol,
                               unsigned seed) {
    require_pair(a, b);
    SpectralReport rep;
    rep.mult_zero_a = mult_zero(a);
    rep.mult_zero_b = mult_zero(b);
    rep.zero_eigenvalue_a = rep.mult_zero_a > 0;
    rep.zero_eigenvalue_b = rep.mult_zero_b > 0;
    rep.semisimple_zero_a = is_semisimple_zero(a);
    rep.semisimple_zero_b = is_semisimple_zero(b);
    rep.rank_a = rank(a);
    rep.rank_b = rank(b);

    std::vector<Sample> samples = make_samples(a, b, 5, seed, tol, &rep.sample_collision_warning);
    PairingReport pairing = pairing_check(a, b, samples, tol.match);
    rep.pairing_ok = pairing.ok;
    rep.prop_flags["prop1.pairing"] = pairing.ok ? Flag::Pass : Flag::Fail;

    Prop2Report p2 = check_prop2(a, b);
    rep.prop_flags["prop2.I"] = p2.cond_i;
    rep.prop_flags["prop2.II"] = p2.cond_ii;
    rep.prop_flags["prop2.III"] = p2.cond_iii;

    Prop3Report p3 = check_prop3(a, b);
    rep.prop_flags["prop3.equivalence"] =
        p3.applicable ? (p3.agree ? Flag::Pass : Flag::Fail) : Flag::NotApplicable;

    Prop5Report p5 = check_prop5(a, b, samples, tol);
    if (p5.applicable) {
        rep.prop_flags["prop5.chains"] = p5.chains_ok ? Flag::Pass : Flag::Fail;
        NuFReport nf = nu_and_f(a, b, samples.front().s, samples.front().t, tol);
        rep.nu = nf.nu;
        rep.prop_flags["remark2.similarity"] = nf.similar ? Flag::Pass : Flag::Fail;
    } else {
        rep.prop_flags["prop5.chains"] = Flag::NotApplicable;
        rep.prop_flags["remark2.similarity"] = Flag::NotApplicable;
    }
    return rep;
}

}  // namespace cs
