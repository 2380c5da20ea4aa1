/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "bosonspec/multimode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bosonspec {

Eigen::MatrixXcd commutator_matrix_nd(const MultiModeForm& form) {
    const int n = form.n_modes();
    Eigen::MatrixXcd m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = form.a_matrix;
    m.topRightCorner(n, n) = form.b_plus_matrix;
    m.bottomLeftCorner(n, n) = -form.b_minus_matrix;
    m.bottomRightCorner(n, n) = -form.a_matrix.transpose();
    return m;
}

Eigen::MatrixXcd pairing_form(int n_modes) {
    const int n = n_modes;
    Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = -Eigen::MatrixXcd::Identity(n, n);
    j.bottomLeftCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
    return j;
}

namespace {

int svd_rank(const Eigen::MatrixXcd& m, double threshold) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > threshold) ++rank;
    }
    return rank;
}

struct Cluster {
    cplx center;
    std::vector<int> members;
};

std::vector<Cluster> cluster_eigenvalues(const Eigen::VectorXcd& w, double tol) {
    std::vector<Cluster> out;
    for (int i = 0; i < w.size(); ++i) {
        bool placed = false;
        for (Cluster& c : out) {
            if (std::abs(w(i) - c.center) <= tol) {
                c.members.push_back(i);
                c.center = (c.center * static_cast<double>(c.members.size() - 1) + w(i)) /
                           static_cast<double>(c.members.size());
                placed = true;
                break;
            }
        }
        if (!placed) out.push_back(Cluster{w(i), {i}});
    }
    return out;
}

} // namespace

JordanInfo detect_jordan(const Eigen::MatrixXcd& m, double tol) {
    const int dim = static_cast<int>(m.rows());
    const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    const auto clusters = cluster_eigenvalues(es.eigenvalues(), tol * scale * 10.0);

    JordanInfo info;
    for (const Cluster& c : clusters) {
        JordanCluster jc;
        jc.eigenvalue = c.center;
        jc.algebraic = static_cast<int>(c.members.size());
        const Eigen::MatrixXcd shifted =
            m - c.center * Eigen::MatrixXcd::Identity(dim, dim);
        // ranks of successive powers give the number of blocks of size >= k
        std::vector<int> ranks{dim};
        Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(dim, dim);
        for (int k = 1; k <= jc.algebraic; ++k) {
            power = power * shifted;
            ranks.push_back(svd_rank(power, tol * scale * std::pow(scale, k - 1)));
        }
        jc.geometric = dim - ranks[1];
        for (int k = 1; k <= jc.algebraic; ++k) {
            const int at_least_k = ranks[k - 1] - ranks[k];
            const int at_least_k1 = (k < jc.algebraic) ? ranks[k] - ranks[k + 1] : 0;
            for (int b = 0; b < at_least_k - at_least_k1; ++b) jc.block_sizes.push_back(k);
        }
        std::sort(jc.block_sizes.rbegin(), jc.block_sizes.rend());
        if (!jc.block_sizes.empty()) {
            info.largest_block = std::max(info.largest_block, jc.block_sizes.front());
        }
        if (jc.geometric < jc.algebraic) info.diagonalizable = false;
        info.clusters.push_back(std::move(jc));
    }
    return info;
}

namespace {

// Splits a lambda = 0 eigenspace into J-conjugate column pairs.
void symplectic_pairs_zero(Eigen::MatrixXcd basis, const Eigen::MatrixXcd& j,
                           std::vector<Eigen::VectorXcd>& p_cols,
                           std::vector<Eigen::VectorXcd>& q_cols) {
    std::vector<Eigen::VectorXcd> pool;
    for (int i = 0; i < basis.cols(); ++i) pool.push_back(basis.col(i));
    while (pool.size() >= 2) {
        Eigen::VectorXcd z1 = pool.front();
        pool.erase(pool.begin());
        // partner with the largest pairing against z1
        std::size_t best = 0;
        double best_mag = 0.0;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const double mag = std::abs((z1.transpose() * j * pool[i])(0, 0));
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
            }
        }
        if (best_mag < 1e-10 * std::max(z1.norm(), 1.0)) {
            throw NonDiagonalizableError(
                "eigen_pairs: zero cluster is J-degenerate (defective form)");
        }
        Eigen::VectorXcd z2 = pool[best] / (z1.transpose() * j * pool[best])(0, 0);
        pool.erase(pool.begin() + best);
        for (Eigen::VectorXcd& z : pool) {
            const cplx c1 = (z1.transpose() * j * z)(0, 0);
            const cplx c2 = (z2.transpose() * j * z)(0, 0);
            z = z - c1 * z2 + c2 * z1;
        }
        p_cols.push_back(z1);
        q_cols.push_back(z2);
    }
    if (!pool.empty()) {
        throw NonDiagonalizableError("eigen_pairs: odd-dimensional zero cluster");
    }
}

} // namespace

EigenPairs eigen_pairs(const Eigen::MatrixXcd& m, double tol) {
    const int dim = static_cast<int>(m.rows());
    const int n = dim / 2;
    const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
    const Eigen::MatrixXcd j = pairing_form(n);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
    if (es.info() != Eigen::Success) {
        throw AccuracyError("eigen_pairs: eigensolver failed");
    }
    const Eigen::VectorXcd w = es.eigenvalues();
    const Eigen::MatrixXcd x = es.eigenvectors();

    const double zero_tol = tol * scale * 10.0;
    std::vector<int> pos, neg, zero;
    for (int i = 0; i < dim; ++i) {
        if (std::abs(w(i)) <= zero_tol) {
            zero.push_back(i);
        } else if (w(i).real() > zero_tol ||
                   (std::abs(w(i).real()) <= zero_tol && w(i).imag() > 0.0)) {
            pos.push_back(i);
        } else {
            neg.push_back(i);
        }
    }
    if (pos.size() != neg.size() || pos.size() + zero.size() / 2 != static_cast<std::size_t>(n)) {
        throw NonDiagonalizableError("eigen_pairs: spectrum does not split into ± pairs");
    }
    std::sort(pos.begin(), pos.end(), [&](int a, int b) {
        if (w(a).real() != w(b).real()) return w(a).real() < w(b).real();
        return w(a).imag() < w(b).imag();
    });

    std::vector<Eigen::VectorXcd> p_cols, q_cols;
    std::vector<cplx> lambdas;
    std::vector<bool> used(neg.size(), false);
    for (int ip : pos) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < neg.size(); ++k) {
            if (used[k]) continue;
            const double d = std::abs(w(neg[k]) + w(ip));
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(k);
            }
        }
        if (best < 0 || best_d > 1e-6 * std::max(scale, 1.0)) {
            throw NonDiagonalizableError("eigen_pairs: unmatched eigenvalue pair");
        }
        used[best] = true;
        lambdas.push_back(w(ip));
        p_cols.push_back(x.col(ip));
        q_cols.push_back(x.col(neg[best]));
    }
    if (!zero.empty()) {
        Eigen::MatrixXcd basis(dim, static_cast<int>(zero.size()));
        for (std::size_t k = 0; k < zero.size(); ++k) basis.col(static_cast<int>(k)) = x.col(zero[k]);
        const std::size_t before = p_cols.size();
        symplectic_pairs_zero(basis, j, p_cols, q_cols);
        for (std::size_t k = before; k < p_cols.size(); ++k) lambdas.push_back(cplx(0.0, 0.0));
    }

    EigenPairs out;
    out.lambdas = Eigen::Map<Eigen::VectorXcd>(lambdas.data(), static_cast<int>(lambdas.size()));
    out.p.resize(dim, n);
    out.q.resize(dim, n);
    for (int i = 0; i < n; ++i) {
        out.p.col(i) = p_cols[i];
        out.q.col(i) = q_cols[i];
    }
    // Enforce QᵀJP = 1 exactly; mixes only within degenerate clusters.
    const Eigen::MatrixXcd g = out.q.transpose() * j * out.p;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(g);
    if (!lu.isInvertible()) {
        throw NonDiagonalizableError("eigen_pairs: singular pairing matrix");
    }
    out.p = out.p * lu.inverse();
    return out;
}

Eigen::MatrixXcd SymplecticW::assembled() const {
    const int n = static_cast<int>(u.rows());
    Eigen::MatrixXcd w(2 * n, 2 * n);
    w.topLeftCorner(n, n) = u;
    w.topRightCorner(n, n) = v;
    w.bottomLeftCorner(n, n) = vbar_star;
    w.bottomRightCorner(n, n) = ubar_star;
    return w;
}

Eigen::MatrixXcd SymplecticW::inverse() const {
    const int n = static_cast<int>(u.rows());
    Eigen::MatrixXcd winv(2 * n, 2 * n);
    winv.topLeftCorner(n, n) = ubar_star.transpose();
    winv.topRightCorner(n, n) = -v.transpose();
    winv.bottomLeftCorner(n, n) = -vbar_star.transpose();
    winv.bottomRightCorner(n, n) = u.transpose();
    return winv;
}

std::array<double, 4> SymplecticW::constraint_residuals() const {
    const int n = static_cast<int>(u.rows());
    const Eigen::MatrixXcd j = pairing_form(n);
    const Eigen::MatrixXcd w = assembled();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd ubar = ubar_star.conjugate();
    const Eigen::MatrixXcd vbar = vbar_star.conjugate();
    return {
        (w.transpose() * j * w - j).cwiseAbs().maxCoeff(),
        (u * ubar_star.transpose() - v * vbar_star.transpose() - id).cwiseAbs().maxCoeff(),
        (v * u.transpose() - u * v.transpose()).cwiseAbs().maxCoeff(),
        (vbar * ubar.transpose() - ubar * vbar.transpose()).cwiseAbs().maxCoeff(),
    };
}

SymplecticW build_w(const EigenPairs& pairs) {
    const int dim = static_cast<int>(pairs.p.rows());
    const int n = dim / 2;
    // W⁻¹ = [P | Q] with columns Z_i = (Ū*, -V̄*)ᵢᵀ and Z_ī = (-V, U)ᵢᵀ.
    SymplecticW w;
    w.ubar_star = pairs.p.topRows(n).transpose();
    w.vbar_star = -pairs.p.bottomRows(n).transpose();
    w.v = -pairs.q.topRows(n).transpose();
    w.u = pairs.q.bottomRows(n).transpose();
    return w;
}

VacuumReport vacuum_existence(const SymplecticW& w) {
    VacuumReport rep;
    const int n = static_cast<int>(w.u.rows());
    const double scale = std::max({w.u.cwiseAbs().maxCoeff(), w.v.cwiseAbs().maxCoeff(), 1e-300});

    Eigen::FullPivLU<Eigen::MatrixXcd> lu_u(w.u);
    lu_u.setThreshold(1e-10);
    if (!lu_u.isInvertible()) {
        rep.u_singular = true;
    } else {
        const Eigen::MatrixXcd k = lu_u.solve(w.v);  // U⁻¹V, symmetric
        rep.symmetry_residual = std::max(
            rep.symmetry_residual,
            (k - k.transpose()).cwiseAbs().maxCoeff() / std::max(k.cwiseAbs().maxCoeff(), 1.0));
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k);
        rep.sigma = svd.singularValues();
        rep.b_vacuum_exists = (n == 0) || rep.sigma.maxCoeff() < 1.0;
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu_ub(w.ubar_star);
    lu_ub.setThreshold(1e-10);
    if (!lu_ub.isInvertible()) {
        rep.ubar_singular = true;
    } else {
        // Ū⁻¹V̄ = conj((Ū*)⁻¹ V̄*): same singular values as the conjugate.
        const Eigen::MatrixXcd k = lu_ub.solve(w.vbar_star);
        rep.symmetry_residual = std::max(
            rep.symmetry_residual,
            (k - k.transpose()).cwiseAbs().maxCoeff() / std::max(k.cwiseAbs().maxCoeff(), 1.0));
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k);
        rep.sigma_bar = svd.singularValues();
        rep.bbar_vacuum_exists = (n == 0) || rep.sigma_bar.maxCoeff() < 1.0;
    }
    (void)scale;
    return rep;
}

NormalModeDecomposition decompose(const MultiModeForm& form, double tol) {
    const Eigen::MatrixXcd m = commutator_matrix_nd(form);
    const int n = form.n_modes();
    NormalModeDecomposition out;
    out.jordan = detect_jordan(m, std::max(tol, 1e-9));
    if (!out.jordan.diagonalizable) {
        out.diagonalizable = false;
        return out;
    }
    const EigenPairs pairs = eigen_pairs(m, tol);
    out.lambdas = pairs.lambdas;
    out.w = build_w(pairs);
    out.diagonalizable = true;

    const Eigen::MatrixXcd w = out.w.assembled();
    const Eigen::MatrixXcd winv = out.w.inverse();
    Eigen::MatrixXcd hp = w * m * winv;    // diag(lambda, -lambda)
    hp.bottomRows(n) = -hp.bottomRows(n);  // 𝓗' = M (W M𝓗 W⁻¹)
    double offdiag = 0.0, diag = 0.0;
    for (int r = 0; r < 2 * n; ++r) {
        for (int c = 0; c < 2 * n; ++c) {
            if (r == c) continue;
            offdiag = std::max(offdiag, std::abs(hp(r, c)));
        }
    }
    for (int i = 0; i < n; ++i) {
        diag = std::max(diag, std::abs(hp(i, i) - pairs.lambdas(i)));
        diag = std::max(diag, std::abs(hp(n + i, n + i) - pairs.lambdas(i)));
    }
    out.offdiag_residual = offdiag;
    out.diag_residual = diag;
    out.vacuum = vacuum_existence(out.w);
    return out;
}

} // namespace bosonspec
