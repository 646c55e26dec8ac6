// SPDX-License-Identifier: Apache-2.0
#include "bochner/frame.hpp"

#include <cmath>

#include "bochner/errors.hpp"
#include "bochner/jacobi.hpp"
#include "bochner/rng.hpp"

namespace bochner {

HermitianFrame HermitianFrame::standard(int n) {
    HermitianFrame f;
    f.n = n;
    f.g = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    f.J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    f.J.topRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    f.J.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    return f;
}

double HermitianFrame::norm(const Eigen::VectorXd& x) const {
    return std::sqrt(std::max(0.0, inner(x, x)));
}

double HermitianFrame::invariant_residual() const {
    const int d = dim();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d, d);
    double r = (J * J + I).cwiseAbs().maxCoeff();
    r = std::max(r, (J.transpose() * g * J - g).cwiseAbs().maxCoeff());
    r = std::max(r, (g - g.transpose()).cwiseAbs().maxCoeff());
    return r;
}

void HermitianFrame::validate(double tol) const {
    if (n <= 0 || g.rows() != dim() || g.cols() != dim() || J.rows() != dim() || J.cols() != dim())
        throw FrameInvalid("frame matrices have wrong shape");
    const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    if (invariant_residual() > tol * scale)
        throw FrameInvalid("frame invariants violated (J^2 = -I, J^T g J = g, g symmetric)");
    SymmetricEigen eg = jacobi_symmetric(g);
    if (eg.values.minCoeff() <= 0.0)
        throw FrameInvalid("metric is not positive definite");
}

Eigen::MatrixXd HermitianFrame::orthonormal_basis() const {
    const int d = dim();
    Eigen::MatrixXd E(d, d);
    int col = 0;
    for (int i = 0; i < d && col < d; ++i) {
        Eigen::VectorXd v = Eigen::VectorXd::Unit(d, i);
        for (int j = 0; j < col; ++j) v -= inner(E.col(j), v) * E.col(j);
        double nv = norm(v);
        if (nv < 1e-10) continue;
        E.col(col++) = v / nv;
    }
    if (col != d) throw FrameInvalid("metric is degenerate");
    return E;
}

Eigen::MatrixXd HermitianFrame::j_adapted_basis(std::uint64_t seed) const {
    const int d = dim();
    Eigen::MatrixXd E(d, d);
    std::vector<Eigen::VectorXd> candidates;
    if (seed == 0) {
        for (int i = 0; i < d; ++i) candidates.push_back(Eigen::VectorXd::Unit(d, i));
    } else {
        Rng rng(seed);
        for (int i = 0; i < 2 * d; ++i) candidates.push_back(rng.unit_vector(d));
    }
    // Gram-Schmidt with J-pairing: each accepted e brings Je along with it.
    int pairs = 0;
    for (const auto& cand : candidates) {
        if (pairs == n) break;
        Eigen::VectorXd v = cand;
        for (int j = 0; j < pairs; ++j) {
            v -= inner(E.col(j), v) * E.col(j);
            v -= inner(E.col(n + j), v) * E.col(n + j);
        }
        double nv = norm(v);
        if (nv < 1e-8) continue;
        v /= nv;
        Eigen::VectorXd jv = J * v;
        // g(Jv, v) = 0 automatically; renormalize against metric roundoff.
        jv /= norm(jv);
        E.col(pairs) = v;
        E.col(n + pairs) = jv;
        ++pairs;
    }
    if (pairs != n) throw FrameInvalid("failed to build a J-adapted basis");
    return E;
}

}  // namespace bochner
