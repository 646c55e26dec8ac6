// SPDX-License-Identifier: Apache-2.0
#include "bochner/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bochner/errors.hpp"

namespace bochner {

namespace {

double offdiag_frobenius(const Eigen::MatrixXd& A) {
    double s = 0;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (i != j) s += A(i, j) * A(i, j);
    return std::sqrt(s);
}

void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
    for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-12) {
            if (v[i] < 0) v = -v;
            return;
        }
    }
}

}  // namespace

SymmetricEigen jacobi_symmetric(Eigen::MatrixXd A, int max_sweeps) {
    const int d = static_cast<int>(A.rows());
    Eigen::MatrixXd V = Eigen::MatrixXd::Identity(d, d);
    const double scale = std::max(A.cwiseAbs().maxCoeff(), 1e-300);
    const double tol = 1e-13 * scale;

    for (int sweep = 0; sweep < max_sweeps && offdiag_frobenius(A) > tol; ++sweep) {
        for (int p = 0; p < d; ++p) {
            for (int q = p + 1; q < d; ++q) {
                if (std::abs(A(p, q)) <= 1e-300) continue;
                const double theta = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                Eigen::MatrixXd G = Eigen::MatrixXd::Identity(d, d);
                G(p, p) = c; G(q, q) = c; G(p, q) = s; G(q, p) = -s;
                A = G.transpose() * A * G;
                A(p, q) = A(q, p) = 0.0;
                V = V * G;
            }
        }
    }

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return A(a, a) > A(b, b); });

    SymmetricEigen out;
    out.values.resize(d);
    out.vectors.resize(d, d);
    for (int i = 0; i < d; ++i) {
        out.values[i] = A(order[i], order[i]);
        out.vectors.col(i) = V.col(order[i]);
        fix_sign(out.vectors.col(i));
    }
    return out;
}

Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& G) {
    SymmetricEigen e = jacobi_symmetric(G);
    if (e.values.minCoeff() <= 0) throw NotPositiveDefinite("matrix is not SPD");
    return e.vectors * e.values.cwiseSqrt().asDiagonal() * e.vectors.transpose();
}

Eigen::MatrixXd spd_inv_sqrt(const Eigen::MatrixXd& G) {
    SymmetricEigen e = jacobi_symmetric(G);
    if (e.values.minCoeff() <= 0) throw NotPositiveDefinite("matrix is not SPD");
    return e.vectors * e.values.cwiseSqrt().cwiseInverse().asDiagonal() * e.vectors.transpose();
}

std::vector<EigenPair> jacobi_eigen(const Endomorphism& A, const HermitianFrame& frame) {
    frame.validate();
    const double normA = std::max(A.cwiseAbs().maxCoeff(), 1e-300);
    const Eigen::MatrixXd GA = frame.g * A;
    if ((GA - GA.transpose()).cwiseAbs().maxCoeff() > 1e-8 * normA)
        throw NotSymmetric("endomorphism is not g-symmetric");

    const Eigen::MatrixXd Gh = spd_sqrt(frame.g);
    const Eigen::MatrixXd Ghi = spd_inv_sqrt(frame.g);
    Eigen::MatrixXd M = Gh * A * Ghi;
    M = 0.5 * (M + M.transpose());  // strip the residual asymmetry
    SymmetricEigen e = jacobi_symmetric(M);

    std::vector<EigenPair> out;
    out.reserve(e.values.size());
    for (int i = 0; i < e.values.size(); ++i) {
        Eigen::VectorXd v = Ghi * e.vectors.col(i);
        v /= frame.norm(v);
        fix_sign(v);
        out.push_back({e.values[i], v});
    }
    return out;
}

JAdaptedEigen j_adapted_eigenbasis(const Endomorphism& A, const HermitianFrame& frame) {
    const int n = frame.n;
    const double normA = std::max(A.cwiseAbs().maxCoeff(), 1e-300);
    if ((A * frame.J - frame.J * A).cwiseAbs().maxCoeff() > 1e-8 * normA)
        throw NotJCommuting("endomorphism does not commute with J");
    std::vector<EigenPair> pairs = jacobi_eigen(A, frame);  // throws NotSymmetric

    // Group into eigenvalue clusters; J-commutation makes each cluster
    // J-invariant and even-dimensional.
    const double gap = 1e-7 * normA;
    JAdaptedEigen out;
    size_t i = 0;
    while (i < pairs.size()) {
        size_t j = i + 1;
        while (j < pairs.size() && std::abs(pairs[j].lambda - pairs[j - 1].lambda) <= gap) ++j;
        std::vector<Eigen::VectorXd> cluster;
        for (size_t k = i; k < j; ++k) cluster.push_back(pairs[k].v);
        double lambda = 0;
        for (size_t k = i; k < j; ++k) lambda += pairs[k].lambda;
        lambda /= static_cast<double>(j - i);

        // Within the cluster: pick a unit e, remove span{e, Je}, repeat.
        while (!cluster.empty()) {
            Eigen::VectorXd e = cluster.front();
            double ne = frame.norm(e);
            if (ne < 1e-8) { cluster.erase(cluster.begin()); continue; }
            e /= ne;
            Eigen::VectorXd je = frame.J * e;
            je /= frame.norm(je);
            std::vector<Eigen::VectorXd> rest;
            for (size_t k = 1; k < cluster.size(); ++k) {
                Eigen::VectorXd v = cluster[k];
                v -= frame.inner(e, v) * e;
                v -= frame.inner(je, v) * je;
                for (const auto& r : rest) v -= frame.inner(r, v) * r;
                double nv = frame.norm(v);
                if (nv > 1e-8) rest.push_back(v / nv);
            }
            out.lambda.push_back(lambda);
            out.e.push_back(e);
            cluster = std::move(rest);
        }
        i = j;
    }
    if (static_cast<int>(out.e.size()) != n)
        throw NotJCommuting("eigenvalue clusters are not J-paired");
    return out;
}

}  // namespace bochner
