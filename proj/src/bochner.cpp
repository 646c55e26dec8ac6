// SPDX-License-Identifier: Apache-2.0
#include "bochner/bochner.hpp"

#include <Eigen/LU>
#include <cmath>

#include "bochner/chart.hpp"
#include "bochner/errors.hpp"
#include "bochner/jacobi.hpp"
#include "bochner/rng.hpp"
#include "bochner/tensor_ops.hpp"

namespace bochner {

double CurvatureBundle::consistency_residual() const {
    const double scale = std::max(R.max_abs(), 1e-300);
    const SymBilinear S2 = contract_ricci(R, frame);
    double r = (S - S2).cwiseAbs().maxCoeff() / scale;
    r = std::max(r, (S_endo - frame.g.inverse() * S).cwiseAbs().maxCoeff() / scale);
    r = std::max(r, std::abs(tau - scalar_curvature(S, frame)) / scale);
    return r;
}

CurvatureBundle make_bundle(const HermitianFrame& frame, const Tensor4& R) {
    CurvatureBundle b;
    b.frame = frame;
    b.R = R;
    b.S = contract_ricci(R, frame);
    b.S_endo = frame.g.inverse() * b.S;
    b.tau = scalar_curvature(b.S, frame);
    return b;
}

BochnerTensor bochner_from_curvature(const CurvatureBundle& bundle) {
    if (bundle.R.max_abs() > 0 && bundle.consistency_residual() > 1e-10)
        throw InconsistentBundle("bundle fields are mutually inconsistent");
    const int n = bundle.frame.n;
    const int d = 2 * n;
    const Eigen::MatrixXd& g = bundle.frame.g;
    const Eigen::MatrixXd& J = bundle.frame.J;
    const SymBilinear& S = bundle.S;
    const double c1 = 1.0 / (2.0 * (n + 2));
    const double c2 = bundle.tau / (4.0 * (n + 1) * (n + 2));

    // Bilinear helpers: (J^T S)_{ab} = S(J e_a, e_b), same for g.
    const Eigen::MatrixXd SJ = J.transpose() * S;
    const Eigen::MatrixXd gJ = J.transpose() * g;

    BochnerTensor out;
    out.frame = bundle.frame;
    out.B = Tensor4(n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    double ricci_part =
                        S(j, k) * g(i, l) - S(i, k) * g(j, l) +
                        g(j, k) * S(i, l) - g(i, k) * S(j, l) +
                        SJ(j, k) * gJ(i, l) - SJ(i, k) * gJ(j, l) +
                        gJ(j, k) * SJ(i, l) - gJ(i, k) * SJ(j, l) -
                        2.0 * SJ(i, j) * gJ(k, l) - 2.0 * gJ(i, j) * SJ(k, l);
                    double scalar_part =
                        g(j, k) * g(i, l) - g(i, k) * g(j, l) +
                        gJ(j, k) * gJ(i, l) - gJ(i, k) * gJ(j, l) -
                        2.0 * gJ(i, j) * gJ(k, l);
                    out.B(i, j, k, l) =
                        bundle.R(i, j, k, l) - c1 * ricci_part + c2 * scalar_part;
                }
    return out;
}

double trace_identity_residual(const BochnerTensor& B, const Eigen::VectorXd& x,
                               std::uint64_t basis_seed) {
    const HermitianFrame& frame = B.frame;
    const int n = frame.n;
    const Eigen::MatrixXd E = frame.j_adapted_basis(basis_seed);
    const int d = 2 * n;
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < n; ++i) {
        // B(e_i, Je_i)x as a vector: raise the covector B(e_i, Je_i, x, .).
        const Eigen::VectorXd cov = B.B.eval3(E.col(i), E.col(n + i), x);
        acc += frame.g.inverse() * cov;
    }
    const double scale = B.B.max_abs() * std::max(frame.norm(x), 1e-300);
    if (scale == 0.0) return 0.0;
    return frame.norm(acc) / scale;
}

double bochner_idempotence_residual(const BochnerTensor& B) {
    const double scale = B.B.max_abs();
    if (scale == 0.0) return 0.0;
    const CurvatureBundle again = make_bundle(B.frame, B.B);
    const BochnerTensor once_more = bochner_from_curvature(again);
    return (once_more.B - B.B).max_abs() / scale;
}

CurvatureBundle random_kaehler_curvature(std::uint64_t seed, int n) {
    if (n < 2 || n > 4)
        throw UnsupportedDimension("random curvature supports n in {2, 3, 4}");
    for (int attempt = 0; attempt < 10; ++attempt) {
        const std::uint64_t mixed =
            seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(attempt);
        const KaehlerChart chart = catalog_chart("random-poly", n, mixed, 4);
        const ChartPoint origin = Eigen::VectorXd::Zero(2 * n);
        const MetricJet jet = chart.jet_at(origin, false);
        const Eigen::MatrixXd G = realify_metric(jet.H);
        SymmetricEigen e = jacobi_symmetric(G);
        if (e.values.minCoeff() < 0.5) continue;  // margin too thin, redraw
        const HermitianFrame frame = metric_at(chart, origin);
        const Tensor4 R = curvature_at(chart, origin);
        return make_bundle(frame, R);
    }
    throw DegenerateDraw("no positive-definite draw in 10 attempts");
}

bool is_bochner_flat(const BochnerTensor& B, double tol, double reference_scale) {
    return B.B.max_abs() <= tol * std::max(reference_scale, 1.0);
}

}  // namespace bochner
