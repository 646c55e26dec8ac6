// SPDX-License-Identifier: Apache-2.0
#include "bochner/tensor_ops.hpp"

#include <Eigen/LU>
#include <cmath>

#include "bochner/errors.hpp"
#include "bochner/jacobi.hpp"

namespace bochner {

double SymmetryResiduals::max() const {
    double m = skew12;
    m = std::max(m, skew34);
    m = std::max(m, pair);
    m = std::max(m, bianchi);
    m = std::max(m, j_last);
    m = std::max(m, j_first);
    return m;
}

SymmetryResiduals curvature_symmetry_residuals(const Tensor4& T, const HermitianFrame& frame) {
    const int d = T.dim();
    const Eigen::MatrixXd& J = frame.J;
    SymmetryResiduals r;
    const double scale = T.max_abs();
    if (scale == 0.0) return r;

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const double t = T(i, j, k, l);
                    // Skew residuals measure the symmetric-part defect.
                    r.skew12 = std::max(r.skew12, 0.5 * std::abs(t + T(j, i, k, l)));
                    r.skew34 = std::max(r.skew34, 0.5 * std::abs(t + T(i, j, l, k)));
                    r.pair = std::max(r.pair, std::abs(t - T(k, l, i, j)));
                    r.bianchi = std::max(
                        r.bianchi, std::abs(t + T(j, k, i, l) + T(k, i, j, l)));
                }

    // J-invariance: contract J into slot pairs.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    double tjl = 0, tjf = 0;
                    for (int a = 0; a < d; ++a)
                        for (int b = 0; b < d; ++b) {
                            if (J(a, k) != 0.0 && J(b, l) != 0.0)
                                tjl += J(a, k) * J(b, l) * T(i, j, a, b);
                            if (J(a, i) != 0.0 && J(b, j) != 0.0)
                                tjf += J(a, i) * J(b, j) * T(a, b, k, l);
                        }
                    r.j_last = std::max(r.j_last, std::abs(tjl - T(i, j, k, l)));
                    r.j_first = std::max(r.j_first, std::abs(tjf - T(i, j, k, l)));
                }

    r.skew12 /= scale; r.skew34 /= scale; r.pair /= scale;
    r.bianchi /= scale; r.j_last /= scale; r.j_first /= scale;
    return r;
}

SymBilinear contract_ricci(const Tensor4& R, const HermitianFrame& frame) {
    frame.validate();
    const double scale = R.max_abs();
    if (scale > 0 && !curvature_symmetry_residuals(R, frame).within(1e-8))
        throw FrameInvalid("tensor does not satisfy curvature symmetries");
    const int d = R.dim();
    const Eigen::MatrixXd Ginv = frame.g.inverse();
    // sum_a R(E_a, y, z, E_a) over a g-orthonormal basis equals the g^{-1}
    // contraction of slots (1,4).
    SymBilinear S = Eigen::MatrixXd::Zero(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            double s = 0;
            for (int i = 0; i < d; ++i)
                for (int l = 0; l < d; ++l) s += Ginv(i, l) * R(i, j, k, l);
            S(j, k) = s;
        }
    S = 0.5 * (S + S.transpose());
    return S;
}

double scalar_curvature(const SymBilinear& S, const HermitianFrame& frame) {
    frame.validate();
    if ((S - S.transpose()).cwiseAbs().maxCoeff() >
        1e-10 * std::max(1.0, S.cwiseAbs().maxCoeff()))
        throw NotSymmetric("Ricci form is not symmetric");
    return (frame.g.inverse() * S).trace();
}

Tensor4 pullback4(const Tensor4& T, const Eigen::MatrixXd& F) {
    const int d = T.dim();
    if (F.rows() != d || F.cols() != d)
        throw DimensionMismatch("pullback matrix has wrong shape");
    // Contract one slot at a time; O(d^5) instead of O(d^8).
    Tensor4 cur = T;
    for (int slot = 0; slot < 4; ++slot) {
        Tensor4 next(T.complex_dim());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    for (int l = 0; l < d; ++l) {
                        double s = 0;
                        for (int a = 0; a < d; ++a) {
                            switch (slot) {
                                case 0: s += F(a, i) * cur(a, j, k, l); break;
                                case 1: s += F(a, j) * cur(i, a, k, l); break;
                                case 2: s += F(a, k) * cur(i, j, a, l); break;
                                default: s += F(a, l) * cur(i, j, k, a); break;
                            }
                        }
                        next(i, j, k, l) = s;
                    }
        cur = std::move(next);
    }
    return cur;
}

SymBilinear pullback_metric(const SymBilinear& g, const Eigen::MatrixXd& F) {
    if (F.rows() != g.rows() || F.cols() != g.cols())
        throw DimensionMismatch("pullback matrix has wrong shape");
    return F.transpose() * g * F;
}

double operator_norm(const Eigen::MatrixXd& F) {
    SymmetricEigen e = jacobi_symmetric(F.transpose() * F);
    return std::sqrt(std::max(0.0, e.values.maxCoeff()));
}

}  // namespace bochner
