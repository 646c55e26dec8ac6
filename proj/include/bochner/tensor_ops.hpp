// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bochner/frame.hpp"
#include "bochner/tensor4.hpp"

namespace bochner {

// Residuals of the algebraic curvature identities, each relative to the
// max-abs norm of the tensor (all zero for the zero tensor).
struct SymmetryResiduals {
    double skew12 = 0;       // T(x,y,z,w) = -T(y,x,z,w)
    double skew34 = 0;       // T(x,y,z,w) = -T(x,y,w,z)
    double pair = 0;         // T(x,y,z,w) = T(z,w,x,y)
    double bianchi = 0;      // cyclic sum over the first three slots
    double j_last = 0;       // T(x,y,Jz,Jw) = T(x,y,z,w)
    double j_first = 0;      // T(Jx,Jy,z,w) = T(x,y,z,w)

    double max() const;
    bool within(double tol) const { return max() <= tol; }
};

SymmetryResiduals curvature_symmetry_residuals(const Tensor4& T, const HermitianFrame& frame);

// Ricci contraction S(y,z) = sum_a R(E_a, y, z, E_a) over a g-orthonormal
// basis; equals the g^{-1} trace over slots (1,4), so the result is
// basis-independent.
SymBilinear contract_ricci(const Tensor4& R, const HermitianFrame& frame);

// tau = trace of S against g^{-1}.
double scalar_curvature(const SymBilinear& S, const HermitianFrame& frame);

// (F*T)(x,y,z,w) = T(Fx, Fy, Fz, Fw).
Tensor4 pullback4(const Tensor4& T, const Eigen::MatrixXd& F);

// (F*g)(u,v) = g(Fu, Fv).
SymBilinear pullback_metric(const SymBilinear& g, const Eigen::MatrixXd& F);

// Largest singular value of a general square matrix.
double operator_norm(const Eigen::MatrixXd& F);

}  // namespace bochner
