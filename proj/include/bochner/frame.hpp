// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

namespace bochner {

// Symmetric bilinear form / endomorphism in the working basis. Symmetry and
// g-symmetry are checked by the operations that require them.
using SymBilinear = Eigen::MatrixXd;
using Endomorphism = Eigen::MatrixXd;

// Pointwise model of (T_pM, g, J): real 2n-dimensional tangent space with a
// Riemannian metric g and a compatible complex structure J, both given as
// 2n x 2n matrices in the working basis.
struct HermitianFrame {
    int n = 0;  // complex dimension; real dimension is 2n
    Eigen::MatrixXd g;
    Eigen::MatrixXd J;

    int dim() const { return 2 * n; }

    // Standard frame: g = Identity, J = [[0,-I],[I,0]].
    static HermitianFrame standard(int n);

    double inner(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
        return x.dot(g * y);
    }
    double norm(const Eigen::VectorXd& x) const;

    // Max residual over the three frame invariants: J^2 = -Id, J^T g J = g,
    // g symmetric. Positive-definiteness is checked separately.
    double invariant_residual() const;

    // Throws FrameInvalid if any invariant residual exceeds tol or g is not
    // positive definite.
    void validate(double tol = 1e-12) const;

    // g-orthonormal basis as columns (Gram-Schmidt over the coordinate basis).
    Eigen::MatrixXd orthonormal_basis() const;

    // g-orthonormal basis of the form {e_1..e_n, Je_1..Je_n}, columns ordered
    // e's first. Optionally randomized by a seed for basis-independence tests.
    Eigen::MatrixXd j_adapted_basis(std::uint64_t seed = 0) const;
};

}  // namespace bochner
