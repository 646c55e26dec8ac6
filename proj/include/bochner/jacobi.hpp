// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "bochner/frame.hpp"

namespace bochner {

struct EigenPair {
    double lambda;
    Eigen::VectorXd v;
};

// Full eigen-decomposition of a symmetric matrix (standard inner product) by
// cyclic Jacobi rotations. Eigenvalues sorted descending; eigenvectors are
// the columns of `vectors`, orthonormal, sign fixed so the first component
// of magnitude above 1e-12 is positive.
struct SymmetricEigen {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};
SymmetricEigen jacobi_symmetric(Eigen::MatrixXd A, int max_sweeps = 100);

// Eigen-decomposition of a g-symmetric endomorphism A (g(Av,w) = g(v,Aw)).
// Solved as a plain symmetric problem on G^{1/2} A G^{-1/2}; returned
// eigenvectors are g-orthonormal, eigenvalues sorted descending.
// Throws NotSymmetric when the g-symmetry residual exceeds 1e-8 * |A|.
std::vector<EigenPair> jacobi_eigen(const Endomorphism& A, const HermitianFrame& frame);

// J-adapted eigenbasis for a g-symmetric, J-commuting endomorphism:
// {e_1..e_n, Je_1..Je_n} g-orthonormal with A e_i = lambda_i e_i and
// A(Je_i) = lambda_i Je_i. Eigenvalues sorted descending over the n slots.
struct JAdaptedEigen {
    std::vector<double> lambda;         // n values
    std::vector<Eigen::VectorXd> e;     // n vectors; partners are J*e[i]
};
JAdaptedEigen j_adapted_eigenbasis(const Endomorphism& A, const HermitianFrame& frame);

// Symmetric square root and inverse square root of an SPD matrix.
Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& G);
Eigen::MatrixXd spd_inv_sqrt(const Eigen::MatrixXd& G);

}  // namespace bochner
