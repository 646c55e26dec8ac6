// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "bochner/frame.hpp"
#include "bochner/tensor4.hpp"

namespace bochner {

// Curvature data at a point: R with its Ricci contraction S (both (0,2) and
// index-raised (1,1) form) and scalar curvature tau.
struct CurvatureBundle {
    HermitianFrame frame;
    Tensor4 R;
    SymBilinear S;
    Endomorphism S_endo;  // g^{-1} S
    double tau = 0;

    // Residual of the internal consistency relations, relative.
    double consistency_residual() const;
};

CurvatureBundle make_bundle(const HermitianFrame& frame, const Tensor4& R);

struct BochnerTensor {
    HermitianFrame frame;
    Tensor4 B;
};

// The Bochner projection: removes the Ricci and scalar parts of the
// curvature, leaving the trace-free component. Throws InconsistentBundle.
BochnerTensor bochner_from_curvature(const CurvatureBundle& bundle);

// |sum_i B(e_i, Je_i) x|_g over a J-adapted orthonormal basis, normalized by
// |B| * |x|_g. Basis-independent; `basis_seed` selects the internally built
// basis for independence checks.
double trace_identity_residual(const BochnerTensor& B, const Eigen::VectorXd& x,
                               std::uint64_t basis_seed = 0);

// |bochner(bundle-of-B) - B| / |B|; the projection fixes its own image.
double bochner_idempotence_residual(const BochnerTensor& B);

// Deterministic random curvature bundle from a degree-4 random-poly chart
// evaluated at the origin through the exact polynomial backend.
// Throws DegenerateDraw after 10 failed redraws.
CurvatureBundle random_kaehler_curvature(std::uint64_t seed, int n);

// |B| <= tol * max(reference_scale, 1).
bool is_bochner_flat(const BochnerTensor& B, double tol, double reference_scale = 0.0);

}  // namespace bochner
