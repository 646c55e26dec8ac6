// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bochner/bochner.hpp"
#include "bochner/frame.hpp"

namespace bochner {

// Differential of a holomorphic map at a point: a J-linear invertible map
// between two tangent-space models.
struct HolomorphicLinearMap {
    HermitianFrame source;
    HermitianFrame target;
    Eigen::MatrixXd F;

    // |F J_source - J_target F| / |F|, max-abs.
    double j_linearity_residual() const;
};

struct PointData {
    HermitianFrame frame;
    Tensor4 B;
};

enum class Verdict {
    Homothety,
    BochnerFlat,
    NotPreserving,
    NotJLinear,
    InternalInconsistency,
};

std::string to_string(Verdict v);

struct HomothetyReport {
    Verdict verdict = Verdict::InternalInconsistency;
    std::optional<double> mu;               // present iff Homothety
    double lambda1 = 0, lambda2 = 0;        // eigenvalues of B(x,Jy)J
    Eigen::VectorXd probe_x, probe_y;       // selected probe pair
    Eigen::VectorXd e1, e2;                 // J-adapted eigenbasis
    std::map<std::string, double> residuals;
};

// |F*B_q - B_p| / max(|B_p|, |B_q| * |F|^4); 0 for exact preservation.
double preservation_residual(const PointData& p, const PointData& q,
                             const HolomorphicLinearMap& map);

// Unit pair (x, y) maximizing the operator norm of B(x,Jy) over the frame
// basis vectors plus 32 seeded random unit vectors. Throws BochnerFlatError
// or ProbeSearchFailed.
std::pair<Eigen::VectorXd, Eigen::VectorXd> select_probe_pair(const PointData& p);

// The endomorphism z -> B(x,Jy)Jz in the working basis.
Endomorphism probe_endomorphism(const PointData& p, const Eigen::VectorXd& x,
                                const Eigen::VectorXd& y);

// Executable form of the dim-4 rigidity argument: checks J-linearity,
// Bochner-nonflatness, B-preservation, then walks the eigenvalue argument to
// the conformal factor mu. Throws UnsupportedDimension for n != 2.
HomothetyReport homothety_certificate(const PointData& p, const PointData& q,
                                      const HolomorphicLinearMap& map, double tol = 1e-7);

// Max |lambda_1 + lambda_2| / |A| over `trials` random probe pairs.
double eigen_sum_check(const PointData& p, int trials, std::uint64_t seed);

struct ConstancyResult {
    std::vector<HomothetyReport> reports;
    std::vector<double> mu;  // mu per certified point (NaN where not certified)
    bool constant = false;
    int first_failure = -1;  // index of first non-Homothety verdict, or -1
};

ConstancyResult multi_point_constancy(
    const std::vector<std::tuple<PointData, PointData, HolomorphicLinearMap>>& points,
    double tol = 1e-7);

}  // namespace bochner
