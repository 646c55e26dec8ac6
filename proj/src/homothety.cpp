// SPDX-License-Identifier: Apache-2.0
#include "bochner/homothety.hpp"

#include <Eigen/LU>
#include <cmath>
#include <limits>

#include "bochner/errors.hpp"
#include "bochner/jacobi.hpp"
#include "bochner/rng.hpp"
#include "bochner/tensor_ops.hpp"

namespace bochner {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Homothety: return "Homothety";
        case Verdict::BochnerFlat: return "BochnerFlat";
        case Verdict::NotPreserving: return "NotPreserving";
        case Verdict::NotJLinear: return "NotJLinear";
        case Verdict::InternalInconsistency: return "InternalInconsistency";
    }
    return "?";
}

double HolomorphicLinearMap::j_linearity_residual() const {
    const double scale = std::max(F.cwiseAbs().maxCoeff(), 1e-300);
    return (F * source.J - target.J * F).cwiseAbs().maxCoeff() / scale;
}

double preservation_residual(const PointData& p, const PointData& q,
                             const HolomorphicLinearMap& map) {
    if (p.frame.dim() != q.frame.dim() || map.F.rows() != p.frame.dim())
        throw DimensionMismatch("map does not connect the two tangent models");
    if (map.j_linearity_residual() > 1e-10)
        throw NotJLinear("map is not J-linear");
    const Tensor4 pb = pullback4(q.B, map.F);
    const double fn = operator_norm(map.F);
    const double scale =
        std::max(p.B.max_abs(), q.B.max_abs() * fn * fn * fn * fn);
    if (scale == 0.0) return 0.0;
    return (pb - p.B).max_abs() / scale;
}

Endomorphism probe_endomorphism(const PointData& p, const Eigen::VectorXd& x,
                                const Eigen::VectorXd& y) {
    // g(Az, w) = B(x, Jy, Jz, w); solve A from the bilinear slice.
    const Eigen::VectorXd jy = p.frame.J * y;
    const int d = p.frame.dim();
    Eigen::MatrixXd C(d, d);
    const Tensor4& B = p.B;
    for (int k = 0; k < d; ++k) {
        const Eigen::VectorXd jz = p.frame.J * Eigen::VectorXd::Unit(d, k);
        C.row(k) = B.eval3(x, jy, jz);
    }
    // A^T g = C  =>  A = g^{-1} C^T
    return p.frame.g.inverse() * C.transpose();
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> select_probe_pair(const PointData& p) {
    const double normB = p.B.max_abs();
    if (normB <= 1e-8) throw BochnerFlatError("Bochner tensor vanishes");
    const int d = p.frame.dim();

    std::vector<Eigen::VectorXd> candidates;
    for (int i = 0; i < d; ++i) {
        Eigen::VectorXd v = Eigen::VectorXd::Unit(d, i);
        candidates.push_back(v / p.frame.norm(v));
    }
    Rng rng(0x9b0c4e5ull);
    for (int i = 0; i < 32; ++i) {
        Eigen::VectorXd v = rng.unit_vector(d);
        candidates.push_back(v / p.frame.norm(v));
    }

    double best = -1.0;
    std::pair<Eigen::VectorXd, Eigen::VectorXd> out;
    for (const auto& x : candidates)
        for (const auto& y : candidates) {
            const Endomorphism A = probe_endomorphism(p, x, y);
            const Eigen::MatrixXd GA = p.frame.g * A;
            if ((GA - GA.transpose()).cwiseAbs().maxCoeff() >
                1e-6 * std::max(1.0, A.cwiseAbs().maxCoeff()))
                continue;  // numerically unusable candidate
            const double score = operator_norm(A);
            if (score > best) {
                best = score;
                out = {x, y};
            }
        }
    if (best < 1e-6 * normB)
        throw ProbeSearchFailed("no probe pair with B(x,Jy) away from zero");
    return out;
}

HomothetyReport homothety_certificate(const PointData& p, const PointData& q,
                                      const HolomorphicLinearMap& map, double tol) {
    if (p.frame.n != 2) throw UnsupportedDimension("certificate requires n = 2");
    if (p.frame.dim() != q.frame.dim() || map.F.rows() != p.frame.dim())
        throw DimensionMismatch("map does not connect the two tangent models");
    HomothetyReport rep;

    // 1. J-linearity.
    const double jres = map.j_linearity_residual();
    rep.residuals["j_linearity"] = jres;
    if (jres > 1e-10) {
        rep.verdict = Verdict::NotJLinear;
        return rep;
    }

    // 2. Nonvanishing Bochner tensor at p.
    const double normB = p.B.max_abs();
    rep.residuals["bochner_norm"] = normB;
    if (normB <= 1e-8) {
        rep.verdict = Verdict::BochnerFlat;
        return rep;
    }

    // 3. B-preservation.
    const double pres = preservation_residual(p, q, map);
    rep.residuals["preservation"] = pres;
    if (pres > tol) {
        rep.verdict = Verdict::NotPreserving;
        return rep;
    }

    // 4. Probe pair and eigen-decomposition of A = B(x,Jy)J.
    auto [x, y] = select_probe_pair(p);
    rep.probe_x = x;
    rep.probe_y = y;
    const Endomorphism A = probe_endomorphism(p, x, y);
    const double normA = operator_norm(A);
    const JAdaptedEigen eig = j_adapted_eigenbasis(A, p.frame);
    rep.lambda1 = eig.lambda[0];
    rep.lambda2 = eig.lambda[1];
    rep.e1 = eig.e[0];
    rep.e2 = eig.e[1];

    // 5. lambda_1 + lambda_2 = 0 and (lambda_1, lambda_2) != (0, 0).
    const double lsum = std::abs(rep.lambda1 + rep.lambda2) / normA;
    rep.residuals["lambda_sum"] = lsum;
    const double lmax = std::max(std::abs(rep.lambda1), std::abs(rep.lambda2));
    rep.residuals["lambda_max"] = lmax;
    if (lsum > tol || lmax <= tol * normA) {
        rep.verdict = Verdict::InternalInconsistency;
        return rep;
    }

    // 6. Pullback metric and the proof's consequences.
    const SymBilinear h = pullback_metric(q.frame.g, map.F);
    const double normH = h.cwiseAbs().maxCoeff();
    auto form = [&](const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
        return u.dot(h * v);
    };
    const double h11 = form(rep.e1, rep.e1);
    const double h22 = form(rep.e2, rep.e2);
    const double h12 = form(rep.e1, rep.e2);
    rep.residuals["diag_equal"] = std::abs(h11 - h22) / normH;
    rep.residuals["off_diag"] = std::abs(h12) / normH;

    const double mu = (p.frame.g.inverse() * h).trace() / 4.0;
    const double conf = (h - mu * p.frame.g).cwiseAbs().maxCoeff() / normH;
    rep.residuals["conformality"] = conf;

    // 7. Verdict.
    if (rep.residuals["diag_equal"] <= tol && rep.residuals["off_diag"] <= tol &&
        conf <= tol && mu > 0) {
        rep.verdict = Verdict::Homothety;
        rep.mu = mu;
    } else {
        rep.verdict = Verdict::InternalInconsistency;
    }
    return rep;
}

double eigen_sum_check(const PointData& p, int trials, std::uint64_t seed) {
    if (p.frame.n != 2) throw UnsupportedDimension("eigen sum check requires n = 2");
    const double normB = p.B.max_abs();
    if (normB <= 1e-8) throw BochnerFlatError("Bochner tensor vanishes");
    Rng rng(seed);
    const int d = p.frame.dim();
    double worst = 0.0;
    int done = 0, attempts = 0;
    while (done < trials) {
        if (++attempts > 100 * trials + 1000)
            throw ProbeSearchFailed("could not find enough usable probe pairs");
        Eigen::VectorXd x = rng.unit_vector(d);
        Eigen::VectorXd y = rng.unit_vector(d);
        x /= p.frame.norm(x);
        y /= p.frame.norm(y);
        const Endomorphism A = probe_endomorphism(p, x, y);
        const double normA = operator_norm(A);
        if (normA < 1e-6 * normB) continue;
        const JAdaptedEigen eig = j_adapted_eigenbasis(A, p.frame);
        worst = std::max(worst, std::abs(eig.lambda[0] + eig.lambda[1]) / normA);
        ++done;
    }
    return worst;
}

ConstancyResult multi_point_constancy(
    const std::vector<std::tuple<PointData, PointData, HolomorphicLinearMap>>& points,
    double tol) {
    ConstancyResult out;
    out.constant = true;
    for (size_t i = 0; i < points.size(); ++i) {
        const auto& [p, q, map] = points[i];
        HomothetyReport rep = homothety_certificate(p, q, map, tol);
        if (rep.verdict != Verdict::Homothety) {
            out.constant = false;
            if (out.first_failure < 0) out.first_failure = static_cast<int>(i);
            out.mu.push_back(std::numeric_limits<double>::quiet_NaN());
        } else {
            out.mu.push_back(*rep.mu);
        }
        out.reports.push_back(std::move(rep));
    }
    if (out.constant && !out.mu.empty()) {
        double lo = out.mu[0], hi = out.mu[0], mean = 0;
        for (double m : out.mu) {
            lo = std::min(lo, m);
            hi = std::max(hi, m);
            mean += m;
        }
        mean /= static_cast<double>(out.mu.size());
        out.constant = (hi - lo) <= tol * mean;
    }
    return out;
}

}  // namespace bochner
