// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Every tolerance is pinned here.

#include <Eigen/LU>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "bochner/bochner.hpp"
#include "bochner/chart.hpp"
#include "bochner/homothety.hpp"
#include "bochner/io.hpp"
#include "bochner/rng.hpp"
#include "bochner/tensor_ops.hpp"

using namespace bochner;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s %-28s %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!pass) ++failures;
}

BochnerTensor bochner_at(const KaehlerChart& chart, const ChartPoint& p) {
    const HermitianFrame frame = metric_at(chart, p);
    return bochner_from_curvature(make_bundle(frame, curvature_at(chart, p)));
}

// 1. Algebraic suite over 200 random exact-backend bundles (n = 2 and 3).
void criterion_algebraic_suite() {
    double sym = 0, eq1 = 0, ricci = 0, idem = 0;
    for (int n : {2, 3}) {
        for (int t = 0; t < 100; ++t) {
            const CurvatureBundle bundle =
                random_kaehler_curvature(static_cast<std::uint64_t>(1000 * n + t), n);
            const BochnerTensor B = bochner_from_curvature(bundle);
            const double normB = std::max(B.B.max_abs(), 1e-300);
            sym = std::max(sym, curvature_symmetry_residuals(B.B, bundle.frame).max());
            Rng rng(static_cast<std::uint64_t>(t));
            for (int i = 0; i < 3; ++i)
                eq1 = std::max(eq1, trace_identity_residual(
                                        B, rng.unit_vector(bundle.frame.dim())));
            ricci = std::max(ricci, contract_ricci(B.B, bundle.frame)
                                            .cwiseAbs().maxCoeff() / normB);
            idem = std::max(idem, bochner_idempotence_residual(B));
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "sym=%.2e eq1=%.2e ricci=%.2e idem=%.2e", sym, eq1, ricci, idem);
    report("algebraic-suite",
           sym <= 1e-8 && eq1 <= 1e-8 && ricci <= 1e-8 && idem <= 1e-9, buf);
}

// 2. Complex space forms are Bochner-flat.
void criterion_space_forms_flat() {
    const KaehlerChart flat = catalog_chart("flat", 2);
    const BochnerTensor Bf = bochner_at(flat, Eigen::VectorXd::Zero(4));
    bool pass = Bf.B.max_abs() <= 1e-10;
    double worst = Bf.B.max_abs();

    Rng rng(22);
    for (const char* name : {"fubini-study", "complex-hyperbolic"}) {
        const KaehlerChart chart = catalog_chart(name, 2);
        int done = 0;
        while (done < 5) {
            const ChartPoint p = 0.4 * rng.vector(4);
            if (!chart.in_domain(p)) continue;
            const HermitianFrame frame = metric_at(chart, p);
            const Tensor4 R = curvature_at(chart, p);
            const BochnerTensor B = bochner_from_curvature(make_bundle(frame, R));
            const double ratio = B.B.max_abs() / R.max_abs();
            worst = std::max(worst, ratio);
            pass = pass && ratio <= 1e-6;
            ++done;
        }
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "worst |B|/|R| = %.2e", worst);
    report("space-forms-flat", pass, buf);
}

// 3. product-cp1-cp1 is a nonflat fixture.
void criterion_nonflat_fixture() {
    const KaehlerChart chart = catalog_chart("product-cp1-cp1", 2);
    const ChartPoint origin = Eigen::VectorXd::Zero(4);
    const HermitianFrame frame = metric_at(chart, origin);
    const Tensor4 R = curvature_at(chart, origin);
    const BochnerTensor B = bochner_from_curvature(make_bundle(frame, R));
    const double ratio = B.B.max_abs() / R.max_abs();
    char buf[80];
    std::snprintf(buf, sizeof buf, "|B|/|R| = %.3f", ratio);
    report("nonflat-fixture", ratio > 0.01, buf);
}

// 4. Eigenvalue trace law over 100 random dim-4 Bochner tensors.
void criterion_eigen_trace_law() {
    double worst = 0;
    for (int t = 0; t < 100; ++t) {
        const CurvatureBundle bundle =
            random_kaehler_curvature(5000 + static_cast<std::uint64_t>(t), 2);
        const PointData p{bundle.frame, bochner_from_curvature(bundle).B};
        worst = std::max(worst, eigen_sum_check(p, 3, static_cast<std::uint64_t>(t)));
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "max |l1+l2|/|A| = %.2e", worst);
    report("eigen-trace-law", worst <= 1e-9, buf);
}

// 5. Certificate positive path: F in {Id, -Id, J} on the product fixture.
void criterion_certificate_positive() {
    const KaehlerChart chart = catalog_chart("product-cp1-cp1", 2);
    const ChartPoint origin = Eigen::VectorXd::Zero(4);
    const HermitianFrame frame = metric_at(chart, origin);
    const PointData p{frame, bochner_at(chart, origin).B};
    const Eigen::MatrixXd I4 = Eigen::MatrixXd::Identity(4, 4);
    bool pass = true;
    double worst = 0;
    for (const Eigen::MatrixXd& F : {I4, Eigen::MatrixXd(-I4), Eigen::MatrixXd(frame.J)}) {
        const HomothetyReport rep =
            homothety_certificate(p, p, {frame, frame, F}, 1e-7);
        if (rep.verdict != Verdict::Homothety) { pass = false; continue; }
        worst = std::max(worst, std::abs(*rep.mu - 1.0));
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "max |mu-1| = %.2e", worst);
    report("certificate-positive", pass && worst <= 1e-8, buf);
}

// 6. Theorem contrapositive fuzz: 1000 trials, zero counterexamples.
void criterion_contrapositive_fuzz() {
    Rng rng(0xFADE);
    int counterexamples = 0;
    double min_residual = 1e300;
    int done = 0;
    while (done < 1000) {
        const CurvatureBundle bundle =
            random_kaehler_curvature(20000 + static_cast<std::uint64_t>(done), 2);
        const PointData p{bundle.frame, bochner_from_curvature(bundle).B};
        if (p.B.max_abs() <= 1e-6 * bundle.R.max_abs()) continue;

        // Random invertible J-linear map with conformality defect > 0.1.
        Eigen::MatrixXd F;
        for (;;) {
            const Eigen::MatrixXd P = rng.matrix(2, 2);
            const Eigen::MatrixXd Q = rng.matrix(2, 2);
            F.resize(4, 4);
            F.topLeftCorner(2, 2) = P;
            F.topRightCorner(2, 2) = -Q;
            F.bottomLeftCorner(2, 2) = Q;
            F.bottomRightCorner(2, 2) = P;
            if (std::abs(F.determinant()) < 1e-3) continue;
            const Eigen::MatrixXd M = F.transpose() * bundle.frame.g * F;
            const double tr = (bundle.frame.g.inverse() * M).trace() / 4.0;
            if ((M - tr * bundle.frame.g).cwiseAbs().maxCoeff() > 0.1) break;
        }
        const double r =
            preservation_residual(p, p, {bundle.frame, bundle.frame, F});
        min_residual = std::min(min_residual, r);
        if (r <= 1e-6) ++counterexamples;
        ++done;
    }
    char buf[100];
    std::snprintf(buf, sizeof buf, "counterexamples=%d min residual=%.2e",
                  counterexamples, min_residual);
    report("contrapositive-fuzz", counterexamples == 0, buf);
}

// 7. Exact-polynomial vs finite-difference curvature on 50 random potentials.
void criterion_backend_cross_validation() {
    double worst_g = 0, worst_r = 0;
    for (int t = 0; t < 50; ++t) {
        const Polynomial K = random_poly_potential(30000 + static_cast<std::uint64_t>(t), 2, 4);
        const KaehlerChart exact(2, PolynomialBackend{K}, "poly");
        const KaehlerChart fd = numeric_chart_from_polynomial(K);
        const ChartPoint origin = Eigen::VectorXd::Zero(4);

        const Eigen::MatrixXd ge = metric_at(exact, origin).g;
        const Eigen::MatrixXd gf = metric_at(fd, origin).g;
        worst_g = std::max(worst_g, (ge - gf).cwiseAbs().maxCoeff());

        const Tensor4 Re = curvature_at(exact, origin);
        const Tensor4 Rf = curvature_at(fd, origin);
        worst_r = std::max(worst_r,
                           (Re - Rf).max_abs() / std::max(1.0, Re.max_abs()));
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "dg=%.2e dR=%.2e", worst_g, worst_r);
    report("backend-cross-validation", worst_g <= 1e-6 && worst_r <= 1e-4, buf);
}

// 8. mu-constancy on the swap-isometry fixture at 3 diagonal points.
void criterion_mu_constancy() {
    const std::string path = std::string(BOCHNER_FIXTURE_DIR) + "/swap_diagonal.map";
    std::ifstream f(path);
    if (!f) {
        report("mu-constancy", false, "cannot open " + path);
        return;
    }
    const auto blocks = parse_map_file(f);
    std::vector<std::tuple<PointData, PointData, HolomorphicLinearMap>> tuples;
    for (const auto& b : blocks) tuples.push_back(realize_block(b));
    const ConstancyResult res = multi_point_constancy(tuples, 1e-7);
    double spread = 0, worst = 0;
    if (res.constant) {
        double lo = res.mu[0], hi = res.mu[0];
        for (double m : res.mu) {
            lo = std::min(lo, m);
            hi = std::max(hi, m);
            worst = std::max(worst, std::abs(m - 1.0));
        }
        spread = hi - lo;
    }
    char buf[100];
    std::snprintf(buf, sizeof buf, "max |mu-1|=%.2e spread=%.2e", worst, spread);
    report("mu-constancy",
           res.constant && worst <= 1e-8 && spread <= 1e-8 && res.mu.size() == 3, buf);
}

}  // namespace

int main() {
    criterion_algebraic_suite();
    criterion_space_forms_flat();
    criterion_nonflat_fixture();
    criterion_eigen_trace_law();
    criterion_certificate_positive();
    criterion_contrapositive_fuzz();
    criterion_backend_cross_validation();
    criterion_mu_constancy();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
