// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "bochner/chart.hpp"
#include "bochner/errors.hpp"
#include "bochner/rng.hpp"
#include "bochner/tensor_ops.hpp"
#include "doctest.h"

using namespace bochner;

namespace {

double flat_potential(const Eigen::VectorXd& p) { return p.squaredNorm(); }

}  // namespace

TEST_CASE("flat chart: g = 2 Identity everywhere, against finite differences") {
    const KaehlerChart flat = catalog_chart("flat", 2);
    Eigen::VectorXd p(4);
    p << 0.7, -0.3, 1.2, 0.4;
    const HermitianFrame f = metric_at(flat, p);
    CHECK((f.g - 2.0 * Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-13);

    // Independent oracle: finite differences on K = |z|^2.
    NumericBackend nb;
    nb.potential = flat_potential;
    const KaehlerChart numeric(2, nb, "flat-fd");
    const HermitianFrame fd = metric_at(numeric, p);
    CHECK((fd.g - f.g).cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("Fubini-Study at the origin: positive definite and J-invariant") {
    const KaehlerChart fs = catalog_chart("fubini-study", 2);
    const HermitianFrame f = metric_at(fs, Eigen::VectorXd::Zero(4));
    f.validate();
    CHECK((f.J.transpose() * f.g * f.J - f.g).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("complex-hyperbolic domain is the unit ball") {
    const KaehlerChart ch = catalog_chart("complex-hyperbolic", 2);
    Eigen::VectorXd inside(4), outside(4);
    inside << 0.3, 0.2, -0.1, 0.4;
    outside << 0.9, 0.6, 0.3, 0.2;
    CHECK(ch.in_domain(inside));
    CHECK_NOTHROW(metric_at(ch, inside));
    CHECK(!ch.in_domain(outside));
    CHECK_THROWS_AS(metric_at(ch, outside), OutsideDomain);
}

TEST_CASE("flat curvature vanishes identically") {
    const KaehlerChart flat = catalog_chart("flat", 2);
    Rng rng(2);
    for (int t = 0; t < 3; ++t) {
        const Tensor4 R = curvature_at(flat, rng.vector(4));
        CHECK(R.max_abs() <= 1e-10);
    }
}

TEST_CASE("curvature passes symmetry residuals on all backends and charts") {
    Rng rng(9);
    for (const char* name : {"fubini-study", "complex-hyperbolic", "product-cp1-cp1"}) {
        const KaehlerChart chart = catalog_chart(name, 2);
        for (int t = 0; t < 3; ++t) {
            const ChartPoint p = 0.3 * rng.vector(4);
            const HermitianFrame f = metric_at(chart, p);
            CHECK(curvature_symmetry_residuals(curvature_at(chart, p), f).max() <= 1e-8);
        }
    }
    // Finite-difference backend at its own (coarser) tolerance.
    const Polynomial K = random_poly_potential(21, 2, 4);
    const KaehlerChart fd = numeric_chart_from_polynomial(K);
    const ChartPoint origin = Eigen::VectorXd::Zero(4);
    const HermitianFrame f = metric_at(fd, origin);
    CHECK(curvature_symmetry_residuals(curvature_at(fd, origin), f).max() <= 1e-4);
}

TEST_CASE("Fubini-Study has constant holomorphic sectional curvature") {
    const KaehlerChart fs = catalog_chart("fubini-study", 2);
    const ChartPoint origin = Eigen::VectorXd::Zero(4);
    const HermitianFrame f = metric_at(fs, origin);
    const Tensor4 R = curvature_at(fs, origin);
    Rng rng(4);
    double lo = 1e300, hi = -1e300;
    for (int t = 0; t < 20; ++t) {
        const Eigen::VectorXd x = rng.unit_vector(4);
        const Eigen::VectorXd jx = f.J * x;
        const double gxx = f.inner(x, x);
        const double h = R.eval(x, jx, jx, x) / (gxx * gxx);
        lo = std::min(lo, h);
        hi = std::max(hi, h);
    }
    CHECK(hi - lo <= 1e-6 * std::abs(hi));
    CHECK(hi > 0);  // positive curvature pins the sign convention
}

TEST_CASE("exact polynomial and finite-difference backends agree") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        const Polynomial K = random_poly_potential(seed, 2, 4);
        const KaehlerChart exact(2, PolynomialBackend{K}, "poly");
        const KaehlerChart fd = numeric_chart_from_polynomial(K);
        const ChartPoint origin = Eigen::VectorXd::Zero(4);

        const HermitianFrame fe = metric_at(exact, origin);
        const HermitianFrame ff = metric_at(fd, origin);
        CHECK((fe.g - ff.g).cwiseAbs().maxCoeff() <= 1e-6);

        const Tensor4 Re = curvature_at(exact, origin);
        const Tensor4 Rf = curvature_at(fd, origin);
        CHECK((Re - Rf).max_abs() <= 1e-4 * std::max(1.0, Re.max_abs()));
    }
}

TEST_CASE("random polynomial potential is real-valued and deterministic") {
    const Polynomial a = random_poly_potential(7, 2, 4);
    const Polynomial b = random_poly_potential(7, 2, 4);
    CHECK(a.reality_residual() <= 1e-15);
    REQUIRE(a.terms().size() == b.terms().size());
    auto ita = a.terms().begin();
    auto itb = b.terms().begin();
    for (; ita != a.terms().end(); ++ita, ++itb) {
        CHECK(ita->first == itb->first);
        CHECK(ita->second == itb->second);
    }
    // Reality of the potential on sample points.
    Rng rng(3);
    for (int t = 0; t < 5; ++t) {
        const Eigen::VectorXd p = 0.4 * rng.vector(4);
        const cdouble v = a.eval({cdouble(p[0], p[2]), cdouble(p[1], p[3])});
        CHECK(std::abs(v.imag()) <= 1e-14);
    }
}

TEST_CASE("catalog errors") {
    CHECK_THROWS_AS(catalog_chart("torus", 2), UnknownName);
    CHECK_THROWS_AS(catalog_chart("product-cp1-cp1", 3), UnsupportedDimension);
    CHECK_THROWS_AS(catalog_chart("flat", 0), UnsupportedDimension);
}

TEST_CASE("metric_at rejects non-plurisubharmonic potentials") {
    // K = |z|^2 - 2|z1|^4 turns concave away from the origin.
    Polynomial K(1);
    K.add_term({1, 1}, 1.0);
    K.add_term({2, 2}, -2.0);
    const KaehlerChart chart(1, PolynomialBackend{K}, "concave");
    CHECK_NOTHROW(metric_at(chart, Eigen::VectorXd::Zero(2)));
    Eigen::VectorXd far(2);
    far << 1.0, 0.0;
    CHECK_THROWS_AS(metric_at(chart, far), NotPositiveDefinite);
}

TEST_CASE("metric from every catalog chart satisfies frame invariants at fuzzed points") {
    Rng rng(14);
    for (const char* name : {"flat", "fubini-study", "complex-hyperbolic", "product-cp1-cp1"}) {
        const KaehlerChart chart = catalog_chart(name, 2);
        for (int t = 0; t < 5; ++t) {
            ChartPoint p = 0.4 * rng.vector(4);
            if (!chart.in_domain(p)) continue;
            CHECK_NOTHROW(metric_at(chart, p).validate());
        }
    }
}
