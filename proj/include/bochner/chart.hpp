// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "bochner/frame.hpp"
#include "bochner/polynomial.hpp"
#include "bochner/tensor4.hpp"

namespace bochner {

// Chart point: (x^1..x^n, y^1..y^n), the real and imaginary parts of z.
using ChartPoint = Eigen::VectorXd;

// Complex Hermitian metric jet at a point: H_{ab} = g_{a bbar}, its
// holomorphic derivatives dH[c] = d_c H and mixed second derivatives
// ddH[c][d] = d_c dbar_d H.
struct MetricJet {
    Eigen::MatrixXcd H;
    std::vector<Eigen::MatrixXcd> dH;
    std::vector<std::vector<Eigen::MatrixXcd>> ddH;
};

// Kaehler curvature in complex components, R_{a bbar c dbar}, n^4 entries.
struct ComplexCurvature {
    int n = 0;
    std::vector<cdouble> k;
    explicit ComplexCurvature(int n_) : n(n_), k(static_cast<size_t>(n_) * n_ * n_ * n_) {}
    cdouble& operator()(int a, int b, int c, int d) {
        return k[((static_cast<size_t>(a) * n + b) * n + c) * n + d];
    }
    cdouble operator()(int a, int b, int c, int d) const {
        return k[((static_cast<size_t>(a) * n + b) * n + c) * n + d];
    }
};

// Realification convention: basis (d/dx^1..d/dx^n, d/dy^1..d/dy^n),
// J = [[0,-I],[I,0]], g(dx^a,dx^b) = 2 Re H_ab, g(dx^a,dy^b) = 2 Im H_ab.
Eigen::MatrixXd realify_metric(const Eigen::MatrixXcd& H);
Eigen::MatrixXd standard_J(int n);

// Real (0,4) tensor from complex components by multilinear extension.
Tensor4 realify_curvature(const ComplexCurvature& C);

// R_{a bbar c dbar} = -d_c dbar_d H_ab + H^{m nbar} (d_c H_an)(dbar_d H_mb),
// from the jet; then realified by curvature_at.
ComplexCurvature curvature_from_jet(const MetricJet& jet);

// Radial profile phi(s) applied to a group of variables with s the group's
// squared norm; the catalog charts are all of this form.
struct RadialGroup {
    enum class Profile { Linear, LogPlus, LogMinus };  // s, log(1+s), -log(1-s)
    Profile profile;
    std::vector<int> vars;  // complex variable indices
};

struct ClosedFormBackend {
    std::vector<RadialGroup> groups;
};

struct PolynomialBackend {
    Polynomial potential;
};

struct NumericBackend {
    std::function<double(const Eigen::VectorXd&)> potential;
    double h_metric = 1e-3;     // step on the potential for g
    double h_curvature = 1e-2;  // step on the computed g for curvature terms
};

class KaehlerChart {
public:
    using Backend = std::variant<ClosedFormBackend, PolynomialBackend, NumericBackend>;

    KaehlerChart(int n, Backend backend, std::string name = "");

    int complex_dim() const { return n_; }
    const std::string& name() const { return name_; }
    const Backend& backend() const { return backend_; }

    bool in_domain(const ChartPoint& p) const;

    // Metric jet at p (second derivatives filled only when needed).
    MetricJet jet_at(const ChartPoint& p, bool with_curvature) const;

private:
    int n_;
    Backend backend_;
    std::string name_;
};

// (g, J) at p in the realified coordinate basis. Throws OutsideDomain /
// NotPositiveDefinite.
HermitianFrame metric_at(const KaehlerChart& chart, const ChartPoint& p);

// Realified (0,4) curvature tensor at p.
Tensor4 curvature_at(const KaehlerChart& chart, const ChartPoint& p);

// Catalog: flat, fubini-study, complex-hyperbolic, product-cp1-cp1,
// random-poly (seeded, degree bounded). Throws UnknownName /
// UnsupportedDimension.
KaehlerChart catalog_chart(const std::string& name, int n,
                           std::uint64_t seed = 0, int degree = 4);

// The random-poly potential: sum |z^a|^2 plus the real part of a random
// polynomial of degree <= degree with coefficients bounded by 0.1.
Polynomial random_poly_potential(std::uint64_t seed, int n, int degree);

// Numeric-backend wrapper evaluating the same polynomial potential through
// finite differences (cross-validation fixture).
KaehlerChart numeric_chart_from_polynomial(const Polynomial& K);

}  // namespace bochner
