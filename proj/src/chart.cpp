// SPDX-License-Identifier: Apache-2.0
#include "bochner/chart.hpp"

#include <Eigen/LU>
#include <cmath>

#include "bochner/errors.hpp"
#include "bochner/jacobi.hpp"
#include "bochner/rng.hpp"

namespace bochner {

namespace {

std::vector<cdouble> to_complex(const ChartPoint& p) {
    const int n = static_cast<int>(p.size()) / 2;
    std::vector<cdouble> z(n);
    for (int i = 0; i < n; ++i) z[i] = cdouble(p[i], p[n + i]);
    return z;
}

// phi', phi'', phi''', phi'''' for a radial profile at s.
struct ProfileDerivs {
    double d1, d2, d3, d4;
};

ProfileDerivs profile_derivs(RadialGroup::Profile prof, double s) {
    switch (prof) {
        case RadialGroup::Profile::Linear:
            return {1.0, 0.0, 0.0, 0.0};
        case RadialGroup::Profile::LogPlus: {
            const double u = 1.0 + s;
            return {1.0 / u, -1.0 / (u * u), 2.0 / (u * u * u), -6.0 / (u * u * u * u)};
        }
        case RadialGroup::Profile::LogMinus:
        default: {
            const double u = 1.0 - s;
            return {1.0 / u, 1.0 / (u * u), 2.0 / (u * u * u), 6.0 / (u * u * u * u)};
        }
    }
}

MetricJet closed_form_jet(const ClosedFormBackend& b, int n, const ChartPoint& p,
                          bool with_curvature) {
    const std::vector<cdouble> z = to_complex(p);
    MetricJet jet;
    jet.H = Eigen::MatrixXcd::Zero(n, n);
    if (with_curvature) {
        jet.dH.assign(n, Eigen::MatrixXcd::Zero(n, n));
        jet.ddH.assign(n, std::vector<Eigen::MatrixXcd>(n, Eigen::MatrixXcd::Zero(n, n)));
    }
    for (const RadialGroup& grp : b.groups) {
        double s = 0;
        for (int v : grp.vars) s += std::norm(z[v]);
        const ProfileDerivs f = profile_derivs(grp.profile, s);
        auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
        for (int a : grp.vars)
            for (int bb : grp.vars) {
                const cdouble za_bar = std::conj(z[a]);
                const cdouble zb = z[bb];
                jet.H(a, bb) += f.d2 * za_bar * zb + f.d1 * delta(a, bb);
                if (!with_curvature) continue;
                for (int c : grp.vars) {
                    const cdouble zc_bar = std::conj(z[c]);
                    jet.dH[c](a, bb) += f.d3 * zc_bar * za_bar * zb +
                                        f.d2 * (za_bar * delta(bb, c) + zc_bar * delta(a, bb));
                    for (int d : grp.vars) {
                        const cdouble zd = z[d];
                        jet.ddH[c][d](a, bb) +=
                            f.d4 * za_bar * zb * zc_bar * zd +
                            f.d3 * (delta(c, d) * za_bar * zb + delta(a, d) * zc_bar * zb +
                                    za_bar * zd * delta(bb, c) + zc_bar * zd * delta(a, bb)) +
                            f.d2 * (delta(a, d) * delta(bb, c) + delta(c, d) * delta(a, bb));
                    }
                }
            }
    }
    return jet;
}

MetricJet polynomial_jet(const PolynomialBackend& b, int n, const ChartPoint& p,
                         bool with_curvature) {
    const std::vector<cdouble> z = to_complex(p);
    MetricJet jet;
    jet.H = Eigen::MatrixXcd::Zero(n, n);
    if (with_curvature) {
        jet.dH.assign(n, Eigen::MatrixXcd::Zero(n, n));
        jet.ddH.assign(n, std::vector<Eigen::MatrixXcd>(n, Eigen::MatrixXcd::Zero(n, n)));
    }
    for (int a = 0; a < n; ++a) {
        const Polynomial Ka = b.potential.dz(a);
        for (int bb = 0; bb < n; ++bb) {
            const Polynomial g_ab = Ka.dzbar(bb);
            jet.H(a, bb) = g_ab.eval(z);
            if (!with_curvature) continue;
            for (int c = 0; c < n; ++c) {
                const Polynomial dg = g_ab.dz(c);
                jet.dH[c](a, bb) = dg.eval(z);
                for (int d = 0; d < n; ++d) jet.ddH[c][d](a, bb) = dg.dzbar(d).eval(z);
            }
        }
    }
    return jet;
}

// Complex Hermitian metric from a real potential by finite differences:
// g_{a bbar} = (K_xx + K_yy + i(K_xy - K_yx)) / 4 over the (a, b) real pairs.
Eigen::MatrixXcd fd_complex_metric(const std::function<double(const Eigen::VectorXd&)>& K,
                                   int n, const ChartPoint& p, double h) {
    auto second = [&](int u, int v) {
        if (u == v) {
            Eigen::VectorXd q = p;
            q[u] += h;
            double fp = K(q);
            q[u] -= 2 * h;
            double fm = K(q);
            return (fp - 2.0 * K(p) + fm) / (h * h);
        }
        Eigen::VectorXd q = p;
        q[u] += h; q[v] += h; double fpp = K(q);
        q[v] -= 2 * h;        double fpm = K(q);
        q[u] -= 2 * h;        double fmm = K(q);
        q[v] += 2 * h;        double fmp = K(q);
        return (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    };
    Eigen::MatrixXcd H(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const double xx = second(a, b);
            const double yy = second(n + a, n + b);
            const double xy = second(a, n + b);
            const double yx = second(n + a, b);
            H(a, b) = 0.25 * cdouble(xx + yy, xy - yx);
        }
    return H;
}

MetricJet numeric_jet(const NumericBackend& b, int n, const ChartPoint& p,
                      bool with_curvature) {
    MetricJet jet;
    jet.H = fd_complex_metric(b.potential, n, p, b.h_metric);
    if (!with_curvature) return jet;

    const double h = b.h_curvature;
    auto H_at = [&](const ChartPoint& q) { return fd_complex_metric(b.potential, n, q, b.h_metric); };

    // First real-coordinate derivatives of H by central differences.
    std::vector<Eigen::MatrixXcd> dreal(2 * n);
    std::vector<Eigen::MatrixXcd> Hp(2 * n), Hm(2 * n);
    for (int u = 0; u < 2 * n; ++u) {
        Eigen::VectorXd q = p;
        q[u] += h; Hp[u] = H_at(q);
        q[u] -= 2 * h; Hm[u] = H_at(q);
        dreal[u] = (Hp[u] - Hm[u]) / (2.0 * h);
    }
    jet.dH.assign(n, Eigen::MatrixXcd::Zero(n, n));
    for (int c = 0; c < n; ++c)
        jet.dH[c] = 0.5 * (dreal[c] - cdouble(0, 1) * dreal[n + c]);

    // Mixed second real-coordinate derivatives of H.
    auto second = [&](int u, int v) -> Eigen::MatrixXcd {
        if (u == v) return (Hp[u] - 2.0 * jet.H + Hm[u]) / (h * h);
        Eigen::VectorXd q = p;
        q[u] += h; q[v] += h; Eigen::MatrixXcd mpp = H_at(q);
        q[v] -= 2 * h;        Eigen::MatrixXcd mpm = H_at(q);
        q[u] -= 2 * h;        Eigen::MatrixXcd mmm = H_at(q);
        q[v] += 2 * h;        Eigen::MatrixXcd mmp = H_at(q);
        return (mpp - mpm - mmp + mmm) / (4.0 * h * h);
    };
    jet.ddH.assign(n, std::vector<Eigen::MatrixXcd>(n, Eigen::MatrixXcd::Zero(n, n)));
    const cdouble I(0, 1);
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
            // d_c dbar_d = (d_xc - i d_yc)(d_xd + i d_yd) / 4
            jet.ddH[c][d] = 0.25 * (second(c, d) + I * second(c, n + d) -
                                    I * second(n + c, d) + second(n + c, n + d));
        }
    return jet;
}

}  // namespace

Eigen::MatrixXd standard_J(int n) { return HermitianFrame::standard(n).J; }

Eigen::MatrixXd realify_metric(const Eigen::MatrixXcd& H) {
    const int n = static_cast<int>(H.rows());
    Eigen::MatrixXd G(2 * n, 2 * n);
    const Eigen::MatrixXd re = 2.0 * H.real();
    const Eigen::MatrixXd im = 2.0 * H.imag();
    G.topLeftCorner(n, n) = re;
    G.topRightCorner(n, n) = im;
    G.bottomLeftCorner(n, n) = im.transpose();
    G.bottomRightCorner(n, n) = re;
    return 0.5 * (G + G.transpose());
}

ComplexCurvature curvature_from_jet(const MetricJet& jet) {
    const int n = static_cast<int>(jet.H.rows());
    // g^{m nbar} with g^{m nbar} g_{a nbar} = delta: the conjugate inverse.
    const Eigen::MatrixXcd Hinv_conj = jet.H.inverse().conjugate();
    ComplexCurvature R(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    cdouble s = -jet.ddH[c][d](a, b);
                    for (int m = 0; m < n; ++m)
                        for (int nu = 0; nu < n; ++nu)
                            s += Hinv_conj(m, nu) * jet.dH[c](a, nu) *
                                 std::conj(jet.dH[d](b, m));
                    R(a, b, c, d) = s;
                }
    return R;
}

Tensor4 realify_curvature(const ComplexCurvature& C) {
    const int n = C.n;
    const int d = 2 * n;
    // Expansion of the real basis in holomorphic/antiholomorphic directions:
    // d/dx^a = d_a + dbar_a, d/dy^a = i(d_a - dbar_a).
    struct Term {
        bool hol;
        int var;
        cdouble coeff;
    };
    std::vector<std::array<Term, 2>> expand(d);
    for (int a = 0; a < n; ++a) {
        expand[a] = {Term{true, a, 1.0}, Term{false, a, 1.0}};
        expand[n + a] = {Term{true, a, cdouble(0, 1)}, Term{false, a, cdouble(0, -1)}};
    }
    // Component in mixed-pair position; zero unless each slot pair holds one
    // holomorphic and one antiholomorphic direction.
    auto component = [&](Term s1, Term s2, Term s3, Term s4) -> cdouble {
        double sign = 1.0;
        if (!s1.hol) { std::swap(s1, s2); sign = -sign; }
        if (!s1.hol || s2.hol) return 0.0;
        if (!s3.hol) { std::swap(s3, s4); sign = -sign; }
        if (!s3.hol || s4.hol) return 0.0;
        return sign * C(s1.var, s2.var, s3.var, s4.var);
    };
    Tensor4 T(n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    cdouble s = 0.0;
                    for (const Term& t1 : expand[i])
                        for (const Term& t2 : expand[j])
                            for (const Term& t3 : expand[k])
                                for (const Term& t4 : expand[l]) {
                                    const cdouble c = component(t1, t2, t3, t4);
                                    if (c != cdouble(0.0))
                                        s += t1.coeff * t2.coeff * t3.coeff * t4.coeff * c;
                                }
                    T(i, j, k, l) = s.real();
                }
    return T;
}

KaehlerChart::KaehlerChart(int n, Backend backend, std::string name)
    : n_(n), backend_(std::move(backend)), name_(std::move(name)) {}

bool KaehlerChart::in_domain(const ChartPoint& p) const {
    if (p.size() != 2 * n_) return false;
    if (const auto* cf = std::get_if<ClosedFormBackend>(&backend_)) {
        const std::vector<cdouble> z = to_complex(p);
        for (const RadialGroup& grp : cf->groups) {
            if (grp.profile != RadialGroup::Profile::LogMinus) continue;
            double s = 0;
            for (int v : grp.vars) s += std::norm(z[v]);
            if (s >= 1.0) return false;
        }
    }
    return true;
}

MetricJet KaehlerChart::jet_at(const ChartPoint& p, bool with_curvature) const {
    if (!in_domain(p)) throw OutsideDomain("point is outside the chart domain");
    if (const auto* cf = std::get_if<ClosedFormBackend>(&backend_))
        return closed_form_jet(*cf, n_, p, with_curvature);
    if (const auto* pb = std::get_if<PolynomialBackend>(&backend_))
        return polynomial_jet(*pb, n_, p, with_curvature);
    return numeric_jet(std::get<NumericBackend>(backend_), n_, p, with_curvature);
}

HermitianFrame metric_at(const KaehlerChart& chart, const ChartPoint& p) {
    const MetricJet jet = chart.jet_at(p, false);
    HermitianFrame frame;
    frame.n = chart.complex_dim();
    frame.g = realify_metric(jet.H);
    frame.J = standard_J(frame.n);
    SymmetricEigen e = jacobi_symmetric(frame.g);
    if (e.values.minCoeff() <= 0.0)
        throw NotPositiveDefinite("potential is not strictly plurisubharmonic here");
    return frame;
}

Tensor4 curvature_at(const KaehlerChart& chart, const ChartPoint& p) {
    metric_at(chart, p);  // domain + positivity gate
    const MetricJet jet = chart.jet_at(p, true);
    return realify_curvature(curvature_from_jet(jet));
}

Polynomial random_poly_potential(std::uint64_t seed, int n, int degree) {
    Rng rng(seed);
    Polynomial K(n);
    // Flat part sum |z^a|^2.
    for (int a = 0; a < n; ++a) {
        Polynomial::Key key(2 * n, 0);
        key[a] = 1;
        key[n + a] = 1;
        K.add_term(key, 1.0);
    }
    // All monomials z^a zbar^b with 1 <= |a|+|b| <= degree, lexicographic
    // order, each with a random coefficient of magnitude <= 0.1; reality is
    // enforced by adding c/2 on (a,b) and conj(c)/2 on (b,a).
    std::vector<Polynomial::Key> keys;
    Polynomial::Key cur(2 * n, 0);
    std::function<void(int, int)> enumerate = [&](int pos, int remaining) {
        if (pos == 2 * n) {
            int total = 0;
            for (int e : cur) total += e;
            if (total >= 1) keys.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[pos] = e;
            enumerate(pos + 1, remaining - e);
        }
        cur[pos] = 0;
    };
    enumerate(0, degree);
    const double bound = 0.1 / (2.0 * std::sqrt(2.0));
    for (const auto& key : keys) {
        const cdouble c(bound * rng.symmetric(), bound * rng.symmetric());
        Polynomial::Key swapped(2 * n);
        for (int i = 0; i < n; ++i) {
            swapped[i] = key[n + i];
            swapped[n + i] = key[i];
        }
        K.add_term(key, 0.5 * c);
        K.add_term(swapped, 0.5 * std::conj(c));
    }
    return K;
}

KaehlerChart numeric_chart_from_polynomial(const Polynomial& K) {
    const int n = K.vars();
    NumericBackend nb;
    nb.potential = [K, n](const Eigen::VectorXd& p) {
        std::vector<cdouble> z(n);
        for (int i = 0; i < n; ++i) z[i] = cdouble(p[i], p[n + i]);
        return K.eval(z).real();
    };
    return KaehlerChart(n, nb, "numeric-poly");
}

KaehlerChart catalog_chart(const std::string& name, int n, std::uint64_t seed, int degree) {
    if (n <= 0) throw UnsupportedDimension("complex dimension must be positive");
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    if (name == "flat")
        return KaehlerChart(n, ClosedFormBackend{{{RadialGroup::Profile::Linear, all}}}, name);
    if (name == "fubini-study")
        return KaehlerChart(n, ClosedFormBackend{{{RadialGroup::Profile::LogPlus, all}}}, name);
    if (name == "complex-hyperbolic")
        return KaehlerChart(n, ClosedFormBackend{{{RadialGroup::Profile::LogMinus, all}}}, name);
    if (name == "product-cp1-cp1") {
        if (n != 2) throw UnsupportedDimension("product-cp1-cp1 requires n = 2");
        ClosedFormBackend cf{{{RadialGroup::Profile::LogPlus, {0}},
                              {RadialGroup::Profile::LogPlus, {1}}}};
        return KaehlerChart(n, cf, name);
    }
    if (name == "random-poly")
        return KaehlerChart(n, PolynomialBackend{random_poly_potential(seed, n, degree)}, name);
    throw UnknownName("unknown chart: " + name);
}

}  // namespace bochner
