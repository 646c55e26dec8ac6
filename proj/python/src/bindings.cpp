// SPDX-License-Identifier: Apache-2.0
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bochner/bochner.hpp"
#include "bochner/chart.hpp"
#include "bochner/errors.hpp"
#include "bochner/homothety.hpp"
#include "bochner/rng.hpp"
#include "bochner/tensor_ops.hpp"

namespace py = pybind11;
using namespace bochner;

namespace {

py::array_t<double> tensor_to_numpy(const Tensor4& t) {
    const int d = t.dim();
    py::array_t<double> out({d, d, d, d});
    auto r = out.mutable_unchecked<4>();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) r(i, j, k, l) = t(i, j, k, l);
    return out;
}

KaehlerChart make_chart(const std::string& name, int n, std::uint64_t seed, int degree) {
    return catalog_chart(name, n, seed, degree);
}

py::dict residuals_dict(const SymmetryResiduals& r) {
    py::dict d;
    d["skew12"] = r.skew12;
    d["skew34"] = r.skew34;
    d["pair"] = r.pair;
    d["bianchi"] = r.bianchi;
    d["j_last"] = r.j_last;
    d["j_first"] = r.j_first;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bochner curvature toolkit: Kaehler metrics, curvature, the Bochner "
              "projection, and homothety certificates.";

    py::register_exception<OutsideDomain>(m, "OutsideDomain");
    py::register_exception<NotPositiveDefinite>(m, "NotPositiveDefinite");
    py::register_exception<UnknownName>(m, "UnknownName");
    py::register_exception<UnsupportedDimension>(m, "UnsupportedDimension");
    py::register_exception<BochnerFlatError>(m, "BochnerFlat");

    m.def(
        "metric",
        [](const std::string& chart, int n, const Eigen::VectorXd& point,
           std::uint64_t seed, int degree) {
            const HermitianFrame f = metric_at(make_chart(chart, n, seed, degree), point);
            return py::make_tuple(f.g, f.J);
        },
        py::arg("chart"), py::arg("n"), py::arg("point"), py::arg("seed") = 0,
        py::arg("degree") = 4, "Metric and complex structure at a chart point.");

    m.def(
        "curvature",
        [](const std::string& chart, int n, const Eigen::VectorXd& point,
           std::uint64_t seed, int degree) {
            return tensor_to_numpy(curvature_at(make_chart(chart, n, seed, degree), point));
        },
        py::arg("chart"), py::arg("n"), py::arg("point"), py::arg("seed") = 0,
        py::arg("degree") = 4, "(0,4) curvature tensor at a chart point.");

    m.def(
        "bochner",
        [](const std::string& chart, int n, const Eigen::VectorXd& point,
           std::uint64_t seed, int degree) {
            const KaehlerChart c = make_chart(chart, n, seed, degree);
            const HermitianFrame frame = metric_at(c, point);
            const Tensor4 R = curvature_at(c, point);
            const CurvatureBundle bundle = make_bundle(frame, R);
            const BochnerTensor B = bochner_from_curvature(bundle);
            py::dict out;
            out["B"] = tensor_to_numpy(B.B);
            out["R"] = tensor_to_numpy(R);
            out["S"] = bundle.S;
            out["tau"] = bundle.tau;
            out["bochner_norm"] = B.B.max_abs();
            out["curvature_norm"] = R.max_abs();
            out["symmetry_residuals"] = residuals_dict(
                curvature_symmetry_residuals(B.B, frame));
            Rng rng(1);
            double eq1 = 0;
            for (int i = 0; i < 8; ++i)
                eq1 = std::max(eq1,
                               trace_identity_residual(B, rng.unit_vector(frame.dim())));
            out["eq1_residual"] = eq1;
            return out;
        },
        py::arg("chart"), py::arg("n"), py::arg("point"), py::arg("seed") = 0,
        py::arg("degree") = 4,
        "Full pointwise bundle: curvature, Ricci data, and the Bochner tensor.");

    m.def(
        "certify",
        [](const std::string& chart, const Eigen::VectorXd& point_p,
           const Eigen::VectorXd& point_q, const Eigen::MatrixXd& F, double tol) {
            const int n = static_cast<int>(point_p.size()) / 2;
            const KaehlerChart c = make_chart(chart, n, 0, 4);
            auto at = [&](const Eigen::VectorXd& pt) {
                HermitianFrame frame = metric_at(c, pt);
                const Tensor4 R = curvature_at(c, pt);
                return PointData{frame, bochner_from_curvature(make_bundle(frame, R)).B};
            };
            PointData p = at(point_p);
            PointData q = at(point_q);
            const HomothetyReport rep =
                homothety_certificate(p, q, HolomorphicLinearMap{p.frame, q.frame, F}, tol);
            py::dict out;
            out["verdict"] = to_string(rep.verdict);
            if (rep.mu) out["mu"] = *rep.mu;
            out["lambda"] = py::make_tuple(rep.lambda1, rep.lambda2);
            out["residuals"] = rep.residuals;
            return out;
        },
        py::arg("chart"), py::arg("point_p"), py::arg("point_q"), py::arg("F"),
        py::arg("tol") = 1e-7,
        "Homothety certificate for the differential F between two chart points.");

    m.def(
        "check_random",
        [](int trials, std::uint64_t seed, int n) {
            double sym = 0, eq1 = 0, ricci = 0, idem = 0;
            for (int t = 0; t < trials; ++t) {
                const CurvatureBundle bundle =
                    random_kaehler_curvature(seed + static_cast<std::uint64_t>(t), n);
                const BochnerTensor B = bochner_from_curvature(bundle);
                sym = std::max(sym,
                               curvature_symmetry_residuals(B.B, bundle.frame).max());
                Rng rng(7);
                for (int i = 0; i < 4; ++i)
                    eq1 = std::max(eq1, trace_identity_residual(
                                            B, rng.unit_vector(bundle.frame.dim())));
                const double normB = std::max(B.B.max_abs(), 1e-300);
                ricci = std::max(ricci, contract_ricci(B.B, bundle.frame)
                                                .cwiseAbs().maxCoeff() / normB);
                idem = std::max(idem, bochner_idempotence_residual(B));
            }
            py::dict out;
            out["max_symmetry_residual"] = sym;
            out["max_eq1_residual"] = eq1;
            out["max_ricci_of_b_residual"] = ricci;
            out["max_idempotence_residual"] = idem;
            return out;
        },
        py::arg("trials"), py::arg("seed"), py::arg("n") = 2,
        "Identity suite over a seeded random curvature corpus; returns max residuals.");
}
