// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: pointwise tensor computation, identity suites, and
// homothety certificates with machine-readable JSON reports.
//
// Exit codes: 0 ok, 1 residual breach, 2 parse/usage error, 3 domain error,
// 4 NotPreserving, 5 BochnerFlat, 6 other certificate verdicts.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bochner/bochner.hpp"
#include "bochner/errors.hpp"
#include "bochner/homothety.hpp"
#include "bochner/io.hpp"
#include "bochner/rng.hpp"
#include "bochner/tensor_ops.hpp"

using json = nlohmann::ordered_json;
using namespace bochner;

namespace {

json matrix_json(const Eigen::MatrixXd& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        out.push_back(row);
    }
    return out;
}

json vector_json(const Eigen::VectorXd& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

json tensor_json(const Tensor4& t) {
    const int d = t.dim();
    json out = json::array();
    for (int i = 0; i < d; ++i) {
        json a = json::array();
        for (int j = 0; j < d; ++j) {
            json b = json::array();
            for (int k = 0; k < d; ++k) {
                json c = json::array();
                for (int l = 0; l < d; ++l) c.push_back(t(i, j, k, l));
                b.push_back(c);
            }
            a.push_back(b);
        }
        out.push_back(a);
    }
    return out;
}

json residuals_json(const SymmetryResiduals& r) {
    return json{{"skew12", r.skew12}, {"skew34", r.skew34}, {"pair", r.pair},
                {"bianchi", r.bianchi}, {"j_last", r.j_last}, {"j_first", r.j_first}};
}

json report_json(const HomothetyReport& rep) {
    json out;
    out["verdict"] = to_string(rep.verdict);
    if (rep.mu) out["mu"] = *rep.mu;
    out["lambda"] = {rep.lambda1, rep.lambda2};
    if (rep.probe_x.size()) {
        out["probe"] = {{"x", vector_json(rep.probe_x)}, {"y", vector_json(rep.probe_y)}};
        out["basis"] = {{"e1", vector_json(rep.e1)}, {"e2", vector_json(rep.e2)}};
    }
    out["residuals"] = rep.residuals;
    return out;
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << report.dump(2) << "\n";
    }
}

json base_report(const std::string& command) {
    json r;
    r["command"] = command;
    r["timestamp"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::system_clock::now().time_since_epoch()).count();
    return r;
}

Eigen::VectorXd parse_point(const std::string& csv) {
    std::vector<double> vals;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            vals.push_back(std::stod(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError(0, "bad coordinate '" + tok + "'");
        }
    }
    Eigen::VectorXd p(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) p[static_cast<int>(i)] = vals[i];
    return p;
}

KaehlerChart load_chart(const std::string& name, const std::string& chart_file, int n,
                        std::uint64_t seed, int degree) {
    if (!chart_file.empty()) {
        std::ifstream f(chart_file);
        if (!f) throw ParseError(0, "cannot open chart file: " + chart_file);
        return chart_from_spec(parse_chart_spec(f));
    }
    return catalog_chart(name, n, seed, degree);
}

int cmd_compute(const std::string& chart_name, const std::string& chart_file,
                const std::string& point_csv, int n, std::uint64_t seed, int degree,
                const std::string& out_path) {
    const KaehlerChart chart = load_chart(chart_name, chart_file, n, seed, degree);
    const Eigen::VectorXd p = parse_point(point_csv);
    if (p.size() != 2 * chart.complex_dim())
        throw ParseError(0, "point needs " + std::to_string(2 * chart.complex_dim()) +
                                " coordinates");

    const HermitianFrame frame = metric_at(chart, p);
    const Tensor4 R = curvature_at(chart, p);
    const CurvatureBundle bundle = make_bundle(frame, R);
    const BochnerTensor B = bochner_from_curvature(bundle);

    Rng rng(1);
    double eq1 = 0;
    for (int i = 0; i < 8; ++i)
        eq1 = std::max(eq1, trace_identity_residual(B, rng.unit_vector(frame.dim())));

    json rep = base_report("compute");
    rep["inputs"] = {{"chart", chart.name()}, {"point", vector_json(p)}};
    json res;
    res["g"] = matrix_json(frame.g);
    res["J"] = matrix_json(frame.J);
    res["R"] = tensor_json(R);
    res["S"] = matrix_json(bundle.S);
    res["tau"] = bundle.tau;
    res["B"] = tensor_json(B.B);
    res["curvature_norm"] = R.max_abs();
    res["bochner_norm"] = B.B.max_abs();
    res["symmetry_residuals_R"] = residuals_json(curvature_symmetry_residuals(R, frame));
    res["symmetry_residuals_B"] = residuals_json(curvature_symmetry_residuals(B.B, frame));
    res["eq1_residual"] = eq1;
    rep["results"] = res;
    rep["status"] = "ok";
    emit(rep, out_path);
    return 0;
}

struct SuiteWorst {
    double symmetry = 0, eq1 = 0, ricci_of_b = 0, idempotence = 0;
    std::string worst_case;
};

void run_suite_on_bundle(const CurvatureBundle& bundle, const std::string& label,
                         SuiteWorst& worst) {
    const BochnerTensor B = bochner_from_curvature(bundle);
    const double normB = std::max(B.B.max_abs(), 1e-300);
    const double before = std::max({worst.symmetry, worst.eq1, worst.ricci_of_b,
                                    worst.idempotence});

    const SymmetryResiduals sr = curvature_symmetry_residuals(B.B, bundle.frame);
    worst.symmetry = std::max(worst.symmetry, sr.max());

    Rng rng(7);
    for (int i = 0; i < 4; ++i)
        worst.eq1 = std::max(
            worst.eq1, trace_identity_residual(B, rng.unit_vector(bundle.frame.dim())));

    if (B.B.max_abs() > 0) {
        worst.ricci_of_b = std::max(
            worst.ricci_of_b,
            contract_ricci(B.B, bundle.frame).cwiseAbs().maxCoeff() / normB);
        worst.idempotence = std::max(worst.idempotence, bochner_idempotence_residual(B));
    }
    const double after = std::max({worst.symmetry, worst.eq1, worst.ricci_of_b,
                                   worst.idempotence});
    if (after > before) worst.worst_case = label;
}

int cmd_check(const std::string& chart_name, bool random, int trials, std::uint64_t seed,
              int n, const std::string& out_path) {
    SuiteWorst worst;
    if (random) {
        if (trials <= 0) throw ParseError(0, "--trials must be positive");
        for (int t = 0; t < trials; ++t)
            run_suite_on_bundle(random_kaehler_curvature(seed + static_cast<std::uint64_t>(t), n),
                                "seed " + std::to_string(seed + t), worst);
    } else {
        const KaehlerChart chart = catalog_chart(chart_name, n);
        Rng rng(seed);
        for (int t = 0; t < 5; ++t) {
            Eigen::VectorXd p = 0.2 * rng.vector(2 * n);
            if (t == 0) p.setZero();
            if (!chart.in_domain(p)) continue;
            const HermitianFrame frame = metric_at(chart, p);
            run_suite_on_bundle(make_bundle(frame, curvature_at(chart, p)),
                                chart.name() + " point " + std::to_string(t), worst);
        }
    }
    const double tol_sym = 1e-8, tol_idem = 1e-9;
    const bool pass = worst.symmetry <= tol_sym && worst.eq1 <= tol_sym &&
                      worst.ricci_of_b <= tol_sym && worst.idempotence <= tol_idem;

    json rep = base_report("check");
    rep["inputs"] = {{"chart", chart_name}, {"random", random}, {"trials", trials},
                     {"seed", seed}, {"n", n}};
    rep["results"] = {{"max_symmetry_residual", worst.symmetry},
                      {"max_eq1_residual", worst.eq1},
                      {"max_ricci_of_b_residual", worst.ricci_of_b},
                      {"max_idempotence_residual", worst.idempotence},
                      {"worst_case", worst.worst_case}};
    rep["status"] = pass ? "ok" : "residual-breach";
    emit(rep, out_path);
    return pass ? 0 : 1;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Homothety: return 0;
        case Verdict::NotPreserving: return 4;
        case Verdict::BochnerFlat: return 5;
        default: return 6;
    }
}

int cmd_certify(const std::string& map_path, double tol, const std::string& out_path) {
    std::ifstream f(map_path);
    if (!f) throw ParseError(0, "cannot open map file: " + map_path);
    const auto blocks = parse_map_file(f);
    if (blocks.size() != 1)
        throw ParseError(blocks.size() > 1 ? blocks[1].line : 0,
                         "certify expects exactly one block");
    auto [p, q, map] = realize_block(blocks[0]);
    const HomothetyReport cert = homothety_certificate(p, q, map, tol);

    json rep = base_report("certify");
    rep["inputs"] = {{"map_file", map_path}, {"chart", blocks[0].chart}, {"tol", tol}};
    rep["results"] = report_json(cert);
    rep["status"] = to_string(cert.verdict);
    emit(rep, out_path);
    return verdict_exit(cert.verdict);
}

int cmd_constancy(const std::string& map_path, double tol, const std::string& out_path) {
    std::ifstream f(map_path);
    if (!f) throw ParseError(0, "cannot open map file: " + map_path);
    const auto blocks = parse_map_file(f);
    if (blocks.size() < 2) throw ParseError(0, "constancy needs at least 2 blocks");
    std::vector<std::tuple<PointData, PointData, HolomorphicLinearMap>> tuples;
    for (const auto& b : blocks) tuples.push_back(realize_block(b));
    const ConstancyResult res = multi_point_constancy(tuples, tol);

    json rep = base_report("constancy");
    rep["inputs"] = {{"map_file", map_path}, {"blocks", blocks.size()}, {"tol", tol}};
    json results;
    results["mu"] = res.mu;
    results["constant"] = res.constant;
    results["first_failure"] = res.first_failure;
    json verdicts = json::array();
    for (const auto& r : res.reports) verdicts.push_back(to_string(r.verdict));
    results["verdicts"] = verdicts;
    rep["results"] = results;
    rep["status"] = res.constant ? "ok" : "not-constant";
    emit(rep, out_path);
    if (res.constant) return 0;
    if (res.first_failure >= 0)
        return verdict_exit(res.reports[res.first_failure].verdict);
    return 6;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bochner curvature toolkit"};
    app.require_subcommand(1);

    std::string chart = "flat", chart_file, point = "0,0,0,0", out_path, map_path;
    int n = 2, degree = 4, trials = 50;
    std::uint64_t seed = 0;
    double tol = 1e-7;
    bool random = false;

    auto* compute = app.add_subcommand("compute", "tensors at a chart point");
    compute->add_option("--chart", chart, "catalog chart name");
    compute->add_option("--chart-file", chart_file, "chart specification file");
    compute->add_option("--point", point, "comma-separated 2n coordinates")->required();
    compute->add_option("--n", n, "complex dimension");
    compute->add_option("--seed", seed, "seed for random-poly charts");
    compute->add_option("--degree", degree, "degree for random-poly charts");
    compute->add_option("--out", out_path, "output path (default stdout)");

    auto* check = app.add_subcommand("check", "identity suite over a corpus");
    check->add_option("--chart", chart, "catalog chart name");
    check->add_flag("--random", random, "use the random bundle corpus");
    check->add_option("--trials", trials, "number of random bundles");
    check->add_option("--seed", seed, "base seed");
    check->add_option("--n", n, "complex dimension");
    check->add_option("--out", out_path, "output path (default stdout)");

    auto* certify = app.add_subcommand("certify", "homothety certificate from a map file");
    certify->add_option("--map", map_path, "map file")->required();
    certify->add_option("--tol", tol, "certificate tolerance");
    certify->add_option("--out", out_path, "output path (default stdout)");

    auto* constancy = app.add_subcommand("constancy", "multi-point mu constancy");
    constancy->add_option("--map", map_path, "map file with >= 2 blocks");
    constancy->add_option("--tol", tol, "certificate tolerance");
    constancy->add_option("--out", out_path, "output path (default stdout)");
    constancy->get_option("--map")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed())
            return cmd_compute(chart, chart_file, point, n, seed, degree, out_path);
        if (check->parsed())
            return cmd_check(chart, random, trials, seed, n, out_path);
        if (certify->parsed()) return cmd_certify(map_path, tol, out_path);
        return cmd_constancy(map_path, tol, out_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const OutsideDomain& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const NotPositiveDefinite& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const UnknownName& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedDimension& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    }
}
