// SPDX-License-Identifier: Apache-2.0
#include "bochner/io.hpp"

#include <cctype>
#include <sstream>

#include "bochner/errors.hpp"

namespace bochner {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

bool looks_numeric(const std::string& t) {
    return !t.empty() && (std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '-' ||
                          t[0] == '+' || t[0] == '.');
}

double parse_double(const std::string& t, int line) {
    try {
        size_t pos = 0;
        double v = std::stod(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a number, got '" + t + "'");
    }
}

int parse_int(const std::string& t, int line) {
    try {
        size_t pos = 0;
        int v = std::stoi(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + t + "'");
    }
}

}  // namespace

ChartSpec parse_chart_spec(std::istream& in) {
    ChartSpec spec;
    std::vector<std::tuple<Polynomial::Key, double, double, int>> monomials;
    std::string raw;
    int lineno = 0;
    bool have_name = false, have_n = false;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto toks = tokens(strip_comment(raw));
        if (toks.empty()) continue;
        if (!looks_numeric(toks[0])) {
            if (toks.size() != 2) throw ParseError(lineno, "expected 'key value'");
            const std::string& key = toks[0];
            if (key == "name") { spec.name = toks[1]; have_name = true; }
            else if (key == "n") { spec.n = parse_int(toks[1], lineno); have_n = true; }
            else if (key == "seed") spec.seed = static_cast<std::uint64_t>(
                std::stoull(toks[1]));
            else if (key == "degree") spec.degree = parse_int(toks[1], lineno);
            else throw ParseError(lineno, "unknown key '" + key + "'");
            continue;
        }
        // Monomial line: 2n exponents then re im.
        if (!have_n) throw ParseError(lineno, "'n' must appear before monomial lines");
        if (static_cast<int>(toks.size()) != 2 * spec.n + 2)
            throw ParseError(lineno, "monomial line needs " + std::to_string(2 * spec.n) +
                                         " exponents plus re and im");
        Polynomial::Key key(2 * spec.n);
        for (int i = 0; i < 2 * spec.n; ++i) {
            key[i] = parse_int(toks[i], lineno);
            if (key[i] < 0) throw ParseError(lineno, "exponents must be nonnegative");
        }
        monomials.emplace_back(key, parse_double(toks[2 * spec.n], lineno),
                               parse_double(toks[2 * spec.n + 1], lineno), lineno);
    }
    if (!have_name) throw ParseError(0, "missing required field 'name'");
    if (!have_n) throw ParseError(0, "missing required field 'n'");
    if (spec.n <= 0) throw ParseError(0, "'n' must be positive");
    if (!monomials.empty()) {
        Polynomial K(spec.n);
        for (const auto& [key, re, im, ln] : monomials) K.add_term(key, cdouble(re, im));
        if (K.reality_residual() > 1e-12)
            throw ParseError(std::get<3>(monomials.front()),
                             "inline polynomial is not real-valued");
        spec.inline_potential = std::move(K);
    }
    return spec;
}

KaehlerChart chart_from_spec(const ChartSpec& spec) {
    if (spec.inline_potential)
        return KaehlerChart(spec.n, PolynomialBackend{*spec.inline_potential}, spec.name);
    return catalog_chart(spec.name, spec.n, spec.seed, spec.degree);
}

std::vector<MapBlock> parse_map_file(std::istream& in) {
    std::vector<MapBlock> blocks;
    MapBlock cur;
    std::vector<std::vector<double>> f_rows;
    bool in_block = false;
    bool expecting_f = false;
    int lineno = 0;

    auto flush = [&](int at_line) {
        if (!in_block) return;
        if (cur.chart.empty()) throw ParseError(cur.line, "block is missing 'chart'");
        if (cur.point_p.size() == 0) throw ParseError(cur.line, "block is missing 'point-p'");
        if (cur.point_q.size() == 0) throw ParseError(cur.line, "block is missing 'point-q'");
        const int d = static_cast<int>(cur.point_p.size());
        if (static_cast<int>(f_rows.size()) != d)
            throw ParseError(at_line, "matrix F needs " + std::to_string(d) + " rows");
        cur.F.resize(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) cur.F(i, j) = f_rows[i][j];
        blocks.push_back(cur);
        cur = MapBlock{};
        f_rows.clear();
        in_block = false;
        expecting_f = false;
    };

    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto toks = tokens(strip_comment(raw));
        if (toks.empty()) {
            flush(lineno);
            continue;
        }
        if (!in_block) {
            in_block = true;
            cur.line = lineno;
        }
        if (toks[0] == "chart") {
            if (toks.size() != 2) throw ParseError(lineno, "expected 'chart <name>'");
            cur.chart = toks[1];
        } else if (toks[0] == "point-p" || toks[0] == "point-q") {
            Eigen::VectorXd v(toks.size() - 1);
            for (size_t i = 1; i < toks.size(); ++i)
                v[static_cast<int>(i) - 1] = parse_double(toks[i], lineno);
            (toks[0] == "point-p" ? cur.point_p : cur.point_q) = v;
        } else if (toks[0] == "F") {
            expecting_f = true;
        } else if (expecting_f && looks_numeric(toks[0])) {
            std::vector<double> row;
            for (const auto& t : toks) row.push_back(parse_double(t, lineno));
            if (!f_rows.empty() && row.size() != f_rows.front().size())
                throw ParseError(lineno, "ragged matrix row");
            f_rows.push_back(std::move(row));
        } else {
            throw ParseError(lineno, "unexpected token '" + toks[0] + "'");
        }
    }
    flush(lineno);
    if (blocks.empty()) throw ParseError(0, "no blocks found");
    return blocks;
}

std::tuple<PointData, PointData, HolomorphicLinearMap> realize_block(const MapBlock& block) {
    const int d = static_cast<int>(block.point_p.size());
    if (d % 2 != 0 || block.point_q.size() != d)
        throw ParseError(block.line, "points must have matching even coordinate counts");
    const int n = d / 2;
    const KaehlerChart chart = catalog_chart(block.chart, n);
    auto at = [&](const ChartPoint& pt) {
        HermitianFrame frame = metric_at(chart, pt);
        const Tensor4 R = curvature_at(chart, pt);
        return PointData{frame, bochner_from_curvature(make_bundle(frame, R)).B};
    };
    PointData p = at(block.point_p);
    PointData q = at(block.point_q);
    HolomorphicLinearMap map{p.frame, q.frame, block.F};
    return {std::move(p), std::move(q), std::move(map)};
}

}  // namespace bochner
