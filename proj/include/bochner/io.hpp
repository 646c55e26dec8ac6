// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "bochner/chart.hpp"
#include "bochner/homothety.hpp"

namespace bochner {

// Chart specification document: flat key-value lines (`name`, `n`, optional
// `seed`, `degree`) plus optional inline polynomial lines of the form
// `<2n exponent integers> <re> <im>`. `#` starts a comment. Errors carry
// line numbers.
struct ChartSpec {
    std::string name;
    int n = 0;
    std::uint64_t seed = 0;
    int degree = 4;
    std::optional<Polynomial> inline_potential;
};

ChartSpec parse_chart_spec(std::istream& in);
KaehlerChart chart_from_spec(const ChartSpec& spec);

// Map-file block: chart name, points p and q, and the 2n x 2n matrix F as
// whitespace-separated rows. Blocks are separated by blank lines.
struct MapBlock {
    std::string chart;
    ChartPoint point_p;
    ChartPoint point_q;
    Eigen::MatrixXd F;
    int line = 0;  // line of the block's first field, for diagnostics
};

std::vector<MapBlock> parse_map_file(std::istream& in);

// Builds the certificate inputs for one block (frames and Bochner tensors at
// p and q through the named catalog chart).
std::tuple<PointData, PointData, HolomorphicLinearMap> realize_block(const MapBlock& block);

}  // namespace bochner
