// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>

namespace bochner {

// Deterministic source of reproducible draws. The engine is the standard
// mt19937_64 (Matsumoto-Nishimura, fully specified by the C++ standard);
// doubles are derived from the raw 64-bit stream directly so that sequences
// are identical across platforms and standard libraries. Distribution
// classes from <random> are intentionally not used: their output is
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform in [-1, 1).
    double symmetric() { return 2.0 * uniform01() - 1.0; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    int uniform_int(int n) {  // [0, n)
        return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
    }

    Eigen::VectorXd vector(int dim) {
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i) v[i] = symmetric();
        return v;
    }

    // Nonzero vector of Euclidean norm 1.
    Eigen::VectorXd unit_vector(int dim) {
        for (;;) {
            Eigen::VectorXd v = vector(dim);
            double n = v.norm();
            if (n > 1e-3) return v / n;
        }
    }

    Eigen::MatrixXd matrix(int rows, int cols) {
        Eigen::MatrixXd m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = symmetric();
        return m;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace bochner
