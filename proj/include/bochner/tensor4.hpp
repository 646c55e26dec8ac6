// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <vector>

namespace bochner {

// Dense rank-4 covariant tensor over a 2n-dimensional real vector space.
// Row-major over the four indices, each in [0, 2n).
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(int n) : n_(n), d_(2 * n), a_(static_cast<size_t>(d_) * d_ * d_ * d_, 0.0) {}

    int complex_dim() const { return n_; }
    int dim() const { return d_; }

    double& operator()(int i, int j, int k, int l) {
        return a_[((static_cast<size_t>(i) * d_ + j) * d_ + k) * d_ + l];
    }
    double operator()(int i, int j, int k, int l) const {
        return a_[((static_cast<size_t>(i) * d_ + j) * d_ + k) * d_ + l];
    }

    // Max-abs entry norm; the reference norm for all relative tolerances.
    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    // T(x, y, z, w) by full contraction.
    double eval(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                const Eigen::VectorXd& z, const Eigen::VectorXd& w) const;

    // Vector of components T(x, y, z, e_l) over the coordinate basis in the
    // last slot (a covector).
    Eigen::VectorXd eval3(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                          const Eigen::VectorXd& z) const;

    // Bilinear form C with C(z, w) = T(x, y, z, w).
    Eigen::MatrixXd slice2(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

    Tensor4& operator+=(const Tensor4& o);
    Tensor4& operator-=(const Tensor4& o);
    Tensor4& operator*=(double c);
    friend Tensor4 operator+(Tensor4 a, const Tensor4& b) { return a += b; }
    friend Tensor4 operator-(Tensor4 a, const Tensor4& b) { return a -= b; }
    friend Tensor4 operator*(double c, Tensor4 a) { return a *= c; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

private:
    int n_ = 0;
    int d_ = 0;
    std::vector<double> a_;
};

}  // namespace bochner
