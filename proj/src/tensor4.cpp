// SPDX-License-Identifier: Apache-2.0
#include "bochner/tensor4.hpp"

#include <cmath>

#include "bochner/errors.hpp"

namespace bochner {

double Tensor4::eval(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                     const Eigen::VectorXd& z, const Eigen::VectorXd& w) const {
    return eval3(x, y, z).dot(w);
}

Eigen::VectorXd Tensor4::eval3(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                               const Eigen::VectorXd& z) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(d_);
    for (int i = 0; i < d_; ++i) {
        if (x[i] == 0.0) continue;
        for (int j = 0; j < d_; ++j) {
            if (y[j] == 0.0) continue;
            const double xy = x[i] * y[j];
            for (int k = 0; k < d_; ++k) {
                if (z[k] == 0.0) continue;
                const double xyz = xy * z[k];
                for (int l = 0; l < d_; ++l) out[l] += xyz * (*this)(i, j, k, l);
            }
        }
    }
    return out;
}

Eigen::MatrixXd Tensor4::slice2(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d_, d_);
    for (int i = 0; i < d_; ++i) {
        if (x[i] == 0.0) continue;
        for (int j = 0; j < d_; ++j) {
            if (y[j] == 0.0) continue;
            const double xy = x[i] * y[j];
            for (int k = 0; k < d_; ++k)
                for (int l = 0; l < d_; ++l) out(k, l) += xy * (*this)(i, j, k, l);
        }
    }
    return out;
}

Tensor4& Tensor4::operator+=(const Tensor4& o) {
    if (o.n_ != n_) throw DimensionMismatch("Tensor4 dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Tensor4& Tensor4::operator-=(const Tensor4& o) {
    if (o.n_ != n_) throw DimensionMismatch("Tensor4 dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Tensor4& Tensor4::operator*=(double c) {
    for (double& v : a_) v *= c;
    return *this;
}

}  // namespace bochner
