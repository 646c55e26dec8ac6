// SPDX-License-Identifier: Apache-2.0
#include "bochner/polynomial.hpp"

#include <cmath>

#include "bochner/errors.hpp"

namespace bochner {

void Polynomial::add_term(const Key& key, cdouble c) {
    if (static_cast<int>(key.size()) != 2 * n_)
        throw DimensionMismatch("monomial exponent count does not match variable count");
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (c != cdouble(0.0)) terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (std::abs(it->second) == 0.0) terms_.erase(it);
}

Polynomial Polynomial::dz(int g) const {
    Polynomial out(n_);
    for (const auto& [key, c] : terms_) {
        if (key[g] == 0) continue;
        Key k = key;
        k[g] -= 1;
        out.add_term(k, c * static_cast<double>(key[g]));
    }
    return out;
}

Polynomial Polynomial::dzbar(int d) const {
    Polynomial out(n_);
    for (const auto& [key, c] : terms_) {
        if (key[n_ + d] == 0) continue;
        Key k = key;
        k[n_ + d] -= 1;
        out.add_term(k, c * static_cast<double>(key[n_ + d]));
    }
    return out;
}

cdouble Polynomial::eval(const std::vector<cdouble>& z) const {
    cdouble sum = 0.0;
    for (const auto& [key, c] : terms_) {
        cdouble t = c;
        for (int i = 0; i < n_; ++i) {
            for (int e = 0; e < key[i]; ++e) t *= z[i];
            for (int e = 0; e < key[n_ + i]; ++e) t *= std::conj(z[i]);
        }
        sum += t;
    }
    return sum;
}

double Polynomial::reality_residual() const {
    double worst = 0.0;
    for (const auto& [key, c] : terms_) {
        Key swapped(key.size());
        for (int i = 0; i < n_; ++i) {
            swapped[i] = key[n_ + i];
            swapped[n_ + i] = key[i];
        }
        auto it = terms_.find(swapped);
        cdouble other = (it != terms_.end()) ? it->second : cdouble(0.0);
        worst = std::max(worst, std::abs(c - std::conj(other)));
    }
    return worst;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(key, c);
    return *this;
}

}  // namespace bochner
