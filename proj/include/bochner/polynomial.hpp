// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <map>
#include <vector>

namespace bochner {

using cdouble = std::complex<double>;

// Sparse polynomial in z^1..z^n and their conjugates, stored as a map from
// exponent vectors (z exponents, then zbar exponents) to complex
// coefficients. Differentiation is exact exponent bookkeeping; this backend
// is the machine-precision oracle for the finite-difference pipeline.
class Polynomial {
public:
    // Exponents of z^1..z^n followed by zbar^1..zbar^n.
    using Key = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(int n) : n_(n) {}

    int vars() const { return n_; }
    bool empty() const { return terms_.empty(); }
    const std::map<Key, cdouble>& terms() const { return terms_; }

    // Adds c * z^a zbar^b (accumulates; drops coefficients that cancel).
    void add_term(const Key& key, cdouble c);

    // d/dz^g and d/dzbar^d (0-based variable index).
    Polynomial dz(int g) const;
    Polynomial dzbar(int d) const;

    cdouble eval(const std::vector<cdouble>& z) const;

    // Real-valued iff coeff(a,b) == conj(coeff(b,a)) for every term.
    // Returns the max violation.
    double reality_residual() const;

    Polynomial& operator+=(const Polynomial& o);

private:
    int n_ = 0;
    std::map<Key, cdouble> terms_;
};

}  // namespace bochner
