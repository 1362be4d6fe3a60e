// Copyright 2026 The ParityLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace paritylab {

/// Exact element of the cyclotomic field Q(zeta_N), zeta_N = exp(2*pi*i/N).
///
/// Values are kept in canonical form: coefficients over the power basis
/// zeta^0 .. zeta^{phi(N)-1} reduced modulo the N-th cyclotomic polynomial,
/// at the minimal conductor N containing the value. Equality of values is
/// therefore equality of (conductor, coefficient vector).
class Cyclo {
  public:
    Cyclo() : cond_(1), c_(1, mpq_class(0)) {}
    Cyclo(long v) : cond_(1), c_(1, mpq_class(v)) {}
    Cyclo(const mpq_class &v) : cond_(1), c_(1, v) { c_[0].canonicalize(); }

    /// zeta_n^k
    static Cyclo zeta(long n, long k = 1);
    /// Exact square root of any nonzero integer m (Gauss-sum embedding;
    /// negative m picks the branch i*sqrt(|m|)).
    static Cyclo sqrt_integer(long m);
    /// Exact sqrt(k) for square-free k >= 1. Throws on non-square-free input.
    static Cyclo from_sqrt_rational(long k);

    long conductor() const { return cond_; }
    const std::vector<mpq_class> &coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return cond_ == 1; }
    /// Requires is_rational().
    const mpq_class &rational_value() const;

    friend Cyclo operator+(const Cyclo &a, const Cyclo &b);
    friend Cyclo operator-(const Cyclo &a, const Cyclo &b);
    friend Cyclo operator*(const Cyclo &a, const Cyclo &b);
    Cyclo operator-() const;
    Cyclo &operator+=(const Cyclo &o);
    Cyclo &operator-=(const Cyclo &o);
    Cyclo &operator*=(const Cyclo &o);

    /// Complex conjugation (zeta -> zeta^{-1}).
    Cyclo conj() const;
    /// Multiplicative inverse. Throws on zero.
    Cyclo inverse() const;
    /// Galois map zeta -> zeta^j; requires gcd(j, conductor) == 1.
    Cyclo galois(long j) const;

    bool operator==(const Cyclo &o) const { return cond_ == o.cond_ && c_ == o.c_; }
    bool operator!=(const Cyclo &o) const { return !(*this == o); }

    /// Numerical value under zeta_N -> exp(2*pi*i/N).
    std::complex<double> embed() const;

    /// Human-readable form: rationals, q*zetaN^k, quadratic surds
    /// "(p+q*sqrt(d))/r" when detectable, raw polynomial otherwise.
    std::string str() const;

  private:
    Cyclo(long cond, std::vector<mpq_class> reduced_coeffs);
    // Build from coefficients indexed by exponent mod n (length n), then
    // reduce and normalize.
    static Cyclo from_exponents(long n, const std::vector<mpq_class> &by_exponent);
    void normalize_();
    bool try_descend_(long m);

    long cond_;
    std::vector<mpq_class> c_;
};

inline Cyclo operator*(const mpq_class &q, const Cyclo &a) { return Cyclo(q) * a; }

}  // namespace paritylab
