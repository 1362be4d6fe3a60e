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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paritylab/cyclotomic.hpp"
#include "paritylab/group_algebra.hpp"
#include "paritylab/perm.hpp"

namespace paritylab {

/// Computational-basis label of n qudits with levels {0..d-1}. Packed so the
/// leftmost tensor factor is the most significant digit; numeric order of
/// codes equals lexicographic order of digit strings.
struct Ket {
    int n = 0;
    int d = 2;
    std::uint64_t code = 0;

    static Ket from_digits(int d, const std::vector<int> &digits);
    static Ket parse(const std::string &text, int d);
    std::vector<int> digits() const;
    std::string str() const;

    bool operator==(const Ket &o) const { return n == o.n && d == o.d && code == o.code; }
};

enum class AmpMode { Exact, Float };

/// Sparse amplitude map over kets, in exact (cyclotomic) or float mode.
/// Zero amplitudes are never stored.
class StateVector {
  public:
    StateVector(int n, int d, AmpMode mode);
    static StateVector basis_state(const Ket &k, AmpMode mode = AmpMode::Exact);

    int n() const { return n_; }
    int d() const { return d_; }
    AmpMode mode() const { return mode_; }
    bool is_zero() const;
    size_t term_count() const;

    const std::map<std::uint64_t, Cyclo> &exact_amps() const { return exact_; }
    const std::map<std::uint64_t, std::complex<double>> &float_amps() const { return flt_; }

    void add(std::uint64_t code, const Cyclo &amp);
    void add(std::uint64_t code, std::complex<double> amp);

    StateVector to_float() const;
    StateVector scaled(const Cyclo &c) const;
    StateVector scaled(std::complex<double> c) const;
    friend StateVector operator+(const StateVector &a, const StateVector &b);
    friend StateVector operator-(const StateVector &a, const StateVector &b);

    /// Exact mode: squared norm as a rational. Float mode: sum of |amp|^2.
    mpq_class norm2_exact() const;
    double norm2() const;
    /// Float copy scaled to unit norm.
    StateVector normalized() const;

    /// Dense coefficient vector of length d^n (float).
    std::vector<std::complex<double>> dense() const;

    bool operator==(const StateVector &o) const {
        return n_ == o.n_ && d_ == o.d_ && mode_ == o.mode_ && exact_ == o.exact_ && flt_ == o.flt_;
    }
    bool operator!=(const StateVector &o) const { return !(*this == o); }

  private:
    int n_, d_;
    AmpMode mode_;
    std::map<std::uint64_t, Cyclo> exact_;
    std::map<std::uint64_t, std::complex<double>> flt_;
};

/// Basis-label action: digit at position i moves to position sigma(i).
std::uint64_t permuted_code(const Permutation &sigma, std::uint64_t code, int n, int d);

/// Tensor-permutation action: position k of the result takes the digit at
/// position sigma^{-1}(k) of the source.
StateVector act(const Permutation &sigma, const StateVector &psi);

/// Linear extension of act over a group-algebra element.
StateVector apply_algebra(const AlgebraElement &a, const StateVector &psi);

/// Conjugate-linear in the first argument.
Cyclo inner_exact(const StateVector &u, const StateVector &v);
std::complex<double> inner(const StateVector &u, const StateVector &v);

/// Scalar c with u == c * v, if one exists (exact test in exact mode,
/// cosine test at `tol` in float mode).
std::optional<Cyclo> proportional_exact(const StateVector &u, const StateVector &v);
std::optional<std::complex<double>> proportional(const StateVector &u, const StateVector &v,
                                                 double tol = 1e-10);

std::vector<StateVector> orbit(const StateVector &psi, const std::vector<Permutation> &perms);

struct SchurWeylLine {
    Partition lambda;
    unsigned long long dim_sym = 0;
    unsigned long long mult = 0;
    unsigned long long product = 0;
    std::optional<unsigned long long> measured_rank;
};

struct SchurWeylAudit {
    int n = 0, d = 0;
    unsigned long long total = 0;
    std::vector<SchurWeylLine> lines;
    bool balanced = false;
    bool ranks_match = true;
    /// "243 = 21+96+75+36+15"
    std::string balance_line() const;
};

/// Dimension bookkeeping of the simultaneous group actions on (C^d)^n.
/// With check_rank, also measures the numerical rank of every isotypic
/// projector on the computational basis (tolerance 1e-8).
SchurWeylAudit schur_weyl_audit(int n, int d, bool check_rank = false);

}  // namespace paritylab
