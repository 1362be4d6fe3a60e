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
#include <vector>

namespace paritylab {

using cdouble = std::complex<double>;

/// Dense row-major complex matrix; only the operations the numerical
/// pipelines need.
struct CMat {
    int rows = 0, cols = 0;
    std::vector<cdouble> a;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, cdouble(0, 0)) {}
    static CMat identity(int n);

    cdouble &at(int r, int c) { return a[(size_t)r * cols + c]; }
    const cdouble &at(int r, int c) const { return a[(size_t)r * cols + c]; }

    CMat adjoint() const;
    CMat operator*(const CMat &o) const;
    CMat operator+(const CMat &o) const;
    CMat operator-(const CMat &o) const;
    CMat scaled(cdouble f) const;
    std::vector<cdouble> apply(const std::vector<cdouble> &v) const;

    cdouble trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    double hermiticity_defect() const;
};

struct EigResult {
    /// Descending eigenvalues.
    std::vector<double> values;
    /// Column k is the eigenvector of values[k].
    CMat vectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Deterministic sweep
/// order; ties in the final sort keep first-seen order.
EigResult jacobi_eigh(CMat h, int max_sweeps = 64, double tol = 1e-13);

/// Number of eigenvalues larger than threshold.
int count_eigenvalues_above(const CMat &hermitian, double threshold);

}  // namespace paritylab
