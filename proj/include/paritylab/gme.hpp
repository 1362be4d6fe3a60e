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

#include <cstdint>
#include <vector>

#include "paritylab/dense.hpp"
#include "paritylab/kernels.hpp"
#include "paritylab/state.hpp"

namespace paritylab {

/// Product state over n sites of local dimension d; every local vector is
/// kept at unit norm.
struct ProductState {
    int n = 0, d = 0;
    std::vector<std::vector<cdouble>> locals;

    /// Full tensor, length d^n.
    std::vector<cdouble> assemble() const;
};

struct SeesawOptions {
    int restarts = 64;
    int max_sweeps = 500;
    double tol = 1e-12;
    std::uint64_t seed = 0;
    bool fix_first_site = false;
    Exec exec = Exec::Parallel;
};

struct GmeResult {
    double max_overlap = 0;
    double entanglement = 1;   // 1 - max_overlap
    ProductState witness;
    int restarts_used = 0;
    int sweeps = 0;            // sweeps of the winning restart
    bool converged = false;
    std::vector<double> history;                    // winning restart, per sweep
    std::vector<std::vector<double>> all_histories; // one per restart
};

/// d x d operator M with <x|M|x> = <phi_1..x..phi_n| P |phi_1..x..phi_n>
/// for a unit vector x placed at `site` (0-based).
CMat reduced_operator(const CMat &P, const ProductState &phi, int site);

/// Coordinate-ascent maximization of <phi|P|phi> over product states: each
/// site update takes the top eigenvector of the reduced operator, so the
/// objective never decreases. Best restart wins; ties keep the lowest
/// restart index. Restart r draws from the stream seeded with seed + r.
GmeResult seesaw(const CMat &P, int n, int d, const SeesawOptions &opts = {});

/// Entanglement of a single pure state: see-saw against |psi><psi|.
GmeResult gme_of_pure_state(const StateVector &psi, const SeesawOptions &opts = {});

/// Normalized P|phi>, the subspace state closest to the given product state.
StateVector extremal_witness_state(const CMat &P, const ProductState &phi, int n, int d);

}  // namespace paritylab
