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

#include <vector>

#include "paritylab/dense.hpp"
#include "paritylab/state.hpp"

namespace paritylab {

/// Execution policy for the data-parallel kernels. Serial is the reference
/// implementation; Parallel (OpenMP) must produce bit-identical results, so
/// every kernel fixes its accumulation order independently of scheduling.
enum class Exec { Serial, Parallel };

/// Gram block g[i][j] = <a_i | b_j>, float pipeline.
CMat gram_float(const std::vector<StateVector> &a, const std::vector<StateVector> &b,
                Exec exec = Exec::Parallel);

/// Gram block in exact arithmetic.
std::vector<std::vector<Cyclo>> gram_exact(const std::vector<StateVector> &a,
                                           const std::vector<StateVector> &b,
                                           Exec exec = Exec::Parallel);

/// (1/k) * sum_i |s_i><s_i| as a dense d^n x d^n matrix.
CMat mixture_density(const std::vector<StateVector> &states, Exec exec = Exec::Parallel);

/// act(p, psi) for every p, order preserved.
std::vector<StateVector> orbit_states(const StateVector &psi, const std::vector<Permutation> &perms,
                                      Exec exec = Exec::Parallel);

}  // namespace paritylab
