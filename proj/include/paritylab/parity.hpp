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
#include <optional>
#include <vector>

#include "paritylab/dense.hpp"
#include "paritylab/kernels.hpp"
#include "paritylab/state.hpp"

namespace paritylab {

/// Smallest local dimension admitting a parity-detecting state of n qudits:
/// ceil(sqrt(n)), in integer arithmetic.
int dmin(int n);

/// Classification of the admissible diagrams at (n, d): self-conjugate
/// shapes, shapes whose transpose also fits (conjugate pairs), and shapes
/// whose transpose does not fit (parity-blind sector).
struct MechanismReport {
    int n = 0, d = 0;
    std::vector<Partition> self_conjugate;
    std::vector<Partition> conjugate_pair;
    std::vector<Partition> blind;
    bool feasible = false;
};
MechanismReport feasible_mechanisms(int n, int d);

enum class BuildMethod { SelfConjugate, ConjugatePair };

struct ParityRecipe {
    int n = 0, d = 0;
    BuildMethod method = BuildMethod::SelfConjugate;
    Partition lambda;
    SplitTag branch = SplitTag::A;               // self-conjugate only
    std::optional<Ket> seed_ket;                 // self-conjugate; auto-picked when absent
    std::vector<cdouble> coefficients;           // conjugate-pair only
};

/// Exact state: split-irrep projector applied to a seed ket. Throws when the
/// seed is annihilated.
StateVector build_self_conjugate(const ParityRecipe &recipe);

/// Orthonormal bases of the two conjugate irreps realized on single-copy
/// contents, the representation matrices on adjacent transpositions, and the
/// change of basis tying them together.
struct PairBasis {
    int n = 0, d = 0;
    Partition lambda;
    std::vector<StateVector> basis_plus;    // floats, orthonormal
    std::vector<StateVector> basis_minus;   // floats, orthonormal
    std::vector<CMat> rep;                  // D on (1,2),(2,3),...
    std::vector<CMat> rep_conj;             // transpose-shape D on the same generators
    CMat intertwiner;
};
PairBasis conjugate_pair_basis(int n, int d, const Partition &lambda);

/// Equal-weight combination sum_k phi_k (|v_k,s+> + |v_k,s->), float mode.
StateVector build_conjugate_pair(const ParityRecipe &recipe);

struct ParityCheck {
    bool valid = false;
    double max_cross_overlap = 0;   // normalized magnitude
    int n_even = 0, n_odd = 0;
    bool exact_zeros = false;
};

/// Full cross-Gram test between the even and odd orbits of the state.
ParityCheck verify_parity(const StateVector &psi, Exec exec = Exec::Parallel);

struct HypothesisPair {
    CMat rho0, rho1;
};

/// Density pair of the two-hypothesis discrimination problem: the even-orbit
/// mixture of |psi><psi| and its conjugate by a transposition.
HypothesisPair hypothesis_pair(const StateVector &psi, std::uint64_t dense_bound = 4096,
                               Exec exec = Exec::Parallel);

struct TrialLog {
    std::uint64_t perm_rank = 0;
    int parity = 1;
    bool guessed_even = false;
    bool success = false;
};

struct SimulationReport {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double empirical_ps = 0;
    std::uint64_t seed = 0;
    std::vector<TrialLog> log;
};

/// Draw uniform permutations, measure {projector onto the even-orbit span,
/// complement} by Born sampling, guess parity from the outcome. Per-trial
/// streams are derived as seed + trial index.
SimulationReport simulate(const StateVector &psi, std::uint64_t trials, std::uint64_t seed,
                          bool allow_invalid = false, Exec exec = Exec::Parallel);

/// The involution V with V D(sigma) V^dag = sign(sigma) D(sigma) on the
/// representation carried by a self-conjugate shape.
CMat split_automorphism(const Partition &lambda);

/// Dense matrix of a group-algebra element acting on (C^d)^n.
CMat algebra_matrix(const AlgebraElement &a, int d);

}  // namespace paritylab
