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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paritylab/errors.hpp"
#include "paritylab/parity.hpp"
#include "support/golden_states.hpp"

using namespace paritylab;

TEST_CASE("minimal local dimension") {
    CHECK(dmin(1) == 1);
    CHECK(dmin(3) == 2);
    CHECK(dmin(4) == 2);
    CHECK(dmin(5) == 3);
    CHECK(dmin(9) == 3);
    CHECK(dmin(10) == 4);
    CHECK(dmin(16) == 4);
    CHECK(dmin(17) == 5);
}

TEST_CASE("mechanism classification") {
    MechanismReport r42 = feasible_mechanisms(4, 2);
    CHECK(r42.feasible);
    CHECK(r42.self_conjugate == std::vector<Partition>{Partition({2, 2})});
    MechanismReport r43 = feasible_mechanisms(4, 3);
    CHECK(r43.conjugate_pair == std::vector<Partition>{Partition({3, 1}), Partition({2, 1, 1})});
    MechanismReport r52 = feasible_mechanisms(5, 2);
    CHECK_FALSE(r52.feasible);
    CHECK(r52.self_conjugate.empty());
    CHECK(r52.conjugate_pair.empty());
    // Feasibility matches the threshold everywhere in range.
    for (int n = 1; n <= 8; ++n)
        for (int d = 1; d <= 4; ++d) CHECK(feasible_mechanisms(n, d).feasible == (d >= dmin(n)));
}

TEST_CASE("self-conjugate builder reproduces the reference states") {
    ParityRecipe r3{3, 2, BuildMethod::SelfConjugate, Partition({2, 1}), SplitTag::B, Ket::parse("011", 2), {}};
    CHECK(proportional_exact(build_self_conjugate(r3), golden::three_qubit_state()).has_value());

    ParityRecipe r4{4, 2, BuildMethod::SelfConjugate, Partition({2, 2}), SplitTag::A, Ket::parse("0011", 2), {}};
    CHECK(proportional_exact(build_self_conjugate(r4), golden::m4_state()).has_value());

    ParityRecipe r5{5, 3, BuildMethod::SelfConjugate, Partition({3, 1, 1}), SplitTag::A, Ket::parse("00012", 3), {}};
    CHECK(proportional_exact(build_self_conjugate(r5), golden::five_qutrit_state()).has_value());
}

TEST_CASE("self-conjugate builder auto-selects a seed") {
    ParityRecipe r{4, 2, BuildMethod::SelfConjugate, Partition({2, 2}), SplitTag::A, std::nullopt, {}};
    StateVector s = build_self_conjugate(r);
    CHECK(proportional_exact(s, golden::m4_state()).has_value());
}

TEST_CASE("builder rejects bad inputs") {
    ParityRecipe bad{4, 2, BuildMethod::SelfConjugate, Partition({3, 1}), SplitTag::A, std::nullopt, {}};
    CHECK_THROWS_AS(build_self_conjugate(bad), DomainError);
    ParityRecipe annihilated{4, 2, BuildMethod::SelfConjugate, Partition({2, 2}), SplitTag::A,
                             Ket::parse("0000", 2), {}};
    CHECK_THROWS_AS(build_self_conjugate(annihilated), DomainError);
}

TEST_CASE("pair basis carries the reference representation matrices") {
    PairBasis pb = conjugate_pair_basis(4, 3, Partition({3, 1}));
    auto want = golden::rep_matrices_row_shape();
    auto want_conj = golden::rep_matrices_column_shape();
    REQUIRE(pb.rep.size() == 3);
    for (int g = 0; g < 3; ++g) {
        CHECK((pb.rep[g] - want[g]).max_abs() < 1e-9);
        CHECK((pb.rep_conj[g] - want_conj[g]).max_abs() < 1e-9);
    }
    // T up to a global phase.
    CMat t_ref = golden::intertwiner_reference();
    cdouble phase(0, 0);
    double big = 0;
    for (int i = 0; i < 9; ++i)
        if (std::abs(t_ref.a[i]) > 0.5 && std::abs(pb.intertwiner.a[i]) > big) {
            big = std::abs(pb.intertwiner.a[i]);
            phase = pb.intertwiner.a[i] / t_ref.a[i];
        }
    CHECK((pb.intertwiner - t_ref.scaled(phase)).max_abs() < 1e-9);
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-9);

    // Bases orthonormal and mutually orthogonal.
    auto all = pb.basis_plus;
    all.insert(all.end(), pb.basis_minus.begin(), pb.basis_minus.end());
    CMat g = gram_float(all, all);
    CHECK((g - CMat::identity(6)).max_abs() < 1e-10);

    // The sign relation on every generator.
    for (int gidx = 0; gidx < 3; ++gidx) {
        CMat lhs = pb.rep_conj[gidx] * pb.intertwiner;
        CMat rhs = pb.intertwiner.scaled(-1.0) * pb.rep[gidx];
        CHECK((lhs - rhs).max_abs() < 1e-9);
    }
}

TEST_CASE("conjugate-pair builder reproduces the reference state and variants pass") {
    ParityRecipe r{4, 3, BuildMethod::ConjugatePair, Partition({3, 1}), SplitTag::None, std::nullopt,
                   {cdouble(1, 0)}};
    StateVector built = build_conjugate_pair(r);
    CHECK(proportional(built, golden::four_qutrit_pair_state().to_float(), 1e-10).has_value());
    CHECK(verify_parity(built).valid);

    ParityRecipe r2 = r;
    r2.coefficients = {cdouble(0, 0), cdouble(1, 0)};
    StateVector second = build_conjugate_pair(r2);
    CHECK(verify_parity(second).valid);
    CHECK_FALSE(proportional(second, built, 1e-10).has_value());

    ParityRecipe zero = r;
    zero.coefficients = {cdouble(0, 0)};
    CHECK_THROWS_AS(build_conjugate_pair(zero), DomainError);
}

TEST_CASE("a single-irrep component is not parity-detecting") {
    PairBasis pb = conjugate_pair_basis(4, 3, Partition({3, 1}));
    ParityCheck chk = verify_parity(pb.basis_plus[0]);
    CHECK_FALSE(chk.valid);
    CHECK(chk.max_cross_overlap > 0.1);
}

TEST_CASE("parity verification") {
    ParityCheck good = verify_parity(golden::m4_state());
    CHECK(good.valid);
    CHECK(good.exact_zeros);
    CHECK(good.max_cross_overlap == 0.0);
    CHECK(good.n_even == 12);
    CHECK(good.n_odd == 12);

    ParityCheck bad = verify_parity(StateVector::basis_state(Ket::parse("000", 2)));
    CHECK_FALSE(bad.valid);
    CHECK(bad.max_cross_overlap == doctest::Approx(1.0));

    CHECK(verify_parity(golden::five_qutrit_state()).valid);
}

TEST_CASE("even states stay in the even span, odd ones leave it") {
    StateVector psi = golden::m4_state();
    auto evens = enumerate_group(4, GroupKind::A);
    auto even_orbit = orbit_states(psi, evens);
    auto cross = gram_exact(even_orbit, {act(Permutation::parse("(1,2)", 4), psi)});
    for (const auto &row : cross) CHECK(row[0].is_zero());
    // within the even block the overlaps are full for this one-dimensional case
    auto even_gram = gram_exact(even_orbit, even_orbit);
    for (const auto &row : even_gram)
        for (const auto &v : row) CHECK_FALSE(v.is_zero());
}

TEST_CASE("hypothesis pair invariants and discrimination") {
    HypothesisPair hp = hypothesis_pair(golden::m4_state());
    CHECK(hp.rho0.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hp.rho1.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hp.rho0.hermiticity_defect() < 1e-12);
    EigResult e = jacobi_eigh(hp.rho0);
    CHECK(e.values.back() > -1e-10);
    cdouble overlap(0, 0);
    for (int i = 0; i < hp.rho0.rows; ++i)
        for (int j = 0; j < hp.rho0.cols; ++j) overlap += hp.rho0.at(i, j) * hp.rho1.at(j, i);
    CHECK(std::abs(overlap) < 1e-12);
    CHECK_THROWS_AS(hypothesis_pair(golden::five_qutrit_state(), 100), BoundError);
}

TEST_CASE("below threshold the hypotheses coincide") {
    for (std::uint64_t code = 0; code < 32; ++code) {
        HypothesisPair hp = hypothesis_pair(StateVector::basis_state(Ket{5, 2, code}));
        CHECK((hp.rho0 - hp.rho1).frobenius_norm() < 1e-12);
    }
    HypothesisPair trivial = hypothesis_pair(StateVector::basis_state(Ket{3, 1, 0}));
    CHECK((trivial.rho0 - trivial.rho1).frobenius_norm() < 1e-12);
}

TEST_CASE("simulation is deterministic and exact on detecting states") {
    StateVector m4 = golden::m4_state();
    SimulationReport a = simulate(m4, 1000, 42);
    CHECK(a.trials == 1000);
    CHECK(a.successes == 1000);
    CHECK(a.empirical_ps == 1.0);
    SimulationReport b = simulate(m4, 1000, 42, false, Exec::Serial);
    CHECK(a.successes == b.successes);
    REQUIRE(a.log.size() == b.log.size());
    for (size_t i = 0; i < a.log.size(); ++i) {
        CHECK(a.log[i].perm_rank == b.log[i].perm_rank);
        CHECK(a.log[i].success == b.log[i].success);
    }
    SimulationReport empty = simulate(m4, 0, 1);
    CHECK(empty.trials == 0);
    CHECK(empty.log.empty());
    CHECK_THROWS_AS(simulate(StateVector::basis_state(Ket::parse("000", 2)), 10, 1), DomainError);
}

TEST_CASE("random guessing below threshold") {
    SimulationReport r = simulate(StateVector::basis_state(Ket{5, 2, 3}), 10000, 7, true);
    double se = std::sqrt(0.25 / 10000.0);
    CHECK(std::abs(r.empirical_ps - 0.5) <= 3 * se);
}

TEST_CASE("odd moves regenerate the other branch exactly") {
    StateVector psi = golden::m4_state();
    AlgebraElement pb = projector_element({Partition({2, 2}), SplitTag::B}, GroupKind::A, 4);
    StateVector moved = act(Permutation::parse("(1,2)", 4), psi);
    CHECK(apply_algebra(pb, moved) == moved);
    AlgebraElement pa = projector_element({Partition({2, 2}), SplitTag::A}, GroupKind::A, 4);
    CHECK(apply_algebra(pa, moved).is_zero());
}

TEST_CASE("split automorphism is a balanced involution") {
    for (auto parts : {std::vector<int>{2, 1}, {2, 2}, {3, 1, 1}}) {
        Partition lambda(parts);
        CMat v = split_automorphism(lambda);
        CHECK((v * v - CMat::identity(v.rows)).max_abs() < 1e-12);
        CHECK((v.adjoint() * v - CMat::identity(v.rows)).max_abs() < 1e-12);
        double tr_plus = 0;
        for (int i = 0; i < v.rows; ++i) tr_plus += 0.5 * (1.0 + v.at(i, i).real());
        CHECK(tr_plus == doctest::Approx((double)dim_sn(lambda) / 2).epsilon(1e-10));
        EigResult e = jacobi_eigh(v);
        CHECK(e.values.front() == doctest::Approx(1.0));
        CHECK(e.values.back() == doctest::Approx(-1.0));
    }
    CHECK_THROWS_AS(split_automorphism(Partition({3, 1})), DomainError);
}

TEST_CASE("every feasible size admits a verified state") {
    for (int n = 3; n <= 6; ++n)
        for (int d = dmin(n); d <= 3; ++d) {
            MechanismReport mech = feasible_mechanisms(n, d);
            REQUIRE(mech.feasible);
            StateVector psi(1, 1, AmpMode::Exact);
            if (!mech.self_conjugate.empty()) {
                ParityRecipe r{n, d, BuildMethod::SelfConjugate, mech.self_conjugate.front(), SplitTag::A,
                               std::nullopt, {}};
                psi = build_self_conjugate(r);
            } else {
                ParityRecipe r{n, d, BuildMethod::ConjugatePair, mech.conjugate_pair.front(), SplitTag::None,
                               std::nullopt, {cdouble(1, 0)}};
                psi = build_conjugate_pair(r);
            }
            CHECK(verify_parity(psi).valid);
        }
}

TEST_CASE("conjugate pairs work beyond the pinned cases") {
    // four-dimensional pair at five ququarts, complex coefficients
    ParityRecipe r{5, 4, BuildMethod::ConjugatePair, Partition({4, 1}), SplitTag::None, std::nullopt,
                   {cdouble(0.5, 0.2), cdouble(-1, 0), cdouble(0, 0.7), cdouble(0.3, 0)}};
    StateVector psi = build_conjugate_pair(r);
    ParityCheck chk = verify_parity(psi);
    CHECK(chk.valid);
    CHECK(chk.max_cross_overlap < 1e-12);
    HypothesisPair hp = hypothesis_pair(psi);
    cdouble tr(0, 0);
    for (int i = 0; i < hp.rho0.rows; ++i)
        for (int j = 0; j < hp.rho0.cols; ++j) tr += hp.rho0.at(i, j) * hp.rho1.at(j, i);
    CHECK(std::abs(tr) < 1e-12);
}

TEST_CASE("equal-weight pair states satisfy the branch-overlap balance") {
    PairBasis pb = conjugate_pair_basis(4, 3, Partition({3, 1}));
    std::vector<cdouble> phi{cdouble(0.6, 0.1), cdouble(-0.3, 0.4), cdouble(0.2, 0)};
    std::vector<StateVector> plus_parts, minus_parts;
    for (int k = 0; k < 3; ++k) {
        plus_parts.push_back(pb.basis_plus[k].scaled(phi[k]));
        minus_parts.push_back(pb.basis_minus[k].scaled(phi[k]));
    }
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            cdouble pp = inner(plus_parts[k], plus_parts[l]);
            cdouble mm = inner(minus_parts[k], minus_parts[l]);
            CHECK(std::abs(pp - mm) < 1e-10);
        }
}
