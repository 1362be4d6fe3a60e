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
#include "paritylab/gme.hpp"
#include "paritylab/parity.hpp"
#include "paritylab/rng.hpp"
#include "support/golden_states.hpp"

using namespace paritylab;

namespace {

ProductState random_product(int n, int d, std::uint64_t seed) {
    SplitMix64 rng(seed);
    ProductState phi;
    phi.n = n;
    phi.d = d;
    phi.locals.assign(n, std::vector<cdouble>(d));
    for (int s = 0; s < n; ++s) {
        double norm2 = 0;
        for (int l = 0; l < d; ++l) {
            auto [re, im] = rng.gaussians();
            phi.locals[s][l] = cdouble(re, im);
            norm2 += std::norm(phi.locals[s][l]);
        }
        for (int l = 0; l < d; ++l) phi.locals[s][l] /= std::sqrt(norm2);
    }
    return phi;
}

CMat projector_matrix(const Partition &lambda, SplitTag branch, int n, int d) {
    return algebra_matrix(projector_element({lambda, branch}, GroupKind::A, n), d);
}

}  // namespace

TEST_CASE("reduced operator against a brute-force contraction oracle") {
    CMat p = projector_matrix(Partition({2, 1}), SplitTag::A, 3, 2);
    ProductState phi = random_product(3, 2, 4);
    for (int site = 0; site < 3; ++site) {
        CMat m = reduced_operator(p, phi, site);
        CHECK(m.hermiticity_defect() < 1e-12);
        SplitMix64 rng(99 + site);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<cdouble> x(2);
            double norm2 = 0;
            for (int l = 0; l < 2; ++l) {
                auto [re, im] = rng.gaussians();
                x[l] = cdouble(re, im);
                norm2 += std::norm(x[l]);
            }
            for (auto &v : x) v /= std::sqrt(norm2);
            ProductState probe = phi;
            probe.locals[site] = x;
            auto full = probe.assemble();
            auto pf = p.apply(full);
            cdouble direct(0, 0);
            for (size_t i = 0; i < full.size(); ++i) direct += std::conj(full[i]) * pf[i];
            cdouble via(0, 0);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) via += std::conj(x[a]) * m.at(a, b) * x[b];
            CHECK(std::abs(direct - via) < 1e-10);
        }
    }
}

TEST_CASE("reduced operator of the identity is the identity") {
    CMat eye = CMat::identity(8);
    ProductState phi = random_product(3, 2, 5);
    for (int site = 0; site < 3; ++site)
        CHECK((reduced_operator(eye, phi, site) - CMat::identity(2)).max_abs() < 1e-12);
}

TEST_CASE("reduced operator contracts rank-one operators directly") {
    // P = |00><00| with the second site pinned to |0>: seen from the first
    // site this is |0><0|.
    CMat p(4, 4);
    p.at(0, 0) = 1.0;
    ProductState phi;
    phi.n = 2;
    phi.d = 2;
    phi.locals = {{cdouble(1, 0), cdouble(0, 0)}, {cdouble(1, 0), cdouble(0, 0)}};
    CMat m = reduced_operator(p, phi, 0);
    CMat want(2, 2);
    want.at(0, 0) = 1.0;
    CHECK((m - want).max_abs() < 1e-14);
    CHECK_THROWS_AS(reduced_operator(p, phi, 2), DomainError);
}

TEST_CASE("seesaw attains the subspace values") {
    SeesawOptions opts;
    opts.seed = 1;
    GmeResult r3 = seesaw(projector_matrix(Partition({2, 1}), SplitTag::A, 3, 2), 3, 2, opts);
    CHECK(std::abs(r3.entanglement - 5.0 / 9) < 1e-9);
    CHECK(std::abs(r3.max_overlap - 4.0 / 9) < 1e-9);
    CHECK(r3.converged);

    GmeResult r4 = seesaw(projector_matrix(Partition({2, 2}), SplitTag::A, 4, 2), 4, 2, opts);
    CHECK(std::abs(r4.entanglement - 7.0 / 9) < 1e-9);
}

TEST_CASE("history is nondecreasing within every restart") {
    SeesawOptions opts;
    opts.seed = 3;
    opts.restarts = 16;
    GmeResult r = seesaw(projector_matrix(Partition({2, 2}), SplitTag::A, 4, 2), 4, 2, opts);
    CHECK(r.all_histories.size() == 16);
    for (const auto &h : r.all_histories) {
        REQUIRE(!h.empty());
        for (size_t i = 1; i < h.size(); ++i) CHECK(h[i] >= h[i - 1] - 1e-13);
    }
}

TEST_CASE("seesaw is deterministic and matches its serial reference") {
    SeesawOptions a;
    a.seed = 7;
    a.restarts = 8;
    CMat p = projector_matrix(Partition({2, 1}), SplitTag::A, 3, 2);
    GmeResult r1 = seesaw(p, 3, 2, a);
    a.exec = Exec::Serial;
    GmeResult r2 = seesaw(p, 3, 2, a);
    CHECK(r1.max_overlap == r2.max_overlap);
    CHECK(r1.all_histories == r2.all_histories);
    for (int s = 0; s < 3; ++s)
        for (int l = 0; l < 2; ++l) CHECK(r1.witness.locals[s][l] == r2.witness.locals[s][l]);
}

TEST_CASE("pinning the first site does not change the optimum") {
    SeesawOptions opts;
    opts.seed = 11;
    for (auto [lambda, n, d] : {std::tuple{Partition({2, 1}), 3, 2}, {Partition({2, 2}), 4, 2},
                                {Partition({3, 1, 1}), 5, 3}}) {
        SeesawOptions run = opts;
        run.restarts = n == 5 ? 32 : 64;
        CMat p = projector_matrix(lambda, SplitTag::A, n, d);
        GmeResult free_sites = seesaw(p, n, d, run);
        SeesawOptions fixed = run;
        fixed.fix_first_site = true;
        GmeResult pinned = seesaw(p, n, d, fixed);
        CHECK(std::abs(free_sites.max_overlap - pinned.max_overlap) < 1e-8);
        CHECK(std::abs(pinned.witness.locals[0][0] - cdouble(1, 0)) < 1e-15);
    }
}

TEST_CASE("pure-state entanglement") {
    SeesawOptions opts;
    opts.seed = 2;
    StateVector product(3, 2, AmpMode::Float);
    product.add(std::uint64_t(0), cdouble(1, 0));
    CHECK(gme_of_pure_state(product, opts).entanglement < 1e-10);

    GmeResult m4 = gme_of_pure_state(golden::m4_state(), opts);
    CHECK(std::abs(m4.entanglement - 7.0 / 9) < 1e-9);

    GmeResult three = gme_of_pure_state(golden::three_qubit_state(), opts);
    CHECK(std::abs(three.entanglement - 5.0 / 9) < 1e-9);

    CHECK_THROWS_AS(gme_of_pure_state(StateVector(2, 2, AmpMode::Float), opts), DomainError);
}

TEST_CASE("witness states saturate the overlap and detect parity") {
    SeesawOptions opts;
    opts.seed = 5;
    CMat p = projector_matrix(Partition({2, 2}), SplitTag::A, 4, 2);
    GmeResult r = seesaw(p, 4, 2, opts);
    StateVector w = extremal_witness_state(p, r.witness, 4, 2);
    CHECK(w.norm2() == doctest::Approx(1.0).epsilon(1e-12));
    // |<phi|w>|^2 equals <phi|P|phi>
    auto x = r.witness.assemble();
    StateVector phi_state(4, 2, AmpMode::Float);
    for (size_t i = 0; i < x.size(); ++i) phi_state.add((std::uint64_t)i, x[i]);
    double lhs = std::norm(inner(phi_state, w));
    CHECK(std::abs(lhs - r.max_overlap) < 1e-10);
    CHECK(verify_parity(w).valid);

    ProductState dead = random_product(4, 2, 1);
    dead.locals[0] = {cdouble(1, 0), cdouble(0, 0)};
    dead.locals[1] = {cdouble(1, 0), cdouble(0, 0)};
    dead.locals[2] = {cdouble(1, 0), cdouble(0, 0)};
    dead.locals[3] = {cdouble(1, 0), cdouble(0, 0)};
    CHECK_THROWS_AS(extremal_witness_state(p, dead, 4, 2), DomainError);
}

TEST_CASE("identity operator returns the probe state itself") {
    ProductState phi = random_product(3, 2, 8);
    StateVector w = extremal_witness_state(CMat::identity(8), phi, 3, 2);
    auto x = phi.assemble();
    StateVector phi_state(3, 2, AmpMode::Float);
    for (size_t i = 0; i < x.size(); ++i) phi_state.add((std::uint64_t)i, x[i]);
    CHECK(std::abs(std::abs(inner(phi_state, w)) - 1.0) < 1e-12);
}

TEST_CASE("subspace value lower-bounds sampled member states") {
    SeesawOptions opts;
    opts.seed = 6;
    opts.restarts = 24;
    CMat p = projector_matrix(Partition({2, 1}), SplitTag::A, 3, 2);
    GmeResult sub = seesaw(p, 3, 2, opts);
    AlgebraElement proj = projector_element({Partition({2, 1}), SplitTag::A}, GroupKind::A, 3);
    SplitMix64 rng(200);
    for (int trial = 0; trial < 5; ++trial) {
        StateVector seed(3, 2, AmpMode::Float);
        for (int t = 0; t < 4; ++t) {
            auto [re, im] = rng.gaussians();
            seed.add(rng.below(8), cdouble(re, im));
        }
        StateVector member = apply_algebra(proj, seed);
        if (member.norm2() < 1e-8) continue;
        GmeResult each = gme_of_pure_state(member, opts);
        CHECK(each.entanglement >= sub.entanglement - 1e-8);
    }
}
