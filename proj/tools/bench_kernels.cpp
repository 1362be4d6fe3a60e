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

// Times the serial reference implementation of each data-parallel kernel
// against the OpenMP version on representative workloads and reports the
// speedup. Results are checked for bit-identity while timing.

#include <chrono>
#include <cstdio>
#include <omp.h>

#include "paritylab/gme.hpp"
#include "paritylab/kernels.hpp"
#include "paritylab/parity.hpp"
#include "paritylab/rng.hpp"

using namespace paritylab;

namespace {

template <typename F>
double time_once(F &&f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

StateVector random_state(int n, int d, int terms, std::uint64_t seed) {
    SplitMix64 rng(seed);
    StateVector s(n, d, AmpMode::Float);
    std::uint64_t dim = 1;
    for (int i = 0; i < n; ++i) dim *= (unsigned)d;
    for (int t = 0; t < terms; ++t) {
        auto [re, im] = rng.gaussians();
        s.add(rng.below(dim), cdouble(re, im));
    }
    return s;
}

void row(const char *name, double serial, double parallel, bool identical) {
    std::printf("%-28s %10.4fs %10.4fs %8.2fx   %s\n", name, serial, parallel,
                serial / parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        StateVector psi = random_state(7, 2, 100, 11);
        auto evens = enumerate_group(7, GroupKind::A);
        evens.resize(800);
        std::vector<StateVector> orbit_s, orbit_p;
        double ts = time_once([&] { orbit_s = orbit_states(psi, evens, Exec::Serial); });
        double tp = time_once([&] { orbit_p = orbit_states(psi, evens, Exec::Parallel); });
        bool same = orbit_s == orbit_p;

        CMat gs, gp;
        double gs_t = time_once([&] { gs = gram_float(orbit_s, orbit_s, Exec::Serial); });
        double gp_t = time_once([&] { gp = gram_float(orbit_s, orbit_s, Exec::Parallel); });
        row("orbit 800 x (7,2)", ts, tp, same);
        row("gram 800x800 floats", gs_t, gp_t, gs.a == gp.a);
    }

    {
        StateVector psi = random_state(6, 2, 64, 5).normalized();
        auto evens = enumerate_group(6, GroupKind::A);
        auto orbit = orbit_states(psi, evens, Exec::Serial);
        CMat rs, rp;
        double ts = time_once([&] { rs = mixture_density(orbit, Exec::Serial); });
        double tp = time_once([&] { rp = mixture_density(orbit, Exec::Parallel); });
        row("density 64x360 states", ts, tp, rs.a == rp.a);
    }

    {
        AlgebraElement proj = projector_element({Partition({3, 1, 1}), SplitTag::A}, GroupKind::A, 5);
        CMat P = algebra_matrix(proj, 3);
        SeesawOptions so;
        so.seed = 3;
        so.restarts = 32;
        GmeResult a, b;
        so.exec = Exec::Serial;
        double ts = time_once([&] { a = seesaw(P, 5, 3, so); });
        so.exec = Exec::Parallel;
        double tp = time_once([&] { b = seesaw(P, 5, 3, so); });
        row("seesaw 32 restarts (5,3)", ts, tp, a.max_overlap == b.max_overlap && a.all_histories == b.all_histories);
    }

    {
        ParityRecipe r{4, 2, BuildMethod::SelfConjugate, Partition({2, 2}), SplitTag::A,
                       Ket::parse("0011", 2), {}};
        StateVector m4 = build_self_conjugate(r);
        SimulationReport a, b;
        double ts = time_once([&] { a = simulate(m4, 20000, 9, false, Exec::Serial); });
        double tp = time_once([&] { b = simulate(m4, 20000, 9, false, Exec::Parallel); });
        row("simulate 20k trials", ts, tp, a.successes == b.successes && a.empirical_ps == b.empirical_ps);
    }

    return 0;
}
