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

#include "paritylab/kernels.hpp"

#include "paritylab/errors.hpp"

namespace paritylab {

CMat gram_float(const std::vector<StateVector> &a, const std::vector<StateVector> &b, Exec exec) {
    CMat g((int)a.size(), (int)b.size());
    const bool par = exec == Exec::Parallel;
    // Entries are independent; any schedule computes the same values.
#pragma omp parallel for collapse(2) schedule(static) if (par)
    for (int i = 0; i < (int)a.size(); ++i)
        for (int j = 0; j < (int)b.size(); ++j) g.at(i, j) = inner(a[i], b[j]);
    return g;
}

std::vector<std::vector<Cyclo>> gram_exact(const std::vector<StateVector> &a,
                                           const std::vector<StateVector> &b, Exec exec) {
    std::vector<std::vector<Cyclo>> g(a.size(), std::vector<Cyclo>(b.size()));
    const bool par = exec == Exec::Parallel;
#pragma omp parallel for collapse(2) schedule(dynamic) if (par)
    for (int i = 0; i < (int)a.size(); ++i)
        for (int j = 0; j < (int)b.size(); ++j) g[i][j] = inner_exact(a[i], b[j]);
    return g;
}

CMat mixture_density(const std::vector<StateVector> &states, Exec exec) {
    if (states.empty()) throw DomainError("mixture_density: no states");
    int n = states[0].n(), d = states[0].d();
    std::uint64_t dim = 1;
    for (int i = 0; i < n; ++i) dim *= (unsigned)d;
    CMat rho((int)dim, (int)dim);
    // Sparse row view per state so each output row can be accumulated
    // independently, with a fixed state-major order inside every entry.
    std::vector<std::vector<std::pair<std::uint64_t, cdouble>>> amps(states.size());
    for (size_t s = 0; s < states.size(); ++s) {
        const StateVector f = states[s].to_float();
        amps[s].assign(f.float_amps().begin(), f.float_amps().end());
    }
    double w = 1.0 / (double)states.size();
    const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(static) if (par)
    for (long long row = 0; row < (long long)dim; ++row) {
        cdouble *out = &rho.a[(size_t)row * dim];
        for (size_t s = 0; s < states.size(); ++s) {
            auto it = std::lower_bound(amps[s].begin(), amps[s].end(), (std::uint64_t)row,
                                       [](const auto &p, std::uint64_t v) { return p.first < v; });
            if (it == amps[s].end() || it->first != (std::uint64_t)row) continue;
            cdouble rowamp = it->second;
            for (const auto &[code, amp] : amps[s]) out[code] += w * rowamp * std::conj(amp);
        }
    }
    return rho;
}

std::vector<StateVector> orbit_states(const StateVector &psi, const std::vector<Permutation> &perms,
                                      Exec exec) {
    std::vector<StateVector> out(perms.size(), StateVector(psi.n(), psi.d(), psi.mode()));
    const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(static) if (par)
    for (long long i = 0; i < (long long)perms.size(); ++i) out[i] = act(perms[i], psi);
    return out;
}

}  // namespace paritylab
