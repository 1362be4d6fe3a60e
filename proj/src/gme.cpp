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

#include "paritylab/gme.hpp"

#include <algorithm>
#include <cmath>

#include "paritylab/errors.hpp"
#include "paritylab/rng.hpp"

namespace paritylab {

std::vector<cdouble> ProductState::assemble() const {
    std::vector<cdouble> full{cdouble(1, 0)};
    for (const auto &local : locals) {
        std::vector<cdouble> next(full.size() * local.size());
        size_t k = 0;
        for (const auto &f : full)
            for (const auto &l : local) next[k++] = f * l;
        full = std::move(next);
    }
    return full;
}

namespace {

std::uint64_t pow_u64(int base, int exp) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) v *= (unsigned)base;
    return v;
}

std::vector<cdouble> site_basis_product(const ProductState &phi, int site, int level) {
    ProductState copy = phi;
    copy.locals[site].assign(phi.d, cdouble(0, 0));
    copy.locals[site][level] = 1.0;
    return copy.assemble();
}

ProductState random_product_state(int n, int d, SplitMix64 &rng, bool fix_first_site) {
    ProductState phi;
    phi.n = n;
    phi.d = d;
    phi.locals.assign(n, std::vector<cdouble>(d, cdouble(0, 0)));
    for (int s = 0; s < n; ++s) {
        if (s == 0 && fix_first_site) {
            phi.locals[0][0] = 1.0;
            continue;
        }
        double norm2 = 0;
        for (int l = 0; l < d; ++l) {
            auto [re, im] = rng.gaussians();
            phi.locals[s][l] = cdouble(re, im);
            norm2 += std::norm(phi.locals[s][l]);
        }
        double inv = 1.0 / std::sqrt(norm2);
        for (int l = 0; l < d; ++l) phi.locals[s][l] *= inv;
    }
    return phi;
}

double expectation(const CMat &P, const ProductState &phi) {
    std::vector<cdouble> x = phi.assemble();
    std::vector<cdouble> y = P.apply(x);
    cdouble v(0, 0);
    for (size_t i = 0; i < x.size(); ++i) v += std::conj(x[i]) * y[i];
    return v.real();
}

struct RestartOutcome {
    double overlap = 0;
    ProductState state;
    std::vector<double> history;
    int sweeps = 0;
    bool converged = false;
};

RestartOutcome run_restart(const CMat &P, int n, int d, const SeesawOptions &opts, std::uint64_t seed) {
    SplitMix64 rng(seed);
    RestartOutcome out;
    out.state = random_product_state(n, d, rng, opts.fix_first_site);
    double prev = expectation(P, out.state);
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        for (int site = opts.fix_first_site ? 1 : 0; site < n; ++site) {
            CMat M = reduced_operator(P, out.state, site);
            EigResult e = jacobi_eigh(M);
            for (int l = 0; l < d; ++l) out.state.locals[site][l] = e.vectors.at(l, 0);
        }
        double now = expectation(P, out.state);
        out.history.push_back(now);
        out.sweeps = sweep + 1;
        if (now - prev < opts.tol) {
            out.converged = true;
            break;
        }
        prev = now;
    }
    out.overlap = out.history.empty() ? prev : out.history.back();
    return out;
}

}  // namespace

CMat reduced_operator(const CMat &P, const ProductState &phi, int site) {
    if (P.rows != P.cols) throw DomainError("reduced_operator: operator not square");
    if ((std::uint64_t)P.rows != pow_u64(phi.d, phi.n)) throw DomainError("reduced_operator: shape mismatch");
    if (site < 0 || site >= phi.n) throw DomainError("reduced_operator: site out of range");
    int d = phi.d;
    std::vector<std::vector<cdouble>> xs(d), ys(d);
    for (int b = 0; b < d; ++b) {
        xs[b] = site_basis_product(phi, site, b);
        ys[b] = P.apply(xs[b]);
    }
    CMat M(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            cdouble v(0, 0);
            for (size_t i = 0; i < xs[a].size(); ++i) v += std::conj(xs[a][i]) * ys[b][i];
            M.at(a, b) = v;
        }
    // Symmetrize away roundoff so the eigensolver sees an exactly Hermitian
    // matrix.
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            cdouble v = 0.5 * (M.at(a, b) + std::conj(M.at(b, a)));
            M.at(a, b) = v;
            M.at(b, a) = std::conj(v);
        }
    return M;
}

GmeResult seesaw(const CMat &P, int n, int d, const SeesawOptions &opts) {
    if (P.rows != P.cols) throw DomainError("seesaw: operator not square");
    if ((std::uint64_t)P.rows != pow_u64(d, n)) throw DomainError("seesaw: operator shape mismatch");
    if (P.hermiticity_defect() > 1e-10) throw DomainError("seesaw: operator is not Hermitian");
    if (opts.restarts < 1) throw DomainError("seesaw: need at least one restart");

    std::vector<RestartOutcome> outcomes(opts.restarts);
    const bool par = opts.exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (int r = 0; r < opts.restarts; ++r)
        outcomes[r] = run_restart(P, n, d, opts, opts.seed + (std::uint64_t)r);

    int best = 0;
    for (int r = 1; r < opts.restarts; ++r)
        if (outcomes[r].overlap > outcomes[best].overlap) best = r;

    GmeResult res;
    res.max_overlap = outcomes[best].overlap;
    res.entanglement = 1.0 - res.max_overlap;
    res.witness = outcomes[best].state;
    res.restarts_used = opts.restarts;
    res.sweeps = outcomes[best].sweeps;
    res.converged = outcomes[best].converged;
    res.history = outcomes[best].history;
    for (auto &o : outcomes) res.all_histories.push_back(std::move(o.history));
    return res;
}

GmeResult gme_of_pure_state(const StateVector &psi, const SeesawOptions &opts) {
    if (psi.is_zero()) throw DomainError("gme_of_pure_state: zero state");
    std::vector<cdouble> v = psi.normalized().dense();
    CMat P((int)v.size(), (int)v.size());
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) P.at((int)i, (int)j) = v[i] * std::conj(v[j]);
    return seesaw(P, psi.n(), psi.d(), opts);
}

StateVector extremal_witness_state(const CMat &P, const ProductState &phi, int n, int d) {
    std::vector<cdouble> y = P.apply(phi.assemble());
    double norm2 = 0;
    for (const auto &v : y) norm2 += std::norm(v);
    if (norm2 < 1e-24) throw DomainError("extremal_witness_state: product state annihilated");
    double inv = 1.0 / std::sqrt(norm2);
    StateVector out(n, d, AmpMode::Float);
    for (size_t i = 0; i < y.size(); ++i)
        if (y[i] != cdouble(0, 0)) out.add((std::uint64_t)i, y[i] * inv);
    return out;
}

}  // namespace paritylab
