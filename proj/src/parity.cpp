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

#include "paritylab/parity.hpp"

#include <algorithm>
#include <cmath>

#include "paritylab/errors.hpp"
#include "paritylab/rng.hpp"

namespace paritylab {

int dmin(int n) {
    if (n < 1) throw DomainError("dmin: n must be positive");
    int r = 1;
    while (r * r < n) ++r;
    return r;
}

MechanismReport feasible_mechanisms(int n, int d) {
    MechanismReport rep;
    rep.n = n;
    rep.d = d;
    for (const auto &lambda : partitions_of(n, d)) {
        Partition t = lambda.transpose();
        if (lambda == t)
            rep.self_conjugate.push_back(lambda);
        else if (t.length() <= d)
            rep.conjugate_pair.push_back(lambda);
        else
            rep.blind.push_back(lambda);
    }
    rep.feasible = !rep.self_conjugate.empty() || !rep.conjugate_pair.empty();
    return rep;
}

namespace {

// Nondecreasing digit strings of length n over {0..d-1}, lexicographic.
void gen_contents(int n, int d, int next_min, std::vector<int> &acc, std::vector<std::vector<int>> &out) {
    if ((int)acc.size() == n) {
        out.push_back(acc);
        return;
    }
    for (int v = next_min; v < d; ++v) {
        acc.push_back(v);
        gen_contents(n, d, v, acc, out);
        acc.pop_back();
    }
}

std::vector<int> multiplicities(const std::vector<int> &digits, int d) {
    std::vector<int> m(d, 0);
    for (int v : digits) ++m[v];
    return m;
}

}  // namespace

StateVector build_self_conjugate(const ParityRecipe &recipe) {
    if (recipe.method != BuildMethod::SelfConjugate) throw DomainError("build_self_conjugate: wrong method");
    const Partition &lambda = recipe.lambda;
    if (lambda.n() != recipe.n) throw DomainError("build_self_conjugate: partition size mismatch");
    if (!lambda.self_conjugate()) throw DomainError("build_self_conjugate: shape must be self-conjugate");
    if (lambda.length() > recipe.d) throw DomainError("build_self_conjugate: shape does not fit the local dimension");
    if (recipe.branch == SplitTag::None) throw DomainError("build_self_conjugate: branch must be a or b");

    AlgebraElement proj = projector_element({lambda, recipe.branch}, GroupKind::A, recipe.n);

    if (recipe.seed_ket) {
        const Ket &k = *recipe.seed_ket;
        if (k.n != recipe.n || k.d != recipe.d) throw DomainError("build_self_conjugate: seed ket shape mismatch");
        StateVector out = apply_algebra(proj, StateVector::basis_state(k, AmpMode::Exact));
        if (out.is_zero()) throw DomainError("build_self_conjugate: seed ket annihilated by the projector");
        return out;
    }

    // Smallest content realizing a single copy of the shape.
    std::vector<std::vector<int>> contents;
    std::vector<int> acc;
    gen_contents(recipe.n, recipe.d, 0, acc, contents);
    for (const auto &digits : contents) {
        if (enumerate_ssyt(lambda, recipe.d, multiplicities(digits, recipe.d)).size() != 1) continue;
        StateVector out =
            apply_algebra(proj, StateVector::basis_state(Ket::from_digits(recipe.d, digits), AmpMode::Exact));
        if (!out.is_zero()) return out;
    }
    throw DomainError("build_self_conjugate: no usable seed content found");
}

namespace {

struct ShapeBasis {
    std::vector<StateVector> raw;      // exact, unnormalized
    std::vector<mpq_class> norm2;
    std::vector<StateVector> ortho;    // float, orthonormal
};

ShapeBasis gys_shape_basis(int n, int d, const Partition &shape) {
    ShapeBasis b;
    for (const auto &T : enumerate_syt(shape)) {
        std::vector<int> digits(n);
        for (int v = 1; v <= n; ++v) digits[v - 1] = T.row_of(v);
        StateVector seed = StateVector::basis_state(Ket::from_digits(d, digits), AmpMode::Exact);
        StateVector u = apply_algebra(generalized_symmetrizer(T), seed);
        if (u.is_zero()) throw DomainError("pair basis: symmetrizer annihilated its seed ket");
        b.norm2.push_back(u.norm2_exact());
        b.raw.push_back(std::move(u));
    }
    for (size_t k = 0; k < b.raw.size(); ++k)
        b.ortho.push_back(b.raw[k].to_float().scaled(cdouble(1.0 / std::sqrt(b.norm2[k].get_d()), 0)));
    return b;
}

std::vector<Permutation> adjacent_transpositions(int n) {
    std::vector<Permutation> out;
    for (int i = 1; i < n; ++i)
        out.push_back(Permutation::parse("(" + std::to_string(i) + "," + std::to_string(i + 1) + ")", n));
    return out;
}

// D(g)_{lk} = <u_l | g u_k> from exact inner products of the raw basis.
std::vector<CMat> rep_on_generators(int n, const ShapeBasis &b) {
    int dim = (int)b.raw.size();
    std::vector<CMat> mats;
    for (const auto &g : adjacent_transpositions(n)) {
        CMat D(dim, dim);
        for (int k = 0; k < dim; ++k) {
            StateVector gk = act(g, b.raw[k]);
            for (int l = 0; l < dim; ++l) {
                Cyclo ip = inner_exact(b.raw[l], gk);
                double scale = 1.0 / std::sqrt(b.norm2[l].get_d() * b.norm2[k].get_d());
                D.at(l, k) = ip.embed() * scale;
            }
        }
        mats.push_back(std::move(D));
    }
    return mats;
}

// One-dimensional null space of A (rows >= cols expected).
std::vector<cdouble> nullspace_vector(CMat A) {
    int rows = A.rows, cols = A.cols;
    double thresh = 1e-9 * std::max(A.max_abs(), 1e-30);
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1;
        double best_abs = thresh;
        for (int rr = r; rr < rows; ++rr)
            if (std::abs(A.at(rr, c)) > best_abs) {
                best_abs = std::abs(A.at(rr, c));
                best = rr;
            }
        if (best < 0) continue;
        for (int cc = 0; cc < cols; ++cc) std::swap(A.at(r, cc), A.at(best, cc));
        cdouble inv = 1.0 / A.at(r, c);
        for (int cc = 0; cc < cols; ++cc) A.at(r, cc) *= inv;
        for (int rr = 0; rr < rows; ++rr) {
            if (rr == r) continue;
            cdouble f = A.at(rr, c);
            if (f == cdouble(0, 0)) continue;
            for (int cc = 0; cc < cols; ++cc) A.at(rr, cc) -= f * A.at(r, cc);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    if (free_cols.size() != 1) throw DomainError("intertwiner solve: null space dimension is not one");
    int f = free_cols[0];
    std::vector<cdouble> x(cols, cdouble(0, 0));
    x[f] = 1.0;
    for (size_t pr = 0; pr < pivot_col.size(); ++pr) x[pivot_col[pr]] = -A.at((int)pr, f);
    return x;
}

// T with Dp(g) T = sign * T D(g) on all generators, scaled unitary.
CMat solve_sign_intertwiner(const std::vector<CMat> &D, const std::vector<CMat> &Dp, double sign) {
    int m = D[0].rows;
    CMat A((int)D.size() * m * m, m * m);
    int row = 0;
    for (size_t g = 0; g < D.size(); ++g) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                for (int k = 0; k < m; ++k) {
                    A.at(row, k * m + j) += Dp[g].at(i, k);
                    A.at(row, i * m + k) -= sign * D[g].at(k, j);
                }
                ++row;
            }
    }
    std::vector<cdouble> t = nullspace_vector(std::move(A));
    CMat T(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) T.at(i, j) = t[(size_t)i * m + j];
    double c = ((T.adjoint() * T).trace().real()) / m;
    if (c <= 0) throw DomainError("intertwiner solve: degenerate solution");
    T = T.scaled(cdouble(1.0 / std::sqrt(c), 0));
    // Deterministic phase: the first entry of significant magnitude is made
    // real and positive.
    double big = T.max_abs();
    for (int i = 0; i < m * m; ++i)
        if (std::abs(T.a[i]) > 0.5 * big) {
            T = T.scaled(std::conj(T.a[i]) / std::abs(T.a[i]));
            break;
        }
    return T;
}

}  // namespace

PairBasis conjugate_pair_basis(int n, int d, const Partition &lambda) {
    if (lambda.n() != n) throw DomainError("conjugate_pair_basis: partition size mismatch");
    Partition lt = lambda.transpose();
    if (lambda == lt) throw DomainError("conjugate_pair_basis: shape is self-conjugate");
    if (lambda.length() > d || lt.length() > d)
        throw DomainError("conjugate_pair_basis: pair does not fit the local dimension");

    PairBasis pb;
    pb.n = n;
    pb.d = d;
    pb.lambda = lambda;
    ShapeBasis bp = gys_shape_basis(n, d, lambda);
    ShapeBasis bm = gys_shape_basis(n, d, lt);
    pb.rep = rep_on_generators(n, bp);
    pb.rep_conj = rep_on_generators(n, bm);
    pb.intertwiner = solve_sign_intertwiner(pb.rep, pb.rep_conj, -1.0);

    // The plus branch is negated so that the equal-weight combinations
    // below land on the standard form of this construction.
    int dim = (int)bp.ortho.size();
    for (int k = 0; k < dim; ++k) pb.basis_plus.push_back(bp.ortho[k].scaled(cdouble(-1, 0)));
    for (int k = 0; k < dim; ++k) {
        StateVector v(n, d, AmpMode::Float);
        for (int l = 0; l < dim; ++l) {
            cdouble f = pb.intertwiner.at(l, k);
            if (f == cdouble(0, 0)) continue;
            v = v + bm.ortho[l].scaled(f);
        }
        pb.basis_minus.push_back(std::move(v));
    }
    return pb;
}

StateVector build_conjugate_pair(const ParityRecipe &recipe) {
    if (recipe.method != BuildMethod::ConjugatePair) throw DomainError("build_conjugate_pair: wrong method");
    PairBasis pb = conjugate_pair_basis(recipe.n, recipe.d, recipe.lambda);
    size_t dim = pb.basis_plus.size();
    if (recipe.coefficients.empty() || recipe.coefficients.size() > dim)
        throw DomainError("build_conjugate_pair: coefficient count must be 1.." + std::to_string(dim));
    StateVector psi(recipe.n, recipe.d, AmpMode::Float);
    bool any = false;
    for (size_t k = 0; k < recipe.coefficients.size(); ++k) {
        cdouble f = recipe.coefficients[k];
        if (f == cdouble(0, 0)) continue;
        any = true;
        psi = psi + (pb.basis_plus[k] + pb.basis_minus[k]).scaled(f);
    }
    if (!any) throw DomainError("build_conjugate_pair: all coefficients are zero");
    return psi;
}

namespace {

std::vector<Permutation> odd_elements(int n) {
    std::vector<Permutation> out;
    for (auto &p : enumerate_group(n, GroupKind::S))
        if (p.sign() == -1) out.push_back(std::move(p));
    return out;
}

}  // namespace

ParityCheck verify_parity(const StateVector &psi, Exec exec) {
    int n = psi.n();
    if (n > enumeration_bound()) throw BoundError("verify_parity: n exceeds enumeration bound");
    std::vector<Permutation> evens = enumerate_group(n, GroupKind::A);
    std::vector<Permutation> odds = odd_elements(n);
    ParityCheck check;
    check.n_even = (int)evens.size();
    check.n_odd = (int)odds.size();
    if (psi.mode() == AmpMode::Exact) {
        double norm2 = psi.norm2();
        if (norm2 == 0) throw DomainError("verify_parity: zero state");
        auto even_orbit = orbit_states(psi, evens, exec);
        auto odd_orbit = orbit_states(psi, odds, exec);
        auto gram = gram_exact(even_orbit, odd_orbit, exec);
        bool all_zero = true;
        double max_mag = 0;
        for (const auto &row : gram)
            for (const auto &v : row) {
                if (!v.is_zero()) all_zero = false;
                max_mag = std::max(max_mag, std::abs(v.embed()) / norm2);
            }
        check.valid = all_zero;
        check.exact_zeros = all_zero;
        check.max_cross_overlap = max_mag;
        return check;
    }
    StateVector psin = psi.normalized();
    auto even_orbit = orbit_states(psin, evens, exec);
    auto odd_orbit = orbit_states(psin, odds, exec);
    CMat gram = gram_float(even_orbit, odd_orbit, exec);
    check.max_cross_overlap = gram.max_abs();
    check.valid = check.max_cross_overlap <= 1e-10;
    return check;
}

HypothesisPair hypothesis_pair(const StateVector &psi, std::uint64_t dense_bound, Exec exec) {
    int n = psi.n();
    if (n > enumeration_bound()) throw BoundError("hypothesis_pair: n exceeds enumeration bound");
    std::uint64_t dim = 1;
    for (int i = 0; i < n; ++i) dim *= (unsigned)psi.d();
    if (dim > dense_bound) throw BoundError("hypothesis_pair: dense dimension exceeds bound");
    StateVector psin = psi.normalized();
    std::vector<Permutation> evens = enumerate_group(n, GroupKind::A);
    HypothesisPair pair{CMat(), CMat()};
    pair.rho0 = mixture_density(orbit_states(psin, evens, exec), exec);
    if (n < 2) {
        pair.rho1 = pair.rho0;
        return pair;
    }
    Permutation swap12 = Permutation::parse("(1,2)", n);
    std::vector<Permutation> coset;
    coset.reserve(evens.size());
    for (const auto &s : evens) coset.push_back(compose(swap12, s));
    pair.rho1 = mixture_density(orbit_states(psin, coset, exec), exec);
    return pair;
}

namespace {

std::vector<StateVector> orthonormal_span(const std::vector<StateVector> &states, double tol = 1e-10) {
    std::vector<StateVector> basis;
    for (const auto &s : states) {
        StateVector v = s.to_float();
        for (int pass = 0; pass < 2; ++pass)
            for (const auto &b : basis) {
                cdouble c = inner(b, v);
                if (c != cdouble(0, 0)) v = v - b.scaled(c);
            }
        double nn = v.norm2();
        if (nn > tol) basis.push_back(v.scaled(cdouble(1.0 / std::sqrt(nn), 0)));
    }
    return basis;
}

}  // namespace

SimulationReport simulate(const StateVector &psi, std::uint64_t trials, std::uint64_t seed,
                          bool allow_invalid, Exec exec) {
    int n = psi.n();
    if (n > enumeration_bound()) throw BoundError("simulate: n exceeds enumeration bound");
    if (!allow_invalid) {
        ParityCheck chk = verify_parity(psi, exec);
        if (!chk.valid) throw DomainError("simulate: state failed the parity check (set allow_invalid to override)");
    }
    SimulationReport rep;
    rep.trials = trials;
    rep.seed = seed;
    if (trials == 0) return rep;

    StateVector psin = psi.normalized();
    std::vector<Permutation> evens = enumerate_group(n, GroupKind::A);
    std::vector<StateVector> even_basis = orthonormal_span(orbit_states(psin, evens, exec));
    std::uint64_t order = factorial(n);

    rep.log.resize(trials);
    long long successes = 0;
    const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(static) reduction(+ : successes) if (par)
    for (long long t = 0; t < (long long)trials; ++t) {
        SplitMix64 rng(seed + (std::uint64_t)t);
        std::uint64_t rank = rng.below(order);
        Permutation sigma = unrank_permutation(n, rank);
        StateVector moved = act(sigma, psin);
        double p = 0;
        for (const auto &b : even_basis) p += std::norm(inner(b, moved));
        p = std::min(1.0, std::max(0.0, p));
        bool outcome_even = rng.uniform() < p;
        int parity = sigma.sign();
        bool success = outcome_even == (parity == 1);
        rep.log[t] = TrialLog{rank, parity, outcome_even, success};
        successes += success ? 1 : 0;
    }
    rep.successes = (std::uint64_t)successes;
    rep.empirical_ps = (double)successes / (double)trials;
    return rep;
}

CMat split_automorphism(const Partition &lambda) {
    if (!lambda.self_conjugate()) throw DomainError("split_automorphism: shape must be self-conjugate");
    int n = lambda.n();
    int d = lambda.length();
    ShapeBasis b = gys_shape_basis(n, d, lambda);
    std::vector<CMat> D = rep_on_generators(n, b);
    CMat V = solve_sign_intertwiner(D, D, -1.0);
    // Fix the scalar so the involution squares to the identity exactly.
    int m = V.rows;
    cdouble c = (V * V).trace() / (double)m;
    cdouble alpha = 1.0 / std::sqrt(c);
    V = V.scaled(alpha);
    double big = V.max_abs();
    for (int i = 0; i < m * m; ++i)
        if (std::abs(V.a[i]) > 0.5 * big) {
            if (V.a[i].real() < 0) V = V.scaled(cdouble(-1, 0));
            break;
        }
    return V;
}

CMat algebra_matrix(const AlgebraElement &a, int d) {
    int n = a.degree();
    std::uint64_t dim = 1;
    for (int i = 0; i < n; ++i) dim *= (unsigned)d;
    CMat M((int)dim, (int)dim);
    for (const auto &[sigma, coeff] : a.terms()) {
        cdouble f = coeff.embed();
        for (std::uint64_t code = 0; code < dim; ++code)
            M.at((int)permuted_code(sigma, code, n, d), (int)code) += f;
    }
    return M;
}

}  // namespace paritylab
