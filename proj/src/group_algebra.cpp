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

#include "paritylab/group_algebra.hpp"

#include <algorithm>
#include <numeric>

#include "paritylab/errors.hpp"

namespace paritylab {

AlgebraElement AlgebraElement::identity(int n) {
    AlgebraElement e(n);
    e.add_term(Permutation(n), Cyclo(1));
    return e;
}

AlgebraElement AlgebraElement::basis(const Permutation &p, const Cyclo &coeff) {
    AlgebraElement e(p.degree());
    e.add_term(p, coeff);
    return e;
}

Cyclo AlgebraElement::coeff(const Permutation &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Cyclo(0) : it->second;
}

void AlgebraElement::add_term(const Permutation &p, const Cyclo &c) {
    if (p.degree() != n_) throw DomainError("algebra element: degree mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement operator+(const AlgebraElement &a, const AlgebraElement &b) {
    if (a.n_ != b.n_) throw DomainError("algebra sum: degree mismatch");
    AlgebraElement r = a;
    for (const auto &[p, c] : b.terms_) r.add_term(p, c);
    return r;
}

AlgebraElement operator-(const AlgebraElement &a, const AlgebraElement &b) {
    if (a.n_ != b.n_) throw DomainError("algebra difference: degree mismatch");
    AlgebraElement r = a;
    for (const auto &[p, c] : b.terms_) r.add_term(p, -c);
    return r;
}

AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b) {
    if (a.n_ != b.n_) throw DomainError("algebra product: degree mismatch");
    AlgebraElement r(a.n_);
    for (const auto &[p, cp] : a.terms_)
        for (const auto &[q, cq] : b.terms_) r.add_term(compose(p, q), cp * cq);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Cyclo &c) const {
    AlgebraElement r(n_);
    for (const auto &[p, cp] : terms_) r.add_term(p, cp * c);
    return r;
}

AlgebraElement AlgebraElement::adjoint() const {
    AlgebraElement r(n_);
    for (const auto &[p, c] : terms_) r.add_term(p.inverse(), c.conj());
    return r;
}

AlgebraElement AlgebraElement::conjugated_by(const Permutation &h) const {
    AlgebraElement r(n_);
    for (const auto &[p, c] : terms_) r.add_term(conjugate(p, h), c);
    return r;
}

AlgebraElement AlgebraElement::lifted(int n) const {
    if (n < n_) throw DomainError("algebra lift: cannot shrink degree");
    if (n == n_) return *this;
    AlgebraElement r(n);
    for (const auto &[p, c] : terms_) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        for (int i = 0; i < n_; ++i) img[i] = p.image0(i);
        r.add_term(Permutation::from_images0(std::move(img)), c);
    }
    return r;
}

std::string AlgebraElement::dump() const {
    std::string s;
    for (const auto &[p, c] : terms_) s += c.str() + " * " + p.str() + "\n";
    return s;
}

namespace {

// Sum over all permutations moving each group of points only within itself.
// Groups hold 0-based points of a degree-n permutation.
void block_permutation_sum(const std::vector<std::vector<int>> &groups, int n, bool signed_terms,
                           AlgebraElement &out) {
    std::vector<std::vector<Permutation>> per_group;
    for (const auto &g : groups) {
        std::vector<int> order(g.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<Permutation> ps;
        do {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            for (size_t i = 0; i < g.size(); ++i) img[g[i]] = g[order[i]];
            ps.push_back(Permutation::from_images0(std::move(img)));
        } while (std::next_permutation(order.begin(), order.end()));
        per_group.push_back(std::move(ps));
    }
    std::vector<size_t> idx(per_group.size(), 0);
    while (true) {
        Permutation prod(n);
        for (size_t g = 0; g < per_group.size(); ++g) prod = compose(prod, per_group[g][idx[g]]);
        out.add_term(prod, Cyclo(signed_terms ? prod.sign() : 1));
        size_t g = 0;
        while (g < idx.size() && ++idx[g] == per_group[g].size()) idx[g++] = 0;
        if (g == idx.size()) break;
    }
}

}  // namespace

AlgebraElement row_sum(const StandardTableau &T) {
    int n = T.n();
    std::vector<std::vector<int>> groups;
    for (const auto &row : T.rows()) {
        std::vector<int> g;
        for (int v : row) g.push_back(v - 1);
        groups.push_back(std::move(g));
    }
    AlgebraElement out(n);
    block_permutation_sum(groups, n, false, out);
    return out;
}

AlgebraElement col_sum(const StandardTableau &T) {
    int n = T.n();
    Partition cols = T.shape().transpose();
    std::vector<std::vector<int>> groups(cols.length());
    for (int r = 0; r < (int)T.rows().size(); ++r)
        for (int c = 0; c < (int)T.rows()[r].size(); ++c) groups[c].push_back(T.rows()[r][c] - 1);
    AlgebraElement out(n);
    block_permutation_sum(groups, n, true, out);
    return out;
}

AlgebraElement young_symmetrizer(const StandardTableau &T) {
    mpq_class norm((long)dim_sn(T.shape()), (long)factorial(T.n()));
    norm.canonicalize();
    return (row_sum(T) * col_sum(T)).scaled(Cyclo(norm));
}

AlgebraElement generalized_symmetrizer(const StandardTableau &T) {
    if (T.n() <= 2) return young_symmetrizer(T);
    AlgebraElement pre = generalized_symmetrizer(T.removed_largest()).lifted(T.n());
    return pre * young_symmetrizer(T) * pre;
}

AlgebraElement projector_element(const IrrepLabel &label, GroupKind group, int n) {
    if (label.partition.n() != n) throw DomainError("projector_element: partition size mismatch");
    if (label.split != SplitTag::None) {
        if (group != GroupKind::A) throw DomainError("projector_element: split labels live in the alternating group");
        if (!label.partition.self_conjugate())
            throw DomainError("projector_element: split label requires a self-conjugate partition");
    }
    AlgebraElement out(n);
    if (group == GroupKind::S) {
        if (label.split != SplitTag::None) throw DomainError("projector_element: split label invalid for S");
        mpq_class norm((long)dim_sn(label.partition), (long)factorial(n));
        norm.canonicalize();
        std::map<Partition, long long> chi_cache;
        for (const auto &sigma : enumerate_group(n, GroupKind::S)) {
            Partition ct = sigma.cycle_type();
            auto it = chi_cache.find(ct);
            if (it == chi_cache.end()) it = chi_cache.emplace(ct, mn_character(label.partition, ct)).first;
            if (it->second == 0) continue;
            out.add_term(sigma, Cyclo(mpq_class((long)it->second) * norm));
        }
        return out;
    }
    unsigned long long dim = dim_sn(label.partition);
    if (label.split != SplitTag::None) dim /= 2;
    mpq_class norm((long)dim, (long)(factorial(n) / 2));
    norm.canonicalize();
    for (const auto &sigma : enumerate_group(n, GroupKind::A)) {
        Cyclo chi = an_character(label, sigma);
        if (chi.is_zero()) continue;
        out.add_term(sigma, chi.conj() * Cyclo(norm));
    }
    return out;
}

}  // namespace paritylab
