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

#include "paritylab/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "paritylab/errors.hpp"

namespace paritylab {

Permutation::Permutation(int n) {
    if (n < 1) throw DomainError("permutation: degree must be positive");
    img_.resize(n);
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images0(std::vector<int> img) {
    std::vector<char> seen(img.size(), 0);
    for (int v : img) {
        if (v < 0 || v >= (int)img.size() || seen[v]) throw DomainError("permutation: images are not a bijection");
        seen[v] = 1;
    }
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    return from_images0(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles0(bool include_fixed) const {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(img_.size(), 0);
    for (int start = 0; start < degree(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        int p = start;
        do {
            seen[p] = 1;
            cyc.push_back(p);
            p = img_[p];
        } while (p != start);
        if (cyc.size() > 1 || include_fixed) cycles.push_back(std::move(cyc));
    }
    return cycles;
}

int Permutation::sign() const {
    int transpositions = 0;
    for (const auto &c : cycles0(false)) transpositions += (int)c.size() - 1;
    return transpositions % 2 == 0 ? 1 : -1;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lens;
    for (const auto &c : cycles0(true)) lens.push_back((int)c.size());
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

std::string Permutation::str() const {
    auto cyc = cycles0(false);
    if (cyc.empty()) return "e";
    std::string s;
    for (const auto &c : cyc) {
        s += '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c[i] + 1);
        }
        s += ')';
    }
    return s;
}

Permutation Permutation::parse(const std::string &text, int n) {
    Permutation p(n);
    std::string t;
    for (char ch : text)
        if (!isspace((unsigned char)ch)) t += ch;
    if (t == "e" || t.empty()) return p;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    size_t pos = 0;
    while (pos < t.size()) {
        if (t[pos] != '(') throw DomainError("permutation parse: expected '('");
        size_t close = t.find(')', pos);
        if (close == std::string::npos) throw DomainError("permutation parse: missing ')'");
        std::stringstream ss(t.substr(pos + 1, close - pos - 1));
        std::string tok;
        std::vector<int> cyc;
        while (std::getline(ss, tok, ',')) {
            int v = std::stoi(tok);
            if (v < 1 || v > n) throw DomainError("permutation parse: point out of range");
            cyc.push_back(v - 1);
        }
        if (cyc.size() < 1) throw DomainError("permutation parse: empty cycle");
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (img[from] != from) throw DomainError("permutation parse: cycles are not disjoint");
            img[from] = to;
        }
        pos = close + 1;
    }
    return from_images0(std::move(img));
}

Permutation compose(const Permutation &outer, const Permutation &inner) {
    if (outer.degree() != inner.degree()) throw DomainError("compose: degree mismatch");
    std::vector<int> img(outer.degree());
    for (int i = 0; i < outer.degree(); ++i) img[i] = outer.image0(inner.image0(i));
    return Permutation::from_images0(std::move(img));
}

Permutation conjugate(const Permutation &p, const Permutation &h) {
    if (p.degree() != h.degree()) throw DomainError("conjugate: degree mismatch");
    return compose(compose(h, p), h.inverse());
}

unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int k = 2; k <= n; ++k) f *= (unsigned)k;
    return f;
}

unsigned long long class_size(const Partition &lambda) {
    unsigned long long denom = 1;
    int i = 0;
    while (i < lambda.length()) {
        int j = i;
        while (j < lambda.length() && lambda.part(j) == lambda.part(i)) ++j;
        int mult = j - i;
        for (int k = 1; k <= mult; ++k) denom *= (unsigned)k;
        for (int k = 0; k < mult; ++k) denom *= (unsigned)lambda.part(i);
        i = j;
    }
    return factorial(lambda.n()) / denom;
}

int enumeration_bound() {
    if (const char *env = std::getenv("PARITYLAB_ENUM_BOUND")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 8;
}

std::vector<Permutation> enumerate_group(int n, GroupKind which) {
    if (n < 1) throw DomainError("enumerate_group: degree must be positive");
    if (n > enumeration_bound()) throw BoundError("enumerate_group: degree exceeds enumeration bound");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    out.reserve(which == GroupKind::S ? factorial(n) : factorial(n) / 2);
    do {
        Permutation p = Permutation::from_images0(img);
        if (which == GroupKind::S || p.sign() == 1) out.push_back(std::move(p));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Permutation unrank_permutation(int n, unsigned long long rank) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> img;
    img.reserve(n);
    for (int k = n - 1; k >= 0; --k) {
        unsigned long long f = factorial(k);
        int idx = (int)(rank / f);
        rank %= f;
        img.push_back(pool[idx]);
        pool.erase(pool.begin() + idx);
    }
    return Permutation::from_images0(std::move(img));
}

}  // namespace paritylab
