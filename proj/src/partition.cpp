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

#include "paritylab/partition.hpp"

#include <numeric>
#include <sstream>

#include "paritylab/errors.hpp"

namespace paritylab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition: parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::transpose() const {
    if (parts_.empty()) return Partition();
    std::vector<int> cols(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++cols[j];
    return Partition(std::move(cols));
}

int Partition::parity_sign() const {
    int odd_cycles = 0;
    for (int p : parts_)
        if (p % 2 == 0) ++odd_cycles;
    return odd_cycles % 2 == 0 ? 1 : -1;
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string &text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    if (parts.empty()) throw DomainError("partition: empty text form");
    return Partition(std::move(parts));
}

namespace {

void gen_partitions(int remaining, int max_part, int max_length, std::vector<int> &acc,
                    std::vector<Partition> &out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if ((int)acc.size() == max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, max_length, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length) {
    if (n < 1) throw DomainError("partitions_of: n must be positive");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, max_length, acc, out);
    return out;
}

std::vector<std::vector<int>> hook_lengths(const Partition &lambda) {
    Partition t = lambda.transpose();
    std::vector<std::vector<int>> h(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) {
        h[r].resize(lambda.part(r));
        for (int c = 0; c < lambda.part(r); ++c)
            h[r][c] = (lambda.part(r) - c) + (t.part(c) - r) - 1;
    }
    return h;
}

unsigned long long dim_sn(const Partition &lambda) {
    __uint128_t num = 1, den = 1;
    for (int k = 1; k <= lambda.n(); ++k) num *= (unsigned)k;
    for (const auto &row : hook_lengths(lambda))
        for (int h : row) den *= (unsigned)h;
    return (unsigned long long)(num / den);
}

unsigned long long dim_sud(const Partition &lambda, int d) {
    if (d < 1) throw DomainError("dim_sud: d must be positive");
    if (lambda.length() > d) return 0;
    std::vector<long long> l(d);
    for (int p = 0; p < d; ++p) l[p] = d - (p + 1) + 1 + (p < lambda.length() ? lambda.part(p) : 0);
    __uint128_t num = 1, den = 1;
    for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q) {
            num *= (unsigned long long)(l[p] - l[q]);
            den *= (unsigned long long)(q - p);
        }
    return (unsigned long long)(num / den);
}

Partition diagonal_hooks(const Partition &lambda) {
    if (!lambda.self_conjugate()) throw DomainError("diagonal_hooks: partition is not self-conjugate");
    auto h = hook_lengths(lambda);
    std::vector<int> diag;
    for (int r = 0; r < lambda.length(); ++r)
        if (lambda.part(r) > r) diag.push_back(h[r][r]);
    return Partition(std::move(diag));
}

}  // namespace paritylab
