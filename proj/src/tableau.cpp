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

#include "paritylab/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "paritylab/errors.hpp"

namespace paritylab {

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if ((int)rows_.size() != shape_.length()) throw DomainError("standard tableau: row count mismatch");
    std::vector<char> seen(shape_.n() + 1, 0);
    for (int r = 0; r < (int)rows_.size(); ++r) {
        if ((int)rows_[r].size() != shape_.part(r)) throw DomainError("standard tableau: row length mismatch");
        for (int c = 0; c < (int)rows_[r].size(); ++c) {
            int v = rows_[r][c];
            if (v < 1 || v > shape_.n() || seen[v]) throw DomainError("standard tableau: entries must be 1..n once each");
            seen[v] = 1;
            if (c > 0 && rows_[r][c - 1] >= v) throw DomainError("standard tableau: rows must strictly increase");
            if (r > 0 && rows_[r - 1][c] >= v) throw DomainError("standard tableau: columns must strictly increase");
        }
    }
}

int StandardTableau::row_of(int v) const {
    for (int r = 0; r < (int)rows_.size(); ++r)
        for (int x : rows_[r])
            if (x == v) return r;
    throw DomainError("standard tableau: entry not found");
}

StandardTableau StandardTableau::removed_largest() const {
    int n = shape_.n();
    std::vector<std::vector<int>> rows = rows_;
    std::vector<int> parts = shape_.parts();
    for (int r = 0; r < (int)rows.size(); ++r) {
        if (!rows[r].empty() && rows[r].back() == n) {
            rows[r].pop_back();
            if (rows[r].empty()) {
                rows.erase(rows.begin() + r);
                parts.erase(parts.begin() + r);
            } else {
                --parts[r];
            }
            return StandardTableau(Partition(parts), rows);
        }
    }
    throw DomainError("standard tableau: largest entry not at a row end");
}

std::string StandardTableau::str() const {
    std::string s;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += '/';
        for (int v : rows_[r]) s += std::to_string(v);
    }
    return s;
}

StandardTableau StandardTableau::parse(const std::string &text) {
    std::vector<std::vector<int>> rows;
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '/')) {
        std::vector<int> row;
        for (char ch : tok) {
            if (ch < '1' || ch > '9') throw DomainError("tableau parse: single-digit entries expected");
            row.push_back(ch - '0');
        }
        parts.push_back((int)row.size());
        rows.push_back(std::move(row));
    }
    return StandardTableau(Partition(parts), rows);
}

SemiStandardTableau::SemiStandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if ((int)rows_.size() != shape_.length()) throw DomainError("semistandard tableau: row count mismatch");
    for (int r = 0; r < (int)rows_.size(); ++r) {
        if ((int)rows_[r].size() != shape_.part(r)) throw DomainError("semistandard tableau: row length mismatch");
        for (int c = 0; c < (int)rows_[r].size(); ++c) {
            int v = rows_[r][c];
            if (v < 0) throw DomainError("semistandard tableau: negative entry");
            if (c > 0 && rows_[r][c - 1] > v) throw DomainError("semistandard tableau: rows must weakly increase");
            if (r > 0 && rows_[r - 1][c] >= v) throw DomainError("semistandard tableau: columns must strictly increase");
        }
    }
}

std::vector<int> SemiStandardTableau::content(int d) const {
    std::vector<int> mult(d, 0);
    for (const auto &row : rows_)
        for (int v : row) {
            if (v >= d) throw DomainError("semistandard tableau: entry exceeds alphabet");
            ++mult[v];
        }
    return mult;
}

std::string SemiStandardTableau::str() const {
    std::string s;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += '/';
        for (int v : rows_[r]) s += std::to_string(v);
    }
    return s;
}

namespace {

void gen_syt(const Partition &shape, std::vector<std::vector<int>> &rows, std::vector<int> &fill, int next,
             std::vector<StandardTableau> &out) {
    int n = shape.n();
    if (next > n) {
        out.push_back(StandardTableau(shape, rows));
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        int c = fill[r];
        if (c >= shape.part(r)) continue;
        if (r > 0 && fill[r - 1] <= c) continue;
        rows[r][c] = next;
        ++fill[r];
        gen_syt(shape, rows, fill, next + 1, out);
        --fill[r];
    }
}

void gen_ssyt(const Partition &shape, int d, std::vector<std::vector<int>> &rows, int r, int c,
              std::vector<SemiStandardTableau> &out) {
    if (r == shape.length()) {
        out.push_back(SemiStandardTableau(shape, rows));
        return;
    }
    int nr = r, nc = c + 1;
    if (nc >= shape.part(r)) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 0;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v < d; ++v) {
        rows[r][c] = v;
        gen_ssyt(shape, d, rows, nr, nc, out);
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition &shape) {
    if (dim_sn(shape) > 1000000ULL) throw BoundError("enumerate_syt: tableau count exceeds bound");
    std::vector<std::vector<int>> rows(shape.length());
    for (int r = 0; r < shape.length(); ++r) rows[r].resize(shape.part(r));
    std::vector<int> fill(shape.length(), 0);
    std::vector<StandardTableau> out;
    gen_syt(shape, rows, fill, 1, out);
    std::sort(out.begin(), out.end(),
              [](const StandardTableau &a, const StandardTableau &b) { return a.rows() < b.rows(); });
    return out;
}

std::vector<SemiStandardTableau> enumerate_ssyt(const Partition &shape, int d,
                                                const std::optional<std::vector<int>> &content) {
    if (d < 1) throw DomainError("enumerate_ssyt: d must be positive");
    std::vector<SemiStandardTableau> all;
    if (shape.length() <= d) {
        std::vector<std::vector<int>> rows(shape.length());
        for (int r = 0; r < shape.length(); ++r) rows[r].resize(shape.part(r));
        gen_ssyt(shape, d, rows, 0, 0, all);
    }
    if (!content) return all;
    std::vector<int> want = *content;
    want.resize(d, 0);
    std::vector<SemiStandardTableau> filtered;
    for (auto &t : all)
        if (t.content(d) == want) filtered.push_back(std::move(t));
    return filtered;
}

}  // namespace paritylab
