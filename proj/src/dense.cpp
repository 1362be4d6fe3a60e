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

#include "paritylab/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "paritylab/errors.hpp"

namespace paritylab {

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMat CMat::adjoint() const {
    CMat m(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(c, r) = std::conj(at(r, c));
    return m;
}

CMat CMat::operator*(const CMat &o) const {
    if (cols != o.rows) throw DomainError("matrix product: shape mismatch");
    CMat m(rows, o.cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k) {
            cdouble v = at(r, k);
            if (v == cdouble(0, 0)) continue;
            for (int c = 0; c < o.cols; ++c) m.at(r, c) += v * o.at(k, c);
        }
    return m;
}

CMat CMat::operator+(const CMat &o) const {
    CMat m = *this;
    for (size_t i = 0; i < a.size(); ++i) m.a[i] += o.a[i];
    return m;
}

CMat CMat::operator-(const CMat &o) const {
    CMat m = *this;
    for (size_t i = 0; i < a.size(); ++i) m.a[i] -= o.a[i];
    return m;
}

CMat CMat::scaled(cdouble f) const {
    CMat m = *this;
    for (auto &v : m.a) v *= f;
    return m;
}

std::vector<cdouble> CMat::apply(const std::vector<cdouble> &v) const {
    if ((int)v.size() != cols) throw DomainError("matrix apply: shape mismatch");
    std::vector<cdouble> out(rows, cdouble(0, 0));
    for (int r = 0; r < rows; ++r) {
        cdouble s(0, 0);
        const cdouble *row = &a[(size_t)r * cols];
        for (int c = 0; c < cols; ++c) s += row[c] * v[c];
        out[r] = s;
    }
    return out;
}

cdouble CMat::trace() const {
    cdouble t(0, 0);
    for (int i = 0; i < std::min(rows, cols); ++i) t += at(i, i);
    return t;
}

double CMat::frobenius_norm() const {
    double s = 0;
    for (const auto &v : a) s += std::norm(v);
    return std::sqrt(s);
}

double CMat::max_abs() const {
    double s = 0;
    for (const auto &v : a) s = std::max(s, std::abs(v));
    return s;
}

double CMat::hermiticity_defect() const {
    double s = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) s = std::max(s, std::abs(at(r, c) - std::conj(at(c, r))));
    return s;
}

EigResult jacobi_eigh(CMat h, int max_sweeps, double tol) {
    if (h.rows != h.cols) throw DomainError("jacobi_eigh: matrix not square");
    int n = h.rows;
    CMat v = CMat::identity(n);
    double scale = std::max(h.frobenius_norm(), 1e-300);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(h.at(p, q));
        if (std::sqrt(2 * off) < tol * scale) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                cdouble apq = h.at(p, q);
                double m = std::abs(apq);
                if (m < 1e-300) continue;
                // Phase that makes the pivot real, then a real rotation.
                cdouble phase = apq / m;
                double app = h.at(p, p).real(), aqq = h.at(q, q).real();
                double theta = 0.5 * std::atan2(2 * m, app - aqq);
                double c = std::cos(theta), s = std::sin(theta);
                cdouble sp = s * phase;
                // Columns: [p q] <- [p q] * [[c, -conj(sp)],[sp, c]] ... apply
                // as right-multiplication by the rotation and left by its
                // adjoint.
                for (int r = 0; r < n; ++r) {
                    cdouble hp = h.at(r, p), hq = h.at(r, q);
                    h.at(r, p) = c * hp + std::conj(sp) * hq;
                    h.at(r, q) = -sp * hp + c * hq;
                }
                for (int col = 0; col < n; ++col) {
                    cdouble hp = h.at(p, col), hq = h.at(q, col);
                    h.at(p, col) = c * hp + sp * hq;
                    h.at(q, col) = -std::conj(sp) * hp + c * hq;
                }
                for (int r = 0; r < n; ++r) {
                    cdouble vp = v.at(r, p), vq = v.at(r, q);
                    v.at(r, p) = c * vp + std::conj(sp) * vq;
                    v.at(r, q) = -sp * vp + c * vq;
                }
            }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = h.at(i, i).real();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return diag[a] > diag[b]; });
    EigResult res;
    res.values.resize(n);
    res.vectors = CMat(n, n);
    for (int k = 0; k < n; ++k) {
        res.values[k] = diag[order[k]];
        for (int r = 0; r < n; ++r) res.vectors.at(r, k) = v.at(r, order[k]);
    }
    return res;
}

int count_eigenvalues_above(const CMat &hermitian, double threshold) {
    EigResult e = jacobi_eigh(hermitian);
    int count = 0;
    for (double v : e.values)
        if (v > threshold) ++count;
    return count;
}

}  // namespace paritylab
