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

#include "paritylab/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "paritylab/dense.hpp"
#include "paritylab/errors.hpp"

namespace paritylab {

namespace {

std::uint64_t pow_u64(int base, int exp) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) v *= (unsigned)base;
    return v;
}

}  // namespace

Ket Ket::from_digits(int d, const std::vector<int> &digits) {
    Ket k;
    k.n = (int)digits.size();
    k.d = d;
    for (int v : digits) {
        if (v < 0 || v >= d) throw DomainError("ket: digit out of range");
        k.code = k.code * (unsigned)d + (unsigned)v;
    }
    return k;
}

Ket Ket::parse(const std::string &text, int d) {
    std::vector<int> digits;
    for (char ch : text) {
        if (ch < '0' || ch > '9') throw DomainError("ket parse: digits expected");
        digits.push_back(ch - '0');
    }
    return from_digits(d, digits);
}

std::vector<int> Ket::digits() const {
    std::vector<int> out(n);
    std::uint64_t c = code;
    for (int i = n - 1; i >= 0; --i) {
        out[i] = (int)(c % (unsigned)d);
        c /= (unsigned)d;
    }
    return out;
}

std::string Ket::str() const {
    std::string s;
    for (int v : digits()) s += std::to_string(v);
    return s;
}

StateVector::StateVector(int n, int d, AmpMode mode) : n_(n), d_(d), mode_(mode) {
    if (n < 1 || d < 1) throw DomainError("state: n and d must be positive");
}

StateVector StateVector::basis_state(const Ket &k, AmpMode mode) {
    StateVector s(k.n, k.d, mode);
    if (mode == AmpMode::Exact)
        s.add(k.code, Cyclo(1));
    else
        s.add(k.code, cdouble(1, 0));
    return s;
}

bool StateVector::is_zero() const {
    return mode_ == AmpMode::Exact ? exact_.empty() : flt_.empty();
}

size_t StateVector::term_count() const {
    return mode_ == AmpMode::Exact ? exact_.size() : flt_.size();
}

void StateVector::add(std::uint64_t code, const Cyclo &amp) {
    if (mode_ != AmpMode::Exact) throw DomainError("state add: exact amplitude into float state");
    if (amp.is_zero()) return;
    auto [it, inserted] = exact_.emplace(code, amp);
    if (!inserted) {
        it->second += amp;
        if (it->second.is_zero()) exact_.erase(it);
    }
}

void StateVector::add(std::uint64_t code, std::complex<double> amp) {
    if (mode_ != AmpMode::Float) throw DomainError("state add: float amplitude into exact state");
    if (amp == cdouble(0, 0)) return;
    auto [it, inserted] = flt_.emplace(code, amp);
    if (!inserted) {
        it->second += amp;
        if (it->second == cdouble(0, 0)) flt_.erase(it);
    }
}

StateVector StateVector::to_float() const {
    if (mode_ == AmpMode::Float) return *this;
    StateVector s(n_, d_, AmpMode::Float);
    for (const auto &[code, amp] : exact_) s.add(code, amp.embed());
    return s;
}

StateVector StateVector::scaled(const Cyclo &c) const {
    StateVector s(n_, d_, mode_);
    if (mode_ == AmpMode::Exact) {
        for (const auto &[code, amp] : exact_) s.add(code, amp * c);
    } else {
        cdouble f = c.embed();
        for (const auto &[code, amp] : flt_) s.add(code, amp * f);
    }
    return s;
}

StateVector StateVector::scaled(std::complex<double> c) const {
    if (mode_ != AmpMode::Float) throw DomainError("state scale: float factor on exact state");
    StateVector s(n_, d_, AmpMode::Float);
    for (const auto &[code, amp] : flt_) s.add(code, amp * c);
    return s;
}

StateVector operator+(const StateVector &a, const StateVector &b) {
    if (a.n_ != b.n_ || a.d_ != b.d_ || a.mode_ != b.mode_) throw DomainError("state sum: shape or mode mismatch");
    StateVector s = a;
    if (a.mode_ == AmpMode::Exact)
        for (const auto &[code, amp] : b.exact_) s.add(code, amp);
    else
        for (const auto &[code, amp] : b.flt_) s.add(code, amp);
    return s;
}

StateVector operator-(const StateVector &a, const StateVector &b) {
    if (a.mode_ == AmpMode::Exact) return a + b.scaled(Cyclo(-1));
    return a + b.scaled(cdouble(-1, 0));
}

mpq_class StateVector::norm2_exact() const {
    if (mode_ != AmpMode::Exact) throw DomainError("norm2_exact: float state");
    Cyclo s;
    for (const auto &[code, amp] : exact_) s += amp.conj() * amp;
    return s.rational_value();
}

double StateVector::norm2() const {
    if (mode_ == AmpMode::Exact) {
        // The squared norm lives in the real subfield; it need not be
        // rational, so go through the embedding.
        double s = 0;
        for (const auto &[code, amp] : exact_) s += std::norm(amp.embed());
        return s;
    }
    double s = 0;
    for (const auto &[code, amp] : flt_) s += std::norm(amp);
    return s;
}

StateVector StateVector::normalized() const {
    double nrm = std::sqrt(norm2());
    if (nrm == 0) throw DomainError("normalized: zero state");
    return to_float().scaled(cdouble(1.0 / nrm, 0));
}

std::vector<cdouble> StateVector::dense() const {
    std::vector<cdouble> v(pow_u64(d_, n_), cdouble(0, 0));
    if (mode_ == AmpMode::Exact)
        for (const auto &[code, amp] : exact_) v[code] = amp.embed();
    else
        for (const auto &[code, amp] : flt_) v[code] = amp;
    return v;
}

std::uint64_t permuted_code(const Permutation &sigma, std::uint64_t code, int n, int d) {
    // Decode, route digit i to position sigma(i), re-encode.
    std::vector<int> in(n), out(n);
    std::uint64_t c = code;
    for (int i = n - 1; i >= 0; --i) {
        in[i] = (int)(c % (unsigned)d);
        c /= (unsigned)d;
    }
    for (int i = 0; i < n; ++i) out[sigma.image0(i)] = in[i];
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) r = r * (unsigned)d + (unsigned)out[i];
    return r;
}

StateVector act(const Permutation &sigma, const StateVector &psi) {
    if (sigma.degree() != psi.n()) throw DomainError("act: degree mismatch");
    StateVector out(psi.n(), psi.d(), psi.mode());
    if (psi.mode() == AmpMode::Exact)
        for (const auto &[code, amp] : psi.exact_amps()) out.add(permuted_code(sigma, code, psi.n(), psi.d()), amp);
    else
        for (const auto &[code, amp] : psi.float_amps()) out.add(permuted_code(sigma, code, psi.n(), psi.d()), amp);
    return out;
}

StateVector apply_algebra(const AlgebraElement &a, const StateVector &psi) {
    if (a.degree() != psi.n()) throw DomainError("apply_algebra: degree mismatch");
    StateVector out(psi.n(), psi.d(), psi.mode());
    for (const auto &[sigma, coeff] : a.terms()) {
        if (psi.mode() == AmpMode::Exact) {
            for (const auto &[code, amp] : psi.exact_amps())
                out.add(permuted_code(sigma, code, psi.n(), psi.d()), coeff * amp);
        } else {
            cdouble f = coeff.embed();
            for (const auto &[code, amp] : psi.float_amps())
                out.add(permuted_code(sigma, code, psi.n(), psi.d()), f * amp);
        }
    }
    return out;
}

Cyclo inner_exact(const StateVector &u, const StateVector &v) {
    if (u.n() != v.n() || u.d() != v.d()) throw DomainError("inner: shape mismatch");
    if (u.mode() != AmpMode::Exact || v.mode() != AmpMode::Exact) throw DomainError("inner_exact: float operand");
    Cyclo s;
    auto iu = u.exact_amps().begin();
    auto iv = v.exact_amps().begin();
    while (iu != u.exact_amps().end() && iv != v.exact_amps().end()) {
        if (iu->first < iv->first) {
            ++iu;
        } else if (iv->first < iu->first) {
            ++iv;
        } else {
            s += iu->second.conj() * iv->second;
            ++iu;
            ++iv;
        }
    }
    return s;
}

namespace {

cdouble inner_float_maps(const std::map<std::uint64_t, cdouble> &a, const std::map<std::uint64_t, cdouble> &b) {
    cdouble s(0, 0);
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            s += std::conj(ia->second) * ib->second;
            ++ia;
            ++ib;
        }
    }
    return s;
}

}  // namespace

std::complex<double> inner(const StateVector &u, const StateVector &v) {
    if (u.n() != v.n() || u.d() != v.d()) throw DomainError("inner: shape mismatch");
    if (u.mode() == AmpMode::Exact && v.mode() == AmpMode::Exact) return inner_exact(u, v).embed();
    if (u.mode() == AmpMode::Float && v.mode() == AmpMode::Float)
        return inner_float_maps(u.float_amps(), v.float_amps());
    if (u.mode() == AmpMode::Exact) return inner_float_maps(u.to_float().float_amps(), v.float_amps());
    return inner_float_maps(u.float_amps(), v.to_float().float_amps());
}

std::optional<Cyclo> proportional_exact(const StateVector &u, const StateVector &v) {
    if (u.n() != v.n() || u.d() != v.d()) throw DomainError("proportional: shape mismatch");
    if (v.is_zero()) {
        if (u.is_zero()) return Cyclo(1);
        return std::nullopt;
    }
    if (u.is_zero()) return Cyclo(0);
    const auto &ua = u.exact_amps();
    const auto &va = v.exact_amps();
    if (ua.size() != va.size()) return std::nullopt;
    Cyclo c = ua.begin()->second * va.begin()->second.inverse();
    auto iu = ua.begin();
    auto iv = va.begin();
    for (; iu != ua.end(); ++iu, ++iv) {
        if (iu->first != iv->first) return std::nullopt;
        if (iu->second != c * iv->second) return std::nullopt;
    }
    return c;
}

std::optional<std::complex<double>> proportional(const StateVector &u, const StateVector &v, double tol) {
    if (u.n() != v.n() || u.d() != v.d()) throw DomainError("proportional: shape mismatch");
    if (u.mode() == AmpMode::Exact && v.mode() == AmpMode::Exact) {
        auto c = proportional_exact(u, v);
        if (!c) return std::nullopt;
        return c->embed();
    }
    double nu = u.norm2(), nv = v.norm2();
    if (nv == 0) {
        if (nu == 0) return cdouble(1, 0);
        return std::nullopt;
    }
    if (nu == 0) return cdouble(0, 0);
    cdouble ip = inner(v, u);
    if (std::norm(ip) < (1.0 - tol) * nu * nv) return std::nullopt;
    return ip / nv;
}

std::vector<StateVector> orbit(const StateVector &psi, const std::vector<Permutation> &perms) {
    std::vector<StateVector> out;
    out.reserve(perms.size());
    for (const auto &p : perms) out.push_back(act(p, psi));
    return out;
}

std::string SchurWeylAudit::balance_line() const {
    std::ostringstream os;
    os << total << " = ";
    for (size_t i = 0; i < lines.size(); ++i) {
        if (i) os << "+";
        os << lines[i].product;
    }
    return os.str();
}

SchurWeylAudit schur_weyl_audit(int n, int d, bool check_rank) {
    if (n > 6 || d > 4) throw BoundError("schur_weyl_audit: supported up to n=6, d=4");
    SchurWeylAudit audit;
    audit.n = n;
    audit.d = d;
    audit.total = pow_u64(d, n);
    unsigned long long sum = 0;
    for (const auto &lambda : partitions_of(n, d)) {
        SchurWeylLine line;
        line.lambda = lambda;
        line.dim_sym = dim_sn(lambda);
        line.mult = dim_sud(lambda, d);
        line.product = line.dim_sym * line.mult;
        sum += line.product;
        audit.lines.push_back(std::move(line));
    }
    audit.balanced = sum == audit.total;

    if (check_rank) {
        for (auto &line : audit.lines) {
            AlgebraElement proj = projector_element({line.lambda, SplitTag::None}, GroupKind::S, n);
            // The projector preserves the multiset of digits, so its matrix is
            // block-diagonal over content classes; ranks add up.
            std::map<std::vector<int>, std::vector<std::uint64_t>> by_content;
            for (std::uint64_t code = 0; code < audit.total; ++code) {
                Ket k{n, d, code};
                std::vector<int> digits = k.digits();
                std::sort(digits.begin(), digits.end());
                by_content[digits].push_back(code);
            }
            unsigned long long rank = 0;
            for (const auto &[content, codes] : by_content) {
                std::map<std::uint64_t, int> index;
                for (size_t i = 0; i < codes.size(); ++i) index[codes[i]] = (int)i;
                CMat block((int)codes.size(), (int)codes.size());
                for (size_t j = 0; j < codes.size(); ++j) {
                    StateVector col = apply_algebra(proj, StateVector::basis_state(Ket{n, d, codes[j]}, AmpMode::Float));
                    for (const auto &[code, amp] : col.float_amps()) block.at(index.at(code), (int)j) = amp;
                }
                rank += (unsigned long long)count_eigenvalues_above(block, 1e-8);
            }
            line.measured_rank = rank;
            if (rank != line.product) audit.ranks_match = false;
        }
    }
    return audit;
}

}  // namespace paritylab
