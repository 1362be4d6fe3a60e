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

#include "paritylab/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "paritylab/errors.hpp"

namespace paritylab {

namespace {

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

long euler_phi(long n) {
    long r = n;
    for (long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

// Exact division of integer polynomials, both with integer quotient
// guaranteed (used for products of cyclotomic polynomials).
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num, const std::vector<mpz_class> &den) {
    long dn = (long)num.size() - 1, dd = (long)den.size() - 1;
    std::vector<mpz_class> q(dn - dd + 1, mpz_class(0));
    for (long k = dn - dd; k >= 0; --k) {
        mpz_class c = num[k + dd] / den[dd];
        q[k] = c;
        if (c != 0)
            for (long j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    return q;
}

struct ConductorTables {
    long phi;
    // x^k mod Phi_N for k in [0, N), ascending coefficients of length phi.
    std::vector<std::vector<mpz_class>> pow_mod;
};

std::vector<mpz_class> cyclotomic_polynomial(long n, std::map<long, std::vector<mpz_class>> &memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // x^n - 1 divided by the cyclotomic polynomials of all proper divisors.
    std::vector<mpz_class> poly(n + 1, mpz_class(0));
    poly[0] = -1;
    poly[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d, memo));
    memo.emplace(n, poly);
    return poly;
}

std::mutex g_tables_mutex;
std::map<long, ConductorTables> g_tables;

const ConductorTables &conductor_tables(long n) {
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    auto it = g_tables.find(n);
    if (it != g_tables.end()) return it->second;

    static std::map<long, std::vector<mpz_class>> poly_memo;
    std::vector<mpz_class> phi_poly = cyclotomic_polynomial(n, poly_memo);
    long deg = (long)phi_poly.size() - 1;

    ConductorTables t;
    t.phi = deg;
    t.pow_mod.resize(n);
    for (long k = 0; k < std::min(deg, n); ++k) {
        t.pow_mod[k].assign(deg, mpz_class(0));
        t.pow_mod[k][k] = 1;
    }
    for (long k = deg; k < n; ++k) {
        // x * previous row, reduced by the monic relation
        // x^deg = -(phi_poly[0] + ... + phi_poly[deg-1] x^{deg-1}).
        const auto &prev = t.pow_mod[k - 1];
        std::vector<mpz_class> row(deg, mpz_class(0));
        const mpz_class &top = prev[deg - 1];
        for (long j = 0; j < deg; ++j) {
            if (j > 0) row[j] = prev[j - 1];
            if (top != 0) row[j] -= top * phi_poly[j];
        }
        t.pow_mod[k] = std::move(row);
    }
    return g_tables.emplace(n, std::move(t)).first->second;
}

// Solve A c = b over Q by Gaussian elimination. A is given column-major.
// Returns empty vector when the system is inconsistent.
std::vector<mpq_class> solve_rational(std::vector<std::vector<mpq_class>> cols, std::vector<mpq_class> b) {
    size_t ncols = cols.size();
    size_t nrows = b.size();
    std::vector<size_t> pivot_row_of_col(ncols, SIZE_MAX);
    size_t row_cursor = 0;
    for (size_t c = 0; c < ncols && row_cursor < nrows; ++c) {
        size_t pr = SIZE_MAX;
        for (size_t r = row_cursor; r < nrows; ++r)
            if (cols[c][r] != 0) {
                pr = r;
                break;
            }
        if (pr == SIZE_MAX) continue;
        for (size_t cc = 0; cc < ncols; ++cc) std::swap(cols[cc][pr], cols[cc][row_cursor]);
        std::swap(b[pr], b[row_cursor]);
        pr = row_cursor;
        mpq_class inv = 1 / cols[c][pr];
        for (size_t cc = 0; cc < ncols; ++cc) cols[cc][pr] *= inv;
        b[pr] *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == pr) continue;
            mpq_class f = cols[c][r];
            if (f == 0) continue;
            for (size_t cc = 0; cc < ncols; ++cc) cols[cc][r] -= f * cols[cc][pr];
            b[r] -= f * b[pr];
        }
        pivot_row_of_col[c] = pr;
        ++row_cursor;
    }
    for (size_t r = row_cursor; r < nrows; ++r)
        if (b[r] != 0) return {};
    std::vector<mpq_class> x(ncols, mpq_class(0));
    for (size_t c = 0; c < ncols; ++c)
        if (pivot_row_of_col[c] != SIZE_MAX) x[c] = b[pivot_row_of_col[c]];
    return x;
}

int legendre_symbol(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    // Euler's criterion with fast exponentiation mod p.
    long e = (p - 1) / 2, base = a, r = 1;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

}  // namespace

Cyclo::Cyclo(long cond, std::vector<mpq_class> reduced_coeffs) : cond_(cond), c_(std::move(reduced_coeffs)) {
    normalize_();
}

Cyclo Cyclo::from_exponents(long n, const std::vector<mpq_class> &by_exponent) {
    const ConductorTables &t = conductor_tables(n);
    std::vector<mpq_class> out(t.phi, mpq_class(0));
    for (long e = 0; e < n; ++e) {
        const mpq_class &q = by_exponent[e];
        if (q == 0) continue;
        const auto &row = t.pow_mod[e];
        for (long j = 0; j < t.phi; ++j)
            if (row[j] != 0) out[j] += q * mpq_class(row[j]);
    }
    return Cyclo(n, std::move(out));
}

Cyclo Cyclo::zeta(long n, long k) {
    if (n < 1) throw DomainError("zeta: order must be positive");
    k %= n;
    if (k < 0) k += n;
    std::vector<mpq_class> v(n, mpq_class(0));
    v[k] = 1;
    return from_exponents(n, v);
}

bool Cyclo::is_zero() const {
    return cond_ == 1 && c_[0] == 0;
}

const mpq_class &Cyclo::rational_value() const {
    if (cond_ != 1) throw DomainError("rational_value: not a rational number");
    return c_[0];
}

void Cyclo::normalize_() {
    bool tail_zero = true;
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) {
            tail_zero = false;
            break;
        }
    if (tail_zero) {
        c_.resize(1);
        cond_ = 1;
        return;
    }
    bool descended = true;
    while (descended && cond_ > 1) {
        descended = false;
        for (long p : prime_factors(cond_)) {
            if (try_descend_(cond_ / p)) {
                descended = true;
                break;
            }
        }
    }
}

// Attempt to rewrite the value at conductor m (a maximal proper divisor of
// cond_). Succeeds iff the value is fixed by the Galois group of the
// extension.
bool Cyclo::try_descend_(long m) {
    long n = cond_;
    for (long j = 2; j < n; ++j) {
        if ((j - 1) % m != 0 || std::gcd(j, n) != 1) continue;
        // Apply zeta -> zeta^j without renormalizing.
        std::vector<mpq_class> by_exp(n, mpq_class(0));
        const ConductorTables &t = conductor_tables(n);
        for (long k = 0; k < t.phi; ++k)
            if (c_[k] != 0) by_exp[(k * j) % n] += c_[k];
        std::vector<mpq_class> mapped(t.phi, mpq_class(0));
        for (long e = 0; e < n; ++e) {
            if (by_exp[e] == 0) continue;
            const auto &row = t.pow_mod[e];
            for (long q = 0; q < t.phi; ++q)
                if (row[q] != 0) mapped[q] += by_exp[e] * mpq_class(row[q]);
        }
        if (mapped != c_) return false;
    }
    // Fixed field membership established; solve for coefficients over the
    // basis zeta_m^i = zeta_n^{i n/m}.
    const ConductorTables &t = conductor_tables(n);
    long phim = euler_phi(m);
    long step = n / m;
    std::vector<std::vector<mpq_class>> cols(phim);
    for (long i = 0; i < phim; ++i) {
        const auto &row = t.pow_mod[(i * step) % n];
        cols[i].assign(t.phi, mpq_class(0));
        for (long q = 0; q < t.phi; ++q) cols[i][q] = mpq_class(row[q]);
    }
    std::vector<mpq_class> sol = solve_rational(std::move(cols), c_);
    if (sol.empty()) throw DomainError("cyclotomic descent: inconsistent rewrite");
    cond_ = m;
    c_ = std::move(sol);
    return true;
}

Cyclo operator+(const Cyclo &a, const Cyclo &b) {
    if (a.cond_ == b.cond_) {
        std::vector<mpq_class> v = a.c_;
        for (size_t j = 0; j < v.size(); ++j) v[j] += b.c_[j];
        return Cyclo(a.cond_, std::move(v));
    }
    long l = std::lcm(a.cond_, b.cond_);
    std::vector<mpq_class> by_exp(l, mpq_class(0));
    for (long k = 0; k < (long)a.c_.size(); ++k)
        if (a.c_[k] != 0) by_exp[k * (l / a.cond_)] += a.c_[k];
    for (long k = 0; k < (long)b.c_.size(); ++k)
        if (b.c_[k] != 0) by_exp[k * (l / b.cond_)] += b.c_[k];
    return Cyclo::from_exponents(l, by_exp);
}

Cyclo operator-(const Cyclo &a, const Cyclo &b) {
    return a + (-b);
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto &q : r.c_) q = -q;
    return r;
}

Cyclo operator*(const Cyclo &a, const Cyclo &b) {
    if (a.cond_ == 1) {
        if (a.c_[0] == 0) return Cyclo();
        Cyclo r = b;
        for (auto &q : r.c_) q *= a.c_[0];
        r.normalize_();
        return r;
    }
    if (b.cond_ == 1) return b * a;
    long l = std::lcm(a.cond_, b.cond_);
    long sa = l / a.cond_, sb = l / b.cond_;
    std::vector<mpq_class> by_exp(l, mpq_class(0));
    for (long i = 0; i < (long)a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; j < (long)b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            by_exp[(i * sa + j * sb) % l] += a.c_[i] * b.c_[j];
        }
    }
    return Cyclo::from_exponents(l, by_exp);
}

Cyclo &Cyclo::operator+=(const Cyclo &o) { return *this = *this + o; }
Cyclo &Cyclo::operator-=(const Cyclo &o) { return *this = *this - o; }
Cyclo &Cyclo::operator*=(const Cyclo &o) { return *this = *this * o; }

Cyclo Cyclo::galois(long j) const {
    long n = cond_;
    j %= n;
    if (j < 0) j += n;
    if (std::gcd(j, n) != 1) throw DomainError("galois: exponent not coprime to conductor");
    std::vector<mpq_class> by_exp(n, mpq_class(0));
    for (long k = 0; k < (long)c_.size(); ++k)
        if (c_[k] != 0) by_exp[(k * j) % n] += c_[k];
    return from_exponents(n, by_exp);
}

Cyclo Cyclo::conj() const {
    if (cond_ == 1) return *this;
    return galois(cond_ - 1);
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    if (cond_ == 1) {
        Cyclo r;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    long n = cond_;
    const ConductorTables &t = conductor_tables(n);
    // Columns of the multiplication-by-*this* matrix in the power basis.
    std::vector<std::vector<mpq_class>> cols(t.phi);
    for (long j = 0; j < t.phi; ++j) {
        std::vector<mpq_class> by_exp(n, mpq_class(0));
        for (long k = 0; k < t.phi; ++k)
            if (c_[k] != 0) by_exp[(k + j) % n] += c_[k];
        cols[j].assign(t.phi, mpq_class(0));
        for (long e = 0; e < n; ++e) {
            if (by_exp[e] == 0) continue;
            const auto &row = t.pow_mod[e];
            for (long q = 0; q < t.phi; ++q)
                if (row[q] != 0) cols[j][q] += by_exp[e] * mpq_class(row[q]);
        }
    }
    std::vector<mpq_class> e0(t.phi, mpq_class(0));
    e0[0] = 1;
    std::vector<mpq_class> x = solve_rational(std::move(cols), std::move(e0));
    if (x.empty()) throw DomainError("inverse: singular multiplication matrix");
    return Cyclo(n, std::move(x));
}

Cyclo Cyclo::sqrt_integer(long m) {
    if (m == 0) throw DomainError("sqrt_integer: zero");
    bool neg = m < 0;
    unsigned long long a = neg ? -(long long)m : m;
    long square = 1, free_part = 1;
    for (long p = 2; (unsigned long long)p * p <= a; ++p) {
        while (a % ((unsigned long long)p * p) == 0) {
            square *= p;
            a /= (unsigned long long)p * p;
        }
        if (a % p == 0) {
            free_part *= p;
            a /= p;
        }
    }
    free_part *= (long)a;

    Cyclo r(square);
    for (long p : prime_factors(free_part)) {
        if (p == 2) {
            r *= zeta(8, 1) - zeta(8, 3);
            continue;
        }
        std::vector<mpq_class> by_exp(p, mpq_class(0));
        for (long j = 1; j < p; ++j) by_exp[j] = legendre_symbol(j, p);
        Cyclo gauss = from_exponents(p, by_exp);
        if (p % 4 == 1) {
            r *= gauss;
        } else {
            // gauss == i*sqrt(p): divide by i.
            r *= -zeta(4) * gauss;
        }
    }
    if (neg) r *= zeta(4);
    return r;
}

Cyclo Cyclo::from_sqrt_rational(long k) {
    if (k < 1) throw DomainError("from_sqrt_rational: k must be positive");
    for (long p = 2; p * p <= k; ++p)
        if (k % (p * p) == 0) throw DomainError("from_sqrt_rational: k not square-free");
    return sqrt_integer(k);
}

std::complex<double> Cyclo::embed() const {
    std::complex<double> s(0.0, 0.0);
    const double tau = 6.283185307179586476925286766559;
    for (long k = 0; k < (long)c_.size(); ++k) {
        if (c_[k] == 0) continue;
        s += c_[k].get_d() * std::polar(1.0, tau * (double)k / (double)cond_);
    }
    return s;
}

namespace {

std::string rational_str(const mpq_class &q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string scaled_term(const mpq_class &q, const std::string &sym) {
    if (q == 1) return sym;
    if (q == -1) return "-" + sym;
    return rational_str(q) + "*" + sym;
}

}  // namespace

std::string Cyclo::str() const {
    if (cond_ == 1) return rational_str(c_[0]);

    // Rational multiple of a single root of unity.
    for (long k = 1; k < cond_; ++k) {
        if (std::gcd(k, cond_) != 1) continue;
        Cyclo ratio = *this * zeta(cond_, cond_ - k);
        if (ratio.is_rational()) {
            std::string sym = "z" + std::to_string(cond_) + (k == 1 ? "" : "^" + std::to_string(k));
            return scaled_term(ratio.rational_value(), sym);
        }
    }

    // Quadratic surd (a + b*sqrt(m))/r detection.
    std::vector<long> radicands;
    for (long d = 2; d <= cond_; ++d)
        if (cond_ % d == 0) {
            radicands.push_back(d);
            radicands.push_back(-d);
        }
    for (long m : radicands) {
        Cyclo s = sqrt_integer(m);
        long l = std::lcm(cond_, s.conductor());
        if (l != cond_) continue;
        // Solve value == a + b*s from two coordinates, then verify.
        long idx = -1;
        for (long j = 1; j < (long)s.c_.size(); ++j)
            if (s.c_[j] != 0) {
                idx = j;
                break;
            }
        if (idx < 0) continue;
        if ((long)c_.size() <= idx) continue;
        mpq_class b = c_[idx] / s.c_[idx];
        mpq_class a = c_[0] - b * s.c_[0];
        if (b == 0) continue;
        if (Cyclo(a) + Cyclo(b) * s == *this) {
            mpz_class den = lcm(a.get_den(), b.get_den());
            mpq_class ad = a * mpq_class(den), bd = b * mpq_class(den);
            std::string root = "sqrt(" + std::to_string(m) + ")";
            std::string num;
            if (ad != 0) num += rational_str(ad);
            std::string bterm = scaled_term(bd, root);
            if (ad != 0 && bterm[0] != '-') num += "+";
            num += bterm;
            if (den == 1) return num;
            return "(" + num + ")/" + den.get_str();
        }
    }

    // Raw polynomial in the reduced basis.
    std::string out;
    for (long k = 0; k < (long)c_.size(); ++k) {
        if (c_[k] == 0) continue;
        std::string term = k == 0 ? rational_str(c_[k])
                                  : scaled_term(c_[k], "z" + std::to_string(cond_) +
                                                           (k == 1 ? "" : "^" + std::to_string(k)));
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace paritylab
