/*
   Copyright 2026 The fermat-hodge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fermat/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fermat {

namespace {

using Vec = std::vector<Rational>;

int degree_of(const Vec& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// Remainder of a modulo the monic polynomial b.
Vec mod_monic(Vec a, const Vec& b) {
    const int db = degree_of(b);
    for (int i = degree_of(a); i >= db; --i) {
        const Rational lead = a[static_cast<std::size_t>(i)];
        if (lead == 0) continue;
        for (int j = 0; j < db; ++j)
            a[static_cast<std::size_t>(i - db + j)] -= lead * b[static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(i)] = 0;
    }
    a.resize(static_cast<std::size_t>(db));
    if (a.empty()) a.assign(1, Rational(0));
    return a;
}

// Exact quotient a / b for monic b with zero remainder.
Vec div_exact_monic(Vec a, const Vec& b) {
    const int db = degree_of(b);
    const int da = degree_of(a);
    if (da < db) throw std::logic_error("div_exact_monic: degree underflow");
    Vec q(static_cast<std::size_t>(da - db + 1), Rational(0));
    for (int i = da; i >= db; --i) {
        const Rational lead = a[static_cast<std::size_t>(i)];
        if (lead == 0) continue;
        q[static_cast<std::size_t>(i - db)] = lead;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(i - db + j)] -= lead * b[static_cast<std::size_t>(j)];
    }
    if (degree_of(a) != -1) throw std::logic_error("div_exact_monic: nonzero remainder");
    return q;
}

// General division with remainder over Q[x].
std::pair<Vec, Vec> divmod(Vec a, const Vec& b) {
    const int db = degree_of(b);
    if (db < 0) throw std::logic_error("divmod by zero polynomial");
    const Rational blead = b[static_cast<std::size_t>(db)];
    const int da = degree_of(a);
    Vec q(static_cast<std::size_t>(std::max(da - db + 1, 1)), Rational(0));
    for (int i = da; i >= db; --i) {
        const Rational lead = a[static_cast<std::size_t>(i)];
        if (lead == 0) continue;
        const Rational f = lead / blead;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
    }
    if (static_cast<int>(a.size()) > std::max(db, 1)) a.resize(static_cast<std::size_t>(std::max(db, 1)));
    return {q, a};
}

std::vector<int> divisors_of(int m) {
    std::vector<int> out;
    for (int k = 1; k <= m; ++k)
        if (m % k == 0) out.push_back(k);
    return out;
}

// Solve A x = b exactly; A is column-major (cols vectors of length rows).
// Throws if the system is inconsistent or underdetermined.
Vec solve_rational(std::vector<Vec> cols, Vec b) {
    const std::size_t rows = b.size();
    const std::size_t ncols = cols.size();
    std::vector<std::size_t> pivot_row(ncols);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (cols[c][i] != 0) { pr = i; break; }
        if (pr == rows) throw std::logic_error("solve_rational: dependent columns");
        for (std::size_t cc = 0; cc < ncols; ++cc) std::swap(cols[cc][r], cols[cc][pr]);
        std::swap(b[r], b[pr]);
        const Rational inv = 1 / cols[c][r];
        for (std::size_t cc = 0; cc < ncols; ++cc) cols[cc][r] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rational f = cols[c][i];
            if (f == 0) continue;
            for (std::size_t cc = 0; cc < ncols; ++cc) cols[cc][i] -= f * cols[cc][r];
            b[i] -= f * b[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) throw std::logic_error("solve_rational: inconsistent system");
    Vec x(ncols, Rational(0));
    for (std::size_t c = 0; c < ncols; ++c) x[c] = b[pivot_row[c]];
    return x;
}

}  // namespace

int euler_phi(int m) {
    if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
    int result = m;
    int v = m;
    for (int p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            result -= result / p;
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) result -= result / v;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    static std::map<int, Vec> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    for (int k : divisors_of(m)) {
        if (cache.count(k)) continue;
        Vec num(static_cast<std::size_t>(k) + 1, Rational(0));
        num[0] = -1;
        num[static_cast<std::size_t>(k)] = 1;
        for (int j : divisors_of(k))
            if (j < k) num = div_exact_monic(num, cache.at(j));
        cache.emplace(k, std::move(num));
    }
    return cache.at(m);
}

Cyclo Cyclo::zeta(int m, long k) {
    if (m < 1) throw std::invalid_argument("zeta: conductor must be positive");
    long kk = ((k % m) + m) % m;
    std::vector<Rational> raw(static_cast<std::size_t>(m), Rational(0));
    raw[static_cast<std::size_t>(kk)] = 1;
    return from_powers(m, raw);
}

Cyclo Cyclo::from_powers(int m, const std::vector<Rational>& raw) {
    if (m < 1) throw std::invalid_argument("from_powers: conductor must be positive");
    Vec folded(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t k = 0; k < raw.size(); ++k) {
        Rational q = raw[k];
        q.canonicalize();  // caller input may not be in lowest terms
        folded[k % static_cast<std::size_t>(m)] += q;
    }
    const Vec& phi = cyclotomic_polynomial(m);
    Vec red = mod_monic(std::move(folded), phi);
    red.resize(static_cast<std::size_t>(euler_phi(m)), Rational(0));
    return Cyclo(m, std::move(red));
}

bool Cyclo::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

std::optional<Rational> Cyclo::as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

Cyclo Cyclo::lifted(int target) const {
    if (target % m_ != 0) throw std::invalid_argument("lifted: target conductor not a multiple");
    if (target == m_) return *this;
    const int step = target / m_;
    std::vector<Rational> raw(static_cast<std::size_t>(target), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        raw[k * static_cast<std::size_t>(step)] = coeffs_[k];
    return from_powers(target, raw);
}

Cyclo Cyclo::normalized() const {
    for (int sub : divisors_of(m_)) {
        if (sub == m_) break;
        bool invariant = true;
        for (int t : units_mod(m_)) {
            if (t % sub != 1 % sub) continue;
            if (galois_apply(GaloisElement(m_, t), *this) != *this) { invariant = false; break; }
        }
        if (!invariant) continue;
        const int cols = euler_phi(sub);
        std::vector<Vec> basis;
        basis.reserve(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j)
            basis.push_back(zeta(m_, static_cast<long>(j) * (m_ / sub)).coeffs_);
        Vec x = solve_rational(std::move(basis), coeffs_);
        return Cyclo(sub, std::move(x));
    }
    return *this;
}

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (auto& q : out.coeffs_) q = -q;
    return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    const int L = std::lcm(m_, o.m_);
    *this = lifted(L);
    Cyclo ol = o.lifted(L);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += ol.coeffs_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    const int L = std::lcm(m_, o.m_);
    *this = lifted(L);
    Cyclo ol = o.lifted(L);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= ol.coeffs_[i];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    const int L = std::lcm(m_, o.m_);
    Cyclo a = lifted(L);
    Cyclo b = o.lifted(L);
    Vec conv(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    *this = from_powers(L, conv);
    return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inverse(); }

bool Cyclo::operator==(const Cyclo& o) const {
    const int L = std::lcm(m_, o.m_);
    return lifted(L).coeffs_ == o.lifted(L).coeffs_;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo::inverse: division by zero");
    const Vec& phi = cyclotomic_polynomial(m_);
    // Extended Euclid on (Phi_m, f); Phi_m is irreducible over Q, so the gcd
    // is a nonzero constant and the Bezout coefficient of f is the inverse.
    Vec r0 = phi, r1 = coeffs_;
    Vec s0(1, Rational(0)), s1(1, Rational(1));
    while (degree_of(r1) > 0) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Vec qs(q.size() + s1.size() - 1, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        Vec snew(std::max(s0.size(), qs.size()), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) snew[i] += s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) snew[i] -= qs[i];
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    const int dr = degree_of(r1);
    if (dr != 0) throw std::logic_error("Cyclo::inverse: gcd with Phi_m not constant");
    const Rational c = r1[0];
    for (auto& q : s1) q /= c;
    return from_powers(m_, s1);
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo base = *this;
    Cyclo acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Cyclo Cyclo::conj() const {
    if (m_ <= 2) return *this;
    return galois_apply(GaloisElement(m_, m_ - 1), *this);
}

std::size_t Cyclo::complexity() const {
    std::size_t c = 0;
    for (const auto& q : coeffs_)
        if (q != 0) c += 1 + bit_size(q);
    return c;
}

std::complex<double> Cyclo::to_complex() const {
    const double tau = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const double ang = tau * static_cast<double>(k) / static_cast<double>(m_);
        acc += to_double(coeffs_[k]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string Cyclo::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        Rational q = coeffs_[k];
        if (first) {
            if (q < 0) { os << "-"; q = -q; }
        } else {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        first = false;
        if (k == 0 || q != 1) os << q.get_str();
        if (k > 0) {
            if (q != 1) os << "*";
            os << "z" << m_;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

GaloisElement::GaloisElement(int m, int t) : m_(m) {
    if (m < 1) throw std::invalid_argument("GaloisElement: conductor must be positive");
    t_ = ((t % m) + m) % m;
    if (std::gcd(t_, m) != 1) throw std::invalid_argument("GaloisElement: exponent not coprime to conductor");
}

GaloisElement GaloisElement::compose(const GaloisElement& o) const {
    if (m_ != o.m_) throw std::invalid_argument("GaloisElement::compose: conductor mismatch");
    return GaloisElement(m_, static_cast<int>((static_cast<long>(t_) * o.t_) % m_));
}

Cyclo galois_apply(const GaloisElement& sigma, const Cyclo& z) {
    if (sigma.conductor() != z.conductor())
        throw std::invalid_argument("galois_apply: conductor mismatch");
    const int m = z.conductor();
    std::vector<Rational> raw(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t k = 0; k < z.coeffs().size(); ++k) {
        if (z.coeffs()[k] == 0) continue;
        raw[(k * static_cast<std::size_t>(sigma.exponent())) % static_cast<std::size_t>(m)] += z.coeffs()[k];
    }
    return Cyclo::from_powers(m, raw);
}

std::vector<int> units_mod(int m) {
    if (m < 1) throw std::invalid_argument("units_mod: m must be positive");
    if (m == 1) return {0};
    std::vector<int> out;
    for (int t = 1; t < m; ++t)
        if (std::gcd(t, m) == 1) out.push_back(t);
    return out;
}

bool subfield_and_circle_test(const Cyclo& z, int d) {
    if (d < 2) throw std::invalid_argument("subfield_and_circle_test: d must be at least 2");
    const int two_d = 2 * d;
    if (two_d % z.conductor() != 0)
        throw std::invalid_argument("subfield_and_circle_test: conductor does not divide 2d");
    const Cyclo zl = z.lifted(two_d);
    const Cyclo w = Cyclo::zeta(two_d, 3) * zl;
    for (int t : units_mod(two_d)) {
        if (t % d != 1 % d) continue;
        if (galois_apply(GaloisElement(two_d, t), w) != w) return false;
    }
    return zl * zl.conj() == Cyclo(1);
}

}  // namespace fermat
