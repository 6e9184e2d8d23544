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

#include "fermat/periods.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermat {

namespace {

Rational factorial(int k) {
    Rational f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Rational d_power(int d, int e) {
    Rational p(1);
    for (int i = 0; i < e; ++i) p *= d;
    return p;
}

int residue_mod(long a, int d) {
    long r = a % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

}  // namespace

std::vector<VanishingCycleIndex> all_vanishing_cycles(const FermatContext& ctx) {
    std::vector<VanishingCycleIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(ctx.n) + 1, 0);
    while (true) {
        out.push_back(VanishingCycleIndex{cur});
        std::size_t pos = 0;
        while (pos < cur.size() && cur[pos] == ctx.d - 2) {
            cur[pos] = 0;
            ++pos;
        }
        if (pos == cur.size()) break;
        ++cur[pos];
    }
    std::sort(out.begin(), out.end(), [](const VanishingCycleIndex& a, const VanishingCycleIndex& b) {
        const int sa = total_degree(a.entries), sb = total_degree(b.entries);
        if (sa != sb) return sa < sb;
        return a.entries < b.entries;
    });
    return out;
}

Cyclo PeriodValue::pure_normalized(int n) const {
    if (!is_pure()) throw std::logic_error("PeriodValue::pure_normalized: Gamma word not empty");
    if (pi_power != n / 2)
        throw std::logic_error("PeriodValue::pure_normalized: unexpected (2 pi i) power");
    return coeff;
}

bool totally_decomposable(const ExpVec& beta, const FermatContext& ctx) {
    if (static_cast<int>(beta.size()) != ctx.vars()) return false;
    for (int v : beta)
        if (v < 0 || v > ctx.d - 2) return false;
    for (int j = 1; j <= ctx.pairs(); ++j)
        if (beta[static_cast<std::size_t>(2 * j - 2)] + beta[static_cast<std::size_t>(2 * j - 1)] != ctx.d - 2)
            return false;
    return true;
}

PeriodValue period_omega_beta(const ExpVec& beta, const VanishingCycleIndex& bp,
                              const FermatContext& ctx) {
    if (static_cast<int>(beta.size()) != ctx.vars())
        throw std::invalid_argument("period_omega_beta: beta must have n+2 entries");
    int degsum = 0;
    for (int v : beta) {
        if (v < 0 || v > ctx.d - 2) throw std::invalid_argument("period_omega_beta: beta entry out of range");
        degsum += v;
    }
    if ((degsum + ctx.vars()) % ctx.d != 0)
        throw std::invalid_argument("period_omega_beta: degree condition violated");
    if (static_cast<int>(bp.entries.size()) != ctx.n + 1)
        throw std::invalid_argument("period_omega_beta: beta' must have n+1 entries");

    const int d = ctx.d;
    PeriodValue out;
    out.coeff = Cyclo(Rational(1) / (d_power(d, ctx.n + 1) * factorial(ctx.n / 2)));
    out.pi_power = -1;
    for (int i = 0; i < ctx.vars(); ++i) {
        const int a = beta[static_cast<std::size_t>(i)] + 1;
        const int bpi = bp.at(i);
        const Cyclo factor = Cyclo::zeta(d, static_cast<long>(a) * (bpi + 1)) -
                             Cyclo::zeta(d, static_cast<long>(a) * bpi);
        out.coeff *= factor;
        out.gamma_word[a] += 1;
    }
    // Reflection reduction: each pair {a, d-a} becomes pi/sin(pi a/d)
    // = (2 pi i)/(zeta_{2d}^a - zeta_{2d}^{-a}).
    for (int a = 1; 2 * a <= d; ++a) {
        const int b = d - a;
        int pairs = 0;
        if (a == b) {
            pairs = out.gamma_word[a] / 2;
            out.gamma_word[a] -= 2 * pairs;
        } else {
            pairs = std::min(out.gamma_word.count(a) ? out.gamma_word[a] : 0,
                             out.gamma_word.count(b) ? out.gamma_word[b] : 0);
            out.gamma_word[a] -= pairs;
            out.gamma_word[b] -= pairs;
        }
        for (int k = 0; k < pairs; ++k) {
            const Cyclo denom = Cyclo::zeta(2 * d, a) - Cyclo::zeta(2 * d, -a);
            out.coeff *= denom.inverse();
            out.pi_power += 1;
        }
    }
    for (auto it = out.gamma_word.begin(); it != out.gamma_word.end();)
        it = it->second == 0 ? out.gamma_word.erase(it) : std::next(it);
    return out;
}

Cyclo normalized_period(const FakeCycleSpec& spec, const VanishingCycleIndex& bp) {
    const FermatContext& ctx = spec.ctx;
    if (!spec.c_lambda) throw std::invalid_argument("normalized_period: c_lambda not set");
    const int d = ctx.d;
    Cyclo total = *spec.c_lambda * product_of_c(spec).inverse();
    total *= Cyclo(Rational(1) / (d_power(d, ctx.n + 1) * factorial(ctx.n / 2)));
    for (int j = 1; j <= ctx.pairs(); ++j) {
        const int delta = bp.at(2 * j - 1) - bp.at(2 * j - 2);
        const Cyclo& cj = spec.c_of_pair(j);
        const Cyclo lo = cj * Cyclo::zeta(2 * d, 2 * delta - 1);
        const Cyclo hi = cj * Cyclo::zeta(2 * d, 2 * delta + 1);
        Cyclo e(0);
        Cyclo lo_pow = lo, hi_pow = hi;
        for (int l = 1; l <= d - 1; ++l) {
            e += lo_pow - hi_pow;
            if (l < d - 1) {
                lo_pow *= lo;
                hi_pow *= hi;
            }
        }
        total *= e;
    }
    return total;
}

Cyclo normalized_period_expanded(const FakeCycleSpec& spec, const VanishingCycleIndex& bp) {
    const FermatContext& ctx = spec.ctx;
    const Poly p = build_P_lambda(spec);
    Cyclo total(0);
    for (const auto& [beta, coeff] : p.terms()) {
        const PeriodValue pv = period_omega_beta(beta, bp, ctx);
        total += coeff * pv.pure_normalized(ctx.n);
    }
    return total;
}

GaloisOmegaResult galois_on_omega(const ExpVec& beta, const GaloisElement& sigma,
                                  const FermatContext& ctx) {
    if (!totally_decomposable(beta, ctx))
        throw std::invalid_argument("galois_on_omega: beta not totally decomposable");
    if (sigma.conductor() != 2 * ctx.d)
        throw std::invalid_argument("galois_on_omega: sigma must live at conductor 2d");
    const int d = ctx.d;
    const int t = sigma.exponent();  // representative in {1,...,2d-1}
    long sign_exp = 0;
    for (int j = 1; j <= ctx.pairs(); ++j) {
        const long a = beta[static_cast<std::size_t>(2 * j - 2)] + 1;
        sign_exp += (t * a - residue_mod(t * a, d)) / d;
    }
    ExpVec gamma(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i)
        gamma[i] = residue_mod(static_cast<long>(t) * (beta[i] + 1), d) - 1;
    return GaloisOmegaResult{sign_exp % 2 == 0 ? 1 : -1, std::move(gamma)};
}

Cyclo c_beta(const ExpVec& beta, const FermatContext& ctx) {
    if (!totally_decomposable(beta, ctx))
        throw std::invalid_argument("c_beta: beta not totally decomposable");
    Cyclo out(1);
    for (int j = 1; j <= ctx.pairs(); ++j) {
        const int a = beta[static_cast<std::size_t>(2 * j - 2)] + 1;
        const Cyclo denom = Cyclo::zeta(2 * ctx.d, a) - Cyclo::zeta(2 * ctx.d, -a);
        out *= denom.inverse();
    }
    return out;
}

}  // namespace fermat
