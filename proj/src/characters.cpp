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

#include "fermat/characters.hpp"

#include <numeric>
#include <stdexcept>

#include "fermat/cyclotomic.hpp"

namespace fermat {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int k = 2; k * k <= p; ++k)
        if (p % k == 0) return false;
    return true;
}

std::int64_t residue(std::int64_t a, int d) {
    std::int64_t r = a % d;
    return r < 0 ? r + d : r;
}

}  // namespace

FermatContext::FermatContext(int n_, int d_) : n(n_), d(d_) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("FermatContext: n must be even and positive");
    if (d < 2) throw std::invalid_argument("FermatContext: d must be at least 2");
}

Character::Character(int d, std::vector<int> entries) : d_(d), a_(std::move(entries)) {
    if (d_ < 2) throw std::invalid_argument("Character: modulus must be at least 2");
    int sum = 0;
    for (auto& v : a_) {
        v = static_cast<int>(residue(v, d_));
        sum = (sum + v) % d_;
    }
    if (sum != 0) throw std::invalid_argument("Character: entries must sum to 0 mod d");
}

bool Character::zero_free() const {
    for (int v : a_)
        if (v == 0) return false;
    return true;
}

Character Character::scaled(int t) const {
    std::vector<int> out(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i)
        out[i] = static_cast<int>(residue(static_cast<std::int64_t>(t) * a_[i], d_));
    return Character(d_, std::move(out));
}

int weight(const Character& alpha) {
    int sum = 0;
    for (int v : alpha.entries()) sum += v;
    return sum / alpha.modulus();
}

bool is_hodge_character(const Character& alpha) {
    if (!alpha.zero_free()) return false;
    const int half_weight = static_cast<int>(alpha.size()) / 2;  // n/2 + 1 for n+2 entries
    for (int t = 1; t < alpha.modulus(); ++t) {
        if (std::gcd(t, alpha.modulus()) != 1) continue;
        if (weight(alpha.scaled(t)) != half_weight) return false;
    }
    return true;
}

void for_each_zero_free_character(int d, int n, const std::function<void(const Character&)>& fn) {
    std::vector<int> a(static_cast<std::size_t>(n) + 2, 1);
    // odometer over entries 1..n+1 in {1,...,d-1}; entry 0 is forced
    while (true) {
        int sum = 0;
        for (std::size_t i = 1; i < a.size(); ++i) sum += a[i];
        const int a0 = static_cast<int>(residue(-sum, d));
        if (a0 != 0) {
            a[0] = a0;
            fn(Character(d, a));
        }
        std::size_t pos = 1;
        while (pos < a.size() && a[pos] == d - 1) {
            a[pos] = 1;
            ++pos;
        }
        if (pos == a.size()) break;
        ++a[pos];
    }
}

int hodge_number(const FermatContext& ctx, int p, int q) {
    if (p + q != ctx.n) throw std::invalid_argument("hodge_number: p + q must equal n");
    int count = 0;
    for_each_zero_free_character(ctx.d, ctx.n, [&](const Character& alpha) {
        if (weight(alpha) == q + 1) ++count;
    });
    return count;
}

std::int64_t zero_free_character_count(const FermatContext& ctx) {
    std::int64_t pw = 1;
    for (int i = 0; i < ctx.n + 2; ++i) pw *= ctx.d - 1;
    const std::int64_t sign = (ctx.n + 2) % 2 == 0 ? 1 : -1;
    return (pw + sign * (ctx.d - 1)) / ctx.d;
}

bool picmax_check(const FermatContext& ctx) {
    int hodge = 0, middle = 0;
    const int target = ctx.n / 2 + 1;
    for_each_zero_free_character(ctx.d, ctx.n, [&](const Character& alpha) {
        if (weight(alpha) != target) return;
        ++middle;
        if (is_hodge_character(alpha)) ++hodge;
    });
    const bool equal = (hodge == middle);
    if (equal != (euler_phi(ctx.d) <= 2))
        throw std::logic_error("picmax_check: enumeration disagrees with the phi(d) <= 2 criterion");
    return equal;
}

MinPrimeResult min_nondividing_prime(int d) {
    if (d < 5 || d == 6) throw std::invalid_argument("min_nondividing_prime: requires d >= 5, d != 6");
    int q = 2;
    while (!is_prime(q) || (2 * d) % q == 0) ++q;
    MinPrimeResult out{q, 2 * q == d + 1};
    if (!out.exceptional && 2 * q >= d)
        throw std::logic_error("min_nondividing_prime: q neither small nor exceptional");
    return out;
}

ResidueIdentityResult villasmall_identity_detail(int d) {
    const MinPrimeResult mp = min_nondividing_prime(d);
    const int q = mp.q;
    int k = -1;
    if (mp.exceptional) {
        k = 2;
    } else {
        for (int kk = 2; kk <= d - 2; ++kk) {
            if (static_cast<std::int64_t>(kk + 1) * q > d && static_cast<std::int64_t>(kk) * q < d) {
                k = kk;
                break;
            }
        }
        if (k < 0) throw std::logic_error("villasmall_identity: no k with d/(k+1) < q < d/k");
    }
    const std::int64_t t = 2LL * d - q;
    const std::int64_t value =
        (1 - k) * residue(t, d) - residue((k + 1) * t, d) + k * residue(2 * t, d);
    const std::int64_t expected = mp.exceptional ? d : -d;
    return ResidueIdentityResult{value == expected, q, k, value};
}

bool villasmall_identity(int d) { return villasmall_identity_detail(d).ok; }

}  // namespace fermat
