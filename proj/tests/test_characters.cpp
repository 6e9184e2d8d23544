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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fermat/characters.hpp"

using namespace fermat;

namespace {

// Independent oracle: count zero-free characters of weight w by the coefficient of
// x^{d*w} in (x + x^2 + ... + x^{d-1})^{n+2}.
std::int64_t weight_count_oracle(int d, int n, int w) {
    std::vector<std::int64_t> acc{1};
    for (int v = 0; v < n + 2; ++v) {
        std::vector<std::int64_t> next(acc.size() + static_cast<std::size_t>(d) - 1, 0);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (int k = 1; k <= d - 1; ++k) next[i + static_cast<std::size_t>(k)] += acc[i];
        acc = std::move(next);
    }
    const std::size_t idx = static_cast<std::size_t>(d) * static_cast<std::size_t>(w);
    return idx < acc.size() ? acc[idx] : 0;
}

}  // namespace

TEST_CASE("weights") {
    CHECK(weight(Character(4, {1, 3, 2, 2})) == 2);
    CHECK(weight(Character(3, {1, 1, 1, 2, 2, 2})) == 3);
    CHECK(weight(Character(6, {5, 1, 3, 3})) == 2);
    CHECK_THROWS_AS(Character(4, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("hodge characters") {
    CHECK(is_hodge_character(Character(4, {1, 3, 2, 2})));
    CHECK(!is_hodge_character(Character(5, {2, 2, 2, 4})));  // t = 2 breaks the weight
    CHECK(is_hodge_character(Character(3, {1, 1, 2, 2})));
    CHECK(!is_hodge_character(Character(4, {0, 1, 1, 2})));  // zero entry
}

TEST_CASE("hodge numbers") {
    CHECK(hodge_number(FermatContext(2, 3), 1, 1) == 6);
    CHECK(hodge_number(FermatContext(2, 4), 1, 1) == 19);
    CHECK(hodge_number(FermatContext(4, 3), 2, 2) == 20);
    // quartic K3: h^{2,0}_prim = 1
    CHECK(hodge_number(FermatContext(2, 4), 2, 0) == 1);

    // generating-function oracle across all weights, several cases
    for (auto [n, d] : {std::pair{2, 3}, {2, 4}, {2, 5}, {2, 6}, {4, 3}, {4, 4}}) {
        const FermatContext ctx(n, d);
        std::int64_t total = 0;
        for (int q = 0; q <= n; ++q) {
            const int h = hodge_number(ctx, n - q, q);
            CHECK(h == weight_count_oracle(d, n, q + 1));
            CHECK(h == hodge_number(ctx, q, n - q));  // Hodge symmetry
            total += h;
        }
        CHECK(total == zero_free_character_count(ctx));
    }
}

TEST_CASE("hodge set stability") {
    // B^n_d is stable under t*alpha and coordinate permutations (d=4, n=2)
    std::vector<std::vector<int>> hodge;
    for_each_zero_free_character(4, 2, [&](const Character& a) {
        if (is_hodge_character(a)) hodge.push_back(a.entries());
    });
    std::set<std::vector<int>> hodge_set(hodge.begin(), hodge.end());
    for (const auto& a : hodge) {
        Character alpha(4, a);
        CHECK(hodge_set.count(alpha.scaled(3).entries()) == 1);
        std::vector<int> perm = a;
        std::swap(perm[0], perm[2]);
        CHECK(hodge_set.count(perm) == 1);
        std::swap(perm[1], perm[3]);
        CHECK(hodge_set.count(perm) == 1);
    }
}

TEST_CASE("maximal-rank degrees") {
    for (int d : {3, 4, 6}) CHECK(picmax_check(FermatContext(2, d)));
    for (int d : {5, 7, 8, 9, 10}) CHECK(!picmax_check(FermatContext(2, d)));

    // for d in {3,4,6} every middle-weight zero-free character is Hodge;
    // for 5 <= d <= 10 the inclusion is strict at n = 2
    for (int d = 5; d <= 10; ++d) {
        if (d == 6) continue;
        int middle = 0, hodge = 0;
        for_each_zero_free_character(d, 2, [&](const Character& a) {
            if (weight(a) != 2) return;
            ++middle;
            if (is_hodge_character(a)) ++hodge;
        });
        CHECK(hodge < middle);
    }
}

TEST_CASE("least nondividing prime") {
    CHECK(min_nondividing_prime(7).q == 3);
    CHECK(!min_nondividing_prime(7).exceptional);
    CHECK(min_nondividing_prime(5).q == 3);
    CHECK(min_nondividing_prime(5).exceptional);
    CHECK(min_nondividing_prime(9).q == 5);
    CHECK(min_nondividing_prime(9).exceptional);
    CHECK(min_nondividing_prime(12).q == 5);
    CHECK(!min_nondividing_prime(12).exceptional);
    CHECK_THROWS_AS(min_nondividing_prime(4), std::invalid_argument);
    CHECK_THROWS_AS(min_nondividing_prime(6), std::invalid_argument);

    for (int d = 5; d <= 500; ++d) {
        if (d == 6) continue;
        const auto r = min_nondividing_prime(d);
        CHECK((2 * r.q < d || r.exceptional));
        CHECK(r.exceptional == (d == 5 || d == 9));
    }
}

TEST_CASE("residue identity") {
    CHECK(villasmall_identity(7));
    const auto r5 = villasmall_identity_detail(5);
    CHECK(r5.ok);
    CHECK(r5.value == 5);  // exceptional branch gives +d
    CHECK(villasmall_identity(100));
    const auto r100 = villasmall_identity_detail(100);
    CHECK(r100.q == 3);
    CHECK(r100.k == 33);
    CHECK(r100.value == -100);
    for (int d = 5; d <= 200; ++d) {
        if (d == 6) continue;
        CHECK(villasmall_identity(d));
    }
}
