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

#include "fermat/periods.hpp"
#include "fermat/presets.hpp"

using namespace fermat;

namespace {

Rational factorial(int k) {
    Rational f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Rational int_pow(int b, int e) {
    Rational p(1);
    for (int i = 0; i < e; ++i) p *= b;
    return p;
}

}  // namespace

TEST_CASE("vanishing cycle enumeration") {
    const FermatContext ctx(2, 4);
    const auto cycles = all_vanishing_cycles(ctx);
    CHECK(cycles.size() == 27);  // (d-1)^{n+1}
    CHECK(cycles.front().entries == std::vector<int>{0, 0, 0});
    CHECK(cycles[1].entries == std::vector<int>{0, 0, 1});  // sum then lex
    CHECK(cycles.back().entries == std::vector<int>{2, 2, 2});
    CHECK(cycles.front().at(0) == 0);  // prepended convention
    CHECK(all_vanishing_cycles(FermatContext(6, 3)).size() == 128);
    CHECK(all_vanishing_cycles(FermatContext(2, 6)).size() == 125);
}

TEST_CASE("raw periods") {
    const FermatContext ctx(2, 6);
    const ExpVec beta{2, 2, 2, 2};  // degree 8, 8 + 4 divisible by 6
    const VanishingCycleIndex bp{{1, 3, 1}};
    const PeriodValue v = period_omega_beta(beta, bp, ctx);
    CHECK(v.is_pure());           // totally decomposable: reflection clears the word
    CHECK(v.pi_power == ctx.n / 2);

    // a non-decomposable beta keeps Gamma symbols
    const ExpVec beta2{2, 0, 0, 0};  // degree 2 + 4 = 6
    const PeriodValue v2 = period_omega_beta(beta2, bp, ctx);
    CHECK(!v2.is_pure());
    CHECK(v2.pi_power == -1);
    CHECK(v2.gamma_word.at(3) == 1);
    CHECK(v2.gamma_word.at(1) == 3);

    CHECK_THROWS_AS(period_omega_beta(ExpVec{5, 0, 0, 0}, bp, ctx), std::invalid_argument);
    CHECK_THROWS_AS(period_omega_beta(ExpVec{1, 0, 0, 0}, bp, ctx), std::invalid_argument);
}

TEST_CASE("cyclotomic factors never vanish on basis forms") {
    // zeta_d^{a(b'+1)} - zeta_d^{a b'} = zeta^{ab'}(zeta^a - 1) = 0 would need
    // a = 0 mod d, which the basis entries a in {1,...,d-1} exclude.
    const FermatContext ctx6(2, 6);
    const ExpVec beta{1, 3, 1, 3};
    for (const auto& bp : all_vanishing_cycles(ctx6)) {
        const PeriodValue v = period_omega_beta(beta, bp, ctx6);
        CHECK(!v.coeff.is_zero());
    }
}

TEST_CASE("period of the true linear cycle's class") {
    // all c_i = zeta_{2d}, c_lambda = zeta_{2d}^{n/2+1}: the class of a linear
    // subvariety up to rational scale; every normalized period is rational,
    // and at beta' = 0 each E factor is d, so the value is 1/(d^{n/2} (n/2)!).
    for (const char* name : {"cubic-true-linear", "quartic-true-linear", "sextic-true-linear"}) {
        FakeCycleSpec spec = preset_spec(name);
        const int n = spec.ctx.n, d = spec.ctx.d;
        spec.c_lambda = Cyclo::zeta(2 * d, n / 2 + 1);
        for (const auto& bp : all_vanishing_cycles(spec.ctx)) {
            const Cyclo value = normalized_period(spec, bp);
            REQUIRE(value.is_rational());
        }
        const VanishingCycleIndex zero{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
        CHECK(*normalized_period(spec, zero).as_rational() ==
              Rational(1) / (int_pow(d, n / 2) * factorial(n / 2)));
    }
}

TEST_CASE("closed form vs expansion pathway") {
    for (const char* name :
         {"cubic-all-ones", "cubic-pythagorean", "quartic-pythagorean", "sextic-pythagorean"}) {
        FakeCycleSpec spec = preset_spec(name);
        spec.c_lambda = Cyclo(3) * Cyclo::zeta(2 * spec.ctx.d);  // arbitrary nonzero scalar
        for (const auto& bp : all_vanishing_cycles(spec.ctx)) {
            CHECK(normalized_period(spec, bp) == normalized_period_expanded(spec, bp));
        }
    }
}

TEST_CASE("E factor example") {
    // d=3, c=1, all deltas 0: each E = 2 - 4 zeta_6 and the period is
    // c_lambda/(3^7 3!) * (2-4 zeta_6)^4 = 9*(2-4)^4/(3^7*6)... checked exactly:
    FakeCycleSpec spec = preset_spec("cubic-all-ones");
    spec.c_lambda = Cyclo(1);
    const VanishingCycleIndex zero{std::vector<int>(7, 0)};
    const Cyclo e = Cyclo(2) - Cyclo(4) * Cyclo::zeta(6);
    const Cyclo expected = e.pow(4) * Cyclo(Rational(1) / (int_pow(3, 7) * factorial(3)));
    CHECK(normalized_period(spec, zero) == expected);
    // (2 - 4 zeta_6)^2 = -12, so the period is 144/(2187*6) = 8/729... and rational
    CHECK(*normalized_period(spec, zero).as_rational() == Rational(144) / (int_pow(3, 7) * factorial(3)));
}

TEST_CASE("galois action on decomposable forms") {
    // d=4, n=4, t=7, all a_{2j-2} = 1: sign = (-1)^3
    const FermatContext ctx44(4, 4);
    const ExpVec beta44{0, 2, 0, 2, 0, 2};
    const auto r = galois_on_omega(beta44, GaloisElement(8, 7), ctx44);
    CHECK(r.sign == -1);
    // gamma = residues of 7*a - 1: a=1 -> 7 mod 4 = 3 -> beta 2; a=3 -> 21 mod 4 = 1 -> 0
    CHECK(r.gamma == ExpVec{2, 0, 2, 0, 2, 0});

    // identity
    const auto rid = galois_on_omega(beta44, GaloisElement(8, 1), ctx44);
    CHECK(rid.sign == 1);
    CHECK(rid.gamma == beta44);

    // d=3: per-pair exponent (5*1 - res(5))/3 = 1, three pairs for n=4
    const FermatContext ctx43(4, 3);
    const ExpVec beta43{0, 1, 0, 1, 0, 1};
    CHECK(galois_on_omega(beta43, GaloisElement(6, 5), ctx43).sign == -1);

    CHECK_THROWS_AS(galois_on_omega(ExpVec{1, 0, 0, 0, 0, 0}, GaloisElement(8, 3), ctx44),
                    std::invalid_argument);
}

TEST_CASE("gamma constants") {
    const FermatContext ctx42(2, 4);
    // single pair a=1: 1/(zeta_8 - zeta_8^{-1}) = 1/(zeta_8 + zeta_8^3)
    CHECK(Cyclo::zeta(8, -1) == -Cyclo::zeta(8, 3));
    const Cyclo expected4 = (Cyclo::zeta(8) + Cyclo::zeta(8, 3)).inverse();
    CHECK(c_beta(ExpVec{0, 2, 0, 2}, ctx42) == expected4 * expected4);

    const FermatContext ctx23(2, 3);
    const Cyclo expected3 = (Cyclo(2) * Cyclo::zeta(6) - Cyclo(1)).inverse();
    CHECK(c_beta(ExpVec{0, 1, 0, 1}, ctx23) == expected3 * expected3);

    // C_beta never vanishes
    const FermatContext ctx26(2, 6);
    for (const ExpVec& beta : monomial_basis(4, 8)) {
        if (!totally_decomposable(beta, ctx26)) continue;
        CHECK(!c_beta(beta, ctx26).is_zero());
    }
}

TEST_CASE("period formula factors through the gamma constant") {
    // normalized period of omega_beta equals C_beta * prod (zeta-differences) / (d^{n+1} (n/2)!)
    const FermatContext ctx(2, 6);
    const ExpVec beta{1, 3, 0, 4};
    REQUIRE(totally_decomposable(beta, ctx));
    const Cyclo cb = c_beta(beta, ctx);
    for (const auto& bp : all_vanishing_cycles(ctx)) {
        Cyclo zprod(1);
        for (int i = 0; i < ctx.vars(); ++i) {
            const long a = beta[static_cast<std::size_t>(i)] + 1;
            zprod *= Cyclo::zeta(6, a * (bp.at(i) + 1)) - Cyclo::zeta(6, a * bp.at(i));
        }
        const Cyclo direct = cb * zprod * Cyclo(Rational(1) / (int_pow(6, 3) * factorial(1)));
        CHECK(period_omega_beta(beta, bp, ctx).pure_normalized(ctx.n) == direct);
    }
}

TEST_CASE("eta classes transform without signs") {
    // omega_beta = C_beta * eta_alpha (the Gamma product is (2 pi i)^{n/2+1} C_beta),
    // and t(eta_alpha) = eta_{t alpha}: dividing out C_beta removes the sign
    // of the omega transformation.
    const FermatContext ctx(2, 6);
    const int m = 2 * ctx.d;
    const ExpVec beta{1, 3, 0, 4};
    const Cyclo cb = c_beta(beta, ctx);
    for (int t : units_mod(m)) {
        const GaloisElement sigma(m, t);
        const auto img = galois_on_omega(beta, sigma, ctx);
        const Cyclo cg = c_beta(img.gamma, ctx);
        for (const auto& bp : all_vanishing_cycles(ctx)) {
            const Cyclo eta_period =
                (period_omega_beta(beta, bp, ctx).pure_normalized(ctx.n) / cb).lifted(m);
            const Cyclo eta_image = period_omega_beta(img.gamma, bp, ctx).pure_normalized(ctx.n) / cg;
            CHECK(galois_apply(sigma, eta_period) == eta_image);
        }
    }
}

TEST_CASE("galois-period compatibility") {
    // periods of t(omega_beta) two ways: galois on values vs sign * omega_gamma
    for (auto [n, d] : {std::pair{6, 3}, {4, 4}, {2, 6}}) {
        const FermatContext ctx(n, d);
        const int m = 2 * d;
        // sample decomposable betas: vary the first pair, fix the rest
        std::vector<ExpVec> betas;
        for (int a = 0; a <= d - 2; ++a) {
            ExpVec beta(static_cast<std::size_t>(ctx.vars()), 0);
            beta[0] = a;
            beta[1] = d - 2 - a;
            for (int j = 2; j <= ctx.pairs(); ++j) {
                beta[static_cast<std::size_t>(2 * j - 2)] = (a + j) % (d - 1);
                beta[static_cast<std::size_t>(2 * j - 1)] = d - 2 - (a + j) % (d - 1);
            }
            betas.push_back(std::move(beta));
        }
        const auto cycles = all_vanishing_cycles(ctx);
        for (const ExpVec& beta : betas) {
            for (int t : units_mod(m)) {
                const GaloisElement sigma(m, t);
                const auto img = galois_on_omega(beta, sigma, ctx);
                for (const auto& bp : cycles) {
                    const Cyclo lhs = galois_apply(
                        sigma, period_omega_beta(beta, bp, ctx).pure_normalized(n).lifted(m));
                    const Cyclo rhs = Cyclo(img.sign) *
                                      period_omega_beta(img.gamma, bp, ctx).pure_normalized(n);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}
