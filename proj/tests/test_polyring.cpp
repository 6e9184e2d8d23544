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

#include <random>

#include "fermat/fake_cycles.hpp"
#include "fermat/polyring.hpp"
#include "fermat/presets.hpp"

using namespace fermat;

namespace {

Poly random_jacobian_member(const FermatContext& ctx, std::mt19937& rng) {
    // random combination sum A_i * x_i^{d-1} with monomial A_i
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(0, ctx.d - 1);
    Poly w(ctx.vars());
    for (int i = 0; i < ctx.vars(); ++i) {
        ExpVec e(static_cast<std::size_t>(ctx.vars()), 0);
        for (auto& v : e) v = expo(rng);
        e[static_cast<std::size_t>(i)] += ctx.d - 1;
        w.add_term(e, Cyclo(coeff(rng)));
    }
    return w;
}

}  // namespace

TEST_CASE("basic polynomial arithmetic") {
    const int nv = 3;
    const Poly x0 = Poly::variable(nv, 0), x1 = Poly::variable(nv, 1);
    Poly p = x0 * x0 - x1 * x1;
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK(p.term_count() == 2);
    CHECK((x0 + x1) * (x0 - x1) == p);
    CHECK(p.derivative(0) == Cyclo(2) * x0);
    CHECK((p - p).is_zero());
    // graded-lex leading term first
    CHECK(p.terms().begin()->first == ExpVec{2, 0, 0});
}

TEST_CASE("monomial bases") {
    CHECK(monomial_basis(2, 2) == std::vector<ExpVec>{{2, 0}, {1, 1}, {0, 2}});
    const FermatContext ctx(2, 4);
    for (int e = 0; e <= 8; ++e)
        CHECK(static_cast<std::int64_t>(rf_basis(ctx, e).size()) == rf_dimension(ctx, e));
    const FermatContext cubic(6, 3);
    for (int e = 0; e <= 8; ++e)
        CHECK(static_cast<std::int64_t>(rf_basis(cubic, e).size()) == rf_dimension(cubic, e));
}

TEST_CASE("jacobian reduction") {
    const FermatContext c3(6, 3);
    const FermatContext c4(4, 4);
    const FermatContext c6(2, 6);
    Poly p3(c3.vars());
    p3.add_term({2, 1, 0, 0, 0, 0, 0, 0}, Cyclo(1));
    CHECK(reduce_mod_jacobian(p3, c3).is_zero());

    Poly p4(c4.vars());
    p4.add_term({2, 2, 2, 0, 0, 0}, Cyclo(1));
    CHECK(reduce_mod_jacobian(p4, c4) == p4);

    Poly p6(c6.vars());
    p6.add_term({5, 1, 0, 0}, Cyclo(1));
    CHECK(reduce_mod_jacobian(p6, c6).is_zero());
}

TEST_CASE("cycle polynomial construction") {
    FakeCycleSpec spec = preset_spec("cubic-all-ones");
    spec.c_lambda = Cyclo(1);
    const Poly p = build_P_lambda(spec);
    Poly expected = Poly::monomial(8, ExpVec(8, 0), Cyclo(1));
    for (int j = 0; j < 4; ++j)
        expected = expected * (Poly::variable(8, 2 * j) + Poly::variable(8, 2 * j + 1));
    CHECK(p == expected);
    CHECK(p.term_count() == 16);  // (d-1)^{n/2+1}
    CHECK(p.degree() == spec.ctx.cycle_degree());
    CHECK(p.is_homogeneous());

    // d = 4 factor: x^2 + c x y + c^2 y^2
    const FermatContext c4(4, 4);
    const Cyclo c = Cyclo::zeta(8);
    const Poly f = pair_factor(c4, 2, c);
    Poly ef(c4.vars());
    ef.add_term({0, 0, 2, 0, 0, 0}, Cyclo(1));
    ef.add_term({0, 0, 1, 1, 0, 0}, c);
    ef.add_term({0, 0, 0, 2, 0, 0}, c * c);
    CHECK(f == ef);

    FakeCycleSpec s6 = preset_spec("sextic-pythagorean");
    s6.c_lambda = Cyclo(1);
    CHECK(build_P_lambda(s6).term_count() == 25);

    FakeCycleSpec bad = preset_spec("cubic-all-ones");
    bad.c_lambda = Cyclo(0);
    CHECK_THROWS_AS(build_P_lambda(bad), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(4, 4, {Cyclo(2), Cyclo::zeta(8), Cyclo::zeta(8)}), std::invalid_argument);
}

TEST_CASE("telescoping product") {
    // factor_j * (x_{2j-2} - c x_{2j-1}) = x_{2j-2}^{d-1} - (c x_{2j-1})^{d-1}
    for (int d : {3, 4, 6}) {
        const FermatContext ctx(d == 3 ? 6 : d == 4 ? 4 : 2, d);
        const Cyclo c = Cyclo::zeta(2 * d);
        const Poly f = pair_factor(ctx, 1, c);
        Poly ell = Poly::variable(ctx.vars(), 0) - c * Poly::variable(ctx.vars(), 1);
        Poly expected(ctx.vars());
        ExpVec hi(static_cast<std::size_t>(ctx.vars()), 0), lo = hi;
        hi[0] = d - 1;
        lo[1] = d - 1;
        expected.add_term(hi, Cyclo(1));
        expected.add_term(lo, -c.pow(d - 1));
        CHECK(f * ell == expected);
    }
}

TEST_CASE("jacobian decomposition") {
    const FermatContext c4(4, 4);
    Poly w4(c4.vars());
    w4.add_term({3, 1, 0, 0, 0, 0}, Cyclo(1));
    const auto q4 = jacobian_decompose(w4, c4);
    Poly expect0(c4.vars());
    expect0.add_term({0, 1, 0, 0, 0, 0}, Cyclo(Rational(1, 4)));
    CHECK(q4[0] == expect0);
    for (int i = 1; i < c4.vars(); ++i) CHECK(q4[static_cast<std::size_t>(i)].is_zero());

    const FermatContext c3(6, 3);
    Poly w3(c3.vars());
    w3.add_term({2, 2, 0, 0, 0, 0, 0, 0}, Cyclo(1));
    const auto q3 = jacobian_decompose(w3, c3);
    Poly e3(c3.vars());
    e3.add_term({0, 2, 0, 0, 0, 0, 0, 0}, Cyclo(Rational(1, 3)));
    CHECK(q3[0] == e3);

    Poly not_member(c4.vars());
    not_member.add_term({1, 1, 1, 1, 0, 0}, Cyclo(1));
    CHECK_THROWS_AS(jacobian_decompose(not_member, c4), std::invalid_argument);

    // reconstruction on random members
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        for (int d : {3, 4, 6}) {
            const FermatContext ctx(d == 3 ? 6 : d == 4 ? 4 : 2, d);
            const Poly w = random_jacobian_member(ctx, rng);
            REQUIRE(in_jacobian_ideal(w, ctx));
            const auto q = jacobian_decompose(w, ctx);
            Poly recon(ctx.vars());
            for (int i = 0; i < ctx.vars(); ++i) {
                ExpVec pw(static_cast<std::size_t>(ctx.vars()), 0);
                pw[static_cast<std::size_t>(i)] = ctx.d - 1;
                recon += q[static_cast<std::size_t>(i)] * Poly::monomial(ctx.vars(), pw, Cyclo(ctx.d));
            }
            CHECK(recon == w);
        }
    }
}

TEST_CASE("linear factor division") {
    const int nv = 6;
    const Cyclo c = Cyclo::zeta(8, 3);
    Poly ell = Poly::variable(nv, 2) - c * Poly::variable(nv, 3);
    Poly D(nv);
    D.add_term({1, 0, 1, 1, 0, 0}, Cyclo(2));
    D.add_term({0, 0, 0, 0, 3, 0}, Cyclo::zeta(8));
    const Poly g = ell * D;
    const auto back = try_divide_linear(g, 2, 3, c);
    REQUIRE(back.has_value());
    CHECK(*back == D);
    CHECK(!try_divide_linear(g + Poly::variable(nv, 0), 2, 3, c).has_value());
    // dividing by the wrong pair coefficient fails
    CHECK(!try_divide_linear(g, 2, 3, Cyclo::zeta(8)).has_value());
}
