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

#include "fermat/presets.hpp"
#include "fermat/serialize.hpp"

using namespace fermat;

TEST_CASE("rational round trip") {
    const Rational q(-22, 7);
    CHECK(rational_from_json(rational_to_json(q)) == q);
    CHECK(rational_to_json(q)[0].get<std::int64_t>() == -22);

    // beyond 64-bit: string fallback
    Rational big(Integer("123456789012345678901234567890"), Integer(7));
    big.canonicalize();
    const Json j = rational_to_json(big);
    CHECK(j[0].is_string());
    CHECK(rational_from_json(j) == big);
}

TEST_CASE("cyclotomic round trip") {
    const Cyclo z = Cyclo(Rational(2, 3)) + Cyclo(Rational(-5, 4)) * Cyclo::zeta(12, 7);
    const Json j = cyclo_to_json(z);
    CHECK(j.at("m") == 12);
    CHECK(j.at("coeffs").size() == 4);
    CHECK(cyclo_from_json(j) == z);
    CHECK_THROWS_AS(cyclo_from_json(Json{{"m", 12}, {"coeffs", Json::array()}}), std::invalid_argument);
}

TEST_CASE("polynomial round trip and ordering") {
    Poly p(4);
    p.add_term({0, 1, 0, 1}, Cyclo::zeta(6));
    p.add_term({2, 0, 0, 0}, Cyclo(1));
    p.add_term({1, 1, 0, 0}, Cyclo(-2));
    const Json j = poly_to_json(p);
    // graded-lex: (2,0,0,0) then (1,1,0,0) then (0,1,0,1)
    CHECK(j[0].at("exps") == Json::array({2, 0, 0, 0}));
    CHECK(j[1].at("exps") == Json::array({1, 1, 0, 0}));
    CHECK(poly_from_json(j, 4) == p);
}

TEST_CASE("spec and certificate round trip") {
    FakeCycleSpec spec = preset_spec("quartic-pythagorean");
    spec.c_lambda = solve_c_lambda(cocycle_phi(spec));
    const Json sj = spec_to_json(spec);
    const FakeCycleSpec back = spec_from_json(sj);
    CHECK(back.ctx.d == spec.ctx.d);
    CHECK(back.ctx.n == spec.ctx.n);
    CHECK(back.c == spec.c);
    CHECK(*back.c_lambda == *spec.c_lambda);

    const HodgeCertificate cert = certify_hodge(spec);
    const Json cj = certificate_to_json(spec, cert);
    CHECK(validate_report(cj).empty());
    // replay from the certificate alone
    const FakeCycleSpec replay = spec_from_any_json(cj);
    CHECK(certify_hodge(replay).success);

    // byte determinism
    CHECK(cj.dump(2) == certificate_to_json(spec, cert).dump(2));
}

TEST_CASE("schema document") {
    const Json schema = schema_document();
    CHECK(schema.at("schema_version") == kSchemaVersion);
    CHECK(schema.at("formats").contains("fake-cycle-certificate"));
    CHECK(schema.at("formats").contains("cyclotomic"));

    CHECK(validate_report(Json{{"type", "fake-cycle-certificate"}}) != "");
    CHECK(validate_report(Json::array()) != "");
}

TEST_CASE("randomized round trips") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::uniform_int_distribution<int> expo(0, 4);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = std::vector<int>{3, 4, 6, 8, 12}[static_cast<std::size_t>(trial) % 5];
        std::vector<Rational> coeffs(static_cast<std::size_t>(euler_phi(m)));
        for (auto& c : coeffs) c = Rational(num(rng), den(rng));
        const Cyclo z = Cyclo::from_powers(m, coeffs);
        CHECK(cyclo_from_json(cyclo_to_json(z)) == z);

        Poly p(4);
        for (int t = 0; t < 5; ++t) {
            ExpVec e(4);
            for (auto& v : e) v = expo(rng);
            p.add_term(e, z * Cyclo(num(rng)));
        }
        CHECK(poly_from_json(poly_to_json(p), 4) == p);
    }
}

TEST_CASE("expression parser") {
    const Poly p = parse_poly_expr("x1*x3 + x5*x7", 8);
    Poly expected(8);
    expected.add_term({0, 1, 0, 1, 0, 0, 0, 0}, Cyclo(1));
    expected.add_term({0, 0, 0, 0, 0, 1, 0, 1}, Cyclo(1));
    CHECK(p == expected);

    const Poly q = parse_poly_expr("2*x0^2*x2 - 3*x1", 4);
    Poly eq(4);
    eq.add_term({2, 0, 1, 0}, Cyclo(2));
    eq.add_term({0, 1, 0, 0}, Cyclo(-3));
    CHECK(q == eq);

    CHECK(parse_poly_expr("x0^4*x1^2*x2^4", 4).degree() == 10);
    CHECK_THROWS_AS(parse_poly_expr("x9", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_expr("x0 x1", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_expr("+", 4), std::invalid_argument);
}
