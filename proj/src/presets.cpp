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

#include "fermat/presets.hpp"

#include <stdexcept>

namespace fermat {

namespace {

Cyclo pythagorean(int d, int a, int b, int norm) {
    // zeta_{2d}^{-3} is replaced by zeta_{2d}^{2d-3}; (a + b zeta_d)/norm must
    // have unit modulus, e.g. a^2+ab+b^2 = norm^2 over Q(zeta_6),
    // a^2+b^2 = norm^2 over Q(i).
    const Cyclo w = (Cyclo(a) + Cyclo(b) * Cyclo::zeta(d)) * Cyclo(Rational(1, norm));
    return Cyclo::zeta(2 * d, -3) * w;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"cubic-all-ones",      "cubic-pythagorean",  "cubic-true-linear",
            "quartic-pythagorean", "quartic-true-linear", "sextic-pythagorean",
            "sextic-true-linear"};
}

FakeCycleSpec preset_spec(const std::string& name) {
    if (name == "cubic-all-ones") {
        return make_spec(3, 6, {Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(1)});
    }
    if (name == "cubic-pythagorean") {
        // (3 + 5 z6)/7 and (7 + 8 z6)/13 have unit modulus: a^2 + ab + b^2 = N^2.
        const Cyclo c1 = (Cyclo(3) + Cyclo(5) * Cyclo::zeta(6)) * Cyclo(Rational(1, 7));
        const Cyclo c2 = (Cyclo(7) + Cyclo(8) * Cyclo::zeta(6)) * Cyclo(Rational(1, 13));
        return make_spec(3, 6, {c1, Cyclo(1), c2, Cyclo(1)});
    }
    if (name == "cubic-true-linear") {
        const Cyclo z = Cyclo::zeta(6);
        return make_spec(3, 6, {z, z, z, z});
    }
    if (name == "quartic-pythagorean") {
        return make_spec(4, 4, {pythagorean(4, 3, 4, 5), pythagorean(4, 5, 12, 13), pythagorean(4, 8, 15, 17)});
    }
    if (name == "quartic-true-linear") {
        const Cyclo z = Cyclo::zeta(8);
        return make_spec(4, 4, {z, z, z});
    }
    if (name == "sextic-pythagorean") {
        return make_spec(6, 2, {pythagorean(6, 3, 5, 7), pythagorean(6, 7, 8, 13)});
    }
    if (name == "sextic-true-linear") {
        const Cyclo z = Cyclo::zeta(12);
        return make_spec(6, 2, {z, z});
    }
    throw std::invalid_argument("unknown preset: " + name);
}

std::vector<FakeCycleSpec> sample_specs(int d, int n, int count) {
    const FermatContext ctx(n, d);
    std::vector<std::pair<int, int>> seeds;
    for (int a = 1; a <= 9; ++a)
        for (int b = 1; b <= 9; ++b)
            if (a != b) seeds.emplace_back(a, b);
    std::vector<FakeCycleSpec> out;
    std::size_t offset = 0;
    while (static_cast<int>(out.size()) < count) {
        if (offset + static_cast<std::size_t>(ctx.pairs()) > seeds.size())
            throw std::logic_error("sample_specs: seed list exhausted");
        std::vector<Cyclo> c;
        for (int j = 0; j < ctx.pairs(); ++j) {
            const auto [a, b] = seeds[offset + static_cast<std::size_t>(j)];
            c.push_back(unit_circle_c(d, a, b));
        }
        ++offset;
        FakeCycleSpec spec = make_spec(d, n, std::move(c));
        if (is_true_linear(spec)) continue;
        bool duplicate = false;
        for (const auto& prev : out)
            if (prev.c == spec.c) { duplicate = true; break; }
        if (!duplicate) out.push_back(std::move(spec));
    }
    return out;
}

}  // namespace fermat
