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

#include "fermat/fake_cycles.hpp"

#include <sstream>
#include <stdexcept>

#include "fermat/periods.hpp"

namespace fermat {

FakeCycleSpec make_spec(int d, int n, std::vector<Cyclo> c, std::optional<Cyclo> c_lambda) {
    FakeCycleSpec spec{FermatContext(n, d), std::move(c), std::move(c_lambda)};
    validate_spec(spec);
    return spec;
}

void validate_spec(const FakeCycleSpec& spec) {
    const FermatContext& ctx = spec.ctx;
    if (ctx.d != 3 && ctx.d != 4 && ctx.d != 6)
        throw std::invalid_argument("FakeCycleSpec: fake linear cycles exist only for d in {3,4,6}");
    if (!ctx.fake_cycle_range())
        throw std::invalid_argument("FakeCycleSpec: requires d >= 2 + 6/n");
    if (static_cast<int>(spec.c.size()) != ctx.pairs())
        throw std::invalid_argument("FakeCycleSpec: expected one c per coordinate pair");
    for (const Cyclo& ci : spec.c)
        if (!subfield_and_circle_test(ci, ctx.d))
            throw std::invalid_argument("FakeCycleSpec: c entry fails the twisted unit-circle test");
    if (spec.c_lambda && spec.c_lambda->is_zero())
        throw std::invalid_argument("FakeCycleSpec: c_lambda must be nonzero");
}

bool is_true_linear(const FakeCycleSpec& spec) {
    for (const Cyclo& ci : spec.c)
        if (ci.pow(spec.ctx.d) != Cyclo(-1)) return false;
    return true;
}

Cyclo product_of_c(const FakeCycleSpec& spec) {
    Cyclo p(1);
    for (const Cyclo& ci : spec.c) p *= ci;
    return p;
}

Poly build_P_lambda(const FakeCycleSpec& spec) {
    validate_spec(spec);
    if (!spec.c_lambda) throw std::invalid_argument("build_P_lambda: c_lambda not set");
    const FermatContext& ctx = spec.ctx;
    ExpVec zero(static_cast<std::size_t>(ctx.vars()), 0);
    Poly p = Poly::monomial(ctx.vars(), zero, *spec.c_lambda);
    for (int j = 1; j <= ctx.pairs(); ++j) p = p * pair_factor(ctx, j, spec.c_of_pair(j));
    return p;
}

bool Cocycle::law_holds() const {
    for (const auto& [s, phi_s] : phi) {
        for (const auto& [t, phi_t] : phi) {
            const int st = static_cast<int>((static_cast<long>(s) * t) % m);
            const Cyclo expected = phi_s * galois_apply(GaloisElement(m, s), phi_t.lifted(m));
            if (phi.at(st) != expected) return false;
        }
    }
    return true;
}

Cocycle cocycle_phi(const FakeCycleSpec& spec) {
    validate_spec(spec);
    const int d = spec.ctx.d;
    const int m = 2 * d;
    const Cyclo pc = product_of_c(spec);
    const Cyclo sign = spec.ctx.pairs() % 2 == 0 ? Cyclo(1) : Cyclo(-1);  // (-1)^{n/2+1}
    Cocycle co{m, {}};
    co.phi[1] = Cyclo(1);
    switch (d) {
        case 3:
            co.phi[5] = sign * pc;
            break;
        case 4:
            co.phi[3] = pc.pow(2);
            co.phi[5] = sign;
            co.phi[7] = sign * pc.pow(2);
            break;
        case 6:
            co.phi[5] = pc.pow(4);
            co.phi[7] = sign;
            co.phi[11] = sign * pc.pow(4);
            break;
        default:
            throw std::invalid_argument("cocycle_phi: d must be 3, 4 or 6");
    }
    for (auto& [t, v] : co.phi) v = v.lifted(m);
    if (!co.law_holds()) throw std::logic_error("cocycle_phi: cocycle law violated (internal inconsistency)");
    return co;
}

Cocycle cocycle_from_periods(const FakeCycleSpec& spec) {
    validate_spec(spec);
    const int m = 2 * spec.ctx.d;
    FakeCycleSpec unit = spec;
    unit.c_lambda = Cyclo(1);
    const auto cycles = all_vanishing_cycles(spec.ctx);
    Cocycle co{m, {}};
    for (int t : units_mod(m)) {
        const GaloisElement sigma(m, t);
        std::optional<Cyclo> ratio;
        for (const auto& bp : cycles) {
            const Cyclo w = normalized_period(unit, bp).lifted(m);
            if (w.is_zero()) continue;
            const Cyclo r = w / galois_apply(sigma, w);
            if (!ratio) {
                ratio = r;
            } else if (*ratio != r) {
                throw std::logic_error("cocycle_from_periods: ratio depends on the vanishing cycle");
            }
        }
        if (!ratio) throw std::logic_error("cocycle_from_periods: all periods vanish");
        co.phi[t] = ratio->lifted(m);
    }
    if (!co.law_holds()) throw std::logic_error("cocycle_from_periods: cocycle law violated");
    return co;
}

namespace {

// Rescale by a positive rational to coprime integer coefficients, first
// nonzero coefficient positive. Harmless for every certificate (rational
// multiples of c_lambda give the same Hodge class up to rational scale) and
// makes reports deterministic and tidy.
Cyclo rational_rescale(const Cyclo& z) {
    Integer lcm_den(1), gcd_num(0);
    for (const Rational& q : z.coeffs()) {
        if (q == 0) continue;
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    }
    for (const Rational& q : z.coeffs()) {
        if (q == 0) continue;
        const Integer num = Integer(q.get_num()) * (lcm_den / Integer(q.get_den()));
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
    }
    if (gcd_num == 0) return z;
    Rational scale(lcm_den, gcd_num);
    scale.canonicalize();
    for (const Rational& q : z.coeffs()) {
        if (q == 0) continue;
        if (q * scale < 0) scale = -scale;
        break;
    }
    return Cyclo(scale) * z;
}

}  // namespace

Cyclo solve_c_lambda(const Cocycle& cocycle) {
    if (!cocycle.law_holds()) throw std::invalid_argument("solve_c_lambda: not a cocycle");
    const int m = cocycle.m;
    for (int k = 0; k < euler_phi(m); ++k) {
        const Cyclo theta = Cyclo::zeta(m, k);
        Cyclo b(0);
        for (const auto& [t, phi_t] : cocycle.phi)
            b += phi_t * galois_apply(GaloisElement(m, t), theta);
        if (b.is_zero()) continue;
        Cyclo c_lambda = rational_rescale(b.inverse()).lifted(m);
        for (const auto& [t, phi_t] : cocycle.phi) {
            if (galois_apply(GaloisElement(m, t), c_lambda) != phi_t * c_lambda)
                throw std::logic_error("solve_c_lambda: splitting check failed");
        }
        return c_lambda;
    }
    throw std::logic_error("solve_c_lambda: Poincare series vanished on the whole power basis");
}

HodgeCertificate certify_hodge(const FakeCycleSpec& spec) {
    validate_spec(spec);
    if (!spec.c_lambda) throw std::invalid_argument("certify_hodge: c_lambda not set");
    HodgeCertificate cert;
    cert.true_linear = is_true_linear(spec);
    for (const auto& bp : all_vanishing_cycles(spec.ctx)) {
        const Cyclo value = normalized_period(spec, bp);
        const auto rat = value.as_rational();
        if (!rat) {
            cert.success = false;
            cert.periods.clear();
            cert.failure = std::make_pair(bp.entries, value);
            return cert;
        }
        cert.periods.push_back(*rat);
    }
    cert.success = true;
    return cert;
}

bool galois_invariance_check(const FakeCycleSpec& spec) {
    const Poly p = build_P_lambda(spec);
    const int m = 2 * spec.ctx.d;
    for (int t : units_mod(m)) {
        const GaloisElement sigma(m, t);
        Poly transported(p.nvars());
        for (const auto& [beta, coeff] : p.terms()) {
            const GaloisOmegaResult img = galois_on_omega(beta, sigma, spec.ctx);
            transported.add_term(img.gamma, Cyclo(img.sign) * galois_apply(sigma, coeff.lifted(m)));
        }
        if (transported != p) return false;
    }
    return true;
}

Cyclo unit_circle_c(int d, int a, int b) {
    if (a == 0 && b == 0) throw std::invalid_argument("unit_circle_c: (a, b) must be nonzero");
    const Cyclo u = Cyclo(a) + Cyclo(b) * Cyclo::zeta(d);
    return Cyclo::zeta(2 * d, -3) * (u / u.conj());
}

NoFakeWitness no_fake_cycles_witness(int d) {
    const ResidueIdentityResult ri = villasmall_identity_detail(d);
    NoFakeWitness w;
    w.q = ri.q;
    w.k = ri.k;
    if (!ri.ok) {
        w.detail = "residue identity failed";
        return w;
    }
    const int m = 2 * d;
    // Sample unit-circle element of Q(zeta_{2d}) that is not a d-th root of -1.
    Cyclo c;
    bool found = false;
    for (int a = 2; a <= 6 && !found; ++a) {
        const Cyclo u = Cyclo(a) + Cyclo::zeta(m);
        c = u / u.conj();
        if (c.pow(d) != Cyclo(-1)) found = true;
    }
    if (!found) {
        w.detail = "no sample unit-circle element found";
        return w;
    }
    w.sample_c = c;
    w.t = m - ri.q;
    const GaloisElement sigma(m, w.t);
    auto relation_holds = [&](int aa, int bb) {
        const Cyclo lhs = galois_apply(sigma, (Cyclo::zeta(m, aa - bb) * c.pow(bb - aa)).lifted(m));
        const long ta = static_cast<long>(w.t) * aa % d;
        const long tb = static_cast<long>(w.t) * bb % d;
        const long ra = ta < 0 ? ta + d : ta, rb = tb < 0 ? tb + d : tb;
        const Cyclo rhs = Cyclo::zeta(m, ra - rb) * c.pow(rb - ra);
        return lhs == rhs;
    };
    const bool broke = !relation_holds(1, 2) || !relation_holds(1, ri.k + 1);
    // The chained relation would force c^{value} = zeta_{2d}^{value} = -1^{...};
    // with value = +-d this pins c^d = -1, so our sample must escape it.
    const bool conclusion_fails = c.pow(ri.value) != Cyclo::zeta(m, ri.value);
    w.ok = broke && conclusion_fails;
    if (!w.ok) w.detail = "sample satisfied the Galois relation (unexpected)";
    return w;
}

}  // namespace fermat
