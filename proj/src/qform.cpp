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

#include "fermat/qform.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace fermat {

namespace {

// Q_i for the paired strategy: requires G = (x_{2i-2} - c_{2i-2} x_{2i-1}) D
// for some pair i. Throws when no pair divides G.
std::vector<Poly> paired_decompose(const Poly& G, const FakeCycleSpec& spec, const Poly& GP) {
    const FermatContext& ctx = spec.ctx;
    for (int j = 1; j <= ctx.pairs(); ++j) {
        const Cyclo& cj = spec.c_of_pair(j);
        auto D = try_divide_linear(G, 2 * j - 2, 2 * j - 1, cj);
        if (!D) continue;
        Poly rest = Poly::monomial(ctx.vars(), ExpVec(static_cast<std::size_t>(ctx.vars()), 0),
                                   *spec.c_lambda * Cyclo(ctx.d).inverse());
        for (int jj = 1; jj <= ctx.pairs(); ++jj)
            if (jj != j) rest = rest * pair_factor(ctx, jj, spec.c_of_pair(jj));
        rest = rest * *D;
        std::vector<Poly> out(static_cast<std::size_t>(ctx.vars()), Poly(ctx.vars()));
        out[static_cast<std::size_t>(2 * j - 2)] = rest;
        out[static_cast<std::size_t>(2 * j - 1)] = -(cj.pow(ctx.d - 1) * rest);
        // consistency: sum Q_i d x_i^{d-1} must reproduce G * P_lambda
        Poly recon(ctx.vars());
        for (int i = 0; i < ctx.vars(); ++i) {
            ExpVec pw(static_cast<std::size_t>(ctx.vars()), 0);
            pw[static_cast<std::size_t>(i)] = ctx.d - 1;
            recon += out[static_cast<std::size_t>(i)] * Poly::monomial(ctx.vars(), pw, Cyclo(ctx.d));
        }
        if (recon != GP) throw std::logic_error("paired_decompose: reconstruction mismatch");
        return out;
    }
    throw std::invalid_argument("paired decomposition not applicable: G has no pair factor");
}

std::vector<Poly> decompose(const Poly& G, const FakeCycleSpec& spec, const Poly& GP,
                            DecomposeStrategy strategy) {
    if (strategy == DecomposeStrategy::Paired) return paired_decompose(G, spec, GP);
    return jacobian_decompose(GP, spec.ctx);
}

}  // namespace

QuotientSpace quadratic_quotient(const FakeCycleSpec& spec) {
    const FermatContext& ctx = spec.ctx;
    const Poly p = build_P_lambda(spec);
    const int r = ctx.critical_degree();
    QuotientSpace q{rf_basis(ctx, r), ExactMatrix(0, 0), {}, {}};
    std::map<ExpVec, std::size_t> index;
    for (std::size_t i = 0; i < q.rf_monomials.size(); ++i) index.emplace(q.rf_monomials[i], i);
    std::vector<std::vector<Cyclo>> rows;
    for (const ExpVec& m : monomial_basis(ctx.vars(), ctx.d)) {
        std::vector<Cyclo> row(q.rf_monomials.size());
        bool nonzero = false;
        for (const auto& [pe, pc] : p.terms()) {
            ExpVec prod(pe.size());
            bool keep = true;
            for (std::size_t v = 0; v < pe.size(); ++v) {
                prod[v] = pe[v] + m[v];
                if (prod[v] >= ctx.d - 1) { keep = false; break; }
            }
            if (!keep) continue;
            row[index.at(prod)] += pc;
            nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    q.span = rows.empty() ? ExactMatrix(0, q.rf_monomials.size())
                          : ExactMatrix::from_rows(std::move(rows));
    q.pivots = q.span.rref();
    std::vector<bool> is_pivot(q.rf_monomials.size(), false);
    for (std::size_t c : q.pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < q.rf_monomials.size(); ++c)
        if (!is_pivot[c]) q.complement.push_back(c);
    return q;
}

std::vector<Cyclo> quotient_class(const Poly& w, const QuotientSpace& q, const FermatContext& ctx) {
    std::map<ExpVec, std::size_t> index;
    for (std::size_t i = 0; i < q.rf_monomials.size(); ++i) index.emplace(q.rf_monomials[i], i);
    std::vector<Cyclo> coords(q.rf_monomials.size());
    const Poly reduced = reduce_mod_jacobian(w, ctx);
    for (const auto& [e, c] : reduced.terms()) coords[index.at(e)] = c;
    const std::vector<Cyclo> residual = q.span.reduce_vector(q.pivots, std::move(coords));
    std::vector<Cyclo> out;
    out.reserve(q.complement.size());
    for (std::size_t c : q.complement) out.push_back(residual[c]);
    return out;
}

bool class_is_zero(const std::vector<Cyclo>& coords) {
    for (const Cyclo& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

QFormResult qr(const Poly& G, const Poly& H, const FakeCycleSpec& spec,
               DecomposeStrategy strategy, const QuotientSpace* quot) {
    const FermatContext& ctx = spec.ctx;
    for (const Poly* v : {&G, &H})
        if (v->is_zero() || !v->is_homogeneous() || v->degree() != ctx.d)
            throw std::invalid_argument("qr: arguments must be homogeneous of degree d");
    const Poly p = build_P_lambda(spec);
    const Poly GP = G * p;
    const Poly HP = H * p;
    if (!in_jacobian_ideal(GP, ctx))
        throw std::invalid_argument("qr: G is outside the tangent space (G P not in J^F)");
    if (!in_jacobian_ideal(HP, ctx))
        throw std::invalid_argument("qr: H is outside the tangent space (H P not in J^F)");
    const std::vector<Poly> Q = decompose(G, spec, GP, strategy);
    const std::vector<Poly> R = (&G == &H || G == H) ? Q : decompose(H, spec, HP, strategy);
    QFormResult res{Poly(ctx.vars()), {}, true};
    for (int i = 0; i < ctx.vars(); ++i) {
        res.raw += H * Q[static_cast<std::size_t>(i)].derivative(i);
        res.raw -= R[static_cast<std::size_t>(i)] * G.derivative(i);
    }
    std::optional<QuotientSpace> local;
    if (!quot) {
        local.emplace(quadratic_quotient(spec));
        quot = &*local;
    }
    res.class_coords = quotient_class(res.raw, *quot, ctx);
    res.class_zero = class_is_zero(res.class_coords);
    return res;
}

Poly qr_closed_form(int i, const Poly& D, const FakeCycleSpec& spec) {
    const FermatContext& ctx = spec.ctx;
    if (i < 1 || i > ctx.pairs()) throw std::invalid_argument("qr_closed_form: pair index out of range");
    const Cyclo& ci = spec.c_of_pair(i);
    const Cyclo scale = -(*spec.c_lambda) * Cyclo(ctx.d).inverse() * (ci.pow(ctx.d) + Cyclo(1));
    Poly out = Poly::monomial(ctx.vars(), ExpVec(static_cast<std::size_t>(ctx.vars()), 0), scale);
    for (int j = 1; j <= ctx.pairs(); ++j)
        if (j != i) out = out * pair_factor(ctx, j, spec.c_of_pair(j));
    return out * D * D;
}

NonreducedWitness nonreduced_witness(const FakeCycleSpec& spec) {
    const FermatContext& ctx = spec.ctx;
    NonreducedWitness w;
    w.D = Poly(ctx.vars());
    if (is_true_linear(spec)) {
        w.reason = "true linear cycle: c_i^d = -1 for every i, so the closed form vanishes identically";
        return w;
    }
    int pair = 0;
    for (int j = 1; j <= ctx.pairs(); ++j)
        if (spec.c_of_pair(j).pow(ctx.d) != Cyclo(-1)) { pair = j; break; }
    const QuotientSpace quot = quadratic_quotient(spec);

    // Candidate D list: degree d-1 monomials whose square stays in R^F first,
    // then the remaining monomials, then two-monomial sums with unit
    // coefficients.
    std::vector<ExpVec> ordered;
    for (const ExpVec& m : monomial_basis(ctx.vars(), ctx.d - 1)) {
        bool small = true;
        for (int v : m)
            if (2 * v > ctx.d - 2) { small = false; break; }
        if (small) ordered.push_back(m);
    }
    for (const ExpVec& m : monomial_basis(ctx.vars(), ctx.d - 1)) {
        bool small = true;
        for (int v : m)
            if (2 * v > ctx.d - 2) { small = false; break; }
        if (!small) ordered.push_back(m);
    }
    std::vector<Poly> candidates;
    for (const ExpVec& m : ordered) candidates.push_back(Poly::monomial(ctx.vars(), m, Cyclo(1)));
    for (std::size_t a = 0; a < ordered.size(); ++a)
        for (std::size_t b = a + 1; b < ordered.size(); ++b) {
            Poly two = Poly::monomial(ctx.vars(), ordered[a], Cyclo(1));
            two.add_term(ordered[b], Cyclo(1));
            candidates.push_back(std::move(two));
        }

    for (const Poly& D : candidates) {
        const Poly cf = qr_closed_form(pair, D, spec);
        const std::vector<Cyclo> cls = quotient_class(cf, quot, ctx);
        if (class_is_zero(cls)) continue;
        // Confirm through the actual quadratic form under both strategies.
        Poly ell = Poly::variable(ctx.vars(), 2 * pair - 2);
        ell -= spec.c_of_pair(pair) * Poly::variable(ctx.vars(), 2 * pair - 1);
        const Poly G = ell * D;
        const QFormResult paired = qr(G, G, spec, DecomposeStrategy::Paired, &quot);
        const QFormResult smallest = qr(G, G, spec, DecomposeStrategy::SmallestIndex, &quot);
        if (paired.class_coords != cls || smallest.class_coords != cls)
            throw std::logic_error("nonreduced_witness: closed-form class disagrees with q_r");
        w.found = true;
        w.pair_index = pair;
        w.D = D;
        w.class_coords = cls;
        return w;
    }
    w.reason = "search exhausted the candidate list without a nonzero class";
    return w;
}

}  // namespace fermat
