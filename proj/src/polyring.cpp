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

#include "fermat/polyring.hpp"

#include <sstream>
#include <stdexcept>

namespace fermat {

Poly Poly::monomial(int nvars, const ExpVec& exps, const Cyclo& coeff) {
    Poly p(nvars);
    p.add_term(exps, coeff);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    ExpVec e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(nvars, e, Cyclo(1));
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);  // leading term has maximal degree
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

const Cyclo* Poly::coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
}

void Poly::add_term(const ExpVec& exps, const Cyclo& coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("Poly::add_term: exponent vector length mismatch");
    for (int v : exps)
        if (v < 0) throw std::invalid_argument("Poly::add_term: negative exponent");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    Poly out(a.nvars_);
    ExpVec e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly operator*(const Cyclo& s, const Poly& p) {
    Poly out(p.nvars_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
    return out;
}

Poly Poly::derivative(int i) const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        const int k = e[static_cast<std::size_t>(i)];
        if (k == 0) continue;
        ExpVec de = e;
        de[static_cast<std::size_t>(i)] = k - 1;
        out.add_term(de, Cyclo(k) * c);
    }
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*x" << i;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

void enumerate_bounded(int nvars, int degree, int cap, ExpVec& acc, std::vector<ExpVec>& out) {
    const std::size_t pos = acc.size();
    if (static_cast<int>(pos) == nvars - 1) {
        if (degree <= cap) {
            acc.push_back(degree);
            out.push_back(acc);
            acc.pop_back();
        }
        return;
    }
    for (int e = std::min(degree, cap); e >= 0; --e) {
        acc.push_back(e);
        enumerate_bounded(nvars, degree - e, cap, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<ExpVec> monomial_basis(int nvars, int degree) {
    std::vector<ExpVec> out;
    if (degree < 0) return out;
    ExpVec acc;
    enumerate_bounded(nvars, degree, degree, acc, out);
    return out;
}

std::vector<ExpVec> rf_basis(const FermatContext& ctx, int degree) {
    std::vector<ExpVec> out;
    if (degree < 0) return out;
    ExpVec acc;
    enumerate_bounded(ctx.vars(), degree, ctx.d - 2, acc, out);
    return out;
}

std::int64_t rf_dimension(const FermatContext& ctx, int degree) {
    if (degree < 0) return 0;
    // coefficient of x^degree in (1 + x + ... + x^{d-2})^{n+2}
    std::vector<std::int64_t> acc{1};
    for (int v = 0; v < ctx.vars(); ++v) {
        std::vector<std::int64_t> next(std::min<std::size_t>(acc.size() + static_cast<std::size_t>(ctx.d) - 2,
                                                             static_cast<std::size_t>(degree) + 1),
                                       0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0) continue;
            for (int k = 0; k <= ctx.d - 2; ++k) {
                if (i + static_cast<std::size_t>(k) >= next.size()) break;
                next[i + static_cast<std::size_t>(k)] += acc[i];
            }
        }
        acc = std::move(next);
    }
    return static_cast<std::size_t>(degree) < acc.size() ? acc[static_cast<std::size_t>(degree)] : 0;
}

Poly reduce_mod_jacobian(const Poly& p, const FermatContext& ctx) {
    Poly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        bool keep = true;
        for (int v : e)
            if (v >= ctx.d - 1) { keep = false; break; }
        if (keep) out.add_term(e, c);
    }
    return out;
}

bool in_jacobian_ideal(const Poly& p, const FermatContext& ctx) {
    return reduce_mod_jacobian(p, ctx).is_zero();
}

std::vector<Poly> jacobian_decompose(const Poly& w, const FermatContext& ctx) {
    std::vector<Poly> out(static_cast<std::size_t>(ctx.vars()), Poly(ctx.vars()));
    const Cyclo inv_d = Cyclo(ctx.d).inverse();
    for (const auto& [e, c] : w.terms()) {
        int idx = -1;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] >= ctx.d - 1) { idx = static_cast<int>(i); break; }
        if (idx < 0) throw std::invalid_argument("jacobian_decompose: polynomial not in the Jacobian ideal");
        ExpVec q = e;
        q[static_cast<std::size_t>(idx)] -= ctx.d - 1;
        out[static_cast<std::size_t>(idx)].add_term(q, c * inv_d);
    }
    return out;
}

std::optional<Poly> try_divide_linear(const Poly& G, int a, int b, const Cyclo& c) {
    if (G.is_zero()) return Poly(G.nvars());
    // Coefficients of G as a polynomial in x_a.
    int maxdeg = 0;
    for (const auto& [e, coef] : G.terms()) maxdeg = std::max(maxdeg, e[static_cast<std::size_t>(a)]);
    std::vector<Poly> g(static_cast<std::size_t>(maxdeg) + 1, Poly(G.nvars()));
    for (const auto& [e, coef] : G.terms()) {
        ExpVec stripped = e;
        const int k = stripped[static_cast<std::size_t>(a)];
        stripped[static_cast<std::size_t>(a)] = 0;
        g[static_cast<std::size_t>(k)].add_term(stripped, coef);
    }
    const Poly cxb = c * Poly::variable(G.nvars(), b);
    // G = (x_a - c x_b) D demands d_{k-1} = g_k + c x_b d_k (d_{maxdeg} = 0)
    // with remainder g_0 + c x_b d_0 = 0.
    std::vector<Poly> dcoef(static_cast<std::size_t>(maxdeg), Poly(G.nvars()));
    Poly carry(G.nvars());
    for (int k = maxdeg; k >= 1; --k) {
        carry = g[static_cast<std::size_t>(k)] + cxb * carry;
        dcoef[static_cast<std::size_t>(k - 1)] = carry;
    }
    Poly remainder = g[0] + cxb * carry;
    if (!remainder.is_zero()) return std::nullopt;
    Poly D(G.nvars());
    for (int k = 0; k < maxdeg; ++k) {
        for (const auto& [e, coef] : dcoef[static_cast<std::size_t>(k)].terms()) {
            ExpVec full = e;
            full[static_cast<std::size_t>(a)] += k;
            D.add_term(full, coef);
        }
    }
    return D;
}

Poly pair_factor(const FermatContext& ctx, int j, const Cyclo& c) {
    if (j < 1 || j > ctx.pairs()) throw std::invalid_argument("pair_factor: pair index out of range");
    const int xa = 2 * j - 2, xb = 2 * j - 1;
    Poly out(ctx.vars());
    Cyclo ck( 1);
    for (int k = 0; k <= ctx.d - 2; ++k) {
        ExpVec e(static_cast<std::size_t>(ctx.vars()), 0);
        e[static_cast<std::size_t>(xa)] = ctx.d - 2 - k;
        e[static_cast<std::size_t>(xb)] = k;
        out.add_term(e, ck);
        ck *= c;
    }
    return out;
}

}  // namespace fermat
