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

#include "fermat/tangent.hpp"

#include <map>
#include <stdexcept>

namespace fermat {

namespace {

ExactMatrix matrix_with_rows(std::vector<std::vector<Cyclo>> rows, std::size_t cols) {
    if (rows.empty()) return ExactMatrix(0, cols);
    return ExactMatrix::from_rows(std::move(rows));
}

}  // namespace

std::int64_t s_dimension(int nvars, int e) {
    if (e < 0) return 0;
    std::int64_t num = 1, den = 1;
    for (int i = 1; i <= nvars - 1; ++i) {
        num *= e + i;
        den *= i;
    }
    return num / den;
}

ExactMatrix multiplication_matrix(const Poly& P, int e, const FermatContext& ctx) {
    if (P.is_zero()) throw std::invalid_argument("multiplication_matrix: P must be nonzero");
    if (!P.is_homogeneous()) throw std::invalid_argument("multiplication_matrix: P must be homogeneous");
    const std::vector<ExpVec> rows = rf_basis(ctx, e + P.degree());
    const std::vector<ExpVec> cols = monomial_basis(ctx.vars(), e);
    std::map<ExpVec, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
    ExactMatrix m(rows.size(), cols.size());
    ExpVec prod(static_cast<std::size_t>(ctx.vars()));
    for (std::size_t cidx = 0; cidx < cols.size(); ++cidx) {
        for (const auto& [pe, pc] : P.terms()) {
            bool keep = true;
            for (std::size_t v = 0; v < prod.size(); ++v) {
                prod[v] = pe[v] + cols[cidx][v];
                if (prod[v] >= ctx.d - 1) { keep = false; break; }
            }
            if (!keep) continue;
            m(row_index.at(prod), cidx) += pc;
        }
    }
    return m;
}

int colon_dim(const Poly& P, int e, const FermatContext& ctx) {
    if (e < 0) return 0;
    const ExactMatrix m = multiplication_matrix(P, e, ctx);
    return static_cast<int>(m.cols() - m.rank());
}

std::vector<std::vector<Cyclo>> colon_basis(const Poly& P, int e, const FermatContext& ctx) {
    return multiplication_matrix(P, e, ctx).nullspace();
}

int tangent_codim(const FakeCycleSpec& spec) {
    const Poly p = build_P_lambda(spec);
    return static_cast<int>(multiplication_matrix(p, spec.ctx.d, spec.ctx).rank());
}

bool idealfake_compare(const FakeCycleSpec& spec, int e) {
    const FermatContext& ctx = spec.ctx;
    if (e < 1 || e > ctx.socle()) throw std::invalid_argument("idealfake_compare: degree out of range");
    const Poly p = build_P_lambda(spec);
    const std::vector<ExpVec> cols = monomial_basis(ctx.vars(), e);
    std::map<ExpVec, std::size_t> col_index;
    for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);

    const ExactMatrix colon_side = matrix_with_rows(colon_basis(p, e, ctx), cols.size());

    std::vector<std::vector<Cyclo>> gen_rows;
    for (int j = 1; j <= ctx.pairs(); ++j) {
        const Cyclo& cj = spec.c_of_pair(j);
        for (const ExpVec& m : monomial_basis(ctx.vars(), e - 1)) {
            std::vector<Cyclo> row(cols.size());
            ExpVec hi = m;
            hi[static_cast<std::size_t>(2 * j - 2)] += 1;
            row[col_index.at(hi)] += Cyclo(1);
            ExpVec lo = m;
            lo[static_cast<std::size_t>(2 * j - 1)] += 1;
            row[col_index.at(lo)] -= cj;
            gen_rows.push_back(std::move(row));
        }
    }
    if (e >= ctx.d - 1) {
        for (int i = 0; i < ctx.vars(); ++i) {
            for (const ExpVec& m : monomial_basis(ctx.vars(), e - (ctx.d - 1))) {
                std::vector<Cyclo> row(cols.size());
                ExpVec full = m;
                full[static_cast<std::size_t>(i)] += ctx.d - 1;
                row[col_index.at(full)] = Cyclo(1);
                gen_rows.push_back(std::move(row));
            }
        }
    }
    const ExactMatrix gen_side = matrix_with_rows(std::move(gen_rows), cols.size());
    return row_space_equal(colon_side, gen_side);
}

std::vector<int> hilbert_function(const FakeCycleSpec& spec) {
    const Poly p = build_P_lambda(spec);
    std::vector<int> out;
    for (int e = 0; e <= spec.ctx.socle(); ++e)
        out.push_back(static_cast<int>(s_dimension(spec.ctx.vars(), e)) - colon_dim(p, e, spec.ctx));
    return out;
}

int substitution_quotient_dim(const FermatContext& ctx, int e) {
    if (e < 0) return 0;
    // count monomials of degree e in n/2+1 variables with exponents <= d-2
    const int vars = ctx.pairs();
    std::vector<int> exps(static_cast<std::size_t>(vars), 0);
    int count = 0;
    // odometer with early pruning
    while (true) {
        int sum = 0;
        for (int v : exps) sum += v;
        if (sum == e) ++count;
        std::size_t pos = 0;
        while (pos < exps.size() && exps[pos] == ctx.d - 2) {
            exps[pos] = 0;
            ++pos;
        }
        if (pos == exps.size()) break;
        ++exps[pos];
    }
    return count;
}

bool gorenstein_check(const FakeCycleSpec& spec) {
    const FermatContext& ctx = spec.ctx;
    const Poly p = build_P_lambda(spec);
    const int socle = ctx.socle();

    // dim (S/J)_socle = 1 and zero in the next degree
    if (s_dimension(ctx.vars(), socle) - colon_dim(p, socle, ctx) != 1) return false;
    if (colon_dim(p, socle + 1, ctx) != static_cast<int>(s_dimension(ctx.vars(), socle + 1))) return false;

    // Socle functional: any nonzero row of the degree-socle multiplication
    // matrix (its rank is 1, so the kernel of that row is exactly J_socle).
    const ExactMatrix m_socle = multiplication_matrix(p, socle, ctx);
    const std::vector<ExpVec> socle_cols = monomial_basis(ctx.vars(), socle);
    std::map<ExpVec, std::size_t> socle_col_index;
    for (std::size_t i = 0; i < socle_cols.size(); ++i) socle_col_index.emplace(socle_cols[i], i);
    std::size_t psi_row = m_socle.rows();
    for (std::size_t i = 0; i < m_socle.rows() && psi_row == m_socle.rows(); ++i)
        for (std::size_t j = 0; j < m_socle.cols(); ++j)
            if (!m_socle(i, j).is_zero()) { psi_row = i; break; }
    if (psi_row == m_socle.rows()) return false;

    // Complement monomials of J at degrees 1 and socle-1: pivot columns of
    // the multiplication maps (their images are independent).
    auto complement_monomials = [&](int e) {
        ExactMatrix m = multiplication_matrix(p, e, ctx);
        const std::vector<std::size_t> pivots = m.rref();
        const std::vector<ExpVec> basis = monomial_basis(ctx.vars(), e);
        std::vector<ExpVec> out;
        for (std::size_t c : pivots) out.push_back(basis[c]);
        return out;
    };
    const std::vector<ExpVec> left = complement_monomials(1);
    const std::vector<ExpVec> right = complement_monomials(socle - 1);
    if (left.size() != right.size()) return false;

    ExactMatrix pairing(left.size(), right.size());
    for (std::size_t a = 0; a < left.size(); ++a) {
        for (std::size_t b = 0; b < right.size(); ++b) {
            ExpVec prod(static_cast<std::size_t>(ctx.vars()));
            for (std::size_t v = 0; v < prod.size(); ++v) prod[v] = left[a][v] + right[b][v];
            pairing(a, b) = m_socle(psi_row, socle_col_index.at(prod));
        }
    }
    return pairing.rank() == left.size();
}

}  // namespace fermat
