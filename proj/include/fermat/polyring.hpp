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

#ifndef FERMAT_POLYRING_HPP
#define FERMAT_POLYRING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fermat/characters.hpp"
#include "fermat/cyclotomic.hpp"

namespace fermat {

using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
}

/// Graded-lex term order, leading term first: higher total degree first, ties
/// broken by lexicographically larger exponent vector (x_0 most significant).
struct TermOrder {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse multivariate polynomial over Q(zeta_m) coefficients in a fixed
/// number of variables. Terms are kept in graded-lex order with no zero
/// coefficients stored, so iteration order is canonical.
class Poly {
  public:
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly monomial(int nvars, const ExpVec& exps, const Cyclo& coeff);
    static Poly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    const std::map<ExpVec, Cyclo, TermOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Maximal total degree of a term; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    const Cyclo* coefficient(const ExpVec& e) const;
    void add_term(const ExpVec& exps, const Cyclo& coeff);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Cyclo& s, const Poly& p);

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Formal partial derivative with respect to variable i.
    Poly derivative(int i) const;

    std::string to_string() const;

  private:
    int nvars_;
    std::map<ExpVec, Cyclo, TermOrder> terms_;
};

/// All monomials of the given total degree in nvars variables, descending
/// graded-lex (matching the Poly term order).
std::vector<ExpVec> monomial_basis(int nvars, int degree);

/// Monomial basis of the degree-e piece of the Fermat Jacobian ring
/// R^F = S / <x_i^{d-1}>: monomials with every exponent <= d-2, same order.
std::vector<ExpVec> rf_basis(const FermatContext& ctx, int degree);

/// Dimension of R^F_e from the generating function ((1-x^{d-1})/(1-x))^{n+2};
/// independent cross-check for rf_basis sizes.
std::int64_t rf_dimension(const FermatContext& ctx, int degree);

/// Canonical representative modulo the Fermat Jacobian ideal <x_i^{d-1}>:
/// drops every monomial with some exponent >= d-1.
Poly reduce_mod_jacobian(const Poly& p, const FermatContext& ctx);

/// Membership in the monomial ideal J^F (every term divisible by some x_i^{d-1}).
bool in_jacobian_ideal(const Poly& p, const FermatContext& ctx);

/// Write w in J^F as sum Q_i * d x_i^{d-1} by assigning each monomial to the
/// smallest index i with exponent >= d-1. Throws if w is outside J^F.
std::vector<Poly> jacobian_decompose(const Poly& w, const FermatContext& ctx);

/// Exact division of G by the linear form x_a - c x_b; nullopt when the
/// remainder (G at x_a = c x_b) is nonzero.
std::optional<Poly> try_divide_linear(const Poly& G, int a, int b, const Cyclo& c);

/// The geometric factor sum_{k=0}^{d-2} x_{2j-2}^{d-2-k} (c x_{2j-1})^k of the
/// cycle polynomial, for pair j in {1,...,n/2+1}.
Poly pair_factor(const FermatContext& ctx, int j, const Cyclo& c);

}  // namespace fermat

#endif
