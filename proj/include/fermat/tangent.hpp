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

#ifndef FERMAT_TANGENT_HPP
#define FERMAT_TANGENT_HPP

#include <cstdint>
#include <vector>

#include "fermat/fake_cycles.hpp"
#include "fermat/linalg.hpp"
#include "fermat/polyring.hpp"

namespace fermat {

/// dim S_e in nvars variables, C(e + nvars - 1, nvars - 1).
std::int64_t s_dimension(int nvars, int e);

/// Matrix of multiplication by P from S_e to R^F_{e + deg P}: rows indexed by
/// rf_basis(ctx, e + deg P), columns by monomial_basis(ctx.vars(), e).
ExactMatrix multiplication_matrix(const Poly& P, int e, const FermatContext& ctx);

/// Dimension of the degree-e piece of the colon ideal (J^F : P) = the
/// nullity of the multiplication map.
int colon_dim(const Poly& P, int e, const FermatContext& ctx);

/// Basis of (J^F : P)_e as coefficient vectors over monomial_basis(vars, e).
std::vector<std::vector<Cyclo>> colon_basis(const Poly& P, int e, const FermatContext& ctx);

/// Codimension of the Zariski tangent space of the Hodge locus at Fermat:
/// dim S_d - dim (J^F : P_lambda)_d. Equals C(n/2+d, d) - (n/2+1)^2 for
/// fake linear cycles.
int tangent_codim(const FakeCycleSpec& spec);

/// True iff the degree-e piece of <x_{2j-2} - c_{2j-2} x_{2j-1}; x_i^{d-1}>
/// equals (J^F : P_lambda)_e as subspaces of S_e (mutual rank tests).
bool idealfake_compare(const FakeCycleSpec& spec, int e);

/// Checks the Artinian Gorenstein shape of S/(J^F : P_lambda): socle
/// dimension 1 at degree (d-2)(n/2+1), zero above it, and nondegeneracy of
/// the pairing (S/J)_1 x (S/J)_{socle-1} -> (S/J)_socle.
bool gorenstein_check(const FakeCycleSpec& spec);

/// Hilbert function of S/(J^F : P_lambda) in degrees 0..socle.
std::vector<int> hilbert_function(const FakeCycleSpec& spec);

/// Independent oracle for the same Hilbert function: substituting
/// x_{2j-2} = c_{2j-2} x_{2j-1} reduces the quotient to
/// C[y_1..y_{n/2+1}] / <y_j^{d-1}>, whose degree-e dimension is counted
/// directly by enumeration.
int substitution_quotient_dim(const FermatContext& ctx, int e);

}  // namespace fermat

#endif
