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

#ifndef FERMAT_QFORM_HPP
#define FERMAT_QFORM_HPP

#include <string>
#include <vector>

#include "fermat/fake_cycles.hpp"
#include "fermat/linalg.hpp"
#include "fermat/polyring.hpp"

namespace fermat {

/// How G * P_lambda is written as sum Q_i dF/dx_i. SmallestIndex is the
/// general per-monomial rule; Paired applies when G factors as
/// (x_{2i-2} - c_{2i-2} x_{2i-1}) * D and reproduces the split
/// Q_{2i-2} = (c_lambda/d) prod_{j != i} factor_j * D,
/// Q_{2i-1} = -(c_lambda c^{d-1}/d) prod_{j != i} factor_j * D.
/// The raw form depends on the strategy; its class does not.
enum class DecomposeStrategy { SmallestIndex, Paired };

/// Fixed coordinates on S_r / (J^F + <P_lambda>)_r where r is the critical
/// degree: the span of reduce(P_lambda * S_d) inside R^F_r in echelon form,
/// with the non-pivot R^F_r monomials as the complement basis.
struct QuotientSpace {
    std::vector<ExpVec> rf_monomials;
    ExactMatrix span;                      // RREF rows of the reduced span
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> complement;   // indices into rf_monomials
};

QuotientSpace quadratic_quotient(const FakeCycleSpec& spec);

/// Class of a degree-r polynomial in the quotient: coordinates over the
/// complement monomials after reduction modulo J^F and the span.
std::vector<Cyclo> quotient_class(const Poly& w, const QuotientSpace& q, const FermatContext& ctx);

bool class_is_zero(const std::vector<Cyclo>& coords);

struct QFormResult {
    Poly raw;
    std::vector<Cyclo> class_coords;
    bool class_zero = true;
};

/// The critical-degree piece of the quadratic fundamental form:
/// q_r(G, H) = sum_i (H dQ_i/dx_i - R_i dG/dx_i) with G P = sum Q_i dF/dx_i,
/// H P = sum R_i dF/dx_i. G and H must lie in (J^F : P_lambda)_d. Pass a
/// precomputed quadratic_quotient(spec) through quot to amortize repeated
/// calls on the same spec.
QFormResult qr(const Poly& G, const Poly& H, const FakeCycleSpec& spec,
               DecomposeStrategy strategy = DecomposeStrategy::SmallestIndex,
               const QuotientSpace* quot = nullptr);

/// The closed form of q_r(G, G) for G = (x_{2i-2} - c_{2i-2} x_{2i-1}) D:
/// (-c_lambda/d) * prod_{j != i} factor_j * D^2 * (c_{2i-2}^d + 1), expanded.
Poly qr_closed_form(int i, const Poly& D, const FakeCycleSpec& spec);

struct NonreducedWitness {
    bool found = false;
    int pair_index = 0;
    Poly D{0};
    std::vector<Cyclo> class_coords;
    std::string reason;
};

/// Searches D (single degree-(d-1) monomials, then two-monomial sums) until
/// q_r(ell_i D, ell_i D) has nonzero class, certifying the Hodge locus is
/// non-reduced at Fermat. For true-linear specs reports the provable absence
/// of a witness (the closed form vanishes identically).
NonreducedWitness nonreduced_witness(const FakeCycleSpec& spec);

}  // namespace fermat

#endif
