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

#ifndef FERMAT_PERIODS_HPP
#define FERMAT_PERIODS_HPP

#include <map>
#include <vector>

#include "fermat/fake_cycles.hpp"
#include "fermat/polyring.hpp"

namespace fermat {

/// Index of a vanishing cycle: n+1 entries in {0,...,d-2}. Formulas index it
/// from 0 with the convention entry(0) := 0.
struct VanishingCycleIndex {
    std::vector<int> entries;  // positions 1..n+1

    int at(int i) const { return i == 0 ? 0 : entries[static_cast<std::size_t>(i) - 1]; }
};

/// All (d-1)^{n+1} indices, ordered by total sum then lexicographically —
/// the fixed enumeration order used by certificates and reports.
std::vector<VanishingCycleIndex> all_vanishing_cycles(const FermatContext& ctx);

/// An exact period: CycloNum coefficient times a formal word of Gamma(a/d)
/// symbols and a power of (2 pi i). Reflection pairs {a, d-a} are always
/// simplified away into the coefficient, so a totally decomposable class has
/// an empty word.
struct PeriodValue {
    Cyclo coeff;
    std::map<int, int> gamma_word;  // a -> multiplicity of Gamma(a/d), 1 <= a <= d-1
    int pi_power = 0;               // exponent of (2 pi i)

    bool is_pure() const { return gamma_word.empty(); }
    /// Pure values normalized by (2 pi i)^{n/2} become plain field elements.
    Cyclo pure_normalized(int n) const;
};

/// True iff beta has n+2 entries in {0,...,d-2} with beta_{2j-2} + beta_{2j-1} = d-2
/// for every pair (the coordinate pairing of the cycle polynomial).
bool totally_decomposable(const ExpVec& beta, const FermatContext& ctx);

/// The period integral of the residue form x^beta over the vanishing cycle
/// delta_{beta'}: exact product of cyclotomic differences and Gamma symbols
/// over 1/(d^{n+1} (n/2)! (2 pi i)), reflection-reduced.
PeriodValue period_omega_beta(const ExpVec& beta, const VanishingCycleIndex& bp,
                              const FermatContext& ctx);

/// Closed form for the normalized period (1/(2 pi i)^{n/2}) of the cycle
/// polynomial's class over delta_{beta'}:
///   c_lambda (prod c)^{-1} / (d^{n+1} (n/2)!) * prod_j E_{j,beta'},
///   E_{j,beta'} = sum_{l=1}^{d-1} (c_{2j-2} z^{2D_j-1})^l - (c_{2j-2} z^{2D_j+1})^l,
/// with z = zeta_{2d} and D_j = beta'_{2j-1} - beta'_{2j-2}.
Cyclo normalized_period(const FakeCycleSpec& spec, const VanishingCycleIndex& bp);

/// The same value computed along the independent pathway: expand P_lambda
/// into monomials and sum coefficient * period_omega_beta, normalized.
Cyclo normalized_period_expanded(const FakeCycleSpec& spec, const VanishingCycleIndex& bp);

struct GaloisOmegaResult {
    int sign;     // +1 or -1
    ExpVec gamma; // exponent vector of the image form
};

/// Galois action on a totally decomposable residue form:
/// t(omega_beta) = sign * omega_gamma with
/// sign = (-1)^{sum_j (t a_{2j-2} - res_d(t a_{2j-2}))/d}, a_i = beta_i + 1,
/// and gamma_i = res_d(t a_i) - 1. sigma lives at conductor 2d.
GaloisOmegaResult galois_on_omega(const ExpVec& beta, const GaloisElement& sigma,
                                  const FermatContext& ctx);

/// The Gamma-word constant of a totally decomposable form:
/// prod_j 1/(zeta_{2d}^{a_{2j-2}} - zeta_{2d}^{-a_{2j-2}}). Always nonzero.
Cyclo c_beta(const ExpVec& beta, const FermatContext& ctx);

}  // namespace fermat

#endif
