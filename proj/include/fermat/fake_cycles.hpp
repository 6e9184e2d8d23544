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

#ifndef FERMAT_FAKE_CYCLES_HPP
#define FERMAT_FAKE_CYCLES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fermat/characters.hpp"
#include "fermat/cyclotomic.hpp"
#include "fermat/polyring.hpp"

namespace fermat {

/// A candidate (or certified) fake linear cycle on the Fermat variety:
/// degree d in {3, 4, 6}, the coefficients c_0, c_2, ..., c_n of the paired
/// linear forms, and the cyclotomic scalar c_lambda once solved.
struct FakeCycleSpec {
    FermatContext ctx;
    std::vector<Cyclo> c;            // n/2 + 1 entries, conductor dividing 2d
    std::optional<Cyclo> c_lambda;

    const Cyclo& c_of_pair(int j) const { return c[static_cast<std::size_t>(j) - 1]; }  // j in 1..n/2+1
};

/// Validating constructor: d in {3,4,6}, d >= 2 + 6/n, one c per coordinate
/// pair, every c_i on the twisted unit circle zeta_{2d}^{-3} S^1_{Q(zeta_d)}.
FakeCycleSpec make_spec(int d, int n, std::vector<Cyclo> c,
                        std::optional<Cyclo> c_lambda = std::nullopt);

/// Throws std::invalid_argument when the spec violates its invariants.
void validate_spec(const FakeCycleSpec& spec);

/// True iff c_i^d = -1 for every i: the class of an honest linear subvariety
/// rather than a fake one.
bool is_true_linear(const FakeCycleSpec& spec);

/// The cycle polynomial c_lambda * prod_j sum_{k=0}^{d-2} x_{2j-2}^{d-2-k} (c_{2j-2} x_{2j-1})^k,
/// homogeneous of degree (d-2)(n/2+1) with (d-1)^{n/2+1} monomials.
/// Requires c_lambda set and nonzero.
Poly build_P_lambda(const FakeCycleSpec& spec);

/// The product c_0 c_2 ... c_n.
Cyclo product_of_c(const FakeCycleSpec& spec);

/// A Galois 1-cocycle on Gal(Q(zeta_{2d})/Q): t -> phi_{sigma_t}.
struct Cocycle {
    int m;                      // conductor 2d
    std::map<int, Cyclo> phi;   // keyed by the unit t mod m

    bool law_holds() const;     // phi_{st} = phi_s * sigma_s(phi_t)
};

/// The explicit cocycle whose splitting produces c_lambda:
///   d=3: phi_{sigma_5} = (-1)^{n/2+1} prod c;
///   d=4: phi_{sigma_3} = (prod c)^2, phi_{sigma_5} = (-1)^{n/2+1}, phi_{sigma_7} = product;
///   d=6: phi_{sigma_5} = (prod c)^4, phi_{sigma_7} = (-1)^{n/2+1}, phi_{sigma_11} = product.
/// Verifies the cocycle law before returning; rejects d outside {3,4,6}.
Cocycle cocycle_phi(const FakeCycleSpec& spec);

/// Extracts the same cocycle from period ratios (phi_t = W(b') / sigma_t(W(b'))
/// with W the period vector at c_lambda = 1), checking independence of b'.
/// Convention-free cross-validation of cocycle_phi.
Cocycle cocycle_from_periods(const FakeCycleSpec& spec);

/// Constructive Hilbert 90: returns c_lambda != 0 with
/// sigma(c_lambda) = phi_sigma * c_lambda for every sigma, found by scanning
/// the Poincare series b = sum_t phi_t sigma_t(theta) over theta = zeta_{2d}^k
/// until b != 0 and inverting. The result is rescaled by a positive rational
/// to primitive integer coefficients with positive leading sign.
Cyclo solve_c_lambda(const Cocycle& cocycle);

struct HodgeCertificate {
    bool success = false;
    bool true_linear = false;
    /// Normalized periods (1/(2 pi i)^{n/2}) int_{delta_{b'}} lambda_prim in
    /// the fixed beta' enumeration order; present on success.
    std::vector<Rational> periods;
    /// First failing beta' and its irrational value, on failure.
    std::optional<std::pair<std::vector<int>, Cyclo>> failure;
};

/// The rationality certificate: evaluates every one of the (d-1)^{n+1}
/// normalized periods and succeeds iff all are exactly rational.
HodgeCertificate certify_hodge(const FakeCycleSpec& spec);

/// The second, period-free certificate: transports each monomial coefficient
/// of P_lambda along the Galois action on residue forms and compares with the
/// original coefficient list for every sigma.
bool galois_invariance_check(const FakeCycleSpec& spec);

struct NoFakeWitness {
    bool ok = false;
    int q = 0;
    int k = 0;
    int t = 0;                 // the Galois exponent 2d - q used for the witness
    Cyclo sample_c;            // unit-circle element with c^d != -1
    std::string detail;
};

/// Computational confirmation of the exclusion d not in {3,4,6}: verifies the
/// residue identity behind it and exhibits, for a sample unit-circle c with
/// c^d != -1, a failing instance of the Galois compatibility relation.
/// Requires d >= 5, d != 6.
NoFakeWitness no_fake_cycles_witness(int d);

/// zeta_{2d}^{-3} * u / conj(u) with u = a + b zeta_d: a point of the twisted
/// unit circle, valid as a c-entry. Requires (a, b) != (0, 0).
Cyclo unit_circle_c(int d, int a, int b);

}  // namespace fermat

#endif
