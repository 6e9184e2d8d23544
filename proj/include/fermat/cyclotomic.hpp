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

#ifndef FERMAT_CYCLOTOMIC_HPP
#define FERMAT_CYCLOTOMIC_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fermat/rational.hpp"

namespace fermat {

/// Monic cyclotomic polynomial Phi_m as a coefficient vector of length
/// deg Phi_m + 1, constant term first. Computed by dividing x^m - 1 by all
/// Phi_k with k | m, k < m; results are cached.
const std::vector<Rational>& cyclotomic_polynomial(int m);

int euler_phi(int m);

/// An element of Q(zeta_m) in the power basis {1, zeta_m, ..., zeta_m^{phi(m)-1}}
/// reduced modulo Phi_m. Values are immutable field elements; all operations
/// are pure. Mixed-conductor arithmetic lifts both operands to the lcm of the
/// conductors via zeta_m = zeta_lcm^{lcm/m}.
class Cyclo {
  public:
    Cyclo() : m_(1), coeffs_(1, Rational(0)) {}
    Cyclo(const Rational& q) : m_(1), coeffs_(1, q) { coeffs_[0].canonicalize(); }
    Cyclo(long v) : m_(1), coeffs_(1, Rational(v)) {}
    Cyclo(int v) : m_(1), coeffs_(1, Rational(v)) {}

    /// zeta_m^k.
    static Cyclo zeta(int m, long k = 1);
    /// Reduce sum raw[k] * zeta_m^k modulo Phi_m (raw may have any length,
    /// exponents are first folded modulo m). Idempotent on canonical input.
    static Cyclo from_powers(int m, const std::vector<Rational>& raw);

    int conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// Nonempty exactly when all coefficients beyond index 0 vanish.
    std::optional<Rational> as_rational() const;
    bool is_rational() const { return as_rational().has_value(); }

    /// Rewrite at conductor target (m must divide target).
    Cyclo lifted(int target) const;
    /// Canonical form at the smallest conductor m' | m with the value in
    /// Q(zeta_m'). Two Cyclos are equal iff their normalized forms have the
    /// same conductor and coefficients.
    Cyclo normalized() const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    /// Exact inverse via extended GCD with Phi_m. Throws on zero.
    Cyclo inverse() const;
    /// Integer power, negative exponents through the inverse.
    Cyclo pow(long e) const;
    /// Complex conjugate (the Galois element t = -1).
    Cyclo conj() const;

    /// Number of nonzero basis coefficients plus their total bit size;
    /// pivot-selection heuristic for the exact eliminators.
    std::size_t complexity() const;

    /// Floating-point evaluation at zeta_m = e^{2 pi i / m}. Test cross-checks
    /// and --approx rendering only, never on the certified path.
    std::complex<double> to_complex() const;

    std::string to_string() const;

  private:
    Cyclo(int m, std::vector<Rational> coeffs) : m_(m), coeffs_(std::move(coeffs)) {}

    int m_;
    std::vector<Rational> coeffs_;
};

/// An element of Gal(Q(zeta_m)/Q) ~ (Z/mZ)^x, acting by zeta_m -> zeta_m^t.
class GaloisElement {
  public:
    GaloisElement(int m, int t);

    int conductor() const { return m_; }
    int exponent() const { return t_; }

    GaloisElement compose(const GaloisElement& o) const;
    bool is_identity() const { return t_ == 1 % m_; }

  private:
    int m_;
    int t_;
};

/// Apply sigma_t: zeta_m -> zeta_m^t and re-canonicalize. Ring homomorphism.
/// Throws on conductor mismatch.
Cyclo galois_apply(const GaloisElement& sigma, const Cyclo& z);

/// The units of Z/mZ in increasing order (the full Galois group at conductor m).
std::vector<int> units_mod(int m);

/// True iff zeta_{2d}^3 * z lies in Q(zeta_d) (Galois-invariance test) and
/// z has unit modulus, z * conj(z) = 1. z must live at a conductor dividing 2d.
bool subfield_and_circle_test(const Cyclo& z, int d);

}  // namespace fermat

#endif
