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

#ifndef FERMAT_CHARACTERS_HPP
#define FERMAT_CHARACTERS_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace fermat {

/// Dimension/degree bookkeeping for the Fermat hypersurface x_0^d + ... + x_{n+1}^d = 0
/// in n+2 homogeneous coordinates, n even.
struct FermatContext {
    int n;  // even dimension
    int d;  // degree >= 2

    FermatContext(int n_, int d_);

    int vars() const { return n + 2; }
    int pairs() const { return n / 2 + 1; }
    /// Top degree of the cycle's Artinian Gorenstein quotient, (d-2)(n/2+1).
    int socle() const { return (d - 2) * (n / 2 + 1); }
    /// Degree of the critical piece of the quadratic form, d(n/2+2) - n - 2.
    int critical_degree() const { return d * (n / 2 + 2) - n - 2; }
    /// Degree of the cycle polynomial, (d-2)(n/2+1).
    int cycle_degree() const { return socle(); }
    /// Whether the fake-cycle machinery applies at this (n, d): d >= 2 + 6/n.
    bool fake_cycle_range() const { return static_cast<std::int64_t>(n) * (d - 2) >= 6; }
};

/// A character of the group scaling Fermat coordinates by d-th roots of unity:
/// entries a_0..a_{n+1} mod d with sum = 0 mod d.
class Character {
  public:
    Character(int d, std::vector<int> entries);

    int modulus() const { return d_; }
    const std::vector<int>& entries() const { return a_; }
    std::size_t size() const { return a_.size(); }

    bool zero_free() const;
    Character scaled(int t) const;  // t * alpha, entrywise mod d

    bool operator==(const Character& o) const { return d_ == o.d_ && a_ == o.a_; }

  private:
    int d_;
    std::vector<int> a_;  // residues in {0,...,d-1}
};

/// |alpha| = (1/d) sum of residues; an integer for valid characters.
int weight(const Character& alpha);

/// True iff alpha is zero-free and |t*alpha| = n/2 + 1 for every t in (Z/dZ)^x,
/// where n + 2 is the number of entries.
bool is_hodge_character(const Character& alpha);

/// Primitive Hodge number h^{p,q}_prim: the count of zero-free characters of
/// weight q + 1. Requires p + q = n.
int hodge_number(const FermatContext& ctx, int p, int q);

/// Count of zero-free characters (any weight); closed form
/// ((d-1)^{n+2} + (-1)^{n+2} (d-1)) / d.
std::int64_t zero_free_character_count(const FermatContext& ctx);

/// True iff every zero-free character of weight n/2+1 is a Hodge character.
/// This happens exactly when phi(d) <= 2, i.e. d in {1, 2, 3, 4, 6}.
bool picmax_check(const FermatContext& ctx);

struct MinPrimeResult {
    int q;             // least prime not dividing 2d
    bool exceptional;  // q == (d+1)/2 (happens only for d = 5, 9)
};

/// Least prime q with q not dividing 2d, classified: either q < d/2 ("small")
/// or q = (d+1)/2 ("exceptional"). Requires d >= 5, d != 6.
MinPrimeResult min_nondividing_prime(int d);

struct ResidueIdentityResult {
    bool ok;
    int q;
    int k;
    std::int64_t value;  // the verified residue combination (-d, or +d in the exceptional case)
};

/// Verifies the residue identity
///   (1-k)*res(2d-q) - res((k+1)(2d-q)) + k*res(2(2d-q)) = -d
/// (residues mod d) where q = min_nondividing_prime(d) and, in the small
/// case, k is the unique integer with d/(k+1) < q < d/k; the exceptional
/// case takes k = 2 and the value +d. Requires d >= 5, d != 6.
ResidueIdentityResult villasmall_identity_detail(int d);
bool villasmall_identity(int d);

/// Enumerate every zero-free character for (d, n): entries 1..n+1 run over
/// {1,...,d-1} and a_0 is forced; characters with a_0 = 0 are skipped.
void for_each_zero_free_character(int d, int n, const std::function<void(const Character&)>& fn);

}  // namespace fermat

#endif
