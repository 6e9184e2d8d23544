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

#ifndef FERMAT_RATIONAL_HPP
#define FERMAT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace fermat {

/// Exact arbitrary-precision rational, the base scalar of every certified
/// computation. GMP keeps values canonical (lowest terms, positive
/// denominator) under arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

/// Rough size measure (bits of numerator plus denominator), used by the
/// exact eliminators to pick low-complexity pivots.
inline std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace fermat

#endif
