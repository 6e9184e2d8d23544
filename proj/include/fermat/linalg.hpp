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

#ifndef FERMAT_LINALG_HPP
#define FERMAT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "fermat/cyclotomic.hpp"

namespace fermat {

/// Dense matrix over Q(zeta_m) with exact Gaussian elimination. Pivots are
/// chosen among the eligible rows by lowest coefficient complexity to keep
/// entries small; elimination is otherwise classical reduced row echelon.
class ExactMatrix {
  public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), data_(rows, std::vector<Cyclo>(cols)) {}

    static ExactMatrix from_rows(std::vector<std::vector<Cyclo>> rows);

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }

    Cyclo& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
    const Cyclo& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }
    const std::vector<Cyclo>& row(std::size_t i) const { return data_[i]; }

    void append_rows(const ExactMatrix& o);

    /// In-place reduced row echelon form; returns the pivot column indices.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    /// Basis of {v : M v = 0} via free-column parameterization of the RREF.
    std::vector<std::vector<Cyclo>> nullspace() const;

    /// Residual of v after eliminating against the rows of an RREF matrix
    /// with the given pivot columns. Zero residual means membership in the
    /// row space.
    std::vector<Cyclo> reduce_vector(const std::vector<std::size_t>& pivots,
                                     std::vector<Cyclo> v) const;

  private:
    std::size_t cols_;
    std::vector<std::vector<Cyclo>> data_;
};

/// rank(A) == rank(B) == rank(A stacked on B).
bool row_space_equal(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace fermat

#endif
