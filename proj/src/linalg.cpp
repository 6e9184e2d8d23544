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

#include "fermat/linalg.hpp"

#include <limits>
#include <stdexcept>

namespace fermat {

ExactMatrix ExactMatrix::from_rows(std::vector<std::vector<Cyclo>> rows) {
    if (rows.empty()) return ExactMatrix(0, 0);
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw std::invalid_argument("ExactMatrix::from_rows: ragged rows");
    ExactMatrix m(0, cols);
    m.data_ = std::move(rows);
    return m;
}

void ExactMatrix::append_rows(const ExactMatrix& o) {
    if (o.cols_ != cols_) throw std::invalid_argument("ExactMatrix::append_rows: column mismatch");
    data_.insert(data_.end(), o.data_.begin(), o.data_.end());
}

std::vector<std::size_t> ExactMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < data_.size(); ++col) {
        std::size_t best = data_.size();
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = r; i < data_.size(); ++i) {
            if (data_[i][col].is_zero()) continue;
            const std::size_t cost = data_[i][col].complexity();
            if (cost < best_cost) {
                best_cost = cost;
                best = i;
            }
        }
        if (best == data_.size()) continue;
        std::swap(data_[r], data_[best]);
        const Cyclo inv = data_[r][col].inverse();
        for (std::size_t j = col; j < cols_; ++j)
            if (!data_[r][j].is_zero()) data_[r][j] *= inv;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (i == r || data_[i][col].is_zero()) continue;
            const Cyclo f = data_[i][col];
            for (std::size_t j = col; j < cols_; ++j) {
                if (data_[r][j].is_zero()) continue;
                data_[i][j] -= f * data_[r][j];
            }
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::size_t ExactMatrix::rank() const {
    ExactMatrix copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Cyclo>> ExactMatrix::nullspace() const {
    ExactMatrix copy = *this;
    const std::vector<std::size_t> pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Cyclo>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Cyclo> v(cols_);
        v[f] = Cyclo(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -copy.data_[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Cyclo> ExactMatrix::reduce_vector(const std::vector<std::size_t>& pivots,
                                              std::vector<Cyclo> v) const {
    if (v.size() != cols_) throw std::invalid_argument("ExactMatrix::reduce_vector: length mismatch");
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const Cyclo f = v[pivots[k]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (data_[k][j].is_zero()) continue;
            v[j] -= f * data_[k][j];
        }
    }
    return v;
}

bool row_space_equal(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("row_space_equal: column mismatch");
    const std::size_t ra = a.rank();
    const std::size_t rb = b.rank();
    if (ra != rb) return false;
    ExactMatrix stacked = a;
    stacked.append_rows(b);
    return stacked.rank() == ra;
}

}  // namespace fermat
