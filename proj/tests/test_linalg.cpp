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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fermat/linalg.hpp"

using namespace fermat;

namespace {

ExactMatrix random_matrix(std::size_t rows, std::size_t cols, int m, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-2, 2);
    ExactMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)));
            for (auto& q : c) q = num(rng);
            out(i, j) = Cyclo::from_powers(m, c);
        }
    return out;
}

}  // namespace

TEST_CASE("rank and rref") {
    const Cyclo z = Cyclo::zeta(6);
    ExactMatrix m(3, 3);
    m(0, 0) = Cyclo(1);
    m(0, 1) = z;
    m(0, 2) = Cyclo(2);
    m(1, 0) = z;
    m(1, 1) = z * z;
    m(1, 2) = Cyclo(2) * z;       // row1 = z * row0
    m(2, 0) = Cyclo(1);
    m(2, 1) = Cyclo(0);
    m(2, 2) = Cyclo(1);
    CHECK(m.rank() == 2);

    ExactMatrix id(2, 2);
    id(0, 0) = Cyclo(1);
    id(1, 1) = Cyclo(1);
    CHECK(id.rank() == 2);
    CHECK(ExactMatrix(3, 4).rank() == 0);
}

TEST_CASE("nullspace") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        const ExactMatrix m = random_matrix(3, 6, 12, rng);
        const auto ns = m.nullspace();
        CHECK(ns.size() == 6 - m.rank());
        for (const auto& v : ns) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Cyclo acc(0);
                for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("row space comparison") {
    std::mt19937 rng(31);
    const ExactMatrix a = random_matrix(3, 5, 8, rng);

    // scaled and re-mixed rows span the same space
    ExactMatrix b(3, 5);
    const Cyclo z = Cyclo::zeta(8);
    for (std::size_t j = 0; j < 5; ++j) {
        b(0, j) = z * a(0, j);
        b(1, j) = a(0, j) + a(1, j);
        b(2, j) = a(2, j) - z * a(1, j);
    }
    CHECK(row_space_equal(a, b));

    ExactMatrix c = a;
    ExactMatrix extra(1, 5);
    std::uniform_int_distribution<int> num(-2, 2);
    bool independent = false;
    while (!independent) {
        for (std::size_t j = 0; j < 5; ++j) extra(0, j) = Cyclo(num(rng));
        ExactMatrix probe = a;
        probe.append_rows(extra);
        independent = probe.rank() == a.rank() + 1;
    }
    c.append_rows(extra);
    CHECK(!row_space_equal(a, c));
}

TEST_CASE("vector reduction against rref") {
    std::mt19937 rng(53);
    ExactMatrix m = random_matrix(2, 4, 6, rng);
    ExactMatrix r = m;
    const auto pivots = r.rref();
    // rows of m reduce to zero, a generic vector does not
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Cyclo> v(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) v[j] = m(i, j);
        for (const Cyclo& e : r.reduce_vector(pivots, v)) CHECK(e.is_zero());
    }
}
