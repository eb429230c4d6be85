// Copyright 2026 The qutrit-msd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "msd/finite_field.h"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "msd/code_forge.h"

using namespace msd;

TEST(FieldElem, canonical_residues) {
    EXPECT_EQ(FieldElem(-1, 3).value(), 2);
    EXPECT_EQ(FieldElem(7, 5).value(), 2);
    EXPECT_EQ((FieldElem(2, 3) + FieldElem(2, 3)).value(), 1);
    EXPECT_EQ((FieldElem(0, 3) - FieldElem(1, 3)).value(), 2);
    EXPECT_EQ((-FieldElem(1, 7)).value(), 6);
    EXPECT_THROW(FieldElem(1, 4), std::invalid_argument);
    EXPECT_THROW(FieldElem(1, 3) + FieldElem(1, 5), std::invalid_argument);
}

TEST(FieldElem, inverse_examples) {
    EXPECT_EQ(field_inv(FieldElem(2, 3)).value(), 2);
    EXPECT_EQ(field_inv(FieldElem(1, 3)).value(), 1);
    EXPECT_EQ(field_inv(FieldElem(3, 5)).value(), 2);
}

TEST(FieldElem, inverse_of_zero_throws) {
    try {
        field_inv(FieldElem(0, 3));
        FAIL();
    } catch (const std::domain_error &e) {
        EXPECT_STREQ(e.what(), "no inverse");
    }
}

TEST(FieldElem, inverse_exhaustive) {
    for (int d : {2, 3, 5, 7}) {
        for (int x = 1; x < d; x++) {
            FieldElem e(x, d);
            EXPECT_EQ((e * field_inv(e)).value(), 1) << "d=" << d << " x=" << x;
        }
    }
}

TEST(SympVec, product_examples) {
    SympVec a(3, {1, 0}, {0, 0});
    SympVec b(3, {0, 0}, {1, 0});
    EXPECT_EQ(symplectic_product(a, b).value(), 1);
    EXPECT_EQ(symplectic_product(a, a).value(), 0);
    SympVec p(3, {1}, {1});
    EXPECT_EQ(symplectic_product(p, p).value(), 0);
    EXPECT_THROW(symplectic_product(a, p), std::invalid_argument);
}

TEST(SympVec, bilinear_and_antisymmetric) {
    std::mt19937 rng(11);
    for (int d : {3, 5, 7}) {
        std::uniform_int_distribution<int> digit(0, d - 1);
        auto random_vec = [&](size_t n) {
            SympVec s(d, std::vector<int>(n), std::vector<int>(n));
            for (size_t i = 0; i < n; i++) {
                s.u[i] = digit(rng);
                s.v[i] = digit(rng);
            }
            return s;
        };
        for (int trial = 0; trial < 100; trial++) {
            SympVec a = random_vec(4), b = random_vec(4), c = random_vec(4);
            int k = digit(rng);
            EXPECT_EQ(symplectic_product(a, b), -symplectic_product(b, a));
            EXPECT_EQ(symplectic_product(a, a).value(), 0);
            EXPECT_EQ(symplectic_product(a + c, b), symplectic_product(a, b) + symplectic_product(c, b));
            EXPECT_EQ(symplectic_product(a.scaled(k), b), FieldElem(k, d) * symplectic_product(a, b));
        }
    }
}

TEST(SympVec, flat_round_trip_and_weight) {
    SympVec s(3, {1, 0, 2}, {0, 0, 1});
    EXPECT_EQ(SympVec::from_flat(3, s.flat()), s);
    EXPECT_EQ(s.weight(), 2u);
}

TEST(FieldMatrix, row_reduce_examples) {
    FieldMatrix id = FieldMatrix::identity(4, 3);
    EXPECT_EQ(row_reduce(id), id);
    FieldMatrix twin(3, {{1, 2, 0}, {1, 2, 0}});
    EXPECT_EQ(row_reduce(twin).rows(), 1u);
    EXPECT_EQ(rank(golay_ternary().generator()), 5u);
}

TEST(FieldMatrix, row_reduce_idempotent_and_span_preserving) {
    std::mt19937 rng(5);
    for (int d : {2, 3, 5}) {
        std::uniform_int_distribution<int> digit(0, d - 1);
        for (int trial = 0; trial < 40; trial++) {
            FieldMatrix m(5, 7, d);
            for (size_t r = 0; r < 5; r++) {
                for (size_t c = 0; c < 7; c++) {
                    m.set(r, c, digit(rng));
                }
            }
            FieldMatrix rr = row_reduce(m);
            EXPECT_EQ(row_reduce(rr), rr);
            EXPECT_EQ(rr.rows(), rank(m));
            for (size_t r = 0; r < m.rows(); r++) {
                EXPECT_TRUE(in_row_span(rr, m.row(r)));
            }
            for (size_t r = 0; r < rr.rows(); r++) {
                EXPECT_TRUE(in_row_span(m, rr.row(r)));
            }
            EXPECT_TRUE(same_row_span(m, rr));
        }
    }
}

TEST(FieldMatrix, solve_linear) {
    FieldMatrix m(3, {{1, 1, 0}, {0, 1, 1}});
    std::vector<int> rhs = {2, 1};
    std::vector<int> x;
    ASSERT_TRUE(solve_linear(m, rhs, x));
    FieldMatrix col(3, 1, 3);
    for (size_t i = 0; i < 3; i++) {
        col.set(i, 0, x[i]);
    }
    FieldMatrix prod = m * col;
    EXPECT_EQ(prod(0, 0), 2);
    EXPECT_EQ(prod(1, 0), 1);

    FieldMatrix inconsistent(3, {{1, 0}, {1, 0}});
    std::vector<int> bad = {0, 1};
    EXPECT_FALSE(solve_linear(inconsistent, bad, x));
}

TEST(FieldMatrix, text_round_trip) {
    FieldMatrix g = golay_ternary().generator();
    std::string text = g.to_text();
    EXPECT_EQ(text.substr(0, 7), "3 5 11\n");
    EXPECT_EQ(FieldMatrix::from_text(text), g);
}

TEST(FieldMatrix, text_rejects_malformed_input) {
    EXPECT_THROW(FieldMatrix::from_text("3 1 2\n0 3\n"), std::invalid_argument);
    EXPECT_THROW(FieldMatrix::from_text("4 1 1\n0\n"), std::invalid_argument);
    EXPECT_THROW(FieldMatrix::from_text("3 2 2\n0 1\n"), std::invalid_argument);
    EXPECT_THROW(FieldMatrix::from_text("3 1 1\n0 1\n"), std::invalid_argument);
    EXPECT_THROW(FieldMatrix::load("/nonexistent/matrix.txt"), std::runtime_error);
}

TEST(FieldMatrix, multiply_and_transpose) {
    FieldMatrix a(3, {{1, 2}, {0, 1}});
    FieldMatrix b(3, {{2, 0}, {1, 1}});
    FieldMatrix ab = a * b;
    EXPECT_EQ(ab, FieldMatrix(3, {{1, 2}, {1, 1}}));
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_THROW(a * FieldMatrix(3, 3, 3), std::invalid_argument);
}
