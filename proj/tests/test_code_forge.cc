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

#include "msd/code_forge.h"

#include <gtest/gtest.h>

using namespace msd;

TEST(ClassicalCode, golay_ternary_parameters) {
    ClassicalCode g = golay_ternary();
    EXPECT_EQ(g.length(), 11u);
    EXPECT_EQ(g.dimension(), 5u);
    EXPECT_EQ(g.minimum_weight(), 6u);
    EXPECT_EQ(g.codewords().size(), 243u);
    EXPECT_TRUE(is_self_orthogonal(g));
}

TEST(ClassicalCode, golay_binary_weights) {
    ClassicalCode g = golay_binary();
    EXPECT_EQ(g.length(), 23u);
    EXPECT_EQ(g.dimension(), 11u);
    std::map<size_t, uint64_t> expected = {{0, 1}, {8, 506}, {12, 1288}, {16, 253}};
    EXPECT_EQ(g.weight_distribution(), expected);
    EXPECT_TRUE(is_self_orthogonal(g));
}

TEST(ClassicalCode, self_orthogonality_examples) {
    EXPECT_FALSE(is_self_orthogonal(ClassicalCode(FieldMatrix(3, {{1, 1}}))));
    EXPECT_TRUE(is_self_orthogonal(ClassicalCode(FieldMatrix(3, {{1, 1, 1}}))));
    EXPECT_TRUE(is_self_orthogonal(ClassicalCode(FieldMatrix(0, 4, 3))));
    EXPECT_THROW(ClassicalCode(FieldMatrix(3, {{1, 2}, {2, 1}})), std::invalid_argument);
}

TEST(StabilizerCode, golay_qutrit_code_structure) {
    StabilizerCode c = golay_qutrit_code();
    EXPECT_EQ(c.n, 11u);
    EXPECT_EQ(c.stabilizers.rows(), 10u);
    EXPECT_EQ(c.stabilizers.cols(), 22u);
    EXPECT_TRUE(stabilizer_code_violations(c.stabilizers, c.logical_x, c.logical_z).empty());
    EXPECT_EQ(symplectic_product(c.logical_x, c.logical_z).value(), 1);
    EXPECT_EQ(symplectic_product(c.logical_z, c.logical_x).value(), 2);
    for (size_t r = 0; r < c.num_stabilizers(); r++) {
        EXPECT_EQ(symplectic_product(c.stabilizer(r), c.logical_x).value(), 0);
        EXPECT_EQ(symplectic_product(c.stabilizer(r), c.logical_z).value(), 0);
        for (size_t s = 0; s < c.num_stabilizers(); s++) {
            EXPECT_EQ(symplectic_product(c.stabilizer(r), c.stabilizer(s)).value(), 0);
        }
    }
}

TEST(StabilizerCode, transversal_invariance) {
    EXPECT_TRUE(transversal_invariance_check(golay_qutrit_code()));
    // Z1 Z2 is not mapped into its own span by the transversal Hadamard.
    StabilizerCode zz(FieldMatrix(3, {{0, 0, 1, 1}}), SympVec(3, {1, 2}, {0, 0}), SympVec(3, {0, 0}, {0, 1}));
    EXPECT_FALSE(transversal_invariance_check(zz));
}

TEST(StabilizerCode, golay_distance_five) {
    StabilizerCode c = golay_qutrit_code();
    EXPECT_FALSE(has_logical_of_weight_at_most(c, 4));
    EXPECT_TRUE(has_logical_of_weight_at_most(c, 5));
}

TEST(StabilizerCode, local_symplectic_maps) {
    FieldMatrix h = hadamard_symplectic(3);
    FieldMatrix nm = norell_symplectic(3);
    // Hadamard has order 4, N has order 3 up to sign conventions: check determinant one and orders.
    auto det = [](const FieldMatrix &f) { return ((f(0, 0) * f(1, 1) - f(0, 1) * f(1, 0)) % 3 + 3) % 3; };
    EXPECT_EQ(det(h), 1);
    EXPECT_EQ(det(nm), 1);
    FieldMatrix id = FieldMatrix::identity(2, 3);
    EXPECT_EQ(h * h * h * h, id);
    EXPECT_NE(h * h, id);
    FieldMatrix row(3, {{1, 0, 0, 0}});
    EXPECT_EQ(apply_local_symplectic(row, h), FieldMatrix(3, {{0, 0, 1, 0}}));
}

TEST(StabilizerCode, precondition_errors) {
    // Non-commuting rows.
    EXPECT_THROW(StabilizerCode(FieldMatrix(3, {{1, 0, 0, 0}, {0, 0, 1, 0}}), SympVec(3, {0, 1}, {0, 0}),
                                SympVec(3, {0, 0}, {0, 1})),
                 std::invalid_argument);
    // Logicals with <lx, lz> = 0.
    EXPECT_THROW(StabilizerCode(FieldMatrix(3, {{0, 0, 1, 1}}), SympVec(3, {1, 2}, {0, 0}), SympVec(3, {1, 2}, {0, 0})),
                 std::invalid_argument);
    // Wrong phase count.
    EXPECT_THROW(StabilizerCode(FieldMatrix(3, {{0, 0, 1, 1}}), SympVec(3, {1, 2}, {0, 0}),
                                SympVec(3, {0, 0}, {0, 1}), {0, 1}),
                 std::invalid_argument);
    EXPECT_FALSE(stabilizer_code_violations(FieldMatrix(3, {{1, 0, 0, 0}, {0, 0, 1, 0}}), SympVec(3, {0, 1}, {0, 0}),
                                            SympVec(3, {0, 0}, {0, 1}))
                     .empty());
}

TEST(StabilizerCode, css_construction_preconditions) {
    // Even length.
    EXPECT_THROW(css_from_self_orthogonal(ClassicalCode(FieldMatrix(3, {{1, 1, 1, 0}}))), std::invalid_argument);
    // Not self-orthogonal.
    EXPECT_THROW(css_from_self_orthogonal(ClassicalCode(FieldMatrix(3, {{1, 1, 0}}))), std::invalid_argument);
    StabilizerCode c = css_from_self_orthogonal(golay_ternary());
    EXPECT_EQ(c.logical_x.flat(), golay_qutrit_code().logical_x.flat());
}
