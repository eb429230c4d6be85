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

#include "msd/phase_distill.h"

#include <gtest/gtest.h>

#include <cmath>

#include "msd/fixtures.h"

using namespace msd;

namespace {

StabilizerCode zz_code() {
    return StabilizerCode(FieldMatrix(3, {{0, 0, 1, 1}}), SympVec(3, {2, 1}, {0, 0}), SympVec(3, {0, 0}, {0, 1}));
}

StabilizerCode xx_code() {
    return StabilizerCode(FieldMatrix(3, {{1, 1, 0, 0}}), SympVec(3, {0, 1}, {0, 0}), SympVec(3, {0, 0}, {2, 1}), {1});
}

// Cyclic shifts of X Z Z^-1 X^-1 I.
StabilizerCode cyclic5_code() {
    std::vector<int> u = {1, 0, 0, 2, 0}, v = {0, 1, 2, 0, 0};
    std::vector<std::vector<int>> rows;
    for (int s = 0; s < 4; s++) {
        std::vector<int> row(10);
        for (int i = 0; i < 5; i++) {
            row[static_cast<size_t>((i + s) % 5)] = u[static_cast<size_t>(i)];
            row[static_cast<size_t>(5 + (i + s) % 5)] = v[static_cast<size_t>(i)];
        }
        rows.push_back(row);
    }
    return StabilizerCode(FieldMatrix(3, rows), SympVec(3, {1, 1, 1, 1, 1}, {0, 0, 0, 0, 0}),
                          SympVec(3, {0, 0, 0, 0, 0}, {2, 2, 2, 2, 2}));
}

StabilizerCode trivial_code() {
    return StabilizerCode(FieldMatrix(0, 2, 3), SympVec(3, {1}, {0}), SympVec(3, {0}, {1}));
}

}  // namespace

TEST(InputGrid, strange_family) {
    SymbolicWigner w = input_wigner_strange();
    EXPECT_EQ(w.sum(), MultiPoly::constant({"delta"}, 1));
    std::vector<BigRational> pt = {BigRational(3, 4)};
    for (const auto &cell : w.grid) EXPECT_GE(cell.eval(pt), 0);
    std::vector<BigRational> zero = {BigRational(0)};
    EXPECT_EQ(w.at(0, 0).eval(zero), BigRational(-1, 3));
    EXPECT_EQ(w.at(1, 2).eval(zero), BigRational(1, 6));
}

TEST(InputGrid, norell_family_matches_dense) {
    SymbolicWigner w = input_wigner_norell();
    EXPECT_EQ(w.sum(), MultiPoly::constant({"eps0", "epsS"}, 1));
    WignerGrid dense = wigner_of(noisy_norell(0.1, 0.25));
    std::vector<BigRational> pt = {BigRational(1, 10), BigRational(1, 4)};
    for (int u = 0; u < 3; u++)
        for (int v = 0; v < 3; v++) EXPECT_NEAR(w.at(u, v).eval(pt).get_d(), dense(u, v), 1e-12);
}

TEST(Distill, golay_strange_matches_fixture) {
    CurveFixtures fx = CurveFixtures::load_default();
    const DistillationResult &r = golay_strange_result();
    EXPECT_TRUE(verify_strange(r, fx).empty());
    EXPECT_LE(r.success.total_degree(), 11);
    for (const auto &cell : r.w_out.grid) EXPECT_LE(cell.total_degree(), 11);
}

TEST(Distill, golay_norell_matches_fixture) {
    CurveFixtures fx = CurveFixtures::load_default();
    EXPECT_TRUE(verify_norell(golay_norell_result(), fx).empty());
}

TEST(Distill, success_probability_series) {
    const DistillationResult &r = golay_strange_result();
    EXPECT_EQ(r.success.coefficient({0}), BigRational(1, 1728));
    EXPECT_EQ(r.success.coefficient({1}), BigRational(-11, 2592));
    EXPECT_EQ(r.success.coefficient({2}), BigRational(55, 3888));
}

TEST(Distill, strange_output_is_symmetric) {
    const DistillationResult &r = golay_strange_result();
    for (int k = 2; k < 9; k++) EXPECT_EQ(r.w_out.grid[static_cast<size_t>(k)], r.w_out.grid[1]);
}

TEST(Distill, output_vanishes_to_second_order) {
    MultiPoly s = series_truncate(golay_strange_result().noise_map[0], 2);
    EXPECT_TRUE(s.is_zero());
    EXPECT_FALSE(series_truncate(golay_strange_result().noise_map[0], 3).is_zero());
}

TEST(Distill, agrees_with_dense_oracle_on_random_states) {
    for (const auto &code : {zz_code(), xx_code(), cyclic5_code()}) {
        DenseDistillOracle oracle(code);
        for (uint64_t seed = 1; seed <= 20; seed++) {
            DenseOperator rho = random_density_matrix(3, seed);
            DistillationResult r = distill(code, input_wigner_constant(rho));
            auto dense = oracle.run(rho);
            double succ = r.success.constant_term().get_d();
            EXPECT_NEAR(succ, dense.success, 1e-10) << "n=" << code.n << " seed=" << seed;
            for (int u = 0; u < 3; u++)
                for (int v = 0; v < 3; v++)
                    EXPECT_NEAR(r.w_out.at(u, v).constant_term().get_d() / succ, dense.w_out(u, v), 1e-10);
        }
    }
}

TEST(Distill, shape_fit_error_carries_grid) {
    SymbolicWigner broken = input_wigner_strange();
    broken.at(0, 1) = broken.at(0, 1) + MultiPoly::variable({"delta"}, "delta");
    broken.at(0, 2) = broken.at(0, 2) - MultiPoly::variable({"delta"}, "delta");
    try {
        distill(golay_qutrit_code(), broken);
        FAIL() << "expected ShapeFitError";
    } catch (const ShapeFitError &e) {
        EXPECT_EQ(e.grid().grid.size(), 9u);
    }
}

TEST(Distill, worker_count_does_not_change_result) {
    SymbolicWigner w = input_wigner_constant(random_density_matrix(3, 99));
    DistillationResult one = distill(cyclic5_code(), w, 1);
    DistillationResult three = distill(cyclic5_code(), w, 3);
    EXPECT_EQ(one.success, three.success);
    for (size_t k = 0; k < 9; k++) EXPECT_EQ(one.w_out.grid[k], three.w_out.grid[k]);
}

TEST(Distill, phase_shift_vector_solves_constraints) {
    StabilizerCode c = xx_code();
    SympVec t = phase_shift_vector(c);
    EXPECT_EQ(symplectic_product(t, c.stabilizer(0)).value(), 2);
    EXPECT_EQ(symplectic_product(t, c.logical_x).value(), 0);
    EXPECT_EQ(symplectic_product(t, c.logical_z).value(), 0);
}

TEST(Threshold, strange_value) {
    FixedPoint fp = threshold_strange();
    EXPECT_NEAR(fp.value, 0.387154346471796, 1e-11);
}

TEST(Basin, corners_and_centroid) {
    EXPECT_EQ(norell_iterate(0, 0).cls, BasinClass::kNorell);
    EXPECT_EQ(norell_iterate(BigRational(1, 10), BigRational(1, 10)).cls, BasinClass::kNorell);
    EXPECT_EQ(norell_iterate(0, 1).cls, BasinClass::kStrange);
    EXPECT_EQ(norell_iterate(1, 0).cls, BasinClass::kZero);
    EXPECT_EQ(norell_iterate(BigRational(1, 3), BigRational(1, 3)).cls, BasinClass::kMixed);
    EXPECT_THROW(norell_iterate(BigRational(3, 4), BigRational(1, 2)), std::invalid_argument);
    EXPECT_EQ(basin_class_name(BasinClass::kSingular), "singular");
}

TEST(Basin, double_and_wide_iteration_agree_away_from_boundaries) {
    NorellMap map(golay_norell_result().noise_map);
    for (auto [a, b] : {std::pair{0.05, 0.2}, {0.6, 0.1}, {0.1, 0.7}}) {
        Trajectory d = norell_iterate(map, a, b);
        Trajectory w = norell_iterate_wide(map, rational_from_double(a), rational_from_double(b));
        EXPECT_EQ(d.cls, w.cls);
    }
}

TEST(Basin, small_raster) {
    BasinRaster r = basin_raster(4);
    EXPECT_EQ(r.cells.size(), 15u);
    size_t total = 0;
    for (auto c : {BasinClass::kNorell, BasinClass::kStrange, BasinClass::kZero, BasinClass::kMixed,
                   BasinClass::kSingular})
        total += r.count(c);
    EXPECT_EQ(total, 15u);
    EXPECT_EQ(r.to_csv().substr(0, 15), "eps0,epsS,class");
    BasinRaster r2 = basin_raster(4, 2);
    for (size_t k = 0; k < r.cells.size(); k++) EXPECT_EQ(r.cells[k].cls, r2.cells[k].cls);
}

TEST(Basin, resolution_200_regression) {
    BasinRaster r = basin_raster(200);
    EXPECT_EQ(r.cells.size(), 20301u);
    EXPECT_EQ(r.count(BasinClass::kNorell), 1232u);
    EXPECT_EQ(r.count(BasinClass::kStrange), 1217u);
    EXPECT_EQ(r.count(BasinClass::kZero), 3707u);
    EXPECT_EQ(r.count(BasinClass::kMixed), 14145u);
    EXPECT_EQ(r.count(BasinClass::kSingular), 0u);
}

TEST(Basin, depolarizing_threshold) {
    DepolarizingThreshold t = norell_depolarizing_threshold();
    EXPECT_NEAR(t.value, 0.386118209, 1e-8);
    EXPECT_LE(t.lo, t.hi);
}

TEST(Yield, golay_and_five_qubit) {
    YieldReport y = yield_report();
    EXPECT_EQ(y.qutrit_cost, BigRational(19008));
    EXPECT_NEAR(y.xi, 0.1115, 5e-4);
    EXPECT_NEAR(yield_parameter(5, BigRational(1, 6), 2), 0.2038, 5e-4);
}

TEST(Weight1, orthogonality_check) {
    EXPECT_TRUE(weight1_orthogonality_check(golay_qutrit_code()));
    EXPECT_FALSE(weight1_orthogonality_check(trivial_code()));
}
