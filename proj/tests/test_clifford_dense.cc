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

#include "msd/clifford_dense.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace msd;

namespace {

constexpr int kD = 3;

int mod3(int x) { return ((x % 3) + 3) % 3; }

// Every element of SL(2, Z_3).
std::vector<FieldMatrix> sl2_3() {
    std::vector<FieldMatrix> out;
    for (int a = 0; a < 3; a++)
        for (int b = 0; b < 3; b++)
            for (int c = 0; c < 3; c++)
                for (int d = 0; d < 3; d++)
                    if (mod3(a * d - b * c) == 1) out.push_back(FieldMatrix(3, {{a, b}, {c, d}}));
    return out;
}

bool near(const DenseOperator &a, const DenseOperator &b, double tol = 1e-10) { return (a - b).norm() < tol; }

}  // namespace

TEST(Displacement, examples) {
    EXPECT_TRUE(near(displacement(0, 0, kD), DenseOperator::Identity(3, 3)));
    EXPECT_TRUE(near(displacement(1, 0, kD), shift_x(kD)));
    EXPECT_TRUE(near(displacement(0, 1, kD), clock_z(kD)));
    // 2^{-1} = 2 mod 3, so D_(1|1) = omega^2 X Z.
    EXPECT_TRUE(near(displacement(1, 1, kD), omega(kD, 2) * shift_x(kD) * clock_z(kD)));
    EXPECT_THROW(displacement(1, 0, 2), std::invalid_argument);
    DenseKet e0 = DenseKet::Zero(3);
    e0(0) = 1;
    EXPECT_NEAR(std::abs((shift_x(kD) * e0)(1)), 1.0, 1e-12);
}

TEST(Displacement, composition_law) {
    // D_a D_b = omega^{2^{-1}(a_v b_u - a_u b_v)} D_{a+b}.
    for (int au = 0; au < 3; au++)
        for (int av = 0; av < 3; av++)
            for (int bu = 0; bu < 3; bu++)
                for (int bv = 0; bv < 3; bv++) {
                    int phase = mod3(2 * (av * bu - au * bv));
                    DenseOperator lhs = displacement(au, av, kD) * displacement(bu, bv, kD);
                    DenseOperator rhs = omega(kD, phase) * displacement(mod3(au + bu), mod3(av + bv), kD);
                    EXPECT_TRUE(near(lhs, rhs)) << au << av << bu << bv;
                }
}

TEST(Displacement, commuting_pairs_compose_without_phase) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> digit(0, 2);
    int checked = 0;
    while (checked < 50) {
        SympVec a(3, {digit(rng), digit(rng)}, {digit(rng), digit(rng)});
        SympVec b(3, {digit(rng), digit(rng)}, {digit(rng), digit(rng)});
        if (symplectic_product(a, b).value() != 0) continue;
        EXPECT_TRUE(near(displacement(a) * displacement(b), displacement(a + b)));
        checked++;
    }
}

TEST(Symplectic, covariance_for_all_of_sl2) {
    auto group = sl2_3();
    ASSERT_EQ(group.size(), 24u);
    for (const auto &f : group) {
        DenseOperator v = symplectic_unitary(f);
        EXPECT_TRUE(near(v * v.adjoint(), DenseOperator::Identity(3, 3)));
        for (int u = 0; u < 3; u++)
            for (int w = 0; w < 3; w++) {
                int fu = mod3(f(0, 0) * u + f(0, 1) * w);
                int fw = mod3(f(1, 0) * u + f(1, 1) * w);
                EXPECT_TRUE(near(v * displacement(u, w, kD) * v.adjoint(), displacement(fu, fw, kD)))
                    << "F=" << f.to_text() << " u=" << u << " v=" << w;
            }
    }
    EXPECT_THROW(symplectic_unitary(FieldMatrix(3, {{1, 0}, {0, 2}})), std::invalid_argument);
}

TEST(PhasePoint, properties) {
    for (int u = 0; u < 3; u++)
        for (int v = 0; v < 3; v++) {
            DenseOperator a = phase_point(u, v, kD);
            EXPECT_NEAR(a.trace().real(), 1.0, 1e-12);
            EXPECT_TRUE(near(a, a.adjoint()));
            Eigen::SelfAdjointEigenSolver<DenseOperator> es(a);
            auto ev = es.eigenvalues();
            EXPECT_NEAR(ev(0), -1.0, 1e-12);
            EXPECT_NEAR(ev(1), 1.0, 1e-12);
            EXPECT_NEAR(ev(2), 1.0, 1e-12);
            for (int u2 = 0; u2 < 3; u2++)
                for (int v2 = 0; v2 < 3; v2++) {
                    double tr = (a * phase_point(u2, v2, kD)).trace().real();
                    EXPECT_NEAR(tr, (u == u2 && v == v2) ? 3.0 : 0.0, 1e-12);
                }
        }
}

TEST(Wigner, magic_state_examples) {
    MagicStates ms = magic_states();
    WignerGrid ws = wigner_of(projector(ms.strange));
    EXPECT_NEAR(ws(0, 0), -1.0 / 3.0, 1e-12);
    for (int k = 1; k < 9; k++) EXPECT_NEAR(ws.values[static_cast<size_t>(k)], 1.0 / 6.0, 1e-12);
    WignerGrid wz = wigner_of(projector(ms.zero));
    for (int v = 0; v < 3; v++) {
        EXPECT_NEAR(wz(0, v), 1.0 / 3.0, 1e-12);
        EXPECT_NEAR(wz(1, v), 0.0, 1e-12);
    }
    WignerGrid mixed = wigner_of(DenseOperator::Identity(3, 3) / 3.0);
    for (double x : mixed.values) EXPECT_NEAR(x, 1.0 / 9.0, 1e-12);
}

TEST(Wigner, reconstruction_and_normalization) {
    for (uint64_t seed = 1; seed <= 20; seed++) {
        DenseOperator rho = random_density_matrix(3, seed);
        ASSERT_TRUE(is_density_matrix(rho));
        WignerGrid w = wigner_of(rho);
        EXPECT_NEAR(w.sum(), 1.0, 1e-12);
        EXPECT_TRUE(near(state_from_wigner(w), rho));
    }
}

TEST(Wigner, clifford_covariance) {
    DenseOperator rho = random_density_matrix(3, 42);
    WignerGrid w = wigner_of(rho);
    for (const auto &f : sl2_3()) {
        DenseOperator v = symplectic_unitary(f);
        WignerGrid wf = wigner_of(v * rho * v.adjoint());
        for (int u = 0; u < 3; u++)
            for (int x = 0; x < 3; x++) {
                int fu = mod3(f(0, 0) * u + f(0, 1) * x);
                int fx = mod3(f(1, 0) * u + f(1, 1) * x);
                EXPECT_NEAR(wf(fu, fx), w(u, x), 1e-12);
            }
    }
}

TEST(MagicStates, eigen_relations) {
    MagicStates ms = magic_states();
    DenseOperator h = hadamard_gate();
    DenseOperator n = norell_gate();
    DenseOperator hp = h_prime_gate();
    EXPECT_NEAR(std::abs(ms.strange.dot(h * ms.strange)), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(ms.norell.dot(n * ms.norell)), 1.0, 1e-12);
    EXPECT_NEAR((ms.h_plus.adjoint() * h * ms.h_plus)(0).real(), 1.0, 1e-12);
    EXPECT_NEAR((ms.h_minus.adjoint() * h * ms.h_minus)(0).real(), -1.0, 1e-12);
    EXPECT_NEAR(std::abs(ms.strange.dot(hp * ms.strange)), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(ms.h_minus.dot(hp * ms.h_plus)), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(ms.h_plus.dot(hp * ms.h_minus)), 1.0, 1e-12);
}

TEST(Twirl, examples_and_idempotence) {
    MagicStates ms = magic_states();
    StrangeTwirl pure = twirl_strange(projector(ms.strange));
    EXPECT_NEAR(pure.delta, 0.0, 1e-12);
    StrangeTwirl mixed = twirl_strange(DenseOperator::Identity(3, 3) / 3.0);
    EXPECT_NEAR(mixed.delta, 1.0, 1e-12);
    for (uint64_t seed = 1; seed <= 10; seed++) {
        DenseOperator rho = random_density_matrix(3, seed);
        StrangeTwirl t = twirl_strange(rho);
        EXPECT_TRUE(near(t.rho, noisy_strange(t.delta)));
        StrangeTwirl again = twirl_strange(t.rho);
        EXPECT_NEAR(again.delta, t.delta, 1e-12);
        EXPECT_TRUE(near(again.rho, t.rho));
        // delta = 3/2 (1 - <S|rho|S>).
        double eps = 1.0 - ms.strange.dot(rho * ms.strange).real();
        EXPECT_NEAR(t.delta, 1.5 * eps, 1e-12);

        NorellTwirl nt = twirl_norell(rho);
        EXPECT_TRUE(near(nt.rho, noisy_norell(nt.eps0, nt.eps_s)));
        NorellTwirl nagain = twirl_norell(nt.rho);
        EXPECT_NEAR(nagain.eps0, nt.eps0, 1e-12);
        EXPECT_NEAR(nagain.eps_s, nt.eps_s, 1e-12);
    }
}

TEST(Clifford, group_has_216_elements) {
    auto group = single_qutrit_cliffords();
    EXPECT_EQ(group.size(), 216u);
    for (size_t k = 0; k < group.size(); k += 17) EXPECT_TRUE(is_clifford(group[k]));
    DenseOperator t = DenseOperator::Identity(3, 3);
    t(1, 1) = std::polar(1.0, 2 * M_PI / 9);
    t(2, 2) = std::polar(1.0, 4 * M_PI / 9);
    EXPECT_FALSE(is_clifford(t));
}

TEST(Oracle, two_qutrit_examples) {
    MagicStates ms = magic_states();
    // Z1 Z2 with strange input reduces to |N> with probability 1/2.
    StabilizerCode zz(FieldMatrix(3, {{0, 0, 1, 1}}), SympVec(3, {2, 1}, {0, 0}), SympVec(3, {0, 0}, {0, 1}));
    auto r = dense_distill_oracle(zz, projector(ms.strange));
    EXPECT_NEAR(r.success, 0.5, 1e-12);
    WignerGrid wn = wigner_of(projector(ms.norell));
    for (size_t k = 0; k < 9; k++) EXPECT_NEAR(r.w_out.values[k], wn.values[k], 1e-12);

    // omega X1 X2 with Norell input succeeds with probability 1/4.
    StabilizerCode xx(FieldMatrix(3, {{1, 1, 0, 0}}), SympVec(3, {0, 1}, {0, 0}), SympVec(3, {0, 0}, {2, 1}), {1});
    EXPECT_NEAR(dense_distill_oracle(xx, projector(ms.norell)).success, 0.25, 1e-12);
}

TEST(Oracle, maximally_mixed_input) {
    StabilizerCode zz(FieldMatrix(3, {{0, 0, 1, 1}}), SympVec(3, {2, 1}, {0, 0}), SympVec(3, {0, 0}, {0, 1}));
    auto r = dense_distill_oracle(zz, DenseOperator::Identity(3, 3) / 3.0);
    EXPECT_NEAR(r.success, 1.0 / 3.0, 1e-12);
    for (double x : r.w_out.values) EXPECT_NEAR(x, 1.0 / 9.0, 1e-12);
    EXPECT_THROW(DenseDistillOracle{golay_qutrit_code()}, std::invalid_argument);
}
