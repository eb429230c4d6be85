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

// Explicit complex-matrix qudit operators for small systems. Everything here is double precision
// and serves as a cross-check for the exact phase-space engine.

#ifndef MSD_CLIFFORD_DENSE_H
#define MSD_CLIFFORD_DENSE_H

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "msd/code_forge.h"
#include "msd/finite_field.h"

namespace msd {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;
using DenseKet = Eigen::VectorXcd;

constexpr double kDenseTolerance = 1e-12;

/// exp(2 pi i k / d).
Complex omega(int d, int64_t k = 1);

DenseOperator shift_x(int d);
DenseOperator clock_z(int d);

/// D_{(u|v)} = omega^{2^{-1} u v} X^u Z^v. Throws for d = 2.
DenseOperator displacement(int u, int v, int d);
/// Tensor product of single-qudit displacements.
DenseOperator displacement(const SympVec &p);

DenseOperator kron(const DenseOperator &a, const DenseOperator &b);
DenseOperator kron_power(const DenseOperator &a, size_t n);
DenseKet kron(const DenseKet &a, const DenseKet &b);

/// Symplectic rotation V_F for F in SL(2, Z_d). Throws if det F != 1 or d = 2.
DenseOperator symplectic_unitary(const FieldMatrix &f);

/// Phase-point operator A_{(u,v)} = D A_0 D^dagger with A_0 = (1/d) sum_{u,v} D_{(u|v)}.
DenseOperator phase_point(int u, int v, int d);

/// d x d real grid indexed (u, v).
struct WignerGrid {
    int d = 3;
    std::vector<double> values;

    WignerGrid() = default;
    explicit WignerGrid(int dim) : d(dim), values(static_cast<size_t>(dim * dim), 0.0) {}
    double &operator()(int u, int v) { return values[static_cast<size_t>(u * d + v)]; }
    double operator()(int u, int v) const { return values[static_cast<size_t>(u * d + v)]; }
    double sum() const;
};

/// W(u, v) = Tr(rho A_{(u,v)}) / d for a single-qudit density matrix.
WignerGrid wigner_of(const DenseOperator &rho);
/// Inverse transform rho = sum W(u, v) A_{(u,v)}.
DenseOperator state_from_wigner(const WignerGrid &w);

DenseOperator projector(const DenseKet &ket);

/// Hermitian, unit trace, and positive semidefinite within `tol`.
bool is_density_matrix(const DenseOperator &rho, double tol = 1e-9);

/// The single-qutrit states that appear in the distillation protocols.
struct MagicStates {
    DenseKet strange;  // (|1> - |2>) / sqrt 2
    DenseKet norell;   // (|1> + |2>) / sqrt 2
    DenseKet h_plus;   // Hadamard eigenvalue +1
    DenseKet h_minus;  // Hadamard eigenvalue -1
    DenseKet zero;
};
MagicStates magic_states();

/// Qutrit Hadamard V_{(0 -1; 1 0)}.
DenseOperator hadamard_gate();
/// Qutrit N = V_{(-1 0; -1 -1)}.
DenseOperator norell_gate();
/// V_{(1 1; 1 2)}: fixes |S> and swaps |H_{+1}> and |H_{-1}> up to phases.
DenseOperator h_prime_gate();

struct StrangeTwirl {
    DenseOperator rho;
    double delta = 0.0;
};
/// Averages over H^n (n = 0..3), then symmetrizes with H'. Output is (1 - delta)|S><S| + delta / 3.
StrangeTwirl twirl_strange(const DenseOperator &rho);

struct NorellTwirl {
    DenseOperator rho;
    double eps0 = 0.0;
    double eps_s = 0.0;
};
/// Averages over N^n (n = 0..5). Output is (1 - eps0 - epsS)|N><N| + eps0|0><0| + epsS|S><S|.
NorellTwirl twirl_norell(const DenseOperator &rho);

/// Noisy input families.
DenseOperator noisy_strange(double delta);
DenseOperator noisy_norell(double eps0, double eps_s);

/// U / (phase of its first entry with modulus above 1e-9).
DenseOperator canonical_phase(const DenseOperator &u);
bool equal_up_to_phase(const DenseOperator &a, const DenseOperator &b, double tol = 1e-9);

/// U maps every displacement to a phase times a displacement under conjugation.
bool is_clifford(const DenseOperator &u);

/// Closure of <ZN, H> modulo global phase: the 216 single-qutrit Cliffords.
std::vector<DenseOperator> single_qutrit_cliffords();

/// Brute-force projection-and-decode for small codes (n <= 5).
///
/// Builds the codespace projector as the average over the full stabilizer group (matrix products of the
/// phased generators), and decodes through the logical phase-point operators assembled from D_{logical_x}
/// and D_{logical_z}.
class DenseDistillOracle {
   public:
    /// Throws std::invalid_argument("oracle limited to n <= 5") for larger codes.
    explicit DenseDistillOracle(const StabilizerCode &code);

    struct Result {
        WignerGrid w_out;  // Normalized.
        double success = 0.0;
    };
    Result run(const DenseOperator &rho_in) const;

    const DenseOperator &projector() const { return projector_; }
    /// Logical displacement D-bar_{(u|v)} = omega^{2^{-1} u v} Xbar^u Zbar^v.
    const DenseOperator &logical_displacement(int u, int v) const;

   private:
    StabilizerCode code_;
    DenseOperator projector_;
    std::vector<DenseOperator> logical_displacements_;
    std::vector<DenseOperator> logical_phase_points_;
};

DenseDistillOracle::Result dense_distill_oracle(const StabilizerCode &code, const DenseOperator &rho_in);

/// A random single-qudit density matrix (Ginibre ensemble) from a seeded generator.
DenseOperator random_density_matrix(int d, uint64_t seed);

}  // namespace msd

#endif
