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

// Qutrit state-injection circuits and two-to-one stabilizer reductions, simulated with dense vectors.

#ifndef MSD_INJECT_LAB_H
#define MSD_INJECT_LAB_H

#include <cstdint>
#include <optional>
#include <vector>

#include "msd/clifford_dense.h"

namespace msd {

/// (|0> + e^{i theta1}|1> + e^{i theta2}|2>) / sqrt 3.
struct EquatorialState {
    double theta1 = 0.0;
    double theta2 = 0.0;
    DenseKet ket() const;
};

/// diag(1, e^{i theta1}, e^{i theta2}).
DenseOperator uz_diagonal(double theta1, double theta2);

struct InjectionOutcome {
    int m = 0;
    double probability = 0.0;
    DenseKet post_state;   // Normalized state of qudit 1 after measuring qudit 2.
    bool success = false;  // A correction from the available gate set yields U_Z|psi>.
};

/// |U_Z>|psi>, controlled-X^2 from qudit 1 onto qudit 2, then a Z measurement of qudit 2.
/// The outcome-m post-state is U_Z X^{-m}|psi>. Throws std::invalid_argument for a non-diagonal or
/// non-unitary uz.
std::vector<InjectionOutcome> inject_uz(const DenseOperator &uz, const DenseKet &psi);

/// U_Z X^m U_Z^dagger applied to the post-state: U_Z|psi> whenever U_Z is third-level.
DenseKet third_level_correction(const DenseOperator &uz, const InjectionOutcome &outcome);
/// The Pauli-only correction X^m: gives X^m U_Z X^{-m}|psi>.
DenseKet pauli_correction(const InjectionOutcome &outcome);

/// U_Z X U_Z^dagger is Clifford.
bool is_third_level(const DenseOperator &uz);

/// |<a|b>|^2 for normalized kets.
double fidelity(const DenseKet &a, const DenseKet &b);

struct Reduction {
    DenseKet state;  // Decoded logical state, normalized.
    double probability = 0.0;
};

/// Projects |a>|b> onto the two-qutrit code of the single stabilizer `stabilizer` and decodes with the
/// logical operators. The logical |0> is the +1 eigenvector of zbar inside the codespace; |k> = xbar^k |0>.
Reduction reduce_pair(const DenseKet &a, const DenseKet &b, const DenseOperator &stabilizer, const DenseOperator &xbar,
                      const DenseOperator &zbar);

/// |N>|N> with stabilizer omega X1 X2, logical X = X2 and Z = Z1^2 Z2.
Reduction reduce_norell_pair();
/// psi psi with stabilizer Z1 Z2, logical Z = Z2 and X = X1^2 X2. psi must be supported on {|1>, |2>}.
Reduction reduce_strange_pair(const DenseKet &psi);

/// A single-qutrit Clifford C with C|from> = |to> up to phase.
std::optional<DenseOperator> find_clifford_mapping(const DenseKet &from, const DenseKet &to);

/// Order of the group generated by X^m U X^{-m} (m = 0..d-1), or nullopt if it exceeds `cap`.
std::optional<size_t> conjugate_group_order(const DenseOperator &u, size_t cap = 10000);

struct RandomWalkReport {
    size_t trials = 0;
    double mean_steps = 0.0;
    int max_steps = 0;
    size_t unfinished = 0;
};
/// Repeats injection with uniformly random outcomes, accumulating X^m U X^{-m} until the total equals U.
RandomWalkReport injection_random_walk(const DenseOperator &u, size_t trials, uint64_t seed, int step_cap = 10000);

}  // namespace msd

#endif
