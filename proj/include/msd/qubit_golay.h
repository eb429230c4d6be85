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

// Qubit T-state distillation curves by summing Pauli expectations over the whole stabilizer group.
// The single-qubit Bloch length (1 - delta)/sqrt(3) is carried as a rational polynomial in delta with the
// power of sqrt(3) tracked separately, so every assembled quantity is exact.

#ifndef MSD_QUBIT_GOLAY_H
#define MSD_QUBIT_GOLAY_H

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "msd/exact_poly.h"
#include "msd/finite_field.h"

namespace msd {

/// i^phase X^x Z^z on up to 64 qubits (bit k is qubit k).
struct PauliString {
    size_t n = 0;
    uint64_t x = 0;
    uint64_t z = 0;
    int phase = 0;  // Exponent of i, in [0, 4).

    /// Letters I, X, Y, Z with an optional leading sign "+", "-", "i", "-i". Y is read as i X Z.
    static PauliString parse(const std::string &text);

    PauliString operator*(const PauliString &other) const;
    bool operator==(const PauliString &other) const = default;
    bool commutes_with(const PauliString &other) const;
    bool is_hermitian() const;
    size_t weight() const;
    std::string to_string() const;
};

/// Qubit stabilizer code with one logical qubit.
struct QubitCode {
    size_t n = 0;
    std::vector<PauliString> stabilizers;
    PauliString logical_x;
    PauliString logical_z;
};

/// CSS code with X-type and Z-type rows from the same binary self-orthogonal generator, X-bar = X^n, Z-bar = Z^n.
QubitCode css_qubit_code(const FieldMatrix &binary_generator);
/// The 23-qubit Golay code from golay_binary().
QubitCode golay23_qubit_code();
/// The [[5,1,3]] code with cyclic generators XZZXI and logicals XXXXX, ZZZZZ.
QubitCode five_qubit_code();

/// p * 3^{half_power / 2}.
struct SqrtThreeScaled {
    MultiPoly poly;
    int half_power = 0;
};

/// Single-qubit expectations of (1 - delta)|T><T| + delta/2 keyed by 'I', 'X', 'Y', 'Z'.
std::map<char, SqrtThreeScaled> t_state_single_qubit_expectations();

/// Signed weight enumerators of the group elements times I, X-bar, Y-bar, Z-bar.
/// counts[l][w][0] counts +1 expectation signs at Pauli weight w, counts[l][w][1] counts -1.
struct SignedWeightTables {
    size_t n = 0;
    std::array<std::vector<std::array<uint64_t, 2>>, 4> counts;
};

/// Y-bar = i X-bar Z-bar when n is odd, so it is Hermitian.
PauliString logical_y(const QubitCode &code);

/// Gray-code walk over all 2^m group elements; partitions split by the top generator bits.
SignedWeightTables signed_weight_tables(const QubitCode &code, int workers = 1);

/// Group sums Tr(rho^n g L) for L in {I, X-bar, Y-bar, Z-bar}, as polynomials in delta.
/// identity holds the sum itself; x, y, z hold sqrt(3) times the sum. Throws std::logic_error if a
/// sqrt(3) power of the wrong parity appears.
struct TExpectationSums {
    MultiPoly identity;
    std::array<MultiPoly, 3> logical;  // X, Y, Z.
};
TExpectationSums sums_from_tables(const SignedWeightTables &tables);
/// Per-element accumulation without grouping. Exponential in n; for cross-checks.
TExpectationSums t_expectation_sums_direct(const QubitCode &code);

struct TCurve {
    RationalFn delta_out;
    MultiPoly success;                  // Tr(rho^n Pi).
    std::array<int, 3> orientation{};   // Sign applied to the X, Y, Z components.
    std::array<RationalFn, 3> bloch;    // sqrt(3) <L-bar> / success for L = X, Y, Z, before orientation.
    bool components_agree = false;      // The oriented components are equal rational functions.
};

/// Projects, orients each logical Bloch component by its sign at delta = 0, and reads
/// delta_out = 1 - sqrt(3) * (oriented average).
TCurve distill_t(const QubitCode &code, int workers = 1);
TCurve assemble_t_curve(const TExpectationSums &sums, size_t num_generators);
TCurve distill_t_golay23(int workers = 1);
TCurve distill_t_5qubit();

/// Smallest fixed point in (0, 1/2).
FixedPoint t_threshold(const TCurve &curve);

/// Dense-matrix reference: normalized <L-bar> for L in {'X', 'Y', 'Z'} and the success probability.
struct DenseTResult {
    std::array<double, 3> bloch{};
    double success = 0.0;
};
DenseTResult dense_t_oracle(const QubitCode &code, double delta);

}  // namespace msd

#endif
