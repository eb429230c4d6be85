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

#ifndef MSD_CODE_FORGE_H
#define MSD_CODE_FORGE_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "msd/finite_field.h"

namespace msd {

/// Linear classical code given by a full-row-rank generator matrix.
class ClassicalCode {
   public:
    /// Throws std::invalid_argument if `generator` is not of full row rank.
    explicit ClassicalCode(FieldMatrix generator);

    const FieldMatrix &generator() const { return generator_; }
    size_t length() const { return generator_.cols(); }
    size_t dimension() const { return generator_.rows(); }
    int modulus() const { return generator_.modulus(); }

    /// Every codeword of the span, in the order of the base-d counter over generator coefficients.
    std::vector<std::vector<int>> codewords() const;
    /// Histogram weight -> count over all codewords.
    std::map<size_t, uint64_t> weight_distribution() const;
    /// Smallest weight of a nonzero codeword (0 for the empty code).
    size_t minimum_weight() const;

   private:
    FieldMatrix generator_;
};

/// Stabilizer code on n qudits encoding one logical qudit.
///
/// Each stabilizer generator is omega^{phase} D_{row}, where D is the Weyl-ordered displacement
/// operator. The logical operators are the phase-free displacements D_{logical_x}, D_{logical_z};
/// <logical_x, logical_z> = 1 gives them the algebra of a single-qudit X and Z.
struct StabilizerCode {
    size_t n = 0;
    int modulus = 3;
    FieldMatrix stabilizers;  // (n - 1) x 2n symplectic rows (u | v).
    std::vector<int> phases;  // One exponent of omega per stabilizer row.
    SympVec logical_x;
    SympVec logical_z;

    StabilizerCode() = default;
    /// Validates every invariant below, throwing std::invalid_argument naming the failed check.
    StabilizerCode(FieldMatrix stabilizer_rows, SympVec lx, SympVec lz, std::vector<int> row_phases = {});

    SympVec stabilizer(size_t row) const;
    size_t num_stabilizers() const { return stabilizers.rows(); }
};

/// Human-readable reasons a candidate code fails the StabilizerCode invariants (empty when valid).
std::vector<std::string> stabilizer_code_violations(const FieldMatrix &stabilizers, const SympVec &lx,
                                                    const SympVec &lz);

/// G * G^T == 0 over Z_d.
bool is_self_orthogonal(const ClassicalCode &code);

/// CSS code (Mc | 0 ; 0 | Mc) with logical X = X^{(x)n} and logical Z = (Z^{(x)n})^dagger.
///
/// Requires a self-orthogonal generator of odd length whose rows are orthogonal to (1, ..., 1) and whose
/// dimension is (n - 1) / 2. Throws std::invalid_argument naming the failed check.
StabilizerCode css_from_self_orthogonal(const ClassicalCode &mc);

/// Generator of the dual of the ternary Golay code: the [11, 5, 6]_3 self-orthogonal code.
ClassicalCode golay_ternary();

/// Generator of the [23, 11, 8]_2 doubly-even self-orthogonal code (the even subcode of the binary Golay code).
ClassicalCode golay_binary();

/// The 11-qutrit Golay code built from `golay_ternary()`.
StabilizerCode golay_qutrit_code();

/// Applies the single-qudit SL(2, Z_d) matrix `f` to every (u_i, v_i) pair of every row.
FieldMatrix apply_local_symplectic(const FieldMatrix &rows, const FieldMatrix &f);

/// Hadamard-like (0 -1; 1 0) and N-like (-1 0; -1 -1) single-qudit symplectic matrices.
FieldMatrix hadamard_symplectic(int modulus);
FieldMatrix norell_symplectic(int modulus);

/// True iff the stabilizer row span is invariant under the transversal H and N symplectic maps.
bool transversal_invariance_check(const StabilizerCode &code);

/// True iff some nonzero vector of weight <= max_weight commutes with every stabilizer but lies outside
/// the stabilizer span (i.e. a nontrivial logical operator of that weight exists).
bool has_logical_of_weight_at_most(const StabilizerCode &code, size_t max_weight);

}  // namespace msd

#endif
