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

#ifndef MSD_FINITE_FIELD_H
#define MSD_FINITE_FIELD_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace msd {

/// Returns true if `d` is a prime number.
bool is_prime(int d);

/// An element of the prime field Z_d, stored as the canonical residue in [0, d).
class FieldElem {
   public:
    FieldElem(int64_t value, int modulus);

    int value() const { return value_; }
    int modulus() const { return modulus_; }

    FieldElem operator+(FieldElem other) const;
    FieldElem operator-(FieldElem other) const;
    FieldElem operator*(FieldElem other) const;
    FieldElem operator-() const;
    bool operator==(const FieldElem &other) const = default;

    bool is_zero() const { return value_ == 0; }

   private:
    void check_same_field(FieldElem other) const;
    int value_;
    int modulus_;
};

/// Multiplicative inverse. Throws std::domain_error("no inverse") for zero.
FieldElem field_inv(FieldElem x);

/// Inverse of a raw residue modulo a prime.
int inv_mod(int value, int modulus);

/// Canonical residue of `value` modulo `modulus`.
inline int mod_residue(int64_t value, int modulus) {
    int64_t r = value % modulus;
    return static_cast<int>(r < 0 ? r + modulus : r);
}

/// Dense row-major matrix over Z_d.
class FieldMatrix {
   public:
    FieldMatrix() = default;
    FieldMatrix(size_t rows, size_t cols, int modulus);
    /// Entries are reduced mod `modulus`, so -1 may be written for d - 1.
    FieldMatrix(int modulus, const std::vector<std::vector<int>> &rows);

    static FieldMatrix identity(size_t n, int modulus);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    int modulus() const { return modulus_; }

    int operator()(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
    void set(size_t r, size_t c, int64_t value) { entries_[r * cols_ + c] = mod_residue(value, modulus_); }
    FieldElem at(size_t r, size_t c) const { return FieldElem((*this)(r, c), modulus_); }

    std::span<const int> row(size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    std::vector<int> row_vector(size_t r) const;

    FieldMatrix transpose() const;
    FieldMatrix operator*(const FieldMatrix &rhs) const;
    bool operator==(const FieldMatrix &other) const = default;

    bool is_zero() const;

    /// Stacks the rows of `other` below this matrix.
    FieldMatrix vstack(const FieldMatrix &other) const;

    /// Parses the text format: a header "d rows cols" followed by rows of residues.
    static FieldMatrix parse(std::istream &in);
    static FieldMatrix from_text(const std::string &text);
    static FieldMatrix load(const std::string &path);
    std::string to_text() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    int modulus_ = 2;
    std::vector<int> entries_;
};

/// Reduced row-echelon form with zero rows removed.
FieldMatrix row_reduce(const FieldMatrix &m);

size_t rank(const FieldMatrix &m);

/// True iff `v` lies in the row span of `m`.
bool in_row_span(const FieldMatrix &m, std::span<const int> v);

/// True iff both matrices generate the same row space.
bool same_row_span(const FieldMatrix &a, const FieldMatrix &b);

/// Solves `m * x = rhs` for some x (any solution). Returns false when inconsistent.
bool solve_linear(const FieldMatrix &m, std::span<const int> rhs, std::vector<int> &x);

/// A symplectic vector (u|v) describing the n-qudit displacement X^u Z^v up to phase.
struct SympVec {
    int modulus = 3;
    std::vector<int> u;
    std::vector<int> v;

    SympVec() = default;
    SympVec(int modulus, std::vector<int> u_part, std::vector<int> v_part);
    /// Builds from a flattened (u_1..u_n | v_1..v_n) row.
    static SympVec from_flat(int modulus, std::span<const int> flat);

    size_t n() const { return u.size(); }
    std::vector<int> flat() const;
    /// Number of qudits where (u_i, v_i) != (0, 0).
    size_t weight() const;
    SympVec operator+(const SympVec &other) const;
    SympVec scaled(int k) const;
    bool operator==(const SympVec &other) const = default;
};

/// <a,b> = a.u . b.v - a.v . b.u  (mod d).
FieldElem symplectic_product(const SympVec &a, const SympVec &b);

std::ostream &operator<<(std::ostream &out, const FieldElem &x);
std::ostream &operator<<(std::ostream &out, const FieldMatrix &m);

}  // namespace msd

#endif
