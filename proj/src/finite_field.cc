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

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace msd {

bool is_prime(int d) {
    if (d < 2) {
        return false;
    }
    for (int k = 2; k * k <= d; k++) {
        if (d % k == 0) {
            return false;
        }
    }
    return true;
}

static void require_prime(int modulus) {
    if (!is_prime(modulus)) {
        throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not prime");
    }
}

FieldElem::FieldElem(int64_t value, int modulus) : value_(0), modulus_(modulus) {
    require_prime(modulus);
    value_ = mod_residue(value, modulus);
}

void FieldElem::check_same_field(FieldElem other) const {
    if (other.modulus_ != modulus_) {
        throw std::invalid_argument("field elements have different moduli");
    }
}

FieldElem FieldElem::operator+(FieldElem other) const {
    check_same_field(other);
    return FieldElem(value_ + other.value_, modulus_);
}

FieldElem FieldElem::operator-(FieldElem other) const {
    check_same_field(other);
    return FieldElem(value_ - other.value_, modulus_);
}

FieldElem FieldElem::operator*(FieldElem other) const {
    check_same_field(other);
    return FieldElem(static_cast<int64_t>(value_) * other.value_, modulus_);
}

FieldElem FieldElem::operator-() const {
    return FieldElem(-static_cast<int64_t>(value_), modulus_);
}

int inv_mod(int value, int modulus) {
    int a = mod_residue(value, modulus);
    if (a == 0) {
        throw std::domain_error("no inverse");
    }
    // Extended Euclid.
    int64_t t = 0, new_t = 1, r = modulus, new_r = a;
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_residue(t, modulus);
}

FieldElem field_inv(FieldElem x) {
    return FieldElem(inv_mod(x.value(), x.modulus()), x.modulus());
}

FieldMatrix::FieldMatrix(size_t rows, size_t cols, int modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), entries_(rows * cols, 0) {
    require_prime(modulus);
}

FieldMatrix::FieldMatrix(int modulus, const std::vector<std::vector<int>> &rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()), modulus_(modulus) {
    require_prime(modulus);
    entries_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (int x : r) {
            entries_.push_back(mod_residue(x, modulus));
        }
    }
}

FieldMatrix FieldMatrix::identity(size_t n, int modulus) {
    FieldMatrix m(n, n, modulus);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, 1);
    }
    return m;
}

std::vector<int> FieldMatrix::row_vector(size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix t(cols_, rows_, modulus_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t.entries_[c * rows_ + r] = (*this)(r, c);
        }
    }
    return t;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix &rhs) const {
    if (cols_ != rhs.rows_ || modulus_ != rhs.modulus_) {
        throw std::invalid_argument("matrix product shape or modulus mismatch");
    }
    FieldMatrix out(rows_, rhs.cols_, modulus_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < rhs.cols_; c++) {
            int64_t acc = 0;
            for (size_t k = 0; k < cols_; k++) {
                acc += static_cast<int64_t>((*this)(r, k)) * rhs(k, c);
            }
            out.set(r, c, acc);
        }
    }
    return out;
}

bool FieldMatrix::is_zero() const {
    for (int x : entries_) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix &other) const {
    if (rows_ == 0) {
        return other;
    }
    if (other.rows_ == 0) {
        return *this;
    }
    if (cols_ != other.cols_ || modulus_ != other.modulus_) {
        throw std::invalid_argument("vstack shape or modulus mismatch");
    }
    FieldMatrix out = *this;
    out.rows_ += other.rows_;
    out.entries_.insert(out.entries_.end(), other.entries_.begin(), other.entries_.end());
    return out;
}

FieldMatrix FieldMatrix::parse(std::istream &in) {
    long long d, rows, cols;
    if (!(in >> d >> rows >> cols) || rows < 0 || cols < 0) {
        throw std::invalid_argument("matrix text: expected header 'd rows cols'");
    }
    FieldMatrix m(static_cast<size_t>(rows), static_cast<size_t>(cols), static_cast<int>(d));
    for (long long r = 0; r < rows; r++) {
        for (long long c = 0; c < cols; c++) {
            long long x;
            if (!(in >> x)) {
                throw std::invalid_argument("matrix text: expected " + std::to_string(rows * cols) + " entries");
            }
            if (x < 0 || x >= d) {
                throw std::invalid_argument("matrix text: entry " + std::to_string(x) + " is not a residue mod " +
                                            std::to_string(d));
            }
            m.set(static_cast<size_t>(r), static_cast<size_t>(c), x);
        }
    }
    std::string trailing;
    if (in >> trailing) {
        throw std::invalid_argument("matrix text: unexpected trailing content '" + trailing + "'");
    }
    return m;
}

FieldMatrix FieldMatrix::from_text(const std::string &text) {
    std::istringstream in(text);
    return parse(in);
}

FieldMatrix FieldMatrix::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open matrix file '" + path + "'");
    }
    return parse(in);
}

std::string FieldMatrix::to_text() const {
    std::ostringstream out;
    out << modulus_ << " " << rows_ << " " << cols_ << "\n";
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out << (c ? " " : "") << (*this)(r, c);
        }
        out << "\n";
    }
    return out.str();
}

FieldMatrix row_reduce(const FieldMatrix &m) {
    const int d = m.modulus();
    std::vector<std::vector<int>> a;
    a.reserve(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        a.push_back(m.row_vector(r));
    }
    size_t pivot_row = 0;
    for (size_t c = 0; c < m.cols() && pivot_row < a.size(); c++) {
        size_t found = pivot_row;
        while (found < a.size() && a[found][c] == 0) {
            found++;
        }
        if (found == a.size()) {
            continue;
        }
        std::swap(a[pivot_row], a[found]);
        int inv = inv_mod(a[pivot_row][c], d);
        for (auto &x : a[pivot_row]) {
            x = mod_residue(static_cast<int64_t>(x) * inv, d);
        }
        for (size_t r = 0; r < a.size(); r++) {
            if (r == pivot_row || a[r][c] == 0) {
                continue;
            }
            int f = a[r][c];
            for (size_t k = 0; k < m.cols(); k++) {
                a[r][k] = mod_residue(a[r][k] - static_cast<int64_t>(f) * a[pivot_row][k], d);
            }
        }
        pivot_row++;
    }
    a.resize(pivot_row);
    if (a.empty()) {
        return FieldMatrix(0, m.cols(), d);
    }
    return FieldMatrix(d, a);
}

size_t rank(const FieldMatrix &m) {
    return row_reduce(m).rows();
}

bool in_row_span(const FieldMatrix &m, std::span<const int> v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("in_row_span: vector length mismatch");
    }
    FieldMatrix single(1, m.cols(), m.modulus());
    for (size_t c = 0; c < v.size(); c++) {
        single.set(0, c, v[c]);
    }
    return rank(m.vstack(single)) == rank(m);
}

bool same_row_span(const FieldMatrix &a, const FieldMatrix &b) {
    if (a.cols() != b.cols() || a.modulus() != b.modulus()) {
        return false;
    }
    size_t ra = rank(a);
    return ra == rank(b) && rank(a.vstack(b)) == ra;
}

bool solve_linear(const FieldMatrix &m, std::span<const int> rhs, std::vector<int> &x) {
    if (rhs.size() != m.rows()) {
        throw std::invalid_argument("solve_linear: rhs length mismatch");
    }
    const int d = m.modulus();
    const size_t n = m.cols();
    // Augmented elimination.
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(n + 1));
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < n; c++) {
            a[r][c] = m(r, c);
        }
        a[r][n] = mod_residue(rhs[r], d);
    }
    std::vector<size_t> pivots;
    size_t pr = 0;
    for (size_t c = 0; c < n && pr < a.size(); c++) {
        size_t found = pr;
        while (found < a.size() && a[found][c] == 0) {
            found++;
        }
        if (found == a.size()) {
            continue;
        }
        std::swap(a[pr], a[found]);
        int inv = inv_mod(a[pr][c], d);
        for (auto &e : a[pr]) {
            e = mod_residue(static_cast<int64_t>(e) * inv, d);
        }
        for (size_t r = 0; r < a.size(); r++) {
            if (r != pr && a[r][c] != 0) {
                int f = a[r][c];
                for (size_t k = 0; k <= n; k++) {
                    a[r][k] = mod_residue(a[r][k] - static_cast<int64_t>(f) * a[pr][k], d);
                }
            }
        }
        pivots.push_back(c);
        pr++;
    }
    for (size_t r = pr; r < a.size(); r++) {
        if (a[r][n] != 0) {
            return false;
        }
    }
    x.assign(n, 0);
    for (size_t k = 0; k < pivots.size(); k++) {
        x[pivots[k]] = a[k][n];
    }
    return true;
}

SympVec::SympVec(int modulus_, std::vector<int> u_part, std::vector<int> v_part)
    : modulus(modulus_), u(std::move(u_part)), v(std::move(v_part)) {
    require_prime(modulus);
    if (u.size() != v.size()) {
        throw std::invalid_argument("SympVec: u and v parts differ in length");
    }
    for (auto &x : u) {
        x = mod_residue(x, modulus);
    }
    for (auto &x : v) {
        x = mod_residue(x, modulus);
    }
}

SympVec SympVec::from_flat(int modulus, std::span<const int> flat) {
    if (flat.size() % 2 != 0) {
        throw std::invalid_argument("SympVec: flattened length must be even");
    }
    size_t n = flat.size() / 2;
    return SympVec(modulus, {flat.begin(), flat.begin() + n}, {flat.begin() + n, flat.end()});
}

std::vector<int> SympVec::flat() const {
    std::vector<int> out(u);
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

size_t SympVec::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < u.size(); k++) {
        w += (u[k] != 0 || v[k] != 0);
    }
    return w;
}

SympVec SympVec::operator+(const SympVec &other) const {
    if (other.n() != n() || other.modulus != modulus) {
        throw std::invalid_argument("SympVec: size or modulus mismatch");
    }
    SympVec out = *this;
    for (size_t k = 0; k < n(); k++) {
        out.u[k] = (out.u[k] + other.u[k]) % modulus;
        out.v[k] = (out.v[k] + other.v[k]) % modulus;
    }
    return out;
}

SympVec SympVec::scaled(int k) const {
    SympVec out = *this;
    for (auto &x : out.u) {
        x = mod_residue(static_cast<int64_t>(x) * k, modulus);
    }
    for (auto &x : out.v) {
        x = mod_residue(static_cast<int64_t>(x) * k, modulus);
    }
    return out;
}

FieldElem symplectic_product(const SympVec &a, const SympVec &b) {
    if (a.n() != b.n() || a.modulus != b.modulus) {
        throw std::invalid_argument("symplectic_product: size or modulus mismatch");
    }
    int64_t acc = 0;
    for (size_t k = 0; k < a.n(); k++) {
        acc += static_cast<int64_t>(a.u[k]) * b.v[k] - static_cast<int64_t>(a.v[k]) * b.u[k];
    }
    return FieldElem(acc, a.modulus);
}

std::ostream &operator<<(std::ostream &out, const FieldElem &x) {
    return out << x.value() << " (mod " << x.modulus() << ")";
}

std::ostream &operator<<(std::ostream &out, const FieldMatrix &m) {
    return out << m.to_text();
}

}  // namespace msd
