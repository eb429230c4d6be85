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

#include <functional>
#include <stdexcept>

namespace msd {

ClassicalCode::ClassicalCode(FieldMatrix generator) : generator_(std::move(generator)) {
    if (rank(generator_) != generator_.rows()) {
        throw std::invalid_argument("classical code generator is not of full row rank");
    }
}

std::vector<std::vector<int>> ClassicalCode::codewords() const {
    const int d = modulus();
    const size_t k = dimension();
    const size_t n = length();
    std::vector<std::vector<int>> out;
    std::vector<int> coeffs(k, 0);
    while (true) {
        std::vector<int> w(n, 0);
        for (size_t r = 0; r < k; r++) {
            if (coeffs[r] == 0) {
                continue;
            }
            for (size_t c = 0; c < n; c++) {
                w[c] = (w[c] + coeffs[r] * generator_(r, c)) % d;
            }
        }
        out.push_back(std::move(w));
        size_t pos = 0;
        while (pos < k && ++coeffs[pos] == d) {
            coeffs[pos++] = 0;
        }
        if (pos == k) {
            break;
        }
    }
    return out;
}

std::map<size_t, uint64_t> ClassicalCode::weight_distribution() const {
    std::map<size_t, uint64_t> dist;
    for (const auto &w : codewords()) {
        size_t weight = 0;
        for (int x : w) {
            weight += x != 0;
        }
        dist[weight]++;
    }
    return dist;
}

size_t ClassicalCode::minimum_weight() const {
    auto dist = weight_distribution();
    for (const auto &[w, count] : dist) {
        if (w > 0) {
            return w;
        }
    }
    return 0;
}

bool is_self_orthogonal(const ClassicalCode &code) {
    const auto &g = code.generator();
    if (g.rows() == 0) {
        return true;
    }
    return (g * g.transpose()).is_zero();
}

std::vector<std::string> stabilizer_code_violations(const FieldMatrix &stabilizers, const SympVec &lx,
                                                    const SympVec &lz) {
    std::vector<std::string> problems;
    const size_t n = lx.n();
    if (lz.n() != n || lx.modulus != lz.modulus) {
        problems.push_back("logical operators differ in size or modulus");
        return problems;
    }
    if (stabilizers.rows() > 0 && (stabilizers.cols() != 2 * n || stabilizers.modulus() != lx.modulus)) {
        problems.push_back("stabilizer matrix is not (n - 1) x 2n over the logical operators' field");
        return problems;
    }
    if (stabilizers.rows() + 1 != n) {
        problems.push_back("expected n - 1 = " + std::to_string(n == 0 ? 0 : n - 1) + " stabilizer rows, got " +
                           std::to_string(stabilizers.rows()));
    }
    if (rank(stabilizers) != stabilizers.rows()) {
        problems.push_back("stabilizer rows are linearly dependent");
    }
    std::vector<SympVec> rows;
    for (size_t r = 0; r < stabilizers.rows(); r++) {
        rows.push_back(SympVec::from_flat(stabilizers.modulus(), stabilizers.row(r)));
    }
    for (size_t a = 0; a < rows.size(); a++) {
        for (size_t b = a + 1; b < rows.size(); b++) {
            if (!symplectic_product(rows[a], rows[b]).is_zero()) {
                problems.push_back("stabilizer rows " + std::to_string(a) + " and " + std::to_string(b) +
                                   " do not commute");
            }
        }
        if (!symplectic_product(rows[a], lx).is_zero()) {
            problems.push_back("logical X does not commute with stabilizer row " + std::to_string(a));
        }
        if (!symplectic_product(rows[a], lz).is_zero()) {
            problems.push_back("logical Z does not commute with stabilizer row " + std::to_string(a));
        }
    }
    if (symplectic_product(lz, lx).is_zero()) {
        problems.push_back("logical X and logical Z commute");
    }
    return problems;
}

StabilizerCode::StabilizerCode(FieldMatrix stabilizer_rows, SympVec lx, SympVec lz, std::vector<int> row_phases)
    : n(lx.n()),
      modulus(lx.modulus),
      stabilizers(std::move(stabilizer_rows)),
      phases(std::move(row_phases)),
      logical_x(std::move(lx)),
      logical_z(std::move(lz)) {
    if (stabilizers.rows() == 0 && stabilizers.cols() == 0) {
        stabilizers = FieldMatrix(0, 2 * n, modulus);
    }
    if (phases.empty()) {
        phases.assign(stabilizers.rows(), 0);
    }
    if (phases.size() != stabilizers.rows()) {
        throw std::invalid_argument("stabilizer code: one phase per stabilizer row required");
    }
    for (auto &p : phases) {
        p = mod_residue(p, modulus);
    }
    auto problems = stabilizer_code_violations(stabilizers, logical_x, logical_z);
    if (!problems.empty()) {
        std::string msg = "invalid stabilizer code:";
        for (const auto &p : problems) {
            msg += " " + p + ";";
        }
        throw std::invalid_argument(msg);
    }
}

SympVec StabilizerCode::stabilizer(size_t row) const {
    return SympVec::from_flat(modulus, stabilizers.row(row));
}

StabilizerCode css_from_self_orthogonal(const ClassicalCode &mc) {
    const size_t n = mc.length();
    const int d = mc.modulus();
    const auto &g = mc.generator();
    if (n % 2 == 0) {
        throw std::invalid_argument("css_from_self_orthogonal: code length " + std::to_string(n) + " is not odd");
    }
    if (!is_self_orthogonal(mc)) {
        throw std::invalid_argument("css_from_self_orthogonal: generator is not self-orthogonal");
    }
    for (size_t r = 0; r < g.rows(); r++) {
        int64_t sum = 0;
        for (size_t c = 0; c < n; c++) {
            sum += g(r, c);
        }
        if (mod_residue(sum, d) != 0) {
            throw std::invalid_argument("css_from_self_orthogonal: generator row " + std::to_string(r) +
                                        " is not orthogonal to (1, ..., 1)");
        }
    }
    if (2 * g.rows() + 1 != n) {
        throw std::invalid_argument("css_from_self_orthogonal: dimension " + std::to_string(g.rows()) +
                                    " is not (n - 1) / 2, so the code does not encode exactly one qudit");
    }
    FieldMatrix m(2 * g.rows(), 2 * n, d);
    for (size_t r = 0; r < g.rows(); r++) {
        for (size_t c = 0; c < n; c++) {
            m.set(r, c, g(r, c));
            m.set(g.rows() + r, n + c, g(r, c));
        }
    }
    SympVec lx(d, std::vector<int>(n, 1), std::vector<int>(n, 0));
    SympVec lz(d, std::vector<int>(n, 0), std::vector<int>(n, d - 1));
    return StabilizerCode(std::move(m), std::move(lx), std::move(lz));
}

ClassicalCode golay_ternary() {
    return ClassicalCode(FieldMatrix(3, {
                                            {-1, 1, 1, -1, -1, 0, 1, 0, 0, 0, 0},
                                            {-1, 1, -1, 1, 0, -1, 0, 1, 0, 0, 0},
                                            {-1, -1, 1, 0, 1, -1, 0, 0, 1, 0, 0},
                                            {-1, -1, 0, 1, -1, 1, 0, 0, 0, 1, 0},
                                            {-1, 0, -1, -1, 1, 1, 0, 0, 0, 0, 1},
                                        }));
}

ClassicalCode golay_binary() {
    // Cyclic shifts of (1 + x) g(x), with g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11 the generator
    // polynomial of the [23, 12, 7] Golay code.
    const std::vector<int> g = {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1};
    std::vector<int> h(g.size() + 1, 0);
    for (size_t k = 0; k < g.size(); k++) {
        h[k] ^= g[k];
        h[k + 1] ^= g[k];
    }
    const size_t n = 23;
    const size_t k = n - (h.size() - 1);
    FieldMatrix m(k, n, 2);
    for (size_t s = 0; s < k; s++) {
        for (size_t j = 0; j < h.size(); j++) {
            m.set(s, s + j, h[j]);
        }
    }
    return ClassicalCode(std::move(m));
}

StabilizerCode golay_qutrit_code() {
    return css_from_self_orthogonal(golay_ternary());
}

FieldMatrix hadamard_symplectic(int modulus) {
    return FieldMatrix(modulus, {{0, -1}, {1, 0}});
}

FieldMatrix norell_symplectic(int modulus) {
    return FieldMatrix(modulus, {{-1, 0}, {-1, -1}});
}

FieldMatrix apply_local_symplectic(const FieldMatrix &rows, const FieldMatrix &f) {
    const size_t n = rows.cols() / 2;
    FieldMatrix out(rows.rows(), rows.cols(), rows.modulus());
    for (size_t r = 0; r < rows.rows(); r++) {
        for (size_t q = 0; q < n; q++) {
            int u = rows(r, q);
            int v = rows(r, n + q);
            out.set(r, q, f(0, 0) * u + f(0, 1) * v);
            out.set(r, n + q, f(1, 0) * u + f(1, 1) * v);
        }
    }
    return out;
}

bool transversal_invariance_check(const StabilizerCode &code) {
    const auto &m = code.stabilizers;
    return same_row_span(m, apply_local_symplectic(m, hadamard_symplectic(code.modulus))) &&
           same_row_span(m, apply_local_symplectic(m, norell_symplectic(code.modulus)));
}

bool has_logical_of_weight_at_most(const StabilizerCode &code, size_t max_weight) {
    const size_t n = code.n;
    const int d = code.modulus;
    const size_t rows = code.num_stabilizers();
    std::vector<SympVec> stabs;
    for (size_t r = 0; r < rows; r++) {
        stabs.push_back(code.stabilizer(r));
    }
    // Per-site local Paulis (a, b) != (0, 0).
    std::vector<std::pair<int, int>> local;
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            if (a || b) {
                local.emplace_back(a, b);
            }
        }
    }
    std::vector<size_t> support;
    std::vector<int64_t> syndrome(rows, 0);
    std::vector<size_t> choice;

    std::function<bool(size_t, size_t)> pick_paulis;
    pick_paulis = [&](size_t depth, size_t w) -> bool {
        if (depth == w) {
            for (size_t r = 0; r < rows; r++) {
                if (mod_residue(syndrome[r], d) != 0) {
                    return false;
                }
            }
            std::vector<int> flat(2 * n, 0);
            for (size_t k = 0; k < w; k++) {
                flat[support[k]] = local[choice[k]].first;
                flat[n + support[k]] = local[choice[k]].second;
            }
            return !in_row_span(code.stabilizers, flat);
        }
        size_t q = support[depth];
        for (size_t c = 0; c < local.size(); c++) {
            auto [a, b] = local[c];
            for (size_t r = 0; r < rows; r++) {
                syndrome[r] += static_cast<int64_t>(stabs[r].u[q]) * b - static_cast<int64_t>(stabs[r].v[q]) * a;
            }
            choice[depth] = c;
            bool hit = pick_paulis(depth + 1, w);
            for (size_t r = 0; r < rows; r++) {
                syndrome[r] -= static_cast<int64_t>(stabs[r].u[q]) * b - static_cast<int64_t>(stabs[r].v[q]) * a;
            }
            if (hit) {
                return true;
            }
        }
        return false;
    };

    std::function<bool(size_t, size_t)> pick_support;
    pick_support = [&](size_t start, size_t w) -> bool {
        if (support.size() == w) {
            choice.assign(w, 0);
            return pick_paulis(0, w);
        }
        for (size_t q = start; q < n; q++) {
            support.push_back(q);
            bool hit = pick_support(q + 1, w);
            support.pop_back();
            if (hit) {
                return true;
            }
        }
        return false;
    };

    for (size_t w = 1; w <= max_weight && w <= n; w++) {
        if (pick_support(0, w)) {
            return true;
        }
    }
    return false;
}

}  // namespace msd
