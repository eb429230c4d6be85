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

#include "msd/qubit_golay.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "msd/clifford_dense.h"
#include "msd/code_forge.h"
#include "msd/parallel.h"

namespace msd {

namespace {

const std::vector<std::string> kDelta = {"delta"};

int popcount(uint64_t v) {
    return std::popcount(v);
}

uint64_t full_mask(size_t n) {
    return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

// Sign of <g> for a Hermitian g under the product state: i^k (-i)^{|x & z|} must be +-1.
int expectation_sign(const PauliString &p) {
    int e = (p.phase - popcount(p.x & p.z)) & 3;
    if (e & 1) {
        throw std::logic_error("non-Hermitian Pauli element in expectation sum");
    }
    return e == 0 ? 0 : 1;
}

}  // namespace

PauliString PauliString::parse(const std::string &text) {
    PauliString p;
    size_t pos = 0;
    if (text.rfind("-i", 0) == 0) {
        p.phase = 3;
        pos = 2;
    } else if (text.rfind("+", 0) == 0) {
        pos = 1;
    } else if (text.rfind("-", 0) == 0) {
        p.phase = 2;
        pos = 1;
    } else if (text.rfind("i", 0) == 0) {
        p.phase = 1;
        pos = 1;
    }
    p.n = text.size() - pos;
    if (p.n == 0 || p.n > 64) {
        throw std::invalid_argument("PauliString::parse: expected 1 to 64 letters");
    }
    for (size_t k = 0; k < p.n; k++) {
        uint64_t bit = uint64_t{1} << k;
        switch (text[pos + k]) {
            case 'I':
                break;
            case 'X':
                p.x |= bit;
                break;
            case 'Z':
                p.z |= bit;
                break;
            case 'Y':
                p.x |= bit;
                p.z |= bit;
                p.phase += 1;
                break;
            default:
                throw std::invalid_argument("PauliString::parse: unexpected letter in " + text);
        }
    }
    p.phase &= 3;
    return p;
}

PauliString PauliString::operator*(const PauliString &other) const {
    if (n != other.n) {
        throw std::invalid_argument("PauliString: length mismatch");
    }
    // Z^z X^x' = (-1)^{|z & x'|} X^x' Z^z.
    PauliString r;
    r.n = n;
    r.x = x ^ other.x;
    r.z = z ^ other.z;
    r.phase = (phase + other.phase + 2 * popcount(z & other.x)) & 3;
    return r;
}

bool PauliString::commutes_with(const PauliString &other) const {
    return ((popcount(x & other.z) + popcount(z & other.x)) & 1) == 0;
}

bool PauliString::is_hermitian() const {
    return ((phase - popcount(x & z)) & 1) == 0;
}

size_t PauliString::weight() const {
    return static_cast<size_t>(popcount(x | z));
}

std::string PauliString::to_string() const {
    // Rewrite with Y letters: X Z on a site is -i Y.
    int k = (phase - popcount(x & z)) & 3;
    static const char *kPrefix[4] = {"+", "i", "-", "-i"};
    std::string s = kPrefix[k];
    for (size_t q = 0; q < n; q++) {
        bool bx = (x >> q) & 1, bz = (z >> q) & 1;
        s += bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
    }
    return s;
}

QubitCode css_qubit_code(const FieldMatrix &g) {
    if (g.modulus() != 2) {
        throw std::invalid_argument("css_qubit_code: generator must be binary");
    }
    QubitCode code;
    code.n = g.cols();
    if (code.n % 2 == 0 || code.n > 64) {
        throw std::invalid_argument("css_qubit_code: length must be odd and at most 64");
    }
    if (!is_self_orthogonal(ClassicalCode(g))) {
        throw std::invalid_argument("css_qubit_code: generator is not self-orthogonal");
    }
    for (int type = 0; type < 2; type++) {
        for (size_t r = 0; r < g.rows(); r++) {
            PauliString p;
            p.n = code.n;
            uint64_t bits = 0;
            for (size_t c = 0; c < code.n; c++) {
                if (g(r, c)) {
                    bits |= uint64_t{1} << c;
                }
            }
            (type == 0 ? p.x : p.z) = bits;
            code.stabilizers.push_back(p);
        }
    }
    code.logical_x = {code.n, full_mask(code.n), 0, 0};
    code.logical_z = {code.n, 0, full_mask(code.n), 0};
    for (const auto &s : code.stabilizers) {
        if (!s.commutes_with(code.logical_x) || !s.commutes_with(code.logical_z)) {
            throw std::invalid_argument("css_qubit_code: rows must have even weight");
        }
    }
    return code;
}

QubitCode golay23_qubit_code() {
    return css_qubit_code(golay_binary().generator());
}

QubitCode five_qubit_code() {
    QubitCode code;
    code.n = 5;
    for (const char *s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
        code.stabilizers.push_back(PauliString::parse(s));
    }
    code.logical_x = PauliString::parse("XXXXX");
    code.logical_z = PauliString::parse("ZZZZZ");
    return code;
}

std::map<char, SqrtThreeScaled> t_state_single_qubit_expectations() {
    MultiPoly one = MultiPoly::constant(kDelta, 1);
    MultiPoly bloch = one - MultiPoly::variable(kDelta, "delta");
    return {{'I', {one, 0}}, {'X', {bloch, -1}}, {'Y', {bloch, -1}}, {'Z', {bloch, -1}}};
}

PauliString logical_y(const QubitCode &code) {
    PauliString i_op{code.n, 0, 0, 1};
    PauliString y = i_op * (code.logical_x * code.logical_z);
    if (!y.is_hermitian()) {
        throw std::logic_error("logical_y: i X-bar Z-bar is not Hermitian for this code");
    }
    return y;
}

SignedWeightTables signed_weight_tables(const QubitCode &code, int workers) {
    const size_t m = code.stabilizers.size();
    if (m >= 40) {
        throw std::invalid_argument("signed_weight_tables: too many generators");
    }
    const PauliString logicals[4] = {PauliString{code.n, 0, 0, 0}, code.logical_x, logical_y(code),
                                     code.logical_z};
    // Fix the top `b` generator bits per partition.
    size_t b = 0;
    while ((size_t{1} << (b + 1)) <= static_cast<size_t>(std::max(workers, 1)) && b + 1 < m) {
        b++;
    }
    const size_t parts = size_t{1} << b;
    const size_t low = m - b;
    std::vector<SignedWeightTables> partial(parts);
    parallel_for(parts, workers, [&](size_t part) {
        SignedWeightTables &t = partial[part];
        for (auto &c : t.counts) {
            c.assign(code.n + 1, {0, 0});
        }
        PauliString g{code.n, 0, 0, 0};
        for (size_t k = 0; k < b; k++) {
            if ((part >> k) & 1) {
                g = g * code.stabilizers[low + k];
            }
        }
        const uint64_t total = uint64_t{1} << low;
        for (uint64_t step = 0; step < total; step++) {
            if (step > 0) {
                g = g * code.stabilizers[static_cast<size_t>(std::countr_zero(step))];
            }
            for (int l = 0; l < 4; l++) {
                PauliString e = l == 0 ? g : g * logicals[l];
                t.counts[static_cast<size_t>(l)][e.weight()][static_cast<size_t>(expectation_sign(e))]++;
            }
        }
    });
    SignedWeightTables out;
    out.n = code.n;
    for (auto &c : out.counts) {
        c.assign(code.n + 1, {0, 0});
    }
    for (const auto &p : partial) {
        for (size_t l = 0; l < 4; l++) {
            for (size_t w = 0; w <= code.n; w++) {
                out.counts[l][w][0] += p.counts[l][w][0];
                out.counts[l][w][1] += p.counts[l][w][1];
            }
        }
    }
    return out;
}

namespace {

// sign * (1 - delta)^w * 3^{(shift - w) / 2}; shift is 0 for the identity sum and 1 for the sqrt(3)-scaled ones.
MultiPoly weighted_term(int64_t net, size_t w, int shift) {
    if ((static_cast<int>(w) - shift) % 2 != 0) {
        throw std::logic_error("odd power of sqrt(3) survives in a T-state expectation sum");
    }
    MultiPoly base = MultiPoly::constant(kDelta, 1) - MultiPoly::variable(kDelta, "delta");
    int e = (shift - static_cast<int>(w)) / 2;
    BigRational scale = 1;
    for (int k = 0; k < -e; k++) {
        scale /= 3;
    }
    return base.pow(static_cast<unsigned>(w)) * (scale * BigRational(static_cast<long>(net)));
}

}  // namespace

TExpectationSums sums_from_tables(const SignedWeightTables &tables) {
    TExpectationSums s;
    s.identity = MultiPoly(kDelta);
    for (auto &p : s.logical) {
        p = MultiPoly(kDelta);
    }
    for (size_t l = 0; l < 4; l++) {
        MultiPoly &target = l == 0 ? s.identity : s.logical[l - 1];
        for (size_t w = 0; w <= tables.n; w++) {
            int64_t net = static_cast<int64_t>(tables.counts[l][w][0]) - static_cast<int64_t>(tables.counts[l][w][1]);
            if (net != 0) {
                target += weighted_term(net, w, l == 0 ? 0 : 1);
            }
        }
    }
    return s;
}

TExpectationSums t_expectation_sums_direct(const QubitCode &code) {
    const size_t m = code.stabilizers.size();
    if (m > 24) {
        throw std::invalid_argument("t_expectation_sums_direct: too many generators");
    }
    const PauliString logicals[4] = {PauliString{code.n, 0, 0, 0}, code.logical_x, logical_y(code),
                                     code.logical_z};
    TExpectationSums s;
    s.identity = MultiPoly(kDelta);
    for (auto &p : s.logical) {
        p = MultiPoly(kDelta);
    }
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); mask++) {
        PauliString g{code.n, 0, 0, 0};
        for (size_t k = 0; k < m; k++) {
            if ((mask >> k) & 1) {
                g = g * code.stabilizers[k];
            }
        }
        for (size_t l = 0; l < 4; l++) {
            PauliString e = l == 0 ? g : g * logicals[l];
            int64_t sign = expectation_sign(e) ? -1 : 1;
            (l == 0 ? s.identity : s.logical[l - 1]) += weighted_term(sign, e.weight(), l == 0 ? 0 : 1);
        }
    }
    return s;
}

TCurve assemble_t_curve(const TExpectationSums &sums, size_t num_generators) {
    TCurve c;
    BigRational norm = 1;
    for (size_t k = 0; k < num_generators; k++) {
        norm /= 2;
    }
    c.success = sums.identity * norm;
    MultiPoly oriented = MultiPoly(kDelta);
    std::array<MultiPoly, 3> signed_parts;
    for (size_t l = 0; l < 3; l++) {
        int s = sgn(sums.logical[l].constant_term());
        if (s == 0) {
            throw std::logic_error("assemble_t_curve: a logical Bloch component vanishes at delta = 0");
        }
        c.orientation[l] = s;
        c.bloch[l] = RationalFn(sums.logical[l], sums.identity);
        signed_parts[l] = sums.logical[l] * BigRational(s);
        oriented += signed_parts[l];
    }
    c.components_agree = signed_parts[0] == signed_parts[1] && signed_parts[1] == signed_parts[2];
    // 1 - sqrt(3) m with sqrt(3) m = oriented / (3 identity).
    MultiPoly three_i = sums.identity * BigRational(3);
    c.delta_out = RationalFn(three_i - oriented, three_i);
    return c;
}

TCurve distill_t(const QubitCode &code, int workers) {
    return assemble_t_curve(sums_from_tables(signed_weight_tables(code, workers)), code.stabilizers.size());
}

TCurve distill_t_golay23(int workers) {
    return distill_t(golay23_qubit_code(), workers);
}

TCurve distill_t_5qubit() {
    return distill_t(five_qubit_code());
}

FixedPoint t_threshold(const TCurve &curve) {
    return isolate_fixed_point(curve.delta_out, BigRational(0), BigRational(1, 2));
}

namespace {

DenseOperator dense_pauli(const PauliString &p) {
    const DenseOperator x = shift_x(2);
    DenseOperator z = DenseOperator::Zero(2, 2);
    z(0, 0) = 1;
    z(1, 1) = -1;
    const DenseOperator id = DenseOperator::Identity(2, 2);
    DenseOperator out = DenseOperator::Identity(1, 1);
    // Qubit 0 is the most significant tensor factor.
    for (size_t q = 0; q < p.n; q++) {
        DenseOperator f = (((p.x >> q) & 1) ? x : id) * (((p.z >> q) & 1) ? z : id);
        out = kron(out, f);
    }
    static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPhase[p.phase & 3] * out;
}

}  // namespace

DenseTResult dense_t_oracle(const QubitCode &code, double delta) {
    if (code.n > 10) {
        throw std::invalid_argument("dense_t_oracle: limited to n <= 10");
    }
    const double r = (1.0 - delta) / std::sqrt(3.0);
    DenseOperator y = DenseOperator::Zero(2, 2);
    y(0, 1) = Complex(0, -1);
    y(1, 0) = Complex(0, 1);
    DenseOperator rho1 = 0.5 * (DenseOperator::Identity(2, 2) + r * (shift_x(2) + y + dense_pauli(PauliString::parse("Z"))));
    DenseOperator rho = kron_power(rho1, code.n);
    const Eigen::Index dim = rho.rows();
    DenseOperator proj = DenseOperator::Identity(dim, dim);
    for (const auto &s : code.stabilizers) {
        proj = proj * (0.5 * (DenseOperator::Identity(dim, dim) + dense_pauli(s)));
    }
    DenseOperator pr = proj * rho * proj;
    DenseTResult out;
    out.success = pr.trace().real();
    const PauliString logicals[3] = {code.logical_x, logical_y(code), code.logical_z};
    for (int l = 0; l < 3; l++) {
        out.bloch[static_cast<size_t>(l)] = (pr * dense_pauli(logicals[l])).trace().real() / out.success;
    }
    return out;
}

}  // namespace msd
