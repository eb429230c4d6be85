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

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace msd {

Complex omega(int d, int64_t k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(mod_residue(k, d)) / d;
    return {std::cos(angle), std::sin(angle)};
}

DenseOperator shift_x(int d) {
    DenseOperator x = DenseOperator::Zero(d, d);
    for (int k = 0; k < d; k++) {
        x((k + 1) % d, k) = 1.0;
    }
    return x;
}

DenseOperator clock_z(int d) {
    DenseOperator z = DenseOperator::Zero(d, d);
    for (int k = 0; k < d; k++) {
        z(k, k) = omega(d, k);
    }
    return z;
}

static void require_odd_prime(int d, const char *what) {
    if (!is_prime(d) || d == 2) {
        throw std::invalid_argument(std::string(what) + ": requires an odd prime dimension (2^{-1} is undefined for d = 2)");
    }
}

DenseOperator displacement(int u, int v, int d) {
    require_odd_prime(d, "displacement");
    u = mod_residue(u, d);
    v = mod_residue(v, d);
    int half = inv_mod(2, d);
    // X^u Z^v |k> = omega^{v k} |k + u>.
    DenseOperator out = DenseOperator::Zero(d, d);
    Complex phase = omega(d, static_cast<int64_t>(half) * u * v);
    for (int k = 0; k < d; k++) {
        out((k + u) % d, k) = phase * omega(d, static_cast<int64_t>(v) * k);
    }
    return out;
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DenseKet kron(const DenseKet &a, const DenseKet &b) {
    DenseKet out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); i++) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

DenseOperator kron_power(const DenseOperator &a, size_t n) {
    DenseOperator out = DenseOperator::Identity(1, 1);
    for (size_t k = 0; k < n; k++) {
        out = kron(out, a);
    }
    return out;
}

DenseOperator displacement(const SympVec &p) {
    DenseOperator out = DenseOperator::Identity(1, 1);
    for (size_t k = 0; k < p.n(); k++) {
        out = kron(out, displacement(p.u[k], p.v[k], p.modulus));
    }
    return out;
}

DenseOperator symplectic_unitary(const FieldMatrix &f) {
    const int d = f.modulus();
    require_odd_prime(d, "symplectic_unitary");
    if (f.rows() != 2 || f.cols() != 2) {
        throw std::invalid_argument("symplectic_unitary: expected a 2x2 matrix");
    }
    const int64_t a = f(0, 0), b = f(0, 1), c = f(1, 0), dd = f(1, 1);
    if (mod_residue(a * dd - b * c, d) != 1) {
        throw std::invalid_argument("symplectic_unitary: determinant is not 1");
    }
    const int64_t half = inv_mod(2, d);
    DenseOperator v = DenseOperator::Zero(d, d);
    if (b != 0) {
        const int64_t b_inv = inv_mod(static_cast<int>(b), d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(d));
        for (int64_t j = 0; j < d; j++) {
            for (int64_t k = 0; k < d; k++) {
                int64_t e = half * b_inv % d * mod_residue(a * k * k - 2 * j * k + dd * j * j, d);
                v(j, k) = norm * omega(d, e);
            }
        }
    } else {
        for (int64_t k = 0; k < d; k++) {
            v(mod_residue(a * k, d), k) = omega(d, half * a % d * c % d * k % d * k);
        }
    }
    return v;
}

DenseOperator phase_point(int u, int v, int d) {
    DenseOperator a0 = DenseOperator::Zero(d, d);
    for (int p = 0; p < d; p++) {
        for (int q = 0; q < d; q++) {
            a0 += displacement(p, q, d);
        }
    }
    a0 /= static_cast<double>(d);
    DenseOperator shift = displacement(u, v, d);
    return shift * a0 * shift.adjoint();
}

double WignerGrid::sum() const {
    double s = 0;
    for (double x : values) {
        s += x;
    }
    return s;
}

WignerGrid wigner_of(const DenseOperator &rho) {
    const int d = static_cast<int>(rho.rows());
    require_odd_prime(d, "wigner_of");
    WignerGrid w(d);
    for (int u = 0; u < d; u++) {
        for (int v = 0; v < d; v++) {
            w(u, v) = (rho * phase_point(u, v, d)).trace().real() / d;
        }
    }
    return w;
}

DenseOperator state_from_wigner(const WignerGrid &w) {
    DenseOperator rho = DenseOperator::Zero(w.d, w.d);
    for (int u = 0; u < w.d; u++) {
        for (int v = 0; v < w.d; v++) {
            rho += w(u, v) * phase_point(u, v, w.d);
        }
    }
    return rho;
}

DenseOperator projector(const DenseKet &ket) {
    return ket * ket.adjoint();
}

bool is_density_matrix(const DenseOperator &rho, double tol) {
    if (rho.rows() != rho.cols() || rho.rows() == 0) {
        return false;
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
        return false;
    }
    if (std::abs(rho.trace() - Complex(1.0)) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<DenseOperator> es(rho);
    return es.eigenvalues().minCoeff() >= -tol;
}

MagicStates magic_states() {
    const double r = 1.0 / std::sqrt(2.0);
    const double phi = 0.5 * std::atan(std::sqrt(2.0));
    MagicStates s;
    s.strange = DenseKet::Zero(3);
    s.strange << 0, r, -r;
    s.norell = DenseKet::Zero(3);
    s.norell << 0, r, r;
    s.h_plus = DenseKet::Zero(3);
    s.h_plus << std::cos(phi), r * std::sin(phi), r * std::sin(phi);
    s.h_minus = DenseKet::Zero(3);
    s.h_minus << -std::sin(phi), r * std::cos(phi), r * std::cos(phi);
    s.zero = DenseKet::Zero(3);
    s.zero << 1, 0, 0;
    return s;
}

DenseOperator hadamard_gate() {
    return symplectic_unitary(hadamard_symplectic(3));
}

DenseOperator norell_gate() {
    return symplectic_unitary(norell_symplectic(3));
}

DenseOperator h_prime_gate() {
    return symplectic_unitary(FieldMatrix(3, {{1, 1}, {1, 2}}));
}

static void require_qutrit_state(const DenseOperator &rho, const char *what) {
    if (rho.rows() != 3 || !is_density_matrix(rho)) {
        throw std::invalid_argument(std::string(what) + ": input is not a single-qutrit density matrix");
    }
}

StrangeTwirl twirl_strange(const DenseOperator &rho) {
    require_qutrit_state(rho, "twirl_strange");
    const DenseOperator h = hadamard_gate();
    DenseOperator avg = DenseOperator::Zero(3, 3);
    DenseOperator hn = DenseOperator::Identity(3, 3);
    for (int k = 0; k < 4; k++) {
        avg += hn * rho * hn.adjoint();
        hn = h * hn;
    }
    avg /= 4.0;
    const DenseOperator hp = h_prime_gate();
    DenseOperator sym = 0.5 * (avg + hp * avg * hp.adjoint());
    auto s = magic_states();
    double eps = (s.h_plus.adjoint() * sym * s.h_plus)(0, 0).real() +
                 (s.h_minus.adjoint() * sym * s.h_minus)(0, 0).real();
    StrangeTwirl out;
    out.delta = 1.5 * eps;
    out.rho = noisy_strange(out.delta);
    return out;
}

NorellTwirl twirl_norell(const DenseOperator &rho) {
    require_qutrit_state(rho, "twirl_norell");
    auto s = magic_states();
    NorellTwirl out;
    out.eps0 = (s.zero.adjoint() * rho * s.zero)(0, 0).real();
    out.eps_s = (s.strange.adjoint() * rho * s.strange)(0, 0).real();
    out.rho = noisy_norell(out.eps0, out.eps_s);
    return out;
}

DenseOperator noisy_strange(double delta) {
    auto s = magic_states();
    return (1.0 - delta) * projector(s.strange) + (delta / 3.0) * DenseOperator::Identity(3, 3);
}

DenseOperator noisy_norell(double eps0, double eps_s) {
    auto s = magic_states();
    return (1.0 - eps0 - eps_s) * projector(s.norell) + eps0 * projector(s.zero) + eps_s * projector(s.strange);
}

DenseOperator canonical_phase(const DenseOperator &u) {
    for (Eigen::Index j = 0; j < u.cols(); j++) {
        for (Eigen::Index i = 0; i < u.rows(); i++) {
            double mag = std::abs(u(i, j));
            if (mag > 1e-9) {
                return u * (std::conj(u(i, j)) / mag);
            }
        }
    }
    return u;
}

bool equal_up_to_phase(const DenseOperator &a, const DenseOperator &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return (canonical_phase(a) - canonical_phase(b)).cwiseAbs().maxCoeff() <= tol;
}

bool is_clifford(const DenseOperator &u) {
    const int d = static_cast<int>(u.rows());
    require_odd_prime(d, "is_clifford");
    if ((u * u.adjoint() - DenseOperator::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-9) {
        return false;
    }
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            if (a == 0 && b == 0) {
                continue;
            }
            DenseOperator image = u * displacement(a, b, d) * u.adjoint();
            bool matched = false;
            for (int p = 0; p < d && !matched; p++) {
                for (int q = 0; q < d && !matched; q++) {
                    // |Tr(D^dagger M)| / d = 1 exactly when M is a phase times D.
                    double overlap = std::abs((displacement(p, q, d).adjoint() * image).trace()) / d;
                    matched = std::abs(overlap - 1.0) < 1e-9;
                }
            }
            if (!matched) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Hashable rounding of a phase-canonical matrix.
std::vector<long long> matrix_key(const DenseOperator &m) {
    std::vector<long long> key;
    key.reserve(static_cast<size_t>(2 * m.size()));
    for (Eigen::Index k = 0; k < m.size(); k++) {
        key.push_back(std::llround(m(k).real() * 1e7));
        key.push_back(std::llround(m(k).imag() * 1e7));
    }
    return key;
}

}  // namespace

std::vector<DenseOperator> single_qutrit_cliffords() {
    const std::vector<DenseOperator> gens = {clock_z(3) * norell_gate(), hadamard_gate()};
    std::map<std::vector<long long>, DenseOperator> seen;
    std::vector<DenseOperator> frontier = {DenseOperator::Identity(3, 3)};
    seen.emplace(matrix_key(frontier[0]), frontier[0]);
    while (!frontier.empty()) {
        std::vector<DenseOperator> next;
        for (const auto &g : frontier) {
            for (const auto &s : gens) {
                DenseOperator h = canonical_phase(s * g);
                if (seen.emplace(matrix_key(h), h).second) {
                    next.push_back(h);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<DenseOperator> out;
    out.reserve(seen.size());
    for (auto &[k, m] : seen) {
        out.push_back(m);
    }
    return out;
}

DenseDistillOracle::DenseDistillOracle(const StabilizerCode &code) : code_(code) {
    const int d = code.modulus;
    if (code.n > 5) {
        throw std::invalid_argument("oracle limited to n <= 5");
    }
    require_odd_prime(d, "dense_distill_oracle");
    if (symplectic_product(code.logical_x, code.logical_z).value() != 1) {
        throw std::invalid_argument("dense_distill_oracle: requires <logical_x, logical_z> = 1");
    }
    Eigen::Index dim = 1;
    for (size_t k = 0; k < code.n; k++) {
        dim *= d;
    }
    // Group elements as explicit matrix products of the phased generators.
    std::vector<DenseOperator> group = {DenseOperator::Identity(dim, dim)};
    for (size_t r = 0; r < code.num_stabilizers(); r++) {
        DenseOperator gen = omega(d, code.phases[r]) * displacement(code.stabilizer(r));
        std::vector<DenseOperator> grown;
        for (const auto &g : group) {
            DenseOperator acc = g;
            for (int k = 0; k < d; k++) {
                grown.push_back(acc);
                acc = acc * gen;
            }
        }
        group = std::move(grown);
    }
    projector_ = DenseOperator::Zero(dim, dim);
    for (const auto &g : group) {
        projector_ += g;
    }
    projector_ /= static_cast<double>(group.size());

    const DenseOperator xbar = displacement(code.logical_x);
    const DenseOperator zbar = displacement(code.logical_z);
    const int half = inv_mod(2, d);
    logical_displacements_.resize(static_cast<size_t>(d * d));
    DenseOperator xu = DenseOperator::Identity(dim, dim);
    for (int u = 0; u < d; u++) {
        DenseOperator zv = DenseOperator::Identity(dim, dim);
        for (int v = 0; v < d; v++) {
            logical_displacements_[static_cast<size_t>(u * d + v)] =
                omega(d, static_cast<int64_t>(half) * u * v) * xu * zv;
            zv = zv * zbar;
        }
        xu = xu * xbar;
    }
    DenseOperator a0 = DenseOperator::Zero(dim, dim);
    for (const auto &m : logical_displacements_) {
        a0 += m;
    }
    a0 /= static_cast<double>(d);
    logical_phase_points_.resize(static_cast<size_t>(d * d));
    for (int u = 0; u < d; u++) {
        for (int v = 0; v < d; v++) {
            const auto &shift = logical_displacement(u, v);
            logical_phase_points_[static_cast<size_t>(u * d + v)] = shift * a0 * shift.adjoint();
        }
    }
}

const DenseOperator &DenseDistillOracle::logical_displacement(int u, int v) const {
    const int d = code_.modulus;
    return logical_displacements_[static_cast<size_t>(mod_residue(u, d) * d + mod_residue(v, d))];
}

DenseDistillOracle::Result DenseDistillOracle::run(const DenseOperator &rho_in) const {
    const int d = code_.modulus;
    if (rho_in.rows() != d) {
        throw std::invalid_argument("dense_distill_oracle: input dimension does not match the code");
    }
    DenseOperator rho = kron_power(rho_in, code_.n);
    DenseOperator projected = projector_ * rho * projector_;
    Result out;
    out.success = projected.trace().real();
    out.w_out = WignerGrid(d);
    for (int u = 0; u < d; u++) {
        for (int v = 0; v < d; v++) {
            const auto &a = logical_phase_points_[static_cast<size_t>(u * d + v)];
            // Tr(P A) without forming the product.
            Complex tr = (projected.array() * a.transpose().array()).sum();
            out.w_out(u, v) = tr.real() / d / out.success;
        }
    }
    return out;
}

DenseDistillOracle::Result dense_distill_oracle(const StabilizerCode &code, const DenseOperator &rho_in) {
    return DenseDistillOracle(code).run(rho_in);
}

DenseOperator random_density_matrix(int d, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    DenseOperator g(d, d);
    for (Eigen::Index k = 0; k < g.size(); k++) {
        g(k) = Complex(normal(rng), normal(rng));
    }
    DenseOperator rho = g * g.adjoint();
    return rho / rho.trace();
}

}  // namespace msd
