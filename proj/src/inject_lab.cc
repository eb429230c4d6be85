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

#include "msd/inject_lab.h"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace msd {

DenseKet EquatorialState::ket() const {
    DenseKet k(3);
    k << 1.0, std::polar(1.0, theta1), std::polar(1.0, theta2);
    return k / std::sqrt(3.0);
}

DenseOperator uz_diagonal(double theta1, double theta2) {
    DenseOperator u = DenseOperator::Zero(3, 3);
    u(0, 0) = 1.0;
    u(1, 1) = std::polar(1.0, theta1);
    u(2, 2) = std::polar(1.0, theta2);
    return u;
}

static DenseOperator x_power(int m) {
    DenseOperator x = shift_x(3);
    DenseOperator out = DenseOperator::Identity(3, 3);
    for (int k = 0; k < mod_residue(m, 3); k++) {
        out = x * out;
    }
    return out;
}

std::vector<InjectionOutcome> inject_uz(const DenseOperator &uz, const DenseKet &psi) {
    if (uz.rows() != 3 || uz.cols() != 3 || psi.size() != 3) {
        throw std::invalid_argument("inject_uz: expected single-qutrit operands");
    }
    DenseOperator off = uz;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("inject_uz: U_Z must be diagonal");
    }
    for (int k = 0; k < 3; k++) {
        if (std::abs(std::abs(uz(k, k)) - 1.0) > 1e-12) {
            throw std::invalid_argument("inject_uz: U_Z must be unitary");
        }
    }
    DenseKet resource = uz * DenseKet::Constant(3, 1.0 / std::sqrt(3.0));
    DenseKet joint = kron(resource, psi);
    // Controlled-X^2: |k>|j> -> |k>|j + 2k>.
    DenseKet after = DenseKet::Zero(9);
    for (int k = 0; k < 3; k++) {
        for (int j = 0; j < 3; j++) {
            after(3 * k + (j + 2 * k) % 3) += joint(3 * k + j);
        }
    }
    const bool third = is_third_level(uz);
    std::vector<InjectionOutcome> out;
    for (int m = 0; m < 3; m++) {
        DenseKet post(3);
        for (int k = 0; k < 3; k++) {
            post(k) = after(3 * k + m);
        }
        InjectionOutcome o;
        o.m = m;
        o.probability = post.squaredNorm();
        o.post_state = o.probability > 0 ? DenseKet(post / std::sqrt(o.probability)) : post;
        o.success = third || m == 0;
        out.push_back(std::move(o));
    }
    return out;
}

DenseKet third_level_correction(const DenseOperator &uz, const InjectionOutcome &outcome) {
    return uz * x_power(outcome.m) * uz.adjoint() * outcome.post_state;
}

DenseKet pauli_correction(const InjectionOutcome &outcome) {
    return x_power(outcome.m) * outcome.post_state;
}

bool is_third_level(const DenseOperator &uz) {
    return is_clifford(uz * shift_x(3) * uz.adjoint());
}

double fidelity(const DenseKet &a, const DenseKet &b) {
    return std::norm(a.dot(b));
}

Reduction reduce_pair(const DenseKet &a, const DenseKet &b, const DenseOperator &stabilizer, const DenseOperator &xbar,
                      const DenseOperator &zbar) {
    const Eigen::Index dim = 9;
    DenseOperator proj = DenseOperator::Zero(dim, dim);
    DenseOperator zproj = DenseOperator::Zero(dim, dim);
    DenseOperator sp = DenseOperator::Identity(dim, dim);
    DenseOperator zp = DenseOperator::Identity(dim, dim);
    for (int k = 0; k < 3; k++) {
        proj += sp;
        zproj += zp;
        sp = sp * stabilizer;
        zp = zp * zbar;
    }
    proj /= 3.0;
    zproj /= 3.0;
    // The codespace and Z-bar = 1 eigenspace meet in a line.
    DenseOperator zero_proj = proj * zproj;
    Eigen::Index best = 0;
    for (Eigen::Index c = 1; c < dim; c++) {
        if (zero_proj.col(c).norm() > zero_proj.col(best).norm()) {
            best = c;
        }
    }
    DenseKet logical0 = zero_proj.col(best).normalized();
    DenseKet projected = proj * kron(a, b);
    Reduction r;
    r.probability = projected.squaredNorm();
    r.state = DenseKet::Zero(3);
    DenseKet basis = logical0;
    for (int k = 0; k < 3; k++) {
        r.state(k) = basis.dot(projected);
        basis = xbar * basis;
    }
    if (r.probability > 0) {
        r.state.normalize();
    }
    return r;
}

Reduction reduce_norell_pair() {
    const DenseOperator x = shift_x(3), z = clock_z(3), id = DenseOperator::Identity(3, 3);
    const DenseKet n = magic_states().norell;
    return reduce_pair(n, n, omega(3) * kron(x, x), kron(id, x), kron(z * z, z));
}

Reduction reduce_strange_pair(const DenseKet &psi) {
    if (psi.size() != 3 || std::abs(psi.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("reduce_strange_pair: expected a normalized qutrit state");
    }
    if (std::abs(psi(0)) > 1e-12) {
        throw std::invalid_argument("reduce_strange_pair: state must be supported on |1> and |2>");
    }
    const DenseOperator x = shift_x(3), z = clock_z(3), id = DenseOperator::Identity(3, 3);
    return reduce_pair(psi, psi, kron(z, z), kron(x * x, x), kron(id, z));
}

std::optional<DenseOperator> find_clifford_mapping(const DenseKet &from, const DenseKet &to) {
    for (const auto &c : single_qutrit_cliffords()) {
        if (std::abs(fidelity(to, c * from) - 1.0) < 1e-9) {
            return c;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<long long> exact_key(const DenseOperator &m) {
    std::vector<long long> key;
    for (Eigen::Index k = 0; k < m.size(); k++) {
        key.push_back(std::llround(m(k).real() * 1e8));
        key.push_back(std::llround(m(k).imag() * 1e8));
    }
    return key;
}

std::vector<DenseOperator> conjugates(const DenseOperator &u) {
    std::vector<DenseOperator> gens;
    for (int m = 0; m < 3; m++) {
        gens.push_back(x_power(m) * u * x_power(-m));
    }
    return gens;
}

}  // namespace

std::optional<size_t> conjugate_group_order(const DenseOperator &u, size_t cap) {
    const auto gens = conjugates(u);
    std::map<std::vector<long long>, DenseOperator> seen;
    std::vector<DenseOperator> frontier = {DenseOperator::Identity(3, 3)};
    seen.emplace(exact_key(frontier[0]), frontier[0]);
    while (!frontier.empty()) {
        std::vector<DenseOperator> next;
        for (const auto &g : frontier) {
            for (const auto &s : gens) {
                DenseOperator h = s * g;
                if (seen.emplace(exact_key(h), h).second) {
                    if (seen.size() > cap) {
                        return std::nullopt;
                    }
                    next.push_back(h);
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

RandomWalkReport injection_random_walk(const DenseOperator &u, size_t trials, uint64_t seed, int step_cap) {
    const auto gens = conjugates(u);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> outcome(0, 2);
    RandomWalkReport rep;
    rep.trials = trials;
    double total = 0;
    for (size_t t = 0; t < trials; t++) {
        DenseOperator acc = DenseOperator::Identity(3, 3);
        int steps = 0;
        bool done = false;
        while (steps < step_cap) {
            acc = gens[static_cast<size_t>(outcome(rng))] * acc;
            steps++;
            if ((acc - u).cwiseAbs().maxCoeff() < 1e-9) {
                done = true;
                break;
            }
        }
        rep.unfinished += !done;
        rep.max_steps = std::max(rep.max_steps, steps);
        total += steps;
    }
    rep.mean_steps = trials ? total / static_cast<double>(trials) : 0.0;
    return rep;
}

}  // namespace msd
