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

#include "msd/fixtures.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef MSD_FIXTURE_DIR
#define MSD_FIXTURE_DIR "fixtures"
#endif

namespace msd {

CurveFixtures CurveFixtures::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open fixture file " + path);
    }
    nlohmann::json j = nlohmann::json::parse(in);
    CurveFixtures fx;
    for (const auto &[name, doc] : j.items()) {
        fx.polys_.emplace(name, MultiPoly::from_json(doc));
    }
    return fx;
}

CurveFixtures CurveFixtures::load_default() {
    if (const char *env = std::getenv("MSD_FIXTURES")) {
        return load(env);
    }
    return load(std::string(MSD_FIXTURE_DIR) + "/golay_curves.json");
}

const MultiPoly &CurveFixtures::at(const std::string &name) const {
    auto it = polys_.find(name);
    if (it == polys_.end()) {
        throw std::out_of_range("fixture has no polynomial named " + name);
    }
    return it->second;
}

namespace {

std::string monomial_text(const std::vector<std::string> &vars, const Monomial &m) {
    std::string s;
    for (size_t k = 0; k < m.size(); k++) {
        if (m[k] != 0) {
            if (!s.empty()) {
                s += "*";
            }
            s += vars[k] + (m[k] > 1 ? "^" + std::to_string(m[k]) : "");
        }
    }
    return s.empty() ? "1" : s;
}

void diff_polys(const std::string &label, const MultiPoly &got, const MultiPoly &want, std::vector<std::string> &out) {
    std::set<Monomial, GradedLex> monomials;
    for (const auto &[m, c] : got.terms()) {
        monomials.insert(m);
    }
    for (const auto &[m, c] : want.terms()) {
        monomials.insert(m);
    }
    for (const auto &m : monomials) {
        BigRational g = got.coefficient(m), w = want.coefficient(m);
        if (g != w) {
            out.push_back(label + " coefficient of " + monomial_text(want.vars(), m) + ": expected " + w.get_str() +
                          ", got " + g.get_str());
        }
    }
}

}  // namespace

std::vector<std::string> compare_curve(const RationalFn &f, const Monomial &prefactor, const BigRational &scale,
                                       const MultiPoly &p, const MultiPoly &q) {
    std::vector<std::string> out;
    if (f.vars() != q.vars() || f.vars() != p.vars()) {
        out.push_back("variable lists differ");
        return out;
    }
    BigRational d0 = f.den().constant_term();
    if (d0 == 0 || q.constant_term() == 0) {
        out.push_back("denominator constant term vanishes");
        return out;
    }
    BigRational s = q.constant_term() / d0;
    MultiPoly den = f.den() * s;
    MultiPoly num = f.num() * (s / scale);
    diff_polys("denominator", den, q, out);
    try {
        diff_polys("numerator", num.divide_by_monomial(prefactor), p, out);
    } catch (const std::exception &e) {
        out.push_back(std::string("numerator lacks the prefactor: ") + e.what());
    }
    return out;
}

std::vector<std::string> verify_strange(const DistillationResult &r, const CurveFixtures &fx) {
    if (r.noise_map.size() != 1) {
        return {"not a strange-family result"};
    }
    return compare_curve(r.noise_map[0], {3}, BigRational(1, 2), fx.at("P"), fx.at("Q"));
}

std::vector<std::string> verify_norell(const DistillationResult &r, const CurveFixtures &fx) {
    if (r.noise_map.size() != 2) {
        return {"not a Norell-family result"};
    }
    auto out = compare_curve(r.noise_map[0], {2, 0}, BigRational(1), fx.at("P0"), fx.at("QN"));
    for (auto &line : out) {
        line = "eps0': " + line;
    }
    for (auto &line : compare_curve(r.noise_map[1], {0, 1}, BigRational(6), fx.at("PS"), fx.at("QN"))) {
        out.push_back("epsS': " + line);
    }
    return out;
}

std::vector<std::string> verify_t23(const TCurve &c, const CurveFixtures &fx) {
    return compare_curve(c.delta_out, {2}, BigRational(1), fx.at("PT"), fx.at("QT"));
}

std::vector<std::string> verify_t5(const TCurve &c) {
    std::vector<std::string> out;
    const QubitCode code = five_qubit_code();
    for (int k = 0; k <= 8; k++) {
        BigRational delta(k, 10);
        DenseTResult dense = dense_t_oracle(code, delta.get_d());
        double m = 0;
        for (size_t l = 0; l < 3; l++) {
            m += c.orientation[l] * dense.bloch[l];
        }
        double expected = 1.0 - std::sqrt(3.0) * m / 3.0;
        double got = c.delta_out.eval1(delta).get_d();
        double succ = c.success.eval(std::vector<BigRational>{delta}).get_d();
        if (std::abs(got - expected) > 1e-10 || std::abs(succ - dense.success) > 1e-10) {
            std::ostringstream s;
            s << "delta=" << delta.get_d() << ": exact " << got << " / " << succ << ", dense " << expected << " / "
              << dense.success;
            out.push_back(s.str());
        }
    }
    return out;
}

}  // namespace msd
