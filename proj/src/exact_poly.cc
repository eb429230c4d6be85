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

#include "msd/exact_poly.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace msd {

BigRational parse_rational(const std::string &text) {
    BigRational q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    q.canonicalize();
    return q;
}

BigRational rational_from_double(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("rational_from_double: non-finite value");
    }
    return BigRational(x);
}

bool GradedLex::operator()(const Monomial &a, const Monomial &b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) {
        return da < db;
    }
    return a < b;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const BigRational &c) {
    MultiPoly p(std::move(vars));
    p.add_term(Monomial(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string &name) {
    MultiPoly p(std::move(vars));
    Monomial m(p.vars_.size(), 0);
    m[p.var_index(name)] = 1;
    p.add_term(m, 1);
    return p;
}

size_t MultiPoly::var_index(const std::string &name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        throw std::invalid_argument("unknown polynomial variable '" + name + "'");
    }
    return static_cast<size_t>(it - vars_.begin());
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial(vars_.size(), 0));
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) {
        return -1;
    }
    const auto &m = terms_.rbegin()->first;
    return std::accumulate(m.begin(), m.end(), 0);
}

int MultiPoly::degree_in(size_t var) const {
    int best = terms_.empty() ? -1 : 0;
    for (const auto &[m, c] : terms_) {
        best = std::max(best, m[var]);
    }
    return best;
}

BigRational MultiPoly::coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
}

const BigRational &MultiPoly::leading_coefficient() const {
    if (terms_.empty()) {
        throw std::domain_error("zero polynomial has no leading coefficient");
    }
    return terms_.rbegin()->second;
}

const Monomial &MultiPoly::leading_monomial() const {
    if (terms_.empty()) {
        throw std::domain_error("zero polynomial has no leading monomial");
    }
    return terms_.rbegin()->first;
}

BigRational MultiPoly::constant_term() const {
    return coefficient(Monomial(vars_.size(), 0));
}

void MultiPoly::add_term(const Monomial &m, const BigRational &c) {
    if (m.size() != vars_.size()) {
        throw std::invalid_argument("monomial arity does not match variable count");
    }
    BigRational value = c;
    value.canonicalize();
    if (value == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void MultiPoly::require_compatible(const MultiPoly &other) const {
    if (vars_ != other.vars_) {
        throw std::invalid_argument("polynomials have different variable lists");
    }
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &other) {
    require_compatible(other);
    for (const auto &[m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &other) {
    require_compatible(other);
    for (const auto &[m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly &other) const {
    MultiPoly out = *this;
    out += other;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly &other) const {
    MultiPoly out = *this;
    out -= other;
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto &[m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly &other) const {
    require_compatible(other);
    MultiPoly out(vars_);
    Monomial m(vars_.size());
    for (const auto &[ma, ca] : terms_) {
        for (const auto &[mb, cb] : other.terms_) {
            for (size_t k = 0; k < m.size(); k++) {
                m[k] = ma[k] + mb[k];
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const BigRational &c) const {
    MultiPoly out(vars_);
    BigRational factor = c;
    factor.canonicalize();
    if (factor == 0) {
        return out;
    }
    out.terms_ = terms_;
    for (auto &[m, coef] : out.terms_) {
        coef *= factor;
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (exponent) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent) {
            base = base * base;
        }
    }
    return result;
}

bool MultiPoly::operator==(const MultiPoly &other) const {
    return vars_ == other.vars_ && terms_ == other.terms_;
}

BigRational MultiPoly::eval(std::span<const BigRational> point) const {
    if (point.size() != vars_.size()) {
        throw std::invalid_argument("eval: point has wrong number of coordinates");
    }
    // Cache powers per variable.
    std::vector<std::vector<BigRational>> powers(vars_.size());
    for (size_t k = 0; k < vars_.size(); k++) {
        int deg = std::max(degree_in(k), 0);
        powers[k].resize(static_cast<size_t>(deg) + 1);
        BigRational x = point[k];
        x.canonicalize();
        powers[k][0] = 1;
        for (int e = 1; e <= deg; e++) {
            powers[k][e] = powers[k][e - 1] * x;
        }
    }
    BigRational acc = 0;
    for (const auto &[m, c] : terms_) {
        BigRational t = c;
        for (size_t k = 0; k < m.size(); k++) {
            if (m[k]) {
                t *= powers[k][m[k]];
            }
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::string &var, const MultiPoly &value) const {
    require_compatible(value);
    size_t idx = var_index(var);
    int deg = std::max(degree_in(idx), 0);
    std::vector<MultiPoly> powers;
    powers.push_back(constant(vars_, 1));
    for (int e = 1; e <= deg; e++) {
        powers.push_back(powers.back() * value);
    }
    MultiPoly out(vars_);
    for (const auto &[m, c] : terms_) {
        Monomial rest = m;
        int e = rest[idx];
        rest[idx] = 0;
        MultiPoly term(vars_);
        term.add_term(rest, c);
        out += term * powers[e];
    }
    return out;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
    MultiPoly out(vars_);
    for (const auto &[m, c] : terms_) {
        if (std::accumulate(m.begin(), m.end(), 0) == degree) {
            out.terms_.emplace(m, c);
        }
    }
    return out;
}

MultiPoly MultiPoly::truncated(int order) const {
    MultiPoly out(vars_);
    for (const auto &[m, c] : terms_) {
        if (std::accumulate(m.begin(), m.end(), 0) <= order) {
            out.terms_.emplace(m, c);
        }
    }
    return out;
}

MultiPoly MultiPoly::divide_by_monomial(const Monomial &divisor) const {
    if (divisor.size() != vars_.size()) {
        throw std::invalid_argument("divide_by_monomial: arity mismatch");
    }
    MultiPoly out(vars_);
    for (const auto &[m, c] : terms_) {
        Monomial q = m;
        for (size_t k = 0; k < q.size(); k++) {
            q[k] -= divisor[k];
            if (q[k] < 0) {
                throw std::domain_error("divide_by_monomial: term " + to_string() + " is not divisible");
            }
        }
        out.terms_.emplace(q, c);
    }
    return out;
}

BigRational MultiPoly::content() const {
    if (terms_.empty()) {
        return 1;
    }
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto &[m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    BigRational g(num_gcd, den_lcm);
    g.canonicalize();
    if (leading_coefficient() < 0) {
        g = -g;
    }
    return g;
}

std::pair<MultiPoly, MultiPoly> MultiPoly::divmod(const MultiPoly &a, const MultiPoly &b) {
    a.require_compatible(b);
    if (a.vars_.size() != 1) {
        throw std::invalid_argument("divmod: only univariate polynomials are supported");
    }
    if (b.is_zero()) {
        throw std::domain_error("division by zero polynomial");
    }
    MultiPoly q(a.vars_);
    MultiPoly r = a;
    const int db = b.total_degree();
    const BigRational lead = b.leading_coefficient();
    while (!r.is_zero() && r.total_degree() >= db) {
        int shift = r.total_degree() - db;
        BigRational f = r.leading_coefficient() / lead;
        MultiPoly t(a.vars_);
        t.add_term(Monomial{shift}, f);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c] = *it;
        BigRational mag = abs(c);
        bool unit = mag == 1;
        bool has_var = std::any_of(m.begin(), m.end(), [](int e) { return e != 0; });
        if (first) {
            out << (c < 0 ? "-" : "");
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (!unit || !has_var) {
            out << mag.get_str();
        }
        bool need_star = !unit || !has_var;
        for (size_t k = 0; k < m.size(); k++) {
            if (m[k] == 0) {
                continue;
            }
            out << (need_star ? "*" : "") << vars_[k];
            if (m[k] > 1) {
                out << "^" << m[k];
            }
            need_star = true;
        }
    }
    return out.str();
}

nlohmann::json MultiPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        terms.push_back({{"exp", it->first}, {"num", it->second.get_num().get_str()},
                         {"den", it->second.get_den().get_str()}});
    }
    return {{"vars", vars_}, {"terms", terms}};
}

MultiPoly MultiPoly::from_json(const nlohmann::json &j) {
    MultiPoly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto &t : j.at("terms")) {
        auto exp = t.at("exp").get<Monomial>();
        BigInt num(t.at("num").get<std::string>(), 10);
        BigInt den(t.at("den").get<std::string>(), 10);
        if (den == 0) {
            throw std::invalid_argument("polynomial JSON: zero denominator");
        }
        BigRational c(num, den);
        c.canonicalize();
        p.add_term(exp, c);
    }
    return p;
}

RationalFn::RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars()) {
        throw std::invalid_argument("rational function: numerator and denominator variables differ");
    }
    if (den_.is_zero()) {
        throw std::domain_error("division by zero polynomial");
    }
    BigRational c = den_.content();
    BigRational inv = 1 / c;
    num_ = num_ * inv;
    den_ = den_ * inv;
}

RationalFn::RationalFn(const MultiPoly &poly) : RationalFn(poly, MultiPoly::constant(poly.vars(), 1)) {
}

RationalFn RationalFn::operator+(const RationalFn &other) const {
    return {num_ * other.den_ + other.num_ * den_, den_ * other.den_};
}

RationalFn RationalFn::operator-(const RationalFn &other) const {
    return {num_ * other.den_ - other.num_ * den_, den_ * other.den_};
}

RationalFn RationalFn::operator*(const RationalFn &other) const {
    return {num_ * other.num_, den_ * other.den_};
}

RationalFn RationalFn::operator/(const RationalFn &other) const {
    return {num_ * other.den_, den_ * other.num_};
}

bool RationalFn::equals(const RationalFn &other) const {
    return num_ * other.den_ == other.num_ * den_;
}

BigRational RationalFn::eval(std::span<const BigRational> point) const {
    BigRational d = den_.eval(point);
    if (d == 0) {
        throw std::domain_error("rational function denominator vanishes");
    }
    return num_.eval(point) / d;
}

BigRational RationalFn::eval1(const BigRational &x) const {
    return eval(std::span<const BigRational>(&x, 1));
}

nlohmann::json RationalFn::to_json() const {
    return {{"num", num_.to_json()}, {"den", den_.to_json()}};
}

RationalFn RationalFn::from_json(const nlohmann::json &j) {
    return {MultiPoly::from_json(j.at("num")), MultiPoly::from_json(j.at("den"))};
}

MultiPoly series_truncate(const RationalFn &f, int order) {
    const auto &vars = f.vars();
    BigRational d0 = f.den().constant_term();
    if (d0 == 0) {
        throw std::domain_error("series_truncate: denominator vanishes at the origin");
    }
    std::vector<MultiPoly> den_parts;
    for (int k = 0; k <= order; k++) {
        den_parts.push_back(f.den().homogeneous_part(k));
    }
    std::vector<MultiPoly> s;
    MultiPoly out(vars);
    for (int k = 0; k <= order; k++) {
        MultiPoly acc = f.num().homogeneous_part(k);
        for (int j = 1; j <= k; j++) {
            acc -= den_parts[j] * s[k - j];
        }
        s.push_back(acc * (1 / d0));
        out += s.back();
    }
    return out;
}

int sign_at(const MultiPoly &p, const BigRational &x) {
    return sgn(p.eval(std::span<const BigRational>(&x, 1)));
}

FixedPoint isolate_fixed_point(const RationalFn &f, const BigRational &lo, const BigRational &hi, double tolerance,
                               int scan_points) {
    if (f.vars().size() != 1) {
        throw std::invalid_argument("isolate_fixed_point: function must be univariate");
    }
    if (!(lo < hi) || scan_points < 2) {
        throw std::invalid_argument("isolate_fixed_point: empty interval");
    }
    // g(x) = (num - x den) / den; the sign of g is sign(num - x den) * sign(den).
    const auto &vars = f.vars();
    MultiPoly x = MultiPoly::variable(vars, vars[0]);
    MultiPoly g_num = f.num() - x * f.den();
    auto g_sign = [&](const BigRational &t) {
        int sd = sign_at(f.den(), t);
        if (sd == 0) {
            throw std::domain_error("isolate_fixed_point: denominator vanishes inside the interval");
        }
        return sign_at(g_num, t) * sd;
    };

    BigRational step = (hi - lo) / scan_points;
    BigRational a = lo + step / 1024;
    if (g_sign(a) >= 0) {
        throw std::runtime_error("isolate_fixed_point: requires f(x) < x just above the interval start");
    }
    BigRational b;
    bool found = false;
    for (int k = 1; k < scan_points; k++) {
        BigRational t = lo + step * k;
        int s = g_sign(t);
        if (s > 0) {
            b = t;
            found = true;
            break;
        }
        if (s < 0) {
            a = t;
        } else {
            // Exact root on the grid.
            return {t, t, t.get_d()};
        }
    }
    if (!found) {
        throw std::runtime_error("no threshold in interval");
    }
    while (BigRational(b - a).get_d() > tolerance) {
        BigRational mid = (a + b) / 2;
        int s = g_sign(mid);
        if (s == 0) {
            return {mid, mid, mid.get_d()};
        }
        (s < 0 ? a : b) = mid;
    }
    BigRational mid = (a + b) / 2;
    return {a, b, mid.get_d()};
}

}  // namespace msd
