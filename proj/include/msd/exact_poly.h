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

#ifndef MSD_EXACT_POLY_H
#define MSD_EXACT_POLY_H

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace msd {

using BigRational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p" into a canonical rational.
BigRational parse_rational(const std::string &text);
/// Exact conversion of a finite double.
BigRational rational_from_double(double x);

/// Exponent vector, one entry per polynomial variable.
using Monomial = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic on exponents.
struct GradedLex {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Sparse multivariate polynomial with rational coefficients over a fixed, ordered variable list.
///
/// Zero coefficients are never stored. Binary operations require identical variable lists.
class MultiPoly {
   public:
    using TermMap = std::map<Monomial, BigRational, GradedLex>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(std::vector<std::string> vars, const BigRational &c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string &name);

    const std::vector<std::string> &vars() const { return vars_; }
    const TermMap &terms() const { return terms_; }
    size_t num_vars() const { return vars_.size(); }
    size_t var_index(const std::string &name) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;
    int degree_in(size_t var) const;

    BigRational coefficient(const Monomial &m) const;
    /// Coefficient of the graded-lex largest monomial. Zero polynomial has none.
    const BigRational &leading_coefficient() const;
    const Monomial &leading_monomial() const;
    BigRational constant_term() const;

    void add_term(const Monomial &m, const BigRational &c);

    MultiPoly operator+(const MultiPoly &other) const;
    MultiPoly operator-(const MultiPoly &other) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly &other) const;
    MultiPoly operator*(const BigRational &c) const;
    MultiPoly &operator+=(const MultiPoly &other);
    MultiPoly &operator-=(const MultiPoly &other);
    MultiPoly pow(unsigned exponent) const;

    bool operator==(const MultiPoly &other) const;

    BigRational eval(std::span<const BigRational> point) const;
    /// Replaces variable `var` by `value` (which must share this variable list).
    MultiPoly substitute(const std::string &var, const MultiPoly &value) const;
    /// Sum of terms of exactly the given total degree.
    MultiPoly homogeneous_part(int degree) const;
    /// Drops all terms of total degree greater than `order`.
    MultiPoly truncated(int order) const;
    /// Exact division by a monomial; throws if some term is not divisible.
    MultiPoly divide_by_monomial(const Monomial &m) const;

    /// Rational c with (*this / c) an integer polynomial with coprime coefficients and positive leading term.
    BigRational content() const;

    /// Univariate quotient and remainder (single-variable polynomials only).
    static std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly &a, const MultiPoly &b);

    std::string to_string() const;

    nlohmann::json to_json() const;
    static MultiPoly from_json(const nlohmann::json &j);

   private:
    void require_compatible(const MultiPoly &other) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Quotient of two polynomials over the same variables.
///
/// Stored with the denominator scaled to a primitive integer polynomial whose leading
/// coefficient is positive. No polynomial GCD is taken, so equality is by cross-multiplication.
class RationalFn {
   public:
    RationalFn() = default;
    RationalFn(MultiPoly num, MultiPoly den);
    explicit RationalFn(const MultiPoly &poly);

    const MultiPoly &num() const { return num_; }
    const MultiPoly &den() const { return den_; }
    const std::vector<std::string> &vars() const { return num_.vars(); }

    RationalFn operator+(const RationalFn &other) const;
    RationalFn operator-(const RationalFn &other) const;
    RationalFn operator*(const RationalFn &other) const;
    RationalFn operator/(const RationalFn &other) const;

    /// num1 * den2 == num2 * den1.
    bool equals(const RationalFn &other) const;

    /// Throws std::domain_error if the denominator vanishes at `point`.
    BigRational eval(std::span<const BigRational> point) const;
    BigRational eval1(const BigRational &x) const;

    nlohmann::json to_json() const;
    static RationalFn from_json(const nlohmann::json &j);

   private:
    MultiPoly num_;
    MultiPoly den_;
};

/// Taylor expansion about the origin in all variables, truncated at total degree `order`.
/// Throws std::domain_error if the denominator vanishes at the origin.
MultiPoly series_truncate(const RationalFn &f, int order);

/// Result of bracketing a fixed point f(x) = x.
struct FixedPoint {
    BigRational lo;
    BigRational hi;
    double value = 0.0;
};

/// Smallest fixed point of a univariate rational function in the open interval (lo, hi).
///
/// Scans g(x) = f(x) - x on a uniform grid for the first strict sign change away from g(lo+) < 0, then
/// bisects with exact rational arithmetic until the bracket is narrower than `tolerance`. Throws
/// std::runtime_error("no threshold in interval") when no sign change is found.
FixedPoint isolate_fixed_point(const RationalFn &f, const BigRational &lo, const BigRational &hi,
                               double tolerance = 1e-12, int scan_points = 1024);

/// Sign (-1, 0, +1) of a univariate polynomial at an exact point.
int sign_at(const MultiPoly &p, const BigRational &x);

}  // namespace msd

#endif
