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

#include <gtest/gtest.h>

#include <random>

#include "msd/fixtures.h"

using namespace msd;

namespace {

const std::vector<std::string> kD = {"delta"};
const std::vector<std::string> kXY = {"x", "y"};

MultiPoly delta() { return MultiPoly::variable(kD, "delta"); }
MultiPoly one_d() { return MultiPoly::constant(kD, 1); }

BigRational binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return BigRational(r);
}

MultiPoly random_poly(std::mt19937 &rng, int max_degree, int terms) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> denom(1, 5);
    MultiPoly p(kXY);
    for (int t = 0; t < terms; t++) {
        p.add_term({deg(rng), deg(rng)}, BigRational(coef(rng), denom(rng)));
    }
    return p;
}

}  // namespace

TEST(Rational, parse_and_convert) {
    EXPECT_EQ(parse_rational("-3/6"), BigRational(-1, 2));
    EXPECT_EQ(parse_rational("7"), BigRational(7));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_EQ(rational_from_double(0.375), BigRational(3, 8));
}

TEST(MultiPoly, binomial_expansion) {
    MultiPoly p = (one_d() - delta()).pow(11);
    EXPECT_EQ(p.total_degree(), 11);
    for (int k = 0; k <= 11; k++) {
        BigRational expected = binomial(11, k) * (k % 2 == 0 ? 1 : -1);
        EXPECT_EQ(p.coefficient({k}), expected) << "k=" << k;
    }
}

TEST(MultiPoly, fixture_constant_terms) {
    CurveFixtures fx = CurveFixtures::load_default();
    EXPECT_EQ(fx.at("P").constant_term(), BigRational(13365));
    EXPECT_EQ(fx.at("Q").constant_term(), BigRational(2187));
}

TEST(MultiPoly, ring_axioms_on_random_inputs) {
    std::mt19937 rng(3);
    MultiPoly zero(kXY);
    MultiPoly one = MultiPoly::constant(kXY, 1);
    for (int trial = 0; trial < 60; trial++) {
        MultiPoly a = random_poly(rng, 4, 5), b = random_poly(rng, 4, 5), c = random_poly(rng, 3, 4);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + zero, a);
        EXPECT_EQ(a * one, a);
        EXPECT_TRUE((a - a).is_zero());
        std::vector<BigRational> pt = {BigRational(2, 3), BigRational(-5, 7)};
        EXPECT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
    }
}

TEST(MultiPoly, rejects_mismatched_variables) {
    EXPECT_THROW(delta() + MultiPoly::variable(kXY, "x"), std::invalid_argument);
    EXPECT_THROW(MultiPoly::variable(kD, "eps"), std::invalid_argument);
}

TEST(MultiPoly, substitute_and_truncate) {
    MultiPoly x = MultiPoly::variable(kXY, "x"), y = MultiPoly::variable(kXY, "y");
    MultiPoly p = x * x + x * y;
    EXPECT_EQ(p.substitute("x", y), y * y * BigRational(2));
    MultiPoly q = x + x * y + x * x * y;
    EXPECT_EQ(q.truncated(2), x + x * y);
    EXPECT_EQ(q.homogeneous_part(3), x * x * y);
    EXPECT_EQ(q.divide_by_monomial({1, 0}), MultiPoly::constant(kXY, 1) + y + x * y);
    EXPECT_THROW(q.divide_by_monomial({0, 1}), std::domain_error);
}

TEST(MultiPoly, univariate_divmod) {
    MultiPoly d = delta();
    MultiPoly a = d.pow(3) - one_d();
    MultiPoly b = d - one_d();
    auto [quot, rem] = MultiPoly::divmod(a, b);
    EXPECT_EQ(quot, d * d + d + one_d());
    EXPECT_TRUE(rem.is_zero());
}

TEST(MultiPoly, json_round_trip) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 10; trial++) {
        MultiPoly p = random_poly(rng, 5, 6);
        EXPECT_EQ(MultiPoly::from_json(p.to_json()), p);
    }
    RationalFn f(delta() * delta(), one_d() + delta() * BigRational(3));
    EXPECT_TRUE(RationalFn::from_json(f.to_json()).equals(f));
}

TEST(RationalFn, arithmetic_and_normalization) {
    RationalFn f(delta(), one_d() * BigRational(-2) - delta() * BigRational(4));
    EXPECT_GT(f.den().leading_coefficient(), 0);
    RationalFn g(one_d(), one_d() + delta());
    RationalFn sum = f + g;
    BigRational x(1, 3);
    EXPECT_EQ(sum.eval1(x), f.eval1(x) + g.eval1(x));
    EXPECT_EQ((f * g).eval1(x), f.eval1(x) * g.eval1(x));
    EXPECT_EQ((f / g).eval1(x), f.eval1(x) / g.eval1(x));
    EXPECT_TRUE(((f - f).num()).is_zero());
    EXPECT_THROW(g.eval1(BigRational(-1)), std::domain_error);
}

TEST(Series, matches_numerator_through_order) {
    CurveFixtures fx = CurveFixtures::load_default();
    MultiPoly d3 = delta().pow(3);
    RationalFn curve(d3 * fx.at("P"), fx.at("Q") * BigRational(2));
    for (int order : {3, 5, 8}) {
        MultiPoly s = series_truncate(curve, order);
        MultiPoly residual = s * curve.den() - curve.num();
        for (const auto &[m, c] : residual.terms()) {
            EXPECT_GT(m[0], order) << "order " << order;
        }
    }
    EXPECT_EQ(series_truncate(curve, 2).is_zero(), true);
    EXPECT_EQ(series_truncate(curve, 3).coefficient({3}), BigRational(55, 18));
}

TEST(Series, constant_function) {
    RationalFn c(MultiPoly::constant(kD, 5), MultiPoly::constant(kD, 2));
    EXPECT_EQ(series_truncate(c, 4), MultiPoly::constant(kD, BigRational(5, 2)));
    RationalFn bad(one_d(), delta());
    EXPECT_THROW(series_truncate(bad, 2), std::domain_error);
}

TEST(FixedPoint, brackets_known_root) {
    // f(x) = 2 x^2 has fixed point 1/2 in (0, 1).
    RationalFn f(delta() * delta() * BigRational(2), one_d());
    FixedPoint fp = isolate_fixed_point(f, 0, 1);
    EXPECT_NEAR(fp.value, 0.5, 1e-12);
    EXPECT_LE(fp.lo, BigRational(1, 2));
    EXPECT_GE(fp.hi, BigRational(1, 2));
    EXPECT_LT(BigRational(fp.hi - fp.lo).get_d(), 1e-12);
}

TEST(FixedPoint, no_crossing_reports_error) {
    RationalFn f(delta() * delta(), one_d());
    try {
        isolate_fixed_point(f, 0, BigRational(1, 2));
        FAIL();
    } catch (const std::runtime_error &e) {
        EXPECT_STREQ(e.what(), "no threshold in interval");
    }
}

TEST(FixedPoint, sign_at) {
    MultiPoly p = delta() - MultiPoly::constant(kD, BigRational(1, 3));
    EXPECT_EQ(sign_at(p, 0), -1);
    EXPECT_EQ(sign_at(p, BigRational(1, 3)), 0);
    EXPECT_EQ(sign_at(p, 1), 1);
}
