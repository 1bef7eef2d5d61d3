#include "altrun/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

#include "altrun/errors.hpp"

namespace altrun {
namespace {

Polynomial poly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

Polynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> v(deg(rng) + 1);
    for (auto& c : v) c = make_rational(num(rng), den(rng));
    return Polynomial(std::move(v));
}

TEST(Polynomial, MulBasics) {
    Polynomial one_plus = poly({1, 1});
    Polynomial one_minus = poly({1, -1});
    EXPECT_EQ(one_plus * one_minus, poly({1, 0, -1}));
    EXPECT_TRUE((poly({3, 2, 1}) * Polynomial::zero()).is_zero());
    // (1+x)(2x+10x^2) is the run polynomial of S_4.
    EXPECT_EQ(one_plus * poly({0, 2, 10}), poly({0, 2, 12, 10}));
}

TEST(Polynomial, ZeroDegreeSentinel) {
    EXPECT_TRUE(Polynomial::zero().is_zero());
    EXPECT_TRUE(Polynomial({Rational(0), Rational(0)}).is_zero());
    EXPECT_EQ(poly({0, 2, 12, 10}).degree(), 3u);
    EXPECT_EQ(Polynomial::constant(Rational(5)).degree(), 0u);
}

TEST(Polynomial, DivExact) {
    EXPECT_EQ(poly({1, 0, -1}).divexact(poly({1, 1})), poly({1, -1}));
    EXPECT_EQ(poly({0, 2, 12, 10}).divexact(poly({1, 1})), poly({0, 2, 10}));
    EXPECT_THROW(poly({1, 0, 1}).divexact(poly({1, 1})), NonExactDivision);
}

TEST(Polynomial, SubstituteLinearFraction) {
    // (1+x) under x -> 2x/(1+x), homogenized with m = 1.
    EXPECT_EQ(poly({1, 1}).substitute_linear_fraction(2, 0, 1, 1, 1), poly({1, 3}));
    EXPECT_EQ(Polynomial::constant(Rational(1)).substitute_linear_fraction(2, 0, 1, 1, 0),
              Polynomial::constant(Rational(1)));
    // The peak polynomial of S_4 maps onto the run polynomial of S_4.
    Polynomial s = poly({8, 16}).substitute_linear_fraction(2, 0, 1, 1, 2);
    EXPECT_EQ(s, poly({8, 48, 40}));
    EXPECT_EQ(make_rational(1, 4) * (Polynomial::x() * s), poly({0, 2, 12, 10}));
    EXPECT_THROW(poly({1, 2, 3}).substitute_linear_fraction(1, 0, 0, 1, 1),
                 DegreeExceedsHomogenization);
}

TEST(Polynomial, EvaluateAndDerivative) {
    Polynomial p = poly({1, -2, 3});
    EXPECT_EQ(p.evaluate(Rational(2)), Rational(9));
    EXPECT_EQ(p.derivative(), poly({-2, 6}));
    EXPECT_TRUE(Polynomial::constant(Rational(7)).derivative().is_zero());
}

TEST(Polynomial, IntegerCoeffs) {
    EXPECT_THROW(Polynomial({make_rational(1, 2)}).integer_coeffs(),
                 IntegralityViolation);
    auto v = poly({0, 2, 12, 10}).integer_coeffs();
    ASSERT_EQ(v.size(), 4u);
    EXPECT_EQ(v[3], 10);
}

TEST(Polynomial, DistributivityProperty) {
    std::mt19937 rng(20240817);
    for (int it = 0; it < 200; ++it) {
        Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a + b) * c, a * c + b * c);
    }
}

TEST(Polynomial, MulDivRoundTripProperty) {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        Polynomial a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        EXPECT_EQ((a * b).divexact(b), a);
    }
}

TEST(Polynomial, SubstituteHomogenizationStepProperty) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int it = 0; it < 100; ++it) {
        Polynomial p = random_poly(rng);
        if (p.is_zero()) continue;
        long a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
        std::size_t m = p.degree() + static_cast<std::size_t>(it % 3);
        Polynomial lo = p.substitute_linear_fraction(a, b, c, d, m);
        Polynomial hi = p.substitute_linear_fraction(a, b, c, d, m + 1);
        EXPECT_EQ(hi, Polynomial({Rational(d), Rational(c)}) * lo);
    }
}

TEST(Polynomial, Str) {
    EXPECT_EQ(poly({0, 2, 12, 10}).str(), "2*x + 12*x^2 + 10*x^3");
    EXPECT_EQ(poly({1, -1}).str(), "1 - x");
    EXPECT_EQ(Polynomial::zero().str(), "0");
}

}  // namespace
}  // namespace altrun
