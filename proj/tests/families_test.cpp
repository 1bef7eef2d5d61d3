#include "altrun/families.hpp"

#include <gtest/gtest.h>

#include "altrun/errors.hpp"
#include "altrun/perm_stats.hpp"

namespace altrun {
namespace {

Polynomial poly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

TEST(Families, RunPolynomials) {
    EXPECT_EQ(family_poly(FamilyId::R, 1), poly({1}));
    EXPECT_EQ(family_poly(FamilyId::R, 2), poly({0, 2}));
    EXPECT_EQ(family_poly(FamilyId::R, 3), poly({0, 2, 4}));
    EXPECT_EQ(family_poly(FamilyId::R, 4), poly({0, 2, 12, 10}));
    EXPECT_EQ(family_poly(FamilyId::R, 5), poly({0, 2, 28, 58, 32}));
}

TEST(Families, LeftPeakPolynomials) {
    EXPECT_EQ(family_poly(FamilyId::PHat, 1), poly({1}));
    EXPECT_EQ(family_poly(FamilyId::PHat, 2), poly({1, 1}));
    EXPECT_EQ(family_poly(FamilyId::PHat, 3), poly({1, 5}));
    EXPECT_EQ(family_poly(FamilyId::PHat, 4), poly({1, 18, 5}));
    EXPECT_EQ(family_poly(FamilyId::PHat, 5), poly({1, 58, 61}));
}

TEST(Families, DerivativePolynomials) {
    EXPECT_EQ(family_poly(FamilyId::Q, 0), poly({0, 1}));
    EXPECT_EQ(family_poly(FamilyId::Q, 1), poly({1, 0, 1}));
    EXPECT_EQ(family_poly(FamilyId::Q, 2), poly({0, 2, 0, 2}));
    EXPECT_EQ(family_poly(FamilyId::Q, 3), poly({2, 0, 8, 0, 6}));
    EXPECT_EQ(family_poly(FamilyId::QHat, 0), poly({1}));
    EXPECT_EQ(family_poly(FamilyId::QHat, 2), poly({1, 0, 2}));
}

TEST(Families, PeakPolynomials) {
    EXPECT_EQ(family_poly(FamilyId::P, 1), poly({1}));
    EXPECT_EQ(family_poly(FamilyId::P, 4), poly({8, 16}));
}

TEST(Families, SignedRunPolynomials) {
    EXPECT_EQ(family_poly(FamilyId::RHat, 1), poly({0, 1}));
    EXPECT_EQ(family_poly(FamilyId::RHat, 2), poly({0, 1, 3}));
}

TEST(Families, UnsupportedIndices) {
    EXPECT_THROW(family_poly(FamilyId::R, 0), UnsupportedIndex);
    EXPECT_THROW(family_poly(FamilyId::PHat, 0), UnsupportedIndex);
    EXPECT_NO_THROW(family_poly(FamilyId::Q, 0));
}

TEST(Families, OracleAgreement) {
    for (std::size_t n = 2; n <= 8; ++n) {
        auto counts = oracle_row(n, RowStatistic::alt_runs).counts;
        Polynomial r = family_poly(FamilyId::R, n);
        ASSERT_EQ(counts.size(), r.degree() + 1);
        for (std::size_t k = 0; k < counts.size(); ++k)
            EXPECT_EQ(Rational(counts[k]), r.coeff(k));
    }
    for (std::size_t n = 1; n <= 8; ++n) {
        auto pk = oracle_row(n, RowStatistic::pk).counts;
        auto lpk = oracle_row(n, RowStatistic::lpk).counts;
        Polynomial p = family_poly(FamilyId::P, n);
        Polynomial ph = family_poly(FamilyId::PHat, n);
        for (std::size_t k = 0; k < pk.size(); ++k)
            EXPECT_EQ(Rational(pk[k]), p.coeff(k));
        for (std::size_t k = 0; k < lpk.size(); ++k)
            EXPECT_EQ(Rational(lpk[k]), ph.coeff(k));
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        auto counts = oracle_row(n, RowStatistic::signed_runs_up).counts;
        Polynomial rh = family_poly(FamilyId::RHat, n);
        ASSERT_EQ(counts.size(), rh.degree() + 1);
        for (std::size_t k = 0; k < counts.size(); ++k)
            EXPECT_EQ(Rational(counts[k]), rh.coeff(k));
    }
}

TEST(Families, EvaluationsAtOne) {
    for (std::size_t n = 2; n <= 12; ++n)
        EXPECT_EQ(family_poly(FamilyId::R, n).evaluate(Rational(1)),
                  Rational(factorial(n)));
    for (std::size_t n = 1; n <= 12; ++n) {
        EXPECT_EQ(family_poly(FamilyId::PHat, n).evaluate(Rational(1)),
                  Rational(factorial(n)));
        EXPECT_EQ(family_poly(FamilyId::RHat, n).evaluate(Rational(1)),
                  Rational(int_pow(2, n - 1) * factorial(n)));
    }
}

TEST(Families, Degrees) {
    for (std::size_t n = 2; n <= 12; ++n)
        EXPECT_EQ(family_poly(FamilyId::R, n).degree(), n - 1);
    for (std::size_t n = 1; n <= 12; ++n) {
        EXPECT_EQ(family_poly(FamilyId::P, n).degree(), (n - 1) / 2);
        EXPECT_EQ(family_poly(FamilyId::PHat, n).degree(), n / 2);
    }
}

TEST(Families, DerivativePolynomialParity) {
    // Q_n has only powers of the parity of n+1; QHat_n of the parity of n.
    for (std::size_t n = 0; n <= 12; ++n) {
        Polynomial q = family_poly(FamilyId::Q, n);
        for (std::size_t i = 0; i <= q.degree(); ++i)
            if (i % 2 != (n + 1) % 2) EXPECT_EQ(q.coeff(i), Rational(0));
        Polynomial qh = family_poly(FamilyId::QHat, n);
        for (std::size_t i = 0; i <= qh.degree(); ++i)
            if (i % 2 != n % 2) EXPECT_EQ(qh.coeff(i), Rational(0));
    }
}

TEST(Families, EulerNumbers) {
    const long expected[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385};
    for (std::size_t n = 0; n <= 8; ++n)
        EXPECT_EQ(special_number(SpecialId::Euler, n), expected[n]);
}

TEST(Families, SpringerNumbers) {
    const long expected[] = {1, 1, 3, 11, 57, 361, 2763};
    for (std::size_t n = 0; n <= 6; ++n)
        EXPECT_EQ(special_number(SpecialId::Springer, n), expected[n]);
    for (std::size_t n = 1; n <= 6; ++n)
        EXPECT_EQ(special_number(SpecialId::Springer, n),
                  oracle_row(n, RowStatistic::snake_count).counts[0]);
}

TEST(Families, RCoefficientsMatchRecurrenceTriangle) {
    for (std::size_t n = 1; n <= 20; ++n) {
        Polynomial r = family_poly(FamilyId::R, n);
        for (long k = 0; k < static_cast<long>(n); ++k)
            EXPECT_EQ(r.coeff(static_cast<std::size_t>(k)),
                      Rational(run_count(n, k)));
    }
}

}  // namespace
}  // namespace altrun
