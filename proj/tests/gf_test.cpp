#include "altrun/gf_checks.hpp"

#include <gtest/gtest.h>

#include "altrun/errors.hpp"

namespace altrun {
namespace {

TEST(Gf, AllIdsPassAtModerateOrder) {
    for (GfId id : kAllGfIds) {
        auto rep = verify_gf(id, 12);
        EXPECT_TRUE(rep.passed) << gf_name(id)
                                << (rep.witness ? " z^" + std::to_string(rep.witness->index)
                                                : "");
    }
}

TEST(Gf, SinhVAtOrder7) {
    EXPECT_TRUE(verify_gf(GfId::SinhV, 7).passed);
}

TEST(Gf, TanSecAtOrder8) {
    EXPECT_TRUE(verify_gf(GfId::TanSec, 8).passed);
}

TEST(Gf, SpringerAtOrder8) {
    EXPECT_TRUE(verify_gf(GfId::SpringerGf, 8).passed);
}

TEST(Gf, QAtOrder10) {
    EXPECT_TRUE(verify_gf(GfId::QGf, 10).passed);
}

TEST(Gf, OrderBound) {
    EXPECT_THROW(verify_gf(GfId::TanSec, kMaxGfOrder + 1), BoundExceeded);
}

TEST(Gf, SinhVStructure) {
    // Only odd powers of x at odd powers of z; even z coefficients vanish.
    TruncatedSeries inner = TruncatedSeries::constant(Polynomial::x(), 11) *
                            TruncatedSeries::sinh_z(11);
    TruncatedSeries s = TruncatedSeries::sinh_z(11).compose(inner);
    for (std::size_t n = 0; n <= 11; ++n) {
        if (n % 2 == 0) {
            EXPECT_TRUE(s.coeff(n).is_zero());
        } else if (!s.coeff(n).is_zero()) {
            for (std::size_t i = 0; i <= s.coeff(n).degree(); i += 2)
                EXPECT_EQ(s.coeff(n).coeff(i), Rational(0));
        }
    }
}

TEST(Gf, TanSecMatchesDerivativeConstants) {
    // Odd z coefficients carry Q_n(0), even ones QHat_n(0).
    TruncatedSeries ts = TruncatedSeries::tan_z(10) + TruncatedSeries::sec_z(10);
    for (std::size_t n = 0; n <= 10; ++n) {
        Rational c = ts.coeff(n).is_zero() ? Rational(0) : ts.coeff(n).coeff(0);
        Polynomial fam = (n % 2 == 1) ? family_poly(FamilyId::Q, n)
                                      : family_poly(FamilyId::QHat, n);
        EXPECT_EQ(c * Rational(factorial(n)), fam.coeff(0)) << n;
    }
}

}  // namespace
}  // namespace altrun
