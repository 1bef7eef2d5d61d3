#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "altrun/errors.hpp"
#include "altrun/families.hpp"
#include "altrun/numbers.hpp"
#include "altrun/polynomial.hpp"
#include "altrun/report.hpp"
#include "altrun/series.hpp"
#include "altrun/triangles.hpp"

namespace altrun {

// Exponential generating function checks: each id binds one closed-form
// series to one independently constructed coefficient family.
//   SinhV       sinh(x sinh z)        -> V(n,k) rows
//   TanSec      tan z + sec z         -> E_n
//   SpringerGf  1/(cos z - sin z)     -> s_n
//   QGf         (x + tan z)/(1 - x tan z) -> Q_n(x)
//   QHatGf      sec z/(1 - x tan z)   -> QHat_n(x)
enum class GfId { SinhV, TanSec, SpringerGf, QGf, QHatGf };

inline constexpr std::array<GfId, 5> kAllGfIds{
    GfId::SinhV, GfId::TanSec, GfId::SpringerGf, GfId::QGf, GfId::QHatGf};

inline const char* gf_name(GfId id) {
    switch (id) {
        case GfId::SinhV: return "SINH_V";
        case GfId::TanSec: return "TAN_SEC";
        case GfId::SpringerGf: return "SPRINGER_GF";
        case GfId::QGf: return "Q_GF";
        case GfId::QHatGf: return "QHAT_GF";
    }
    return "?";
}

inline constexpr std::size_t kMaxGfOrder = kDefaultSeriesOrder;

// Expands the closed form exactly to the given order and compares, after
// multiplying coefficient n by n!, against the family or triangle values.
inline VerificationReport verify_gf(GfId id, std::size_t order = kDefaultSeriesOrder) {
    if (order > kMaxGfOrder)
        throw BoundExceeded("verify_gf: order bound is " +
                            std::to_string(kMaxGfOrder));
    const std::string name = gf_name(id);
    TruncatedSeries series = TruncatedSeries(order);
    switch (id) {
        case GfId::SinhV: {
            TruncatedSeries inner =
                TruncatedSeries::constant(Polynomial::x(), order) *
                TruncatedSeries::sinh_z(order);
            series = TruncatedSeries::sinh_z(order).compose(inner);
            break;
        }
        case GfId::TanSec:
            series = TruncatedSeries::tan_z(order) + TruncatedSeries::sec_z(order);
            break;
        case GfId::SpringerGf:
            series = TruncatedSeries::constant(Rational(1), order) /
                     (TruncatedSeries::cos_z(order) - TruncatedSeries::sin_z(order));
            break;
        case GfId::QGf: {
            TruncatedSeries x = TruncatedSeries::constant(Polynomial::x(), order);
            TruncatedSeries tan = TruncatedSeries::tan_z(order);
            TruncatedSeries one = TruncatedSeries::constant(Rational(1), order);
            series = (x + tan) * (one - x * tan).inverse();
            break;
        }
        case GfId::QHatGf: {
            TruncatedSeries x = TruncatedSeries::constant(Polynomial::x(), order);
            TruncatedSeries tan = TruncatedSeries::tan_z(order);
            TruncatedSeries one = TruncatedSeries::constant(Rational(1), order);
            series = TruncatedSeries::sec_z(order) * (one - x * tan).inverse();
            break;
        }
    }
    for (std::size_t n = 0; n <= order; ++n) {
        Polynomial got = Rational(factorial(n)) * series.coeff(n);
        Polynomial want;
        switch (id) {
            case GfId::SinhV:
                if (n % 2 == 1) {
                    std::size_t m = (n - 1) / 2;
                    for (std::size_t k = 0; k <= m; ++k)
                        want += Rational(v_number(m, static_cast<long>(k))) *
                                Polynomial::monomial(Rational(1), 2 * k + 1);
                }
                break;
            case GfId::TanSec:
                want = Polynomial::constant(
                    Rational(special_number(SpecialId::Euler, n)));
                break;
            case GfId::SpringerGf:
                want = Polynomial::constant(
                    Rational(special_number(SpecialId::Springer, n)));
                break;
            case GfId::QGf:
                want = family_poly(FamilyId::Q, n);
                break;
            case GfId::QHatGf:
                want = family_poly(FamilyId::QHat, n);
                break;
        }
        if (!(got == want))
            return fail_report(name, static_cast<long>(n), got.str(), want.str());
    }
    VerificationReport rep = pass_report(name, 0);
    rep.range_high = static_cast<long>(order);
    return rep;
}

}  // namespace altrun
