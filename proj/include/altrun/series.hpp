#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "altrun/errors.hpp"
#include "altrun/numbers.hpp"
#include "altrun/polynomial.hpp"

namespace altrun {

inline constexpr std::size_t kDefaultSeriesOrder = 24;

// Power series in z truncated at a fixed order N, with coefficients that are
// polynomials in x: sum c_n(x) z^n + O(z^{N+1}).  Operands must carry the
// same order; re-truncate explicitly to mix orders.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t order)
        : coeffs_(order + 1) {}

    TruncatedSeries(std::size_t order, std::vector<Polynomial> coeffs)
        : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    static TruncatedSeries constant(Polynomial c, std::size_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    static TruncatedSeries constant(Rational c, std::size_t order) {
        return constant(Polynomial::constant(std::move(c)), order);
    }

    static TruncatedSeries z(std::size_t order) {
        TruncatedSeries s(order);
        if (order >= 1) s.coeffs_[1] = Polynomial::constant(Rational(1));
        return s;
    }

    // z^n/n! with the given parity pattern: exp, sin, cos, sinh, cosh.
    static TruncatedSeries exp_z(std::size_t order) {
        return from_egf(order, [](std::size_t) { return Rational(1); });
    }
    static TruncatedSeries sin_z(std::size_t order) {
        return from_egf(order, [](std::size_t n) {
            if (n % 2 == 0) return Rational(0);
            return Rational(sign_pow(static_cast<long>(n / 2)));
        });
    }
    static TruncatedSeries cos_z(std::size_t order) {
        return from_egf(order, [](std::size_t n) {
            if (n % 2 != 0) return Rational(0);
            return Rational(sign_pow(static_cast<long>(n / 2)));
        });
    }
    static TruncatedSeries sinh_z(std::size_t order) {
        return from_egf(order, [](std::size_t n) {
            return n % 2 == 1 ? Rational(1) : Rational(0);
        });
    }
    static TruncatedSeries tan_z(std::size_t order) {
        return sin_z(order) / cos_z(order);
    }
    static TruncatedSeries sec_z(std::size_t order) {
        return constant(Rational(1), order) / cos_z(order);
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Polynomial& coeff(std::size_t n) const { return coeffs_[n]; }

    TruncatedSeries truncated(std::size_t new_order) const {
        std::vector<Polynomial> c(coeffs_.begin(),
                                  coeffs_.begin() +
                                      std::min(coeffs_.size(), new_order + 1));
        return TruncatedSeries(new_order, std::move(c));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_orders(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t n = 0; n <= a.order(); ++n)
            r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_orders(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t n = 0; n <= a.order(); ++n)
            r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_orders(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= b.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    // Multiplicative inverse; the constant coefficient must be a nonzero
    // rational constant.
    TruncatedSeries inverse() const {
        if (coeffs_[0].is_zero() || !coeffs_[0].is_constant())
            throw NonUnitDenominator(
                "series inverse: constant coefficient is not a nonzero rational");
        const Rational c0 = coeffs_[0].coeff(0);
        TruncatedSeries r(order());
        r.coeffs_[0] = Polynomial::constant(1 / c0);
        for (std::size_t n = 1; n <= order(); ++n) {
            Polynomial acc;
            for (std::size_t k = 1; k <= n; ++k)
                acc += coeffs_[k] * r.coeffs_[n - k];
            r.coeffs_[n] = (-1 / c0) * acc;
        }
        return r;
    }

    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_orders(a, b);
        return a * b.inverse();
    }

    // this(inner); inner must have zero constant coefficient.
    TruncatedSeries compose(const TruncatedSeries& inner) const {
        check_orders(*this, inner);
        if (!inner.coeffs_[0].is_zero())
            throw NonzeroInnerConstant("series compose: inner constant term nonzero");
        TruncatedSeries r(order());
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            r = r * inner;
            r.coeffs_[0] += coeffs_[k];
        }
        return r;
    }

  private:
    template <typename F>
    static TruncatedSeries from_egf(std::size_t order, F coeff_at) {
        TruncatedSeries s(order);
        for (std::size_t n = 0; n <= order; ++n) {
            Rational c = coeff_at(n);
            if (c == 0) continue;
            s.coeffs_[n] = Polynomial::constant(c / Rational(factorial(n)));
        }
        return s;
    }

    static void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order())
            throw OrderMismatch("series arithmetic on mixed orders");
    }

    std::vector<Polynomial> coeffs_;
};

}  // namespace altrun
