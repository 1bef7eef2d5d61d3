#pragma once

#include <utility>

#include "altrun/polynomial.hpp"

namespace altrun {

// Element of the differential ring Q[c,t]/(t^2 = c - 1) with the derivation
// D(c) = -2ct, D(t) = -c, modelling c = csc^2(theta) and t = cot(theta).
// Stored as even_part(c) + t * odd_part(c); the relation keeps t-degree <= 1.
class CotCscExpression {
  public:
    CotCscExpression() = default;

    CotCscExpression(Polynomial even_part, Polynomial odd_part)
        : even_(std::move(even_part)), odd_(std::move(odd_part)) {}

    static CotCscExpression csc_squared() {
        return {Polynomial::x(), Polynomial::zero()};
    }

    static CotCscExpression cot() {
        return {Polynomial::zero(), Polynomial::constant(Rational(1))};
    }

    static CotCscExpression constant(Rational v) {
        return {Polynomial::constant(std::move(v)), Polynomial::zero()};
    }

    const Polynomial& even_part() const { return even_; }
    const Polynomial& odd_part() const { return odd_; }

    friend bool operator==(const CotCscExpression& a, const CotCscExpression& b) = default;

    friend CotCscExpression operator+(const CotCscExpression& a, const CotCscExpression& b) {
        return {a.even_ + b.even_, a.odd_ + b.odd_};
    }

    friend CotCscExpression operator-(const CotCscExpression& a, const CotCscExpression& b) {
        return {a.even_ - b.even_, a.odd_ - b.odd_};
    }

    friend CotCscExpression operator*(const CotCscExpression& a, const CotCscExpression& b) {
        // (e1 + t o1)(e2 + t o2) with t^2 = c - 1.
        const Polynomial t2({Rational(-1), Rational(1)});
        return {a.even_ * b.even_ + t2 * a.odd_ * b.odd_,
                a.even_ * b.odd_ + a.odd_ * b.even_};
    }

    friend CotCscExpression operator*(const Rational& s, const CotCscExpression& a) {
        return {s * a.even_, s * a.odd_};
    }

    // d/dtheta.  D(e(c) + t o(c)) = e'(c)(-2ct) + (-c)o(c) + t o'(c)(-2ct),
    // reduced by t^2 = c - 1.
    CotCscExpression derive() const {
        const Polynomial c = Polynomial::x();
        Polynomial even = -(c * odd_) - 2 * (c * (c - Polynomial::constant(Rational(1))) * odd_.derivative());
        Polynomial odd = -2 * (c * even_.derivative());
        return {std::move(even), std::move(odd)};
    }

    CotCscExpression derive(std::size_t times) const {
        CotCscExpression r = *this;
        for (std::size_t i = 0; i < times; ++i) r = r.derive();
        return r;
    }

  private:
    Polynomial even_;
    Polynomial odd_;
};

}  // namespace altrun
