#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "altrun/errors.hpp"
#include "altrun/numbers.hpp"

namespace altrun {

// Dense univariate polynomial over the rationals.  Coefficient i is the
// coefficient of x^i.  The zero polynomial stores no coefficients; its
// degree is not a number (is_zero() is the sentinel, never -1 arithmetic).
class Polynomial {
  public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    Polynomial(std::initializer_list<Rational> coeffs)
        : coeffs_(coeffs) {
        normalize();
    }

    static Polynomial zero() { return {}; }

    static Polynomial constant(Rational c) {
        return Polynomial(std::vector<Rational>{std::move(c)});
    }

    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

    // c * x^k
    static Polynomial monomial(Rational c, std::size_t k) {
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::size_t degree() const {
        assert(!is_zero() && "degree of the zero polynomial");
        return coeffs_.size() - 1;
    }

    // Coefficient of x^i; zero beyond the stored range.
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_constant() const { return coeffs_.size() <= 1; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    Polynomial operator-() const {
        std::vector<Rational> r(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = -coeffs_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        if (s == 0) return zero();
        std::vector<Rational> r(p.coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * p.coeffs_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial derivative() const {
        if (is_constant()) return zero();
        std::vector<Rational> r(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            r[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
        return Polynomial(std::move(r));
    }

    Rational evaluate(const Rational& v) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
        return acc;
    }

    Polynomial pow(std::size_t e) const {
        Polynomial r = constant(Rational(1));
        Polynomial base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    // Exact quotient; throws NonExactDivision on a nonzero remainder.
    Polynomial divexact(const Polynomial& divisor) const {
        assert(!divisor.is_zero() && "division by the zero polynomial");
        if (is_zero()) return zero();
        if (degree() < divisor.degree())
            throw NonExactDivision("divexact: degree of dividend below divisor");
        std::vector<Rational> rem = coeffs_;
        std::vector<Rational> quot(degree() - divisor.degree() + 1, Rational(0));
        const Rational& lead = divisor.coeffs_.back();
        for (std::size_t i = quot.size(); i-- > 0;) {
            Rational q = rem[i + divisor.degree()] / lead;
            quot[i] = q;
            for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
                rem[i + j] -= q * divisor.coeffs_[j];
        }
        for (const Rational& r : rem)
            if (r != 0) throw NonExactDivision("divexact: nonzero remainder");
        return Polynomial(std::move(quot));
    }

    // Sigma_k p_k (a x + b)^k (c x + d)^{m-k}, the denominator-cleared form of
    // (c x + d)^m * p((a x + b)/(c x + d)).  Requires m >= deg p.
    Polynomial substitute_linear_fraction(const Integer& a, const Integer& b,
                                          const Integer& c, const Integer& d,
                                          std::size_t m) const {
        if (is_zero()) return zero();
        if (m < degree())
            throw DegreeExceedsHomogenization(
                "substitute_linear_fraction: m < deg p");
        const Polynomial num({Rational(b), Rational(a)});
        const Polynomial den({Rational(d), Rational(c)});
        Polynomial acc = zero();
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            acc += coeffs_[k] * num.pow(k) * den.pow(m - k);
        }
        return acc;
    }

    // Integer coefficient vector (low to high); throws if any coefficient
    // is fractional.
    std::vector<Integer> integer_coeffs() const {
        std::vector<Integer> r;
        r.reserve(coeffs_.size());
        for (const Rational& c : coeffs_)
            r.push_back(require_integer(c, "integer_coeffs"));
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            Rational mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (i == 0) {
                os << mag.get_str();
            } else {
                if (mag != 1) os << mag.get_str() << "*";
                os << "x";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Polynomial operator*(long s, const Polynomial& p) { return Rational(s) * p; }

}  // namespace altrun
