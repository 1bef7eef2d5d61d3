#pragma once

#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

#include "altrun/errors.hpp"
#include "altrun/numbers.hpp"
#include "altrun/polynomial.hpp"
#include "altrun/triangles.hpp"

namespace altrun {

// The six polynomial families.
//   R     alternating-run polynomials of S_n            (n >= 1, R_1 := 1)
//   P     interior-peak polynomials of S_n              (n >= 1)
//   PHat  left-peak polynomials of S_n                  (n >= 1)
//   RHat  alternating-run polynomials of up signed B_n  (n >= 1)
//   Q     derivative polynomials of tan                 (n >= 0)
//   QHat  derivative polynomials of sec                 (n >= 0)
enum class FamilyId { R, P, PHat, RHat, Q, QHat };

enum class SpecialId { Euler, Springer };

namespace detail {

class PolyLadder {
  public:
    template <typename Next>
    Polynomial at(std::size_t n, Next&& next) {
        std::lock_guard<std::mutex> lock(mu_);
        while (polys_.size() <= n) polys_.push_back(next(polys_));
        return polys_[n];
    }

  private:
    std::mutex mu_;
    std::vector<Polynomial> polys_;
};

// R_{m+1} = x((m-1)x + 2) R_m + x(1 - x^2) R_m'  from R_2 = 2x, R_1 := 1.
// Index i holds R_{i+1}.
inline Polynomial r_family(std::size_t n) {
    static PolyLadder ladder;
    return ladder.at(n - 1, [](const std::vector<Polynomial>& prev) {
        std::size_t m = prev.size();  // building R_{m+1}
        if (m == 0) return Polynomial::constant(Rational(1));
        if (m == 1) return Polynomial({Rational(0), Rational(2)});
        const Polynomial& rm = prev.back();
        Polynomial lin({Rational(2), Rational(static_cast<long>(m) - 1)});
        Polynomial cubic({Rational(0), Rational(1), Rational(0), Rational(-1)});
        return Polynomial::x() * lin * rm + cubic * rm.derivative();
    });
}

// PHat_{m+1} = (mx + 1) PHat_m + 2x(1-x) PHat_m'  from PHat_1 = 1, PHat_2 = 1+x.
inline Polynomial phat_family(std::size_t n) {
    static PolyLadder ladder;
    return ladder.at(n - 1, [](const std::vector<Polynomial>& prev) {
        std::size_t m = prev.size();
        if (m == 0) return Polynomial::constant(Rational(1));
        if (m == 1) return Polynomial({Rational(1), Rational(1)});
        const Polynomial& pm = prev.back();
        Polynomial lin({Rational(1), Rational(static_cast<long>(m))});
        Polynomial quad({Rational(0), Rational(2), Rational(-2)});
        return lin * pm + quad * pm.derivative();
    });
}

// Q_{m+1} = (1 + x^2) Q_m'  from Q_0 = x.
inline Polynomial q_family(std::size_t n) {
    static PolyLadder ladder;
    return ladder.at(n, [](const std::vector<Polynomial>& prev) {
        if (prev.empty()) return Polynomial::x();
        Polynomial one_plus_x2({Rational(1), Rational(0), Rational(1)});
        return one_plus_x2 * prev.back().derivative();
    });
}

// QHat_{m+1} = (1 + x^2) QHat_m' + x QHat_m  from QHat_0 = 1.
inline Polynomial qhat_family(std::size_t n) {
    static PolyLadder ladder;
    return ladder.at(n, [](const std::vector<Polynomial>& prev) {
        if (prev.empty()) return Polynomial::constant(Rational(1));
        Polynomial one_plus_x2({Rational(1), Rational(0), Rational(1)});
        return one_plus_x2 * prev.back().derivative() +
               Polynomial::x() * prev.back();
    });
}

// x P_n(x) via the peak closed form; the division by x must be
// exact, which poly_divexact enforces.
inline Polynomial p_family(std::size_t n) {
    static PolyLadder ladder;
    return ladder.at(n - 1, [](const std::vector<Polynomial>& prev) {
        std::size_t idx = prev.size() + 1;  // building P_idx
        std::size_t m = (idx + 1) / 2;      // idx = 2m-1 or 2m
        const bool odd = idx % 2 == 1;
        Polynomial x_pn;
        Polynomial one_minus({Rational(1), Rational(-1)});
        for (std::size_t j = 1; j <= m; ++j) {
            unsigned long fac = odd ? 2 * static_cast<unsigned long>(j) - 1
                                    : 2 * static_cast<unsigned long>(j);
            Rational scale = Rational(int_pow(2, 2 * (m - j)) * factorial(fac) *
                                      u_number(m, static_cast<long>(j)));
            x_pn += scale * Polynomial::monomial(Rational(1), j) *
                    one_minus.pow(m - j);
        }
        return x_pn.divexact(Polynomial::x());
    });
}

// RHat_n = x (1+x)^{n-1} PHat_n(2x/(1+x)), via homogenized substitution.
inline Polynomial rhat_family(std::size_t n) {
    static PolyLadder ladder;
    return ladder.at(n - 1, [](const std::vector<Polynomial>& prev) {
        std::size_t idx = prev.size() + 1;
        return Polynomial::x() *
               phat_family(idx).substitute_linear_fraction(2, 0, 1, 1, idx - 1);
    });
}

}  // namespace detail

inline Polynomial family_poly(FamilyId id, std::size_t n) {
    switch (id) {
        case FamilyId::R:
            if (n < 1) throw UnsupportedIndex("family R: n >= 1");
            return detail::r_family(n);
        case FamilyId::P:
            if (n < 1) throw UnsupportedIndex("family P: n >= 1");
            return detail::p_family(n);
        case FamilyId::PHat:
            if (n < 1) throw UnsupportedIndex("family PHAT: n >= 1");
            return detail::phat_family(n);
        case FamilyId::RHat:
            if (n < 1) throw UnsupportedIndex("family RHAT: n >= 1");
            return detail::rhat_family(n);
        case FamilyId::Q:
            return detail::q_family(n);
        case FamilyId::QHat:
            return detail::qhat_family(n);
    }
    throw UnsupportedIndex("unknown family");
}

inline const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::R: return "R";
        case FamilyId::P: return "P";
        case FamilyId::PHat: return "PHAT";
        case FamilyId::RHat: return "RHAT";
        case FamilyId::Q: return "Q";
        case FamilyId::QHat: return "QHAT";
    }
    return "?";
}

// E_n (tangent/secant numbers) and s_n (Springer numbers) through the
// derivative polynomials: E_{2n-1} = Q_{2n-1}(0), E_{2n} = QHat_{2n}(0),
// s_n = QHat_n(1).
inline Integer special_number(SpecialId id, std::size_t n) {
    switch (id) {
        case SpecialId::Euler: {
            Rational v = (n % 2 == 1)
                             ? detail::q_family(n).evaluate(Rational(0))
                             : detail::qhat_family(n).evaluate(Rational(0));
            return require_integer(v, "EULER");
        }
        case SpecialId::Springer:
            return require_integer(detail::qhat_family(n).evaluate(Rational(1)),
                                   "SPRINGER");
    }
    throw UnsupportedIndex("unknown special number");
}

}  // namespace altrun
