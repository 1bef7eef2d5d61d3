#pragma once

#include <gmpxx.h>

#include <string>

#include "altrun/errors.hpp"

namespace altrun {

// Arbitrary-precision signed integer and rational.  Rationals are kept
// canonical (lowest terms, positive denominator) by the backend.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Integer num, Integer den) {
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer int_pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Integer int_pow(long base, unsigned long exp) {
    return int_pow(Integer(base), exp);
}

// 2^e as a rational, e may be negative.
inline Rational pow2(long e) {
    if (e >= 0) return Rational(int_pow(2, static_cast<unsigned long>(e)));
    return make_rational(1, int_pow(2, static_cast<unsigned long>(-e)));
}

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Narrows to Integer, or throws if the value is genuinely fractional.
inline Integer require_integer(const Rational& q, const std::string& what) {
    if (!is_integer(q))
        throw IntegralityViolation(what + ": non-integer value " + q.get_str());
    return q.get_num();
}

}  // namespace altrun
