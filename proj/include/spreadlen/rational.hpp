#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace spreadlen {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational r;
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
  r.canonicalize();
  if (e < 0) return Rational(1) / r;
  return r;
}

// int x^{2j} e^{-x^2} dx = gaussian_even_moment(j) * sqrt(pi)
inline Rational gaussian_even_moment(unsigned long j) {
  return Rational(factorial(2 * j), int_pow(Integer(4), j) * factorial(j));
}

// Generalized binomial C(z, k) = z(z-1)...(z-k+1)/k! for rational z.
inline Rational binomial_rational(const Rational& z, unsigned long k) {
  Rational r(1);
  for (unsigned long t = 0; t < k; ++t) r *= (z - static_cast<long>(t));
  return r / Rational(factorial(k));
}

// Generalized Laguerre L_m^{(alpha)}(x) via its terminating sum, exact.
inline Rational laguerre(unsigned long m, const Rational& alpha, const Rational& x) {
  Rational s(0);
  Rational xp(1);
  for (unsigned long i = 0; i <= m; ++i) {
    Rational term = binomial_rational(Rational(m) + alpha, m - i) * xp /
                    Rational(factorial(i));
    s += (i % 2 == 0) ? term : -term;
    xp *= x;
  }
  return s;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace spreadlen
