#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "noncong/error.hpp"

namespace noncong {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) fail(ErrorKind::invalid_argument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::invalid_argument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Serialized form used on every wire format: "num/den", always with a denominator.
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) fail(ErrorKind::invalid_argument, "not a rational: " + text);
  if (q.get_den() == 0) fail(ErrorKind::invalid_argument, "zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational rpow(const Rational& base, long exp) {
  Rational r(ipow(base.get_num(), static_cast<unsigned long>(exp < 0 ? -exp : exp)),
             ipow(base.get_den(), static_cast<unsigned long>(exp < 0 ? -exp : exp)));
  if (exp < 0) r = 1 / r;
  r.canonicalize();
  return r;
}

/// Floor of a rational.
inline Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Non-negative residue of `a` modulo `m` (m > 0).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// p-adic valuation; nullopt encodes v_p(0) = +infinity.
inline std::optional<long> valuation(const Integer& x, unsigned long p) {
  if (x == 0) return std::nullopt;
  if (p < 2) fail(ErrorKind::invalid_argument, "valuation base must be >= 2");
  Integer base(p);
  mpz_class rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), base.get_mpz_t()));
}

inline std::optional<long> valuation(const Rational& x, unsigned long p) {
  if (x == 0) return std::nullopt;
  return *valuation(x.get_num(), p) - *valuation(x.get_den(), p);
}

inline long valuation_or(const Rational& x, unsigned long p, long if_zero) {
  auto v = valuation(x, p);
  return v ? *v : if_zero;
}

inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) fail(ErrorKind::invalid_argument, "integer out of 64-bit range: " + z.get_str());
  return z.get_si();
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace noncong
