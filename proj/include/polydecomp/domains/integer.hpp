#pragma once

/**
 * @file integer.hpp
 * @brief Arbitrary-precision integers and rationals (GMP) as coefficient domains.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polydecomp/errors.hpp"
#include "polydecomp/poly/coefficient.hpp"

namespace polydecomp {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer make_integer(std::int64_t n) { return Integer(static_cast<long>(n)); }

inline Rational make_rational(const Integer& num, const Integer& den = Integer(1)) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

template <>
struct coefficient_traits<Integer> {
  static constexpr Tier tier = Tier::Ring;
  static Integer zero_like(const Integer&) { return Integer(0); }
  static Integer one_like(const Integer&) { return Integer(1); }
  static Integer from_integer_like(const Integer&, std::int64_t n) { return make_integer(n); }
  static bool is_zero(const Integer& x) { return x == 0; }
};

template <>
struct coefficient_traits<Rational> {
  static constexpr Tier tier = Tier::Field;
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static Rational from_integer_like(const Rational&, std::int64_t n) { return Rational(make_integer(n)); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational divide_by_integer(const Rational& x, std::int64_t n) {
    if (n == 0) throw PreconditionError("division by zero");
    return Rational(x / Rational(make_integer(n)));
  }
  static Rational inverse(const Rational& x) {
    if (x == 0) throw PreconditionError("inverse of zero");
    return Rational(1 / x);
  }
};

/// Exact quotient y / x, if x divides y.
inline std::optional<Integer> divides_exact(const Integer& x, const Integer& y) {
  if (x == 0) throw PreconditionError("divides_exact: zero divisor");
  if (!mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t())) return std::nullopt;
  Integer q;
  mpz_divexact(q.get_mpz_t(), y.get_mpz_t(), x.get_mpz_t());
  return q;
}

/// Nonnegative s with s*s == n, if n is a perfect square.
inline std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  return Integer(sqrt(n));
}

inline std::optional<Rational> exact_sqrt(const Rational& q) {
  auto num = exact_sqrt(Integer(q.get_num()));
  auto den = exact_sqrt(Integer(q.get_den()));
  if (!num || !den) return std::nullopt;
  return make_rational(*num, *den);
}

/// Floor of the square root of a nonnegative integer.
inline Integer isqrt(const Integer& n) {
  if (n < 0) throw PreconditionError("isqrt of a negative integer");
  return Integer(sqrt(n));
}

/// Positive divisors of n != 0 in ascending order (trial division).
inline std::vector<Integer> positive_divisors(const Integer& n) {
  if (n == 0) throw PreconditionError("divisors of zero");
  const Integer m = abs(n);
  std::vector<Integer> small, large;
  for (Integer k = 1; k * k <= m; ++k) {
    if (mpz_divisible_p(m.get_mpz_t(), k.get_mpz_t())) {
      small.push_back(k);
      Integer other = m / k;
      if (other != k) large.push_back(other);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline bool is_prime(const Integer& n) { return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace polydecomp
