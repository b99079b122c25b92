#pragma once

// Uniform interface over the rings with divisor enumeration (Z and the
// imaginary-quadratic orders), used by the quartic ring decision and the
// witness construction.

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polydecomp/domains/integer.hpp"
#include "polydecomp/domains/quadratic.hpp"
#include "polydecomp/poly/coefficient.hpp"

namespace polydecomp {

template <class R>
struct order_traits;

template <>
struct order_traits<Integer> {
  using field_type = Rational;

  static Rational to_field(const Integer& x) { return Rational(x); }
  static std::optional<Integer> from_field(const Rational& x) {
    if (!is_integral(x)) return std::nullopt;
    return Integer(x.get_num());
  }
  static std::optional<Integer> divides_exact(const Integer& x, const Integer& y) {
    return polydecomp::divides_exact(x, y);
  }
  static bool is_unit(const Integer& x) { return abs(x) == 1; }
  static Integer norm(const Integer& x) { return abs(x); }
  static Integer representative(const Integer& x) { return abs(x); }
  static std::vector<Integer> units(const Integer&) { return {Integer(-1), Integer(1)}; }
  static std::vector<Integer> divisors_up_to_associates(const Integer& x) { return positive_divisors(x); }
  static bool is_irreducible(const Integer& x) {
    if (x == 0 || is_unit(x)) throw PreconditionError("is_irreducible: zero or unit");
    return is_prime(Integer(abs(x)));
  }
  static std::string ring_name(const Integer&) { return "Z"; }
  static std::string field_name(const Integer&) { return "Q"; }
};

template <>
struct order_traits<QuadraticInt> {
  using field_type = QuadraticRat;

  static QuadraticRat to_field(const QuadraticInt& x) { return x.to_field(); }
  static std::optional<QuadraticInt> from_field(const QuadraticRat& x) { return x.in_order(); }
  static std::optional<QuadraticInt> divides_exact(const QuadraticInt& x, const QuadraticInt& y) {
    return polydecomp::divides_exact(x, y);
  }
  static bool is_unit(const QuadraticInt& x) { return polydecomp::is_unit(x); }
  static Integer norm(const QuadraticInt& x) { return polydecomp::norm(x); }
  static QuadraticInt representative(const QuadraticInt& x) { return associate_representative(x); }
  static std::vector<QuadraticInt> units(const QuadraticInt& like) { return polydecomp::units(like.ring()); }
  static std::vector<QuadraticInt> divisors_up_to_associates(const QuadraticInt& x) {
    return polydecomp::divisors_up_to_associates(x);
  }
  static bool is_irreducible(const QuadraticInt& x) { return polydecomp::is_irreducible(x); }
  static std::string ring_name(const QuadraticInt& x) { return x.ring().name(); }
  static std::string field_name(const QuadraticInt& x) { return x.ring().field_name(); }
};

/// An integral domain with a fraction field and enumerable divisors.
template <class R>
concept NumberOrder = Ring<R> && Field<typename order_traits<R>::field_type> &&
                      requires(const R& x, const typename order_traits<R>::field_type& k) {
                        { order_traits<R>::to_field(x) } -> std::same_as<typename order_traits<R>::field_type>;
                        { order_traits<R>::from_field(k) } -> std::same_as<std::optional<R>>;
                        { order_traits<R>::divisors_up_to_associates(x) } -> std::same_as<std::vector<R>>;
                      };

template <NumberOrder R>
using field_of = typename order_traits<R>::field_type;

template <NumberOrder R>
bool order_divides(const R& x, const R& y) {
  return order_traits<R>::divides_exact(x, y).has_value();
}

template <NumberOrder R>
bool order_associates(const R& x, const R& y) {
  if (is_zero(x) || is_zero(y)) return is_zero(x) && is_zero(y);
  return order_divides(x, y) && order_divides(y, x);
}

}  // namespace polydecomp
