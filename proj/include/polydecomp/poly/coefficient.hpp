#pragma once

/**
 * @file coefficient.hpp
 * @brief Capability tiers for polynomial coefficient domains.
 *
 * A coefficient domain is any value type T with exact +, -, *, unary -, ==
 * and a specialization of coefficient_traits<T>. Elements carry their own
 * domain (a quadratic element knows its d), so zero and one are produced
 * "like" an existing element instead of from a global constant.
 *
 * Tiers:
 *   Ring      zero_like, one_like, from_integer_like, is_zero
 *   QAlgebra  Ring + divide_by_integer (exact, characteristic zero)
 *   Field     QAlgebra + inverse of nonzero elements
 */

#include <concepts>
#include <cstdint>

namespace polydecomp {

enum class Tier { Ring = 0, QAlgebra = 1, Field = 2 };

template <class T>
struct coefficient_traits;  // specialized per domain

template <class T>
concept Ring = requires(const T& a, const T& b, std::int64_t n) {
  { coefficient_traits<T>::tier } -> std::convertible_to<Tier>;
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { coefficient_traits<T>::zero_like(a) } -> std::same_as<T>;
  { coefficient_traits<T>::one_like(a) } -> std::same_as<T>;
  { coefficient_traits<T>::from_integer_like(a, n) } -> std::same_as<T>;
  { coefficient_traits<T>::is_zero(a) } -> std::same_as<bool>;
};

template <class T>
concept QAlgebra = Ring<T> && (coefficient_traits<T>::tier >= Tier::QAlgebra) &&
                   requires(const T& a, std::int64_t n) {
                     { coefficient_traits<T>::divide_by_integer(a, n) } -> std::same_as<T>;
                   };

template <class T>
concept Field = QAlgebra<T> && (coefficient_traits<T>::tier >= Tier::Field) && requires(const T& a) {
  { coefficient_traits<T>::inverse(a) } -> std::same_as<T>;
};

template <Ring T>
T zero_like(const T& x) {
  return coefficient_traits<T>::zero_like(x);
}

template <Ring T>
T one_like(const T& x) {
  return coefficient_traits<T>::one_like(x);
}

template <Ring T>
T from_integer_like(const T& x, std::int64_t n) {
  return coefficient_traits<T>::from_integer_like(x, n);
}

template <Ring T>
bool is_zero(const T& x) {
  return coefficient_traits<T>::is_zero(x);
}

template <Ring T>
bool is_one(const T& x) {
  return x == coefficient_traits<T>::one_like(x);
}

/// n * x for a machine integer n.
template <Ring T>
T scale(const T& x, std::int64_t n) {
  return T(coefficient_traits<T>::from_integer_like(x, n) * x);
}

/// x / n, exact; n must be nonzero.
template <QAlgebra T>
T divide_by_integer(const T& x, std::int64_t n) {
  return coefficient_traits<T>::divide_by_integer(x, n);
}

template <Field T>
T inverse(const T& x) {
  return coefficient_traits<T>::inverse(x);
}

template <Field T>
T divide(const T& x, const T& y) {
  return T(x * coefficient_traits<T>::inverse(y));
}

}  // namespace polydecomp
