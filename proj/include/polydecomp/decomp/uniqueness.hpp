#pragma once

// Inner factors of equal degree in two decompositions of the same polynomial
// over a characteristic-zero field differ by a linear map: H = a h + b.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "polydecomp/errors.hpp"
#include "polydecomp/poly/polynomial.hpp"

namespace polydecomp {

template <Ring T>
struct LinearRelation {
  T a;
  T b;
  friend bool operator==(const LinearRelation&, const LinearRelation&) = default;
};

/// (a, b) with H = a h + b, if H - a h is constant for a = lc(H) / lc(h).
template <Field T>
std::optional<LinearRelation<T>> linear_relate(const Polynomial<T>& h, const Polynomial<T>& H) {
  if (h.degree() < Degree(1) || !(h.degree() == H.degree()))
    throw PreconditionError("linear_relate: h and H must have the same degree >= 1");
  const T a = divide(H.leading_coefficient(), h.leading_coefficient());
  const Polynomial<T> rest = H - a * h;
  if (!rest.is_constant()) return std::nullopt;
  return LinearRelation<T>{a, rest.is_zero() ? zero_like(a) : rest.constant_term()};
}

/// Checks G(a h + h0) == sum_{i=0}^{deg G} G^{(i)}(h0) (a h)^i / i!.
template <QAlgebra T>
bool verify_taylor_expansion(const Polynomial<T>& G, const Polynomial<T>& h, const Polynomial<T>& h0, const T& a) {
  const Polynomial<T> lhs = compose(G, a * h + h0);
  if (G.is_zero()) return lhs.is_zero();

  const std::size_t m = G.degree().value();
  const Polynomial<T> ah = a * h;
  Polynomial<T> power = Polynomial<T>::constant(one_like(a));  // (a h)^i
  Polynomial<T> deriv = G;                                     // G^{(i)}
  std::int64_t factorial = 1;
  Polynomial<T> rhs;
  for (std::size_t i = 0; i <= m; ++i) {
    if (i > 0) {
      power = power * ah;
      deriv = derivative(deriv);
      factorial *= static_cast<std::int64_t>(i);
    }
    rhs += coefficient_traits<Polynomial<T>>::divide_by_integer(compose(deriv, h0) * power, factorial);
  }
  return lhs == rhs;
}

}  // namespace polydecomp
