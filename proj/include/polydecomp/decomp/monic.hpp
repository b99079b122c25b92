#pragma once

/**
 * @file monic.hpp
 * @brief Monic decomposition over Q-algebras and its normalization.
 *
 * For monic f of degree N = n*m and monic h = x^m + h_{m-1} x^{m-1} + ... + h_1 x,
 * the coefficient of x^{N-k} in h^n (1 <= k < m) is n*h_{m-k} plus an integer
 * polynomial in h_{m-1}, ..., h_{m-k+1}. Matching it against f determines
 * h_{m-k} after one division by n, so h is unique. g then comes from the
 * h-adic expansion of f: f decomposes through h iff every digit is constant.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polydecomp/decomp/decomposition.hpp"
#include "polydecomp/errors.hpp"
#include "polydecomp/poly/polynomial.hpp"

namespace polydecomp {

namespace detail {

inline void require_proper_divisor(std::size_t degree, std::size_t m) {
  if (degree < 4) throw PreconditionError("decomposition needs degree >= 4, got " + std::to_string(degree));
  if (m <= 1 || m >= degree || degree % m != 0)
    throw PreconditionError("inner degree " + std::to_string(m) + " is not a proper divisor of " +
                            std::to_string(degree));
}

}  // namespace detail

/// The unique (g, h) with f = g(h), h monic of degree m and h(0) = 0, if any.
template <QAlgebra T>
std::optional<Decomposition<T>> monic_decompose(const Polynomial<T>& f, std::size_t m) {
  if (!f.is_monic()) throw PreconditionError("monic_decompose: f must be monic");
  const std::size_t N = f.degree().value();
  detail::require_proper_divisor(N, m);
  const std::size_t n = N / m;
  const auto n_int = static_cast<std::int64_t>(n);

  const T zero = zero_like(f.prototype());
  std::vector<T> hc(m + 1, zero);
  hc[m] = one_like(zero);
  for (std::size_t k = 1; k < m; ++k) {
    // h_{m-k} is still zero here, so this is the "integer polynomial" part
    const T known = pow(Polynomial<T>(hc), n).coefficient(N - k);
    hc[m - k] = divide_by_integer(T(f.coefficient(N - k) - known), n_int);
  }
  Polynomial<T> h(std::move(hc));

  std::vector<T> gc;
  for (const Polynomial<T>& digit : hadic_digits(f, h)) {
    if (!digit.is_constant()) return std::nullopt;
    gc.push_back(digit.is_zero() ? zero : digit.constant_term());
  }
  auto dec = Decomposition<T>::make(Polynomial<T>(std::move(gc)), std::move(h));
  if (!dec.recomposes_to(f)) return std::nullopt;
  return dec;
}

/// True iff every coefficient of g and h lies in `sub`.
template <Ring T, class Subring>
bool coefficients_in_QR(const Decomposition<T>& dec, const Subring& sub) {
  for (const auto* p : {&dec.g, &dec.h})
    for (const T& c : p->coefficients())
      if (!sub.contains(c)) return false;
  return true;
}

/// Given monic f = G(H), returns the normalized pair
///   g = G(v x + H(0)) - f(0),  h = u v^{deg G - 1} (H - H(0))
/// with u = lc(G), v = lc(H), which requires u v^{deg G} = 1. The result is
/// monic, has zero constant terms, and satisfies g(h) = f - f(0).
template <Ring T>
std::pair<Decomposition<T>, NormalizationParams<T>> normalize_monic_decomposition(const Polynomial<T>& f,
                                                                                  const Polynomial<T>& G,
                                                                                  const Polynomial<T>& H) {
  if (!f.is_monic()) throw PreconditionError("normalize_monic_decomposition: f must be monic");
  if (G.degree() < Degree(2) || H.degree() < Degree(2))
    throw PreconditionError("normalize_monic_decomposition: G and H must be nonlinear");
  if (!(compose(G, H) == f)) throw PreconditionError("normalize_monic_decomposition: G(H) != f");

  const std::size_t k = G.degree().value();
  const T& u = G.leading_coefficient();
  const T& v = H.leading_coefficient();
  T v_pow = one_like(v);
  for (std::size_t i = 0; i + 1 < k; ++i) v_pow = T(v_pow * v);  // v^{k-1}
  const T scale_h = T(u * v_pow);                                  // u v^{k-1}
  if (!is_one(T(scale_h * v))) throw PreconditionError("normalize_monic_decomposition: lc(G) lc(H)^deg(G) != 1");

  const T h0 = H.constant_term();
  const T f0 = f.constant_term();
  Polynomial<T> inner_shift{h0, v};  // v x + H(0)
  Polynomial<T> g = compose(G, inner_shift) - f0;
  Polynomial<T> h = scale_h * (H - h0);
  NormalizationParams<T> params{v, scale_h, T(-(scale_h * h0)), f0};
  return {Decomposition<T>::make(std::move(g), std::move(h)), std::move(params)};
}

/**
 * Decomposition over a subring R of a Q-algebra A for monic f with
 * coefficients in R. `lift` maps R -> A and `lower` maps A -> optional<R>.
 * If f = G(H) over R, normalizing gives a monic pair over R, and that pair is
 * the unique one found over A; so f decomposes over R with inner degree m iff
 * the pair found over A lowers.
 */
template <Ring R, QAlgebra A, class Lift, class Lower>
std::optional<Decomposition<R>> monic_decompose_over_subring(const Polynomial<R>& f, std::size_t m, Lift&& lift,
                                                             Lower&& lower) {
  auto lifted = map_coefficients<A>(f, lift);
  auto dec = monic_decompose(lifted, m);
  if (!dec) return std::nullopt;
  auto g = try_map_coefficients<R>(dec->g, lower);
  auto h = try_map_coefficients<R>(dec->h, lower);
  if (!g || !h) return std::nullopt;
  return Decomposition<R>::make(std::move(*g), std::move(*h));
}

}  // namespace polydecomp
