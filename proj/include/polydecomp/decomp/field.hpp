#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polydecomp/decomp/decomposition.hpp"
#include "polydecomp/decomp/monic.hpp"
#include "polydecomp/errors.hpp"
#include "polydecomp/poly/polynomial.hpp"

namespace polydecomp {

/// f = g(h) over a field with h monic of degree m and h(0) = 0.
/// Reduces to the monic case via (f - f(0)) / lc(f) and scales g back.
template <Field T>
std::optional<Decomposition<T>> decompose_over_field(const Polynomial<T>& f, std::size_t m) {
  if (f.is_zero()) throw PreconditionError("decompose_over_field: zero polynomial");
  detail::require_proper_divisor(f.degree().value(), m);
  const T lead = f.leading_coefficient();
  const T f0 = f.constant_term();
  const Polynomial<T> monic = inverse(lead) * (f - f0);
  auto dec = monic_decompose(monic, m);
  if (!dec) return std::nullopt;
  return Decomposition<T>::make(lead * dec->g + f0, std::move(dec->h));
}

/// A complete chain c_1 o c_2 o ... o c_k = f of field-indecomposable factors.
/// Inner degrees are tried smallest first; the first success recurses.
template <Field T>
std::vector<Polynomial<T>> decompose_fully(const Polynomial<T>& f) {
  if (f.degree() < Degree(2)) throw PreconditionError("decompose_fully: degree must be >= 2");
  const std::size_t N = f.degree().value();
  for (std::size_t m = 2; m * 2 <= N; ++m) {
    if (N % m != 0) continue;
    if (auto dec = decompose_over_field(f, m)) {
      std::vector<Polynomial<T>> chain = decompose_fully(dec->g);
      std::vector<Polynomial<T>> inner = decompose_fully(dec->h);
      chain.insert(chain.end(), inner.begin(), inner.end());
      return chain;
    }
  }
  return {f};
}

/// Composes a chain c_1 o ... o c_k.
template <Ring T>
Polynomial<T> compose_chain(const std::vector<Polynomial<T>>& chain) {
  if (chain.empty()) throw PreconditionError("compose_chain: empty chain");
  Polynomial<T> acc = chain.back();
  for (std::size_t i = chain.size() - 1; i-- > 0;) acc = compose(chain[i], acc);
  return acc;
}

}  // namespace polydecomp
