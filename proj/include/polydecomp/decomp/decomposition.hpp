#pragma once

#include <utility>

#include "polydecomp/errors.hpp"
#include "polydecomp/poly/polynomial.hpp"

namespace polydecomp {

/// f = g(h(x)) with nonlinear g and h. `certificate` is compose(g, h),
/// computed at construction and kept for audit.
template <Ring T>
struct Decomposition {
  Polynomial<T> g;
  Polynomial<T> h;
  Polynomial<T> certificate;

  static Decomposition make(Polynomial<T> g, Polynomial<T> h) {
    if (g.degree() < Degree(2) || h.degree() < Degree(2))
      throw PreconditionError("decomposition factors must both have degree >= 2");
    Polynomial<T> cert = compose(g, h);
    return {std::move(g), std::move(h), std::move(cert)};
  }

  bool recomposes_to(const Polynomial<T>& f) const { return certificate == f; }

  friend bool operator==(const Decomposition& a, const Decomposition& b) { return a.g == b.g && a.h == b.h; }
};

/// The linear change of variables mu = u^{-1} x + v relating an arbitrary
/// inner factor H to its normal form h = mu(H) (monic, h(0) = 0), together
/// with the constant f(0) split off from the outer factor.
template <Ring T>
struct NormalizationParams {
  T u;               // leading coefficient of H
  T u_inverse;       // 1/u, obtained without division
  T v;               // constant term of mu
  T constant_shift;  // f(0)
};

}  // namespace polydecomp
