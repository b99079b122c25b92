#pragma once

/**
 * @file quartic.hpp
 * @brief Degree-4 decomposition: closed form over a field, decision over a ring.
 *
 * Over a field K, f = a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0 decomposes iff with
 *   c = a3 / (2 a4),  e = a2 - a4 c^2
 * we have a1 = e c, and then f = (a4 x^2 + e x + a0) o (x^2 + c x).
 *
 * Over an order R with fraction field K, every K-decomposition is, for some
 * u in K* and v in K,
 *   g = (d/u^2) x^2 + ((2dv + e)/u) x + (dv^2 + ev) + a0,   h = u x^2 + uc x - uv
 * with d = a4. Put w = uv. Then (2dv + e)/u = 2w (d/u^2) + e/u and
 * dv^2 + ev = w^2 (d/u^2) + w (e/u). So if u, uc, d/u^2 and e/u lie in R the
 * choice w = 0 works; conversely w in R and d/u^2 in R force e/u in R. Hence
 * f decomposes over R iff some u in R satisfies
 *   (i) u^2 | d,  (ii) u | e,  (iii) uc in R.
 * All three are invariant under unit multiples, and (i) forces u | d, so it is
 * enough to try one representative per associate class of divisors of d.
 */

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "polydecomp/decomp/decomposition.hpp"
#include "polydecomp/domains/order.hpp"
#include "polydecomp/errors.hpp"
#include "polydecomp/poly/polynomial.hpp"

namespace polydecomp {

template <Field K>
std::optional<Decomposition<K>> quartic_field_decompose(const Polynomial<K>& f) {
  if (!(f.degree() == 4)) throw PreconditionError("quartic_field_decompose: degree must be 4");
  const K a4 = f.coefficient(4);
  const K c = divide(f.coefficient(3), scale(a4, 2));
  const K e = K(f.coefficient(2) - a4 * c * c);
  if (!(f.coefficient(1) == K(e * c))) return std::nullopt;
  const K zero = zero_like(a4);
  return Decomposition<K>::make(Polynomial<K>{f.coefficient(0), e, a4}, Polynomial<K>{zero, c, one_like(a4)});
}

/// Audit record for one candidate u.
template <NumberOrder R>
struct CandidateCheck {
  R u;
  bool square_divides_lead;     // (i)   u^2 | d
  bool divides_middle;          // (ii)  u | e
  bool scaled_shift_in_ring;    // (iii) uc in R
  bool passes() const { return square_divides_lead && divides_middle && scaled_shift_in_ring; }
};

template <NumberOrder R>
struct DecomposableOverRing {
  Decomposition<R> decomposition;
  NormalizationParams<field_of<R>> params;  // h = mu^{-1} o (x^2 + cx), mu = u^{-1} x + v
};

template <NumberOrder R>
struct IndecomposableOverRing {
  Decomposition<field_of<R>> field_evidence;
};

struct IndecomposableOverField {};

template <NumberOrder R>
struct RingDecideOutcome {
  std::variant<DecomposableOverRing<R>, IndecomposableOverRing<R>, IndecomposableOverField> result;
  std::vector<CandidateCheck<R>> candidates;

  bool decomposable_over_ring() const { return std::holds_alternative<DecomposableOverRing<R>>(result); }
  bool indecomposable_over_ring() const { return std::holds_alternative<IndecomposableOverRing<R>>(result); }
  bool indecomposable_over_field() const { return std::holds_alternative<IndecomposableOverField>(result); }
};

/// Decides whether a quartic over Z or an imaginary-quadratic order
/// decomposes over the ring, over its fraction field only, or not at all.
template <NumberOrder R>
RingDecideOutcome<R> quartic_ring_decide(const Polynomial<R>& f) {
  using K = field_of<R>;
  using traits = order_traits<R>;
  if (!(f.degree() == 4)) throw PreconditionError("quartic_ring_decide: degree must be 4");

  const Polynomial<K> fk = map_coefficients<K>(f, [](const R& x) { return traits::to_field(x); });
  auto field_dec = quartic_field_decompose(fk);
  if (!field_dec) return {IndecomposableOverField{}, {}};

  const R& d = f.leading_coefficient();
  const R a0 = f.constant_term();
  const K c = field_dec->h.coefficient(1);
  const K e = field_dec->g.coefficient(1);

  RingDecideOutcome<R> outcome{IndecomposableOverRing<R>{*field_dec}, {}};
  for (const R& u : traits::divisors_up_to_associates(d)) {
    const K uk = traits::to_field(u);
    const std::optional<R> d_over_u2 = traits::divides_exact(R(u * u), d);
    const std::optional<R> e_over_u = traits::from_field(divide(e, uk));
    const std::optional<R> uc = traits::from_field(K(uk * c));
    outcome.candidates.push_back({u, d_over_u2.has_value(), e_over_u.has_value(), uc.has_value()});
    if (!outcome.candidates.back().passes()) continue;

    const R zero = zero_like(u);
    auto dec = Decomposition<R>::make(Polynomial<R>{a0, *e_over_u, *d_over_u2}, Polynomial<R>{zero, *uc, u});
    if (!dec.recomposes_to(f)) throw std::logic_error("quartic_ring_decide: ring pair does not recompose");
    const K kzero = zero_like(uk);
    outcome.result = DecomposableOverRing<R>{std::move(dec), {uk, inverse(uk), kzero, traits::to_field(a0)}};
    return outcome;
  }
  return outcome;
}

}  // namespace polydecomp
