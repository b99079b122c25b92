#pragma once

/**
 * @file witness.hpp
 * @brief Quartics over a non-UFD order that decompose over the fraction field
 *        but not over the ring, built from two inequivalent factorizations.
 *
 * Pipeline: strip common associates -> pick l and the least prefix
 * p_1...p_s of the second factorization that l divides -> a = p_1...p_{s-1},
 * c = a/l, d = p_s^2 -> f = (d x^2 + l x) o (x^2 + c x).
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polydecomp/decomp/quartic.hpp"
#include "polydecomp/domains/order.hpp"
#include "polydecomp/domains/quadratic.hpp"
#include "polydecomp/errors.hpp"
#include "polydecomp/poly/polynomial.hpp"

namespace polydecomp {

template <NumberOrder R>
struct FactorizationPair {
  R element;
  std::vector<R> first;
  std::vector<R> second;
};

template <NumberOrder R>
struct WitnessParams {
  R ell;
  R a;
  R p_s;
  std::size_t s;  // 1-based index of p_s in the second list
};

template <NumberOrder R>
struct WitnessData {
  R ell;
  R a;
  R p_s;
  field_of<R> c;  // a / ell
  R d;            // p_s^2
  Polynomial<R> f;
};

struct ClauseResult {
  int clause;
  std::string name;
  bool passed;
  std::string detail;
};

struct WitnessReport {
  std::vector<ClauseResult> clauses;

  bool all_passed() const {
    for (const auto& c : clauses)
      if (!c.passed) return false;
    return !clauses.empty();
  }

  const ClauseResult* first_failure() const {
    for (const auto& c : clauses)
      if (!c.passed) return &c;
    return nullptr;
  }
};

namespace detail {

template <NumberOrder R>
R product(const std::vector<R>& factors, const R& like) {
  R acc = one_like(like);
  for (const R& x : factors) acc = R(acc * x);
  return acc;
}

template <NumberOrder R>
void require_valid(const FactorizationPair<R>& pair) {
  if (pair.first.empty() || pair.second.empty()) throw PreconditionError("invalid factorization: empty factor list");
  if (is_zero(pair.element)) throw PreconditionError("invalid factorization: zero element");
  for (const auto* list : {&pair.first, &pair.second}) {
    if (!order_associates(product(*list, pair.element), pair.element))
      throw PreconditionError("invalid factorization: product is not an associate of the element");
    for (const R& p : *list) {
      if (is_zero(p) || order_traits<R>::is_unit(p) || !order_traits<R>::is_irreducible(p))
        throw PreconditionError("invalid factorization: factor is not irreducible");
    }
  }
}

// Kuhn's augmenting-path matching on the associate relation.
template <NumberOrder R>
std::size_t associate_matching_size(const std::vector<R>& left, const std::vector<R>& right) {
  std::vector<std::vector<bool>> adj(left.size(), std::vector<bool>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) adj[i][j] = order_associates(left[i], right[j]);

  std::vector<std::ptrdiff_t> match_right(right.size(), -1);
  std::vector<bool> seen;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (!adj[i][j] || seen[j]) continue;
      seen[j] = true;
      if (match_right[j] < 0 || self(self, static_cast<std::size_t>(match_right[j]))) {
        match_right[j] = static_cast<std::ptrdiff_t>(i);
        return true;
      }
    }
    return false;
  };
  std::size_t matched = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    seen.assign(right.size(), false);
    if (augment(augment, i)) ++matched;
  }
  return matched;
}

}  // namespace detail

/// True iff no bijection pairs every factor with an associate factor.
template <NumberOrder R>
bool validate_inequivalent(const FactorizationPair<R>& pair) {
  detail::require_valid(pair);
  if (pair.first.size() != pair.second.size()) return true;
  return detail::associate_matching_size(pair.first, pair.second) < pair.first.size();
}

/// Removes factor pairs that are associates until the lists share none.
template <NumberOrder R>
FactorizationPair<R> strip_common_associates(const FactorizationPair<R>& pair) {
  detail::require_valid(pair);
  std::vector<R> first = pair.first;
  std::vector<R> second = pair.second;
  for (std::size_t i = 0; i < first.size();) {
    bool removed = false;
    for (std::size_t j = 0; j < second.size(); ++j) {
      if (order_associates(first[i], second[j])) {
        first.erase(first.begin() + static_cast<std::ptrdiff_t>(i));
        second.erase(second.begin() + static_cast<std::ptrdiff_t>(j));
        removed = true;
        break;
      }
    }
    if (!removed) ++i;
  }
  if (first.empty() || second.empty())
    throw PreconditionError("strip_common_associates: factorizations are equivalent");
  R alpha = detail::product(first, pair.element);
  return {std::move(alpha), std::move(first), std::move(second)};
}

/// l = first factor of the first list; s = least index with l | p_1...p_s.
template <NumberOrder R>
WitnessParams<R> derive_witness_params(const FactorizationPair<R>& stripped) {
  using traits = order_traits<R>;
  if (stripped.first.empty() || stripped.second.empty())
    throw PreconditionError("derive_witness_params: empty factor list");
  const R& ell = stripped.first.front();
  R prefix = one_like(ell);
  for (std::size_t i = 0; i < stripped.second.size(); ++i) {
    const R& p = stripped.second[i];
    R next = R(prefix * p);
    if (traits::divides_exact(ell, next)) {
      if (traits::divides_exact(ell, prefix) || traits::divides_exact(ell, p))
        throw std::logic_error("derive_witness_params: divisibility guarantees violated (corrupted factor data)");
      return {ell, prefix, p, i + 1};
    }
    prefix = std::move(next);
  }
  throw std::logic_error("derive_witness_params: l divides no prefix of the second factorization (corrupted data)");
}

/// f = (d x^2 + l x) o (x^2 + c x) = d x^4 + 2dc x^3 + (dc^2 + l) x^2 + lc x.
template <NumberOrder R>
WitnessData<R> build_witness_poly(const R& ell, const R& a, const R& p_s) {
  using traits = order_traits<R>;
  using K = field_of<R>;
  if (is_zero(ell)) throw PreconditionError("build_witness_poly: l is zero");
  if (!traits::divides_exact(ell, R(a * p_s))) throw PreconditionError("build_witness_poly: l does not divide a*p_s");
  if (traits::divides_exact(ell, a)) throw PreconditionError("build_witness_poly: l divides a");
  if (traits::divides_exact(ell, p_s)) throw PreconditionError("build_witness_poly: l divides p_s");

  const K lk = traits::to_field(ell);
  const K c = divide(traits::to_field(a), lk);
  const R d = R(p_s * p_s);
  const K dk = traits::to_field(d);
  const K zero = zero_like(c);
  const std::vector<K> fk{zero, K(lk * c), K(dk * c * c + lk), scale(K(dk * c), 2), dk};

  std::vector<R> coeffs;
  for (const K& coef : fk) {
    auto r = traits::from_field(coef);
    if (!r) throw PreconditionError("build_witness_poly: a coefficient escapes the ring");
    coeffs.push_back(std::move(*r));
  }
  return {ell, a, p_s, c, d, Polynomial<R>(std::move(coeffs))};
}

/// Checks (1) f decomposes over K with inner factor x^2 + cx, (2) f does not
/// decompose over R, (3) the construction invariants. Failures are reported,
/// never thrown.
template <NumberOrder R>
WitnessReport verify_witness(const WitnessData<R>& w, const FactorizationPair<R>* pair = nullptr) {
  using traits = order_traits<R>;
  using K = field_of<R>;
  WitnessReport report;

  std::optional<Decomposition<K>> field_dec;
  try {
    const Polynomial<K> fk = map_coefficients<K>(w.f, [](const R& x) { return traits::to_field(x); });
    field_dec = quartic_field_decompose(fk);
    const Polynomial<K> expected_h{zero_like(w.c), w.c, one_like(w.c)};
    if (!field_dec)
      report.clauses.push_back({1, "decomposes over " + traits::field_name(w.ell), false, "no K-decomposition"});
    else if (!(field_dec->h == expected_h))
      report.clauses.push_back({1, "decomposes over " + traits::field_name(w.ell), false, "inner factor is not x^2+cx"});
    else
      report.clauses.push_back({1, "decomposes over " + traits::field_name(w.ell), true, "inner factor x^2+cx"});
  } catch (const std::exception& ex) {
    report.clauses.push_back({1, "decomposes over " + traits::field_name(w.ell), false, ex.what()});
  }

  try {
    const auto outcome = quartic_ring_decide(w.f);
    const bool ok = outcome.indecomposable_over_ring();
    std::string detail = ok ? std::to_string(outcome.candidates.size()) + " candidate u checked, none passes"
                            : (outcome.decomposable_over_ring() ? "a ring decomposition exists" : "not decomposable over K");
    report.clauses.push_back({2, "indecomposable over " + traits::ring_name(w.ell), ok, detail});
  } catch (const std::exception& ex) {
    report.clauses.push_back({2, "indecomposable over " + traits::ring_name(w.ell), false, ex.what()});
  }

  std::vector<std::string> violated;
  try {
    if (!traits::divides_exact(w.ell, R(w.a * w.p_s))) violated.emplace_back("l | a*p_s");
    if (traits::divides_exact(w.ell, w.a)) violated.emplace_back("l does not divide a");
    if (traits::divides_exact(w.ell, w.p_s)) violated.emplace_back("l does not divide p_s");
    if (is_zero(w.ell) || traits::is_unit(w.ell) || !traits::is_irreducible(w.ell)) violated.emplace_back("l irreducible");
    if (is_zero(w.p_s) || traits::is_unit(w.p_s) || !traits::is_irreducible(w.p_s))
      violated.emplace_back("p_s irreducible");
    if (order_associates(w.ell, w.p_s)) violated.emplace_back("l, p_s non-associate");
    if (!(w.d == R(w.p_s * w.p_s))) violated.emplace_back("d = p_s^2");
    if (!(traits::to_field(w.a) == K(w.c * traits::to_field(w.ell)))) violated.emplace_back("c = a/l");
    const R zero = zero_like(w.ell);
    const Polynomial<K> outer{zero_like(w.c), traits::to_field(w.ell), traits::to_field(w.d)};
    const Polynomial<K> inner{zero_like(w.c), w.c, one_like(w.c)};
    const Polynomial<K> fk = map_coefficients<K>(w.f, [](const R& x) { return traits::to_field(x); });
    if (!(compose(outer, inner) == fk)) violated.emplace_back("f = (dx^2+lx) o (x^2+cx)");
    if (pair != nullptr) {
      try {
        detail::require_valid(*pair);
        if (!validate_inequivalent(*pair)) violated.emplace_back("factorizations inequivalent");
      } catch (const PreconditionError& ex) {
        violated.emplace_back(ex.what());
      }
    }
  } catch (const std::exception& ex) {
    violated.emplace_back(ex.what());
  }
  std::string detail;
  for (const auto& v : violated) detail += (detail.empty() ? "violated: " : ", ") + v;
  report.clauses.push_back({3, "construction invariants", violated.empty(), violated.empty() ? "all hold" : detail});
  return report;
}

template <NumberOrder R>
struct WitnessRun {
  FactorizationPair<R> stripped;
  WitnessParams<R> params;
  WitnessData<R> data;
  WitnessReport report;
};

/// strip -> derive -> build -> verify.
template <NumberOrder R>
WitnessRun<R> run_witness_pipeline(const FactorizationPair<R>& pair) {
  if (!validate_inequivalent(pair)) throw PreconditionError("witness: the two factorizations are equivalent");
  auto stripped = strip_common_associates(pair);
  auto params = derive_witness_params(stripped);
  auto data = build_witness_poly(params.ell, params.a, params.p_s);
  auto report = verify_witness(data, &pair);
  return {std::move(stripped), std::move(params), std::move(data), std::move(report)};
}

/// Classic elements with two inequivalent factorizations into irreducibles.
inline std::vector<FactorizationPair<QuadraticInt>> builtin_examples() {
  std::vector<FactorizationPair<QuadraticInt>> out;
  {
    // 6 = 2*3 = (1+sqrt(-5))(1-sqrt(-5))
    const auto R = QuadraticRing::imaginary(-5);
    auto z = [&](long a, long b) { return QuadraticInt(R, Integer(a), Integer(b)); };
    out.push_back({z(6, 0), {z(2, 0), z(3, 0)}, {z(1, 1), z(1, -1)}});
  }
  {
    // 6 = 2*3 = sqrt(-6) * (-sqrt(-6))
    const auto R = QuadraticRing::imaginary(-6);
    auto z = [&](long a, long b) { return QuadraticInt(R, Integer(a), Integer(b)); };
    out.push_back({z(6, 0), {z(2, 0), z(3, 0)}, {z(0, 1), z(0, -1)}});
  }
  {
    // 4 = 2*2 = omega * (1 - omega), omega = (1+sqrt(-15))/2
    const auto R = QuadraticRing::imaginary(-15);
    auto z = [&](long a, long b) { return QuadraticInt(R, Integer(a), Integer(b)); };
    out.push_back({z(4, 0), {z(2, 0), z(2, 0)}, {z(0, 1), z(1, -1)}});
  }
  return out;
}

}  // namespace polydecomp
