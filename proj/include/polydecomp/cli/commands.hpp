#pragma once

// Subcommand implementations. Each returns an Outcome; rendering and exit
// codes are handled by run().

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "polydecomp/cli/domain.hpp"
#include "polydecomp/decomp/field.hpp"
#include "polydecomp/decomp/monic.hpp"
#include "polydecomp/decomp/quartic.hpp"
#include "polydecomp/witness/witness.hpp"

namespace polydecomp::cli {

struct Outcome {
  std::string status;
  std::string ring;
  Json g;
  Json h;
  Json evidence;
  std::vector<std::string> lines;  // text-mode rendering
  bool indecomposable = false;     // drives --fail-on-indecomposable
  bool failed = false;             // a verification failed
};

inline Outcome make_outcome(std::string status, std::string ring, Json g, Json h, Json evidence) {
  Outcome o;
  o.status = std::move(status);
  o.ring = std::move(ring);
  o.g = std::move(g);
  o.h = std::move(h);
  o.evidence = std::move(evidence);
  return o;
}

/// Text lines, or one JSON object {"status","ring","g","h","evidence"}.
inline std::string format_result(const Outcome& o, bool json) {
  if (json) {
    Json j;
    j["status"] = o.status;
    j["ring"] = o.ring;
    j["g"] = o.g;
    j["h"] = o.h;
    j["evidence"] = o.evidence;
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& line : o.lines) out += line + "\n";
  return out;
}

namespace detail {

template <class T>
std::string text(const T& x) {
  if constexpr (requires { polydecomp::to_string(x); })
    return polydecomp::to_string(x);
  else
    return polydecomp::detail::coefficient_text(x);
}

template <Ring T>
Json pair_json(const Decomposition<T>& d) {
  return Json{{"g", polynomial_json(d.g)}, {"h", polynomial_json(d.h)}};
}

inline std::vector<std::size_t> inner_degrees(std::size_t N, std::optional<std::size_t> m) {
  if (m) {
    polydecomp::detail::require_proper_divisor(N, *m);
    return {*m};
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 2; 2 * k <= N; ++k)
    if (N % k == 0) out.push_back(k);
  return out;
}

template <Ring T>
void describe_pair(Outcome& o, const Decomposition<T>& d) {
  o.lines.push_back("g = " + text(d.g));
  o.lines.push_back("h = " + text(d.h));
}

}  // namespace detail

template <class D>
Outcome cmd_compose(const D& dom, const std::string& g_text, const std::string& h_text) {
  const auto g = parse_poly(dom, g_text);
  const auto h = parse_poly(dom, h_text);
  const auto f = compose(g, h);
  Outcome o = make_outcome("composed", dom.ring_name(), polynomial_json(g), polynomial_json(h), Json{{"f", polynomial_json(f)}});
  o.lines.push_back(detail::text(f));
  return o;
}

/// Renders a quartic ring decision.
template <NumberOrder R>
Outcome ring_decide_outcome(const RingDecideOutcome<R>& d, const std::string& ring, const std::string& field) {
  Outcome o;
  o.ring = ring;
  Json candidates = Json::array();
  for (const auto& c : d.candidates)
    candidates.push_back(Json{{"u", coefficient_json(c.u)},
                              {"u_squared_divides_lead", c.square_divides_lead},
                              {"u_divides_middle", c.divides_middle},
                              {"u_times_c_in_ring", c.scaled_shift_in_ring}});
  if (const auto* yes = std::get_if<DecomposableOverRing<R>>(&d.result)) {
    o.status = "decomposable_over_ring";
    o.g = polynomial_json(yes->decomposition.g);
    o.h = polynomial_json(yes->decomposition.h);
    o.evidence = Json{{"candidates", candidates}};
    o.lines.push_back("decomposable over " + ring);
    detail::describe_pair(o, yes->decomposition);
  } else if (const auto* no = std::get_if<IndecomposableOverRing<R>>(&d.result)) {
    o.status = "indecomposable_over_ring";
    o.indecomposable = true;
    o.evidence = Json{{"field", field}, {"field_pair", detail::pair_json(no->field_evidence)}, {"candidates", candidates}};
    o.lines.push_back("decomposable over " + field);
    detail::describe_pair(o, no->field_evidence);
    o.lines.push_back("indecomposable over " + ring);
    for (const auto& c : d.candidates)
      o.lines.push_back("  u = " + detail::text(c.u) + ": u^2 | d " + (c.square_divides_lead ? "yes" : "no") +
                        ", u | e " + (c.divides_middle ? "yes" : "no") + ", u*c in ring " +
                        (c.scaled_shift_in_ring ? "yes" : "no"));
  } else {
    o.status = "indecomposable_over_field";
    o.indecomposable = true;
    o.lines.push_back("indecomposable over " + field);
  }
  return o;
}

template <class D>
Outcome cmd_decompose(const D& dom, const std::string& f_text, const std::string& over,
                      std::optional<std::size_t> inner_degree, bool full) {
  using R = typename D::Ring;
  using A = typename D::Ambient;
  if (over != "ring" && over != "field") throw PreconditionError("--over must be 'ring' or 'field'");
  const auto f = parse_poly(dom, f_text);
  if (f.degree() < Degree(2)) throw PreconditionError("decompose needs degree >= 2");
  const auto lifted = lift_poly(dom, f);
  const std::string field = dom.ambient_name();

  if (full) {
    if constexpr (Field<A>) {
      const auto chain = decompose_fully(lifted);
      Json arr = Json::array();
      std::string joined;
      for (const auto& c : chain) {
        arr.push_back(polynomial_json(c));
        joined += (joined.empty() ? "" : " o ") + detail::text(c);
      }
      Outcome o = make_outcome("decomposition_chain", dom.ring_name(), nullptr, nullptr, Json{{"field", field}, {"chain", arr}});
      o.indecomposable = chain.size() == 1;
      o.lines.push_back(joined);
      return o;
    } else {
      throw PreconditionError("--full needs a field; " + field + " is not one");
    }
  }

  const std::size_t N = f.degree().value();
  const auto degrees = N >= 4 ? detail::inner_degrees(N, inner_degree) : std::vector<std::size_t>{};
  if (inner_degree && N < 4) polydecomp::detail::require_proper_divisor(N, *inner_degree);

  // Decomposition over the ambient Q-algebra.
  auto over_ambient = [&]() -> std::optional<Decomposition<A>> {
    for (std::size_t m : degrees) {
      if constexpr (Field<A>) {
        if (auto d = decompose_over_field(lifted, m)) return d;
      } else {
        if (!lifted.is_monic()) throw PreconditionError("over " + field + " only monic polynomials are supported");
        if (auto d = monic_decompose(lifted, m)) return d;
      }
    }
    return std::nullopt;
  };

  const bool ring_question = over == "ring" && !dom.spec.is_ambient();
  if (!ring_question || degrees.empty()) {
    auto d = over_ambient();
    Outcome o;
    o.ring = dom.ring_name();
    if (d) {
      o.status = "decomposable_over_field";
      o.g = polynomial_json(d->g);
      o.h = polynomial_json(d->h);
      o.evidence = Json{{"field", field}};
      o.lines.push_back("decomposable over " + field);
      detail::describe_pair(o, *d);
    } else {
      o.status = "indecomposable_over_field";
      o.indecomposable = true;
      o.evidence = Json{{"field", field}};
      o.lines.push_back("indecomposable over " + field);
    }
    return o;
  }

  if constexpr (NumberOrder<R>) {
    if (N == 4 && (!inner_degree || *inner_degree == 2))
      return ring_decide_outcome(quartic_ring_decide(f), dom.ring_name(), field);
  }
  if (!f.is_monic())
    throw PreconditionError("over " + dom.ring_name() + " only monic polynomials and quartics are supported");
  for (std::size_t m : degrees) {
    auto d = monic_decompose_over_subring<R, A>(
        f, m, [&](const R& c) { return dom.lift(c); }, [&](const A& c) { return dom.lower(c); });
    if (d) {
      Outcome o = make_outcome("decomposable_over_ring", dom.ring_name(), polynomial_json(d->g), polynomial_json(d->h),
                Json{{"field", field}});
      o.lines.push_back("decomposable over " + dom.ring_name());
      detail::describe_pair(o, *d);
      return o;
    }
  }
  Outcome o;
  o.ring = dom.ring_name();
  o.indecomposable = true;
  if (auto d = over_ambient()) {
    o.status = "indecomposable_over_ring";
    o.evidence = Json{{"field", field}, {"field_pair", detail::pair_json(*d)}};
    o.lines.push_back("decomposable over " + field);
    detail::describe_pair(o, *d);
    o.lines.push_back("indecomposable over " + dom.ring_name());
  } else {
    o.status = "indecomposable_over_field";
    o.evidence = Json{{"field", field}};
    o.lines.push_back("indecomposable over " + field);
  }
  return o;
}

template <class D>
Outcome cmd_quartic(const D& dom, const std::string& f_text) {
  using R = typename D::Ring;
  using A = typename D::Ambient;
  const auto f = parse_poly(dom, f_text);
  if (!(f.degree() == 4)) throw PreconditionError("quartic needs a polynomial of degree 4");
  if constexpr (NumberOrder<R>) {
    return ring_decide_outcome(quartic_ring_decide(f), dom.ring_name(), dom.ambient_name());
  } else if constexpr (Field<A>) {
    const auto d = quartic_field_decompose(lift_poly(dom, f));
    Outcome o;
    o.ring = dom.ring_name();
    o.evidence = Json{{"field", dom.ambient_name()}};
    if (d) {
      o.status = "decomposable_over_field";
      o.g = polynomial_json(d->g);
      o.h = polynomial_json(d->h);
      o.lines.push_back("decomposable over " + dom.ambient_name());
      detail::describe_pair(o, *d);
    } else {
      o.status = "indecomposable_over_field";
      o.indecomposable = true;
      o.lines.push_back("indecomposable over " + dom.ambient_name());
    }
    return o;
  } else {
    throw PreconditionError("quartic needs Z, Q, an imaginary-quadratic order or its field");
  }
}

template <NumberOrder R>
Outcome witness_outcome(const FactorizationPair<R>& pair) {
  using traits = order_traits<R>;
  const auto run = run_witness_pipeline(pair);
  const auto& w = run.data;
  const std::string ring = traits::ring_name(w.ell);
  const std::string field = traits::field_name(w.ell);
  auto list = [](const std::vector<R>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + detail::text(x);
    return s;
  };
  auto list_json = [](const std::vector<R>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(coefficient_json(x));
    return arr;
  };

  const auto zero = zero_like(w.c);
  const Polynomial<field_of<R>> outer{zero, traits::to_field(w.ell), traits::to_field(w.d)};
  const Polynomial<field_of<R>> inner{zero, w.c, one_like(w.c)};

  Outcome o;
  o.ring = ring;
  o.status = run.report.all_passed() ? "witness_verified" : "witness_failed";
  o.failed = !run.report.all_passed();
  o.g = polynomial_json(outer);
  o.h = polynomial_json(inner);
  Json clauses = Json::array();
  for (const auto& c : run.report.clauses)
    clauses.push_back(Json{{"clause", c.clause}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  o.evidence = Json{{"element", coefficient_json(pair.element)},
                    {"first", list_json(pair.first)},
                    {"second", list_json(pair.second)},
                    {"ell", coefficient_json(w.ell)},
                    {"a", coefficient_json(w.a)},
                    {"p_s", coefficient_json(w.p_s)},
                    {"s", run.params.s},
                    {"c", coefficient_json(w.c)},
                    {"d", coefficient_json(w.d)},
                    {"f", polynomial_json(w.f)},
                    {"clauses", clauses}};

  o.lines.push_back("ring: " + ring);
  o.lines.push_back("element: " + detail::text(pair.element));
  o.lines.push_back("first factorization: " + list(pair.first));
  o.lines.push_back("second factorization: " + list(pair.second));
  o.lines.push_back("l = " + detail::text(w.ell) + ", a = " + detail::text(w.a) + ", p_s = " + detail::text(w.p_s) +
                    " (s = " + std::to_string(run.params.s) + ")");
  o.lines.push_back("c = a/l = " + detail::text(w.c) + ", d = p_s^2 = " + detail::text(w.d));
  o.lines.push_back("f = (" + detail::text(outer) + ") o (" + detail::text(inner) + ")");
  o.lines.push_back("  = " + detail::text(w.f));
  for (const auto& c : run.report.clauses)
    o.lines.push_back(std::string(c.passed ? "[PASS]" : "[FAIL]") + " (" + std::to_string(c.clause) + ") " + c.name +
                      ": " + c.detail);
  const bool field_ok = run.report.clauses.size() > 1 && run.report.clauses[0].passed;
  const bool ring_ok = run.report.clauses.size() > 1 && run.report.clauses[1].passed;
  if (field_ok && ring_ok) o.lines.push_back("indecomposable over " + ring + ", decomposable over " + field);
  return o;
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

template <class D>
Outcome cmd_witness(const D& dom, bool builtin, const std::string& element,
                    const std::vector<std::string>& factorizations) {
  using R = typename D::Ring;
  if constexpr (NumberOrder<R>) {
    if (builtin) {
      if constexpr (std::is_same_v<R, QuadraticInt>) {
        for (const auto& e : builtin_examples())
          if (e.element.ring() == *dom.spec.quadratic) return witness_outcome(e);
      }
      std::string names;
      for (const auto& e : builtin_examples()) names += (names.empty() ? "" : ", ") + e.element.ring().name();
      throw PreconditionError("no builtin example over " + dom.ring_name() + "; available: " + names);
    }
    if (element.empty() || factorizations.size() != 2)
      throw PreconditionError("witness needs --element and exactly two --factorization lists, or --builtin");
    FactorizationPair<R> pair{parse_element(dom, element), {}, {}};
    for (const auto& t : split_list(factorizations[0])) pair.first.push_back(parse_element(dom, t));
    for (const auto& t : split_list(factorizations[1])) pair.second.push_back(parse_element(dom, t));
    return witness_outcome(pair);
  } else {
    throw PreconditionError("witness needs Z or an imaginary-quadratic order, got " + dom.ring_name());
  }
}

inline Outcome cmd_check_subring(const std::string& name, const std::optional<RingSpec>& ring,
                                 const std::string& element) {
  Outcome o;
  bool member = false;
  std::string sub_name;
  if (name == "Z_in_Q") {
    const auto x = parse_element(RationalDomain{{parse_ring_spec("Q")}}, element);
    const auto sub = SubringDescriptor::integers_in_rationals();
    member = sub.contains(x);
    sub_name = sub.name();
    o.ring = "Q";
  } else if (name == "O_in_K") {
    if (!ring || !ring->quadratic) throw PreconditionError("O_in_K needs --ring with a quadratic field or order");
    const QuadraticFieldDomain dom{{RingSpec{RingKind::QuadraticField, ring->quadratic}}};
    const auto sub = SubringDescriptor::order_in_field(*ring->quadratic);
    member = sub.contains(parse_element(dom, element));
    sub_name = sub.name();
    o.ring = dom.ring_name();
  } else if (name == "Zt23_in_Zt") {
    const IntPolyTDomain dom{{parse_ring_spec("Z[t]")}};
    const auto sub = SubringDescriptor::zt23_in_zt();
    member = sub.contains(parse_element(dom, element));
    sub_name = sub.name();
    o.ring = dom.ring_name();
  } else if (name == "QZt23_in_Qt") {
    const RatPolyTDomain dom{{parse_ring_spec("Q[t]")}};
    const auto sub = SubringDescriptor::qzt23_in_qt();
    member = sub.contains(parse_element(dom, element));
    sub_name = sub.name();
    o.ring = dom.ring_name();
  } else {
    throw PreconditionError("unknown subring '" + name + "'; use Z_in_Q, O_in_K, Zt23_in_Zt or QZt23_in_Qt");
  }
  o.status = member ? "member" : "not_member";
  o.g = nullptr;
  o.h = nullptr;
  o.evidence = Json{{"subring", sub_name}, {"element", element}};
  o.lines.push_back(element + (member ? " is in " : " is not in ") + sub_name);
  return o;
}

/// Statistics of the Z[t^2,t^3] experiment.
struct DemoQ1Stats {
  std::size_t accepted = 0;       // pairs whose composition lies in R[x]
  std::size_t drawn = 0;          // pairs drawn in total
  std::size_t stray_drawn = 0;    // drawn pairs with a t^1 term in g or h
  std::size_t recovered_in_QR = 0;
  std::size_t recovered_in_R = 0;
  std::size_t counterexamples = 0;  // compositions in R[x] whose pair leaves R
};

/// Random monic pairs (g, h) in x Z[t][x] with coefficients in {-3..3},
/// t-degree <= 3 and deg g * deg h <= 8. The t^1 coefficient of each entry is
/// kept with probability 1/4 so that pairs outside Z[t^2,t^3] are common.
/// For `trials` pairs whose composition lies in Z[t^2,t^3][x], recovers the
/// decomposition over Q[t] and checks it lies in Z[t^2,t^3].
inline DemoQ1Stats run_demo_q1(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto entry = [&] {
    std::vector<Integer> v;
    for (int i = 0; i <= 3; ++i) v.emplace_back(uniform(-3, 3));
    if (uniform(0, 3) != 0) v[1] = 0;
    return IntPolyT(std::move(v));
  };
  auto monic = [&](std::size_t degree) {
    std::vector<IntPolyT> v{IntPolyT()};
    for (std::size_t i = 1; i < degree; ++i) v.push_back(entry());
    v.push_back(IntPolyT::constant(Integer(1)));
    return Polynomial<IntPolyT>(std::move(v));
  };

  const auto R = SubringDescriptor::zt23_in_zt();
  const auto QR = SubringDescriptor::qzt23_in_qt();
  auto all_in_R = [&](const Polynomial<IntPolyT>& p) {
    for (const auto& c : p.coefficients())
      if (!R.contains(c)) return false;
    return true;
  };

  DemoQ1Stats st;
  const std::size_t max_draws = 1000 * trials + 1000;
  while (st.accepted < trials && st.drawn < max_draws) {
    ++st.drawn;
    const std::size_t dg = static_cast<std::size_t>(uniform(2, 4));
    const std::size_t dh = static_cast<std::size_t>(uniform(2, static_cast<long>(8 / dg)));
    const auto g = monic(dg);
    const auto h = monic(dh);
    const bool stray = !all_in_R(g) || !all_in_R(h);
    if (stray) ++st.stray_drawn;
    const auto f = compose(g, h);
    if (!all_in_R(f)) continue;
    ++st.accepted;

    const auto lifted = map_coefficients<RatPolyT>(f, [](const IntPolyT& c) { return to_rational(c); });
    const auto dec = monic_decompose(lifted, dh);
    if (!dec) {
      ++st.counterexamples;
      continue;
    }
    if (coefficients_in_QR(*dec, QR)) ++st.recovered_in_QR;
    auto lower = [&](const RatPolyT& c) -> std::optional<IntPolyT> {
      auto r = to_integral(c);
      if (r && !R.contains(*r)) return std::nullopt;
      return r;
    };
    if (try_map_coefficients<IntPolyT>(dec->g, lower) && try_map_coefficients<IntPolyT>(dec->h, lower))
      ++st.recovered_in_R;
    else
      ++st.counterexamples;
  }
  return st;
}

inline Outcome cmd_demo_q1(std::size_t trials, std::uint64_t seed) {
  const DemoQ1Stats st = run_demo_q1(trials, seed);
  Outcome o;
  o.ring = "Z[t^2,t^3]";
  const bool ok = st.accepted == trials && st.counterexamples == 0 && st.recovered_in_R == st.accepted &&
                  st.recovered_in_QR == st.accepted;
  o.status = ok ? "demo_passed" : "demo_failed";
  o.failed = !ok;
  o.g = nullptr;
  o.h = nullptr;
  o.evidence = Json{{"seed", seed},
                    {"trials", trials},
                    {"accepted", st.accepted},
                    {"drawn", st.drawn},
                    {"drawn_outside_R", st.stray_drawn},
                    {"recovered_in_QR", st.recovered_in_QR},
                    {"recovered_in_R", st.recovered_in_R},
                    {"counterexamples", st.counterexamples}};
  o.lines.push_back("R = Z[t^2,t^3] inside S = Z[t], seed " + std::to_string(seed));
  o.lines.push_back("monic pairs drawn: " + std::to_string(st.drawn) + " (" + std::to_string(st.stray_drawn) +
                    " with a coefficient outside R)");
  o.lines.push_back("compositions in R[x]: " + std::to_string(st.accepted) + " of " + std::to_string(trials) +
                    " requested");
  o.lines.push_back("pairs recovered over Q[t] with coefficients in Q.R: " + std::to_string(st.recovered_in_QR) + "/" +
                    std::to_string(st.accepted));
  o.lines.push_back("pairs recovered in R: " + std::to_string(st.recovered_in_R) + "/" + std::to_string(st.accepted));
  o.lines.push_back("monic counterexamples: " + std::to_string(st.counterexamples));
  return o;
}

inline Outcome cmd_demo_q2() {
  const auto examples = builtin_examples();
  return witness_outcome(examples.front());
}

}  // namespace polydecomp::cli
