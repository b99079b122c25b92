// Acceptance gate. Each criterion runs with a fixed seed and a pinned time
// limit and prints one PASS/FAIL line; the exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polydecomp/polydecomp.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace {

using namespace polydecomp;
using pdtest::Gen;
using pdtest::qi;
using pdtest::z5;
using QPoly = Polynomial<Rational>;
using KPoly = Polynomial<QuadraticRat>;
using RPoly = Polynomial<QuadraticInt>;

struct Verdict {
  bool ok = true;
  std::string detail;

  // records the first failure only
  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  std::chrono::milliseconds limit;
  std::function<Verdict()> body;
};

KPoly to_field(const RPoly& f) {
  return map_coefficients<QuadraticRat>(f, [](const QuadraticInt& x) { return x.to_field(); });
}

std::size_t deg(const auto& p) { return p.degree().value(); }

Verdict witness_reproduction() {
  Verdict v;
  const FactorizationPair<QuadraticInt> pair{qi(6, 0), {qi(2, 0), qi(3, 0)}, {qi(1, 1), qi(1, -1)}};
  const auto run = run_witness_pipeline(pair);

  // oracle: d x^4 + 2dc x^3 + (dc^2 + l) x^2 + lc x with l = 2, c = (1+w)/2, d = (1-w)^2
  const QuadraticRat ell(z5(), Rational(2));
  const QuadraticRat c(z5(), make_rational(1, 2), make_rational(1, 2));
  const QuadraticRat p(z5(), Rational(1), Rational(-1));
  const KPoly expected = pdtest::eq1_expansion(QuadraticRat(p * p), ell, c);
  const RPoly literal{qi(0, 0), qi(1, 1), qi(11, 0), qi(6, -6), qi(-4, -2)};

  v.require(to_field(run.data.f) == expected, "pipeline output differs from the hand expansion: " + to_string(run.data.f));
  v.require(run.data.f == literal, "pipeline output differs from the literal quartic");
  v.require(run.report.all_passed(), "verification report has a failing clause");

  const auto field = quartic_field_decompose(to_field(literal));
  v.require(field.has_value() && field->recomposes_to(to_field(literal)), "no decomposition over Q(sqrt(-5))");
  const auto ring = quartic_ring_decide(literal);
  v.require(ring.indecomposable_over_ring(), "ring decision is not IndecomposableOverRing");
  v.require(!pdtest::brute_quartic_ring_decomposable(literal), "brute force finds a ring decomposition");
  v.detail = v.ok ? "f = " + to_string(run.data.f) : v.detail;
  return v;
}

Verdict monic_roundtrip() {
  Verdict v;
  Gen gen(2001);
  for (int trial = 0; trial < 1000 && v.ok; ++trial) {
    const QPoly g = gen.rat_poly(static_cast<std::size_t>(gen.integer(2, 4)), true);
    const QPoly h = gen.rat_poly(static_cast<std::size_t>(gen.integer(2, 4)), true, true);
    const auto dec = monic_decompose(compose(g, h), deg(h));
    v.require(dec && dec->g == g && dec->h == h, "pair not recovered: g = " + to_string(g) + ", h = " + to_string(h));
  }
  if (v.ok) v.detail = "1000/1000 pairs";
  return v;
}

// Z[t^2,t^3] membership straight from the definition: integral, no t^1 term.
bool in_zt23(const RatPolyT& c) {
  const auto& k = c.coefficients();
  for (const auto& x : k)
    if (x.get_den() != 1) return false;
  return k.size() < 2 || k[1] == 0;
}

bool in_zt23(const IntPolyT& c) { return c.size() < 2 || c.coefficients()[1] == 0; }

Verdict zt23_monic_transfer() {
  Verdict v;
  Gen gen(2003);
  // coefficients in -3..3, t-degree <= 3, composition degree <= 8; the t^1 term
  // survives with probability 1/4 so that pairs outside R are also drawn
  auto entry = [&] {
    std::vector<Integer> t_coeffs;
    for (int i = 0; i <= 3; ++i) t_coeffs.emplace_back(gen.integer(-3, 3));
    if (gen.integer(0, 3) != 0) t_coeffs[1] = 0;
    return IntPolyT(std::move(t_coeffs));
  };
  auto monic = [&](std::size_t degree) {
    std::vector<IntPolyT> c{IntPolyT()};
    for (std::size_t i = 1; i < degree; ++i) c.push_back(entry());
    c.push_back(IntPolyT::constant(Integer(1)));
    return Polynomial<IntPolyT>(std::move(c));
  };
  int accepted = 0, stray = 0;
  for (int draw = 0; draw < 200000 && accepted < 200 && v.ok; ++draw) {
    const std::size_t dg = static_cast<std::size_t>(gen.integer(2, 4));
    const std::size_t dh = static_cast<std::size_t>(gen.integer(2, static_cast<long>(8 / dg)));
    const auto g = monic(dg);
    const auto h = monic(dh);
    bool pair_in_r = true;
    for (const auto* p : {&g, &h})
      for (const auto& c : p->coefficients()) pair_in_r = pair_in_r && in_zt23(c);
    if (!pair_in_r) ++stray;
    const auto f = compose(g, h);
    bool f_in_r = true;
    for (const auto& c : f.coefficients()) f_in_r = f_in_r && in_zt23(c);
    if (!f_in_r) continue;
    ++accepted;

    const auto lifted = map_coefficients<RatPolyT>(f, [](const IntPolyT& c) { return to_rational(c); });
    const auto dec = monic_decompose(lifted, dh);
    v.require(dec.has_value(), "no decomposition over Q[t] for " + to_string(f));
    if (!dec) break;
    v.require(compose(dec->g, dec->h) == lifted, "recovered pair does not recompose");
    for (const auto* p : {&dec->g, &dec->h})
      for (const auto& c : p->coefficients()) v.require(in_zt23(c), "monic counterexample: " + to_string(f));
  }
  v.require(accepted == 200, "only " + std::to_string(accepted) + " compositions landed in R[x]");
  if (v.ok) v.detail = "200/200 recovered in R, 0 counterexamples, " + std::to_string(stray) + " draws had a coefficient outside R";
  return v;
}

Verdict subring_identity() {
  Verdict v;
  Gen gen(2004);
  const auto qr = SubringDescriptor::qzt23_in_qt();
  const auto r = SubringDescriptor::zt23_in_zt();
  int in_r = 0;
  for (int trial = 0; trial < 1000 && v.ok; ++trial) {
    IntPolyT s = gen.int_poly_t(6, 4);
    if (gen.coin() && s.size() > 1) s = s - IntPolyT::monomial(s.coefficients()[1], 1);
    const RatPolyT as_rational = to_rational(s);
    const bool in_s = to_integral(as_rational).has_value();
    const bool lhs = qr.contains(as_rational) && in_s;
    v.require(lhs == r.contains(s), "equivalence fails at " + to_string(s));
    v.require(r.contains(s) == in_zt23(s), "membership disagrees with the definition at " + to_string(s));
    in_r += lhs ? 1 : 0;
  }
  if (v.ok) v.detail = "1000 elements, " + std::to_string(in_r) + " in R";
  return v;
}

template <class K, class Coeff>
void field_agreement(Verdict& v, Gen& gen, Coeff coeff, int trials, int& decomposable) {
  for (int trial = 0; trial < trials && v.ok; ++trial) {
    Polynomial<K> f;
    do {
      f = gen.coin() ? gen.poly<K>(4, coeff) : compose(gen.poly<K>(2, coeff), gen.poly<K>(2, coeff));
    } while (!(f.degree() == 4));
    const auto closed = quartic_field_decompose(f);
    const auto general = decompose_over_field(f, 2);
    v.require(closed.has_value() == general.has_value(), "field routines disagree on " + to_string(f));
    if (closed && general) v.require(closed->g == general->g && closed->h == general->h, "normal forms differ");
    decomposable += closed ? 1 : 0;
  }
}

Verdict quartic_equivalence() {
  Verdict v;
  Gen gen(2005);
  int dq = 0, dk = 0;
  field_agreement<Rational>(v, gen, [&] { return gen.rational(); }, 1000, dq);
  field_agreement<QuadraticRat>(v, gen, [&] { return gen.quad_rat(z5(), 3, 2); }, 1000, dk);

  auto small = [&] { return gen.quad_int(z5(), 2); };
  int ring_yes = 0;
  auto check_ring = [&](const RPoly& f) {
    const auto outcome = quartic_ring_decide(f);
    const bool brute = pdtest::brute_quartic_ring_decomposable(f);
    v.require(outcome.decomposable_over_ring() == brute, "ring decision disagrees with brute force on " + to_string(f));
    ring_yes += brute ? 1 : 0;
  };
  for (int trial = 0; trial < 200 && v.ok; ++trial) {
    RPoly f;
    do f = compose(gen.poly<QuadraticInt>(2, small), gen.poly<QuadraticInt>(2, small));
    while (!(f.degree() == 4));
    check_ring(f);
  }
  for (int trial = 0; trial < 200 && v.ok; ++trial) {
    RPoly f;
    do f = gen.poly<QuadraticInt>(4, small);
    while (!(f.degree() == 4));
    check_ring(f);
  }
  // beyond the 400: integral g(x^2 + cx) with c in R/2, where field and ring answers can part
  int field_only = 0;
  for (int trial = 0; trial < 5000 && field_only < 50 && v.ok; ++trial) {
    auto coeff = [&] { return gen.quad_int(z5(), 3).to_field(); };
    const QuadraticRat c(z5(), make_rational(gen.integer(-3, 3), 2), make_rational(gen.integer(-3, 3), 2));
    const KPoly fk = compose(gen.poly<QuadraticRat>(2, coeff), KPoly{QuadraticRat(z5(), Rational(0)), c,
                                                                     QuadraticRat(z5(), Rational(1))});
    const auto f = try_map_coefficients<QuadraticInt>(fk, [](const QuadraticRat& x) { return x.in_order(); });
    if (!f || !(f->degree() == 4)) continue;
    const int before = ring_yes;
    check_ring(*f);
    field_only += ring_yes == before ? 1 : 0;
  }
  v.require(field_only == 50, "too few field-only quartics generated");
  if (v.ok)
    v.detail = "field: " + std::to_string(dq) + "+" + std::to_string(dk) + " decomposable of 2000; ring: " +
               std::to_string(ring_yes) + " decomposable, 50 field-only, all agree with brute force";
  return v;
}

Verdict uniqueness() {
  Verdict v;
  Gen gen(2006);
  for (int trial = 0; trial < 500 && v.ok; ++trial) {
    const QPoly g = gen.rat_poly(static_cast<std::size_t>(gen.integer(2, 3)));
    const QPoly h = gen.rat_poly(static_cast<std::size_t>(gen.integer(2, 3)));
    const Rational a = gen.nonzero_rational();
    const Rational b = gen.rational();
    const QPoly H{b, a};  // mu = a x + b, H = mu(h)
    const QPoly G = compose(g, QPoly{Rational(-b / a), Rational(1 / a)});
    const QPoly Hh = compose(H, h);
    v.require(compose(G, Hh) == compose(g, h), "inserted linear does not preserve f");
    const auto rel = linear_relate(h, Hh);
    v.require(rel && rel->a == a && rel->b == b, "linear_relate missed the inserted (a, b)");
  }
  const auto R15 = QuadraticRing::imaginary(-15);
  for (int trial = 0; trial < 500 && v.ok; ++trial) {
    const auto n = [&](long hi) { return static_cast<std::size_t>(gen.integer(0, hi)); };
    if (trial % 2 == 0) {
      v.require(verify_taylor_expansion(gen.rat_poly(n(5)), gen.rat_poly(n(5)), gen.rat_poly(n(2)), gen.nonzero_rational()),
                "Taylor identity fails over Q");
    } else {
      auto coeff = [&] { return gen.quad_rat(R15); };
      const KPoly G = gen.poly<QuadraticRat>(n(5), coeff);
      const KPoly h = gen.poly<QuadraticRat>(n(5), coeff);
      const KPoly h0 = gen.poly<QuadraticRat>(n(2), coeff);
      v.require(verify_taylor_expansion(G, h, h0, gen.nonzero_quad_rat(R15)), "Taylor identity fails over Q(sqrt(-15))");
    }
  }
  if (v.ok) v.detail = "500 linear relations, 500 Taylor instances";
  return v;
}

Verdict domain_layer() {
  Verdict v;
  Gen gen(2007);
  for (long d : {-5L, -1L, -3L, -15L}) {
    const auto R = QuadraticRing::imaginary(d);
    for (int trial = 0; trial < 1000 && v.ok; ++trial) {
      const auto x = gen.quad_int(R, 30);
      const auto y = gen.quad_int(R, 30);
      v.require(norm(x * y) == norm(x) * norm(y), "norm not multiplicative");
      v.require(Rational(norm(x)) == pdtest::norm_by_definition(x), "norm differs from its definition");
      const auto nz = gen.nonzero_quad_int(R, 6);
      const auto multiple = nz * y;
      const auto q = divides_exact(nz, multiple);
      v.require(q && *q * nz == multiple, "divides_exact failed to reconstruct a multiple");
      if (auto r = divides_exact(nz, x)) v.require(*r * nz == x, "divides_exact quotient is wrong");
    }
    for (long k = 0; k <= 50 && v.ok; ++k)
      v.require(elements_of_norm(Integer(k), R) == pdtest::brute_elements_of_norm(k, R),
                "elements_of_norm incomplete for d = " + std::to_string(d) + ", k = " + std::to_string(k));
  }
  // irreducible: every divisor found by cofactor search is a unit or an associate
  for (const auto& p : {qi(2, 0), qi(3, 0), qi(1, 1), qi(1, -1)}) {
    v.require(is_irreducible(p), "is_irreducible rejects " + to_string(p));
    for (const auto& e : pdtest::brute_divisors(p))
      v.require(norm(e) == 1 || norm(e) == norm(p), "brute force finds a proper divisor of " + to_string(p));
  }
  v.require(!is_irreducible(qi(6, 0)), "6 reported irreducible");
  if (v.ok) v.detail = "d in {-5, -1, -3, -15}, k <= 50";
  return v;
}

}  // namespace

int main() {
  using std::chrono::milliseconds;
  const std::vector<Criterion> criteria{
      {1, "witness quartic over Z[sqrt(-5)]", milliseconds(1000), witness_reproduction},
      {2, "monic roundtrip over Q", milliseconds(10000), monic_roundtrip},
      {3, "monic pairs over Z[t^2,t^3]", milliseconds(30000), zt23_monic_transfer},
      {4, "(Q.R) meet S = R", milliseconds(1000), subring_identity},
      {5, "quartic decision equivalence", milliseconds(120000), quartic_equivalence},
      {6, "uniqueness up to linears", milliseconds(30000), uniqueness},
      {7, "domain layer", milliseconds(10000), domain_layer},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const auto elapsed = std::chrono::duration_cast<milliseconds>(std::chrono::steady_clock::now() - start);
    if (v.ok && elapsed > c.limit) {
      v.ok = false;
      v.detail = "over the " + std::to_string(c.limit.count()) + " ms limit";
    }
    failures += v.ok ? 0 : 1;
    std::printf("%s [%d] %s (%lld ms): %s\n", v.ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                static_cast<long long>(elapsed.count()), v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
