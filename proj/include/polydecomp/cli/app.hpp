#pragma once

// Command-line entry point: polydecomp <subcommand> [options].
// Exit codes: 0 success, 1 input error or failed verification,
// 2 indecomposable result under --fail-on-indecomposable.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polydecomp/cli/commands.hpp"

namespace polydecomp::cli {

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Functional decomposition of polynomials over rings and fields", "polydecomp"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string ring_text;
  bool json = false;
  std::uint64_t seed = 1;
  bool fail_on_indecomposable = false;
  app.add_option("--ring", ring_text, "Ring descriptor: Z, Q, Z[sqrt(d)], O(d), Q(sqrt(d)), Z[t], Z[t2,t3], Q[t]");
  app.add_flag("--json", json, "Emit JSON");
  app.add_option("--seed", seed, "Seed for randomized demos");
  app.add_flag("--fail-on-indecomposable", fail_on_indecomposable, "Exit with 2 when the answer is indecomposable");

  std::string g_text, h_text, f_text;
  auto* compose_cmd = app.add_subcommand("compose", "Print g(h)");
  compose_cmd->add_option("outer", g_text, "Outer polynomial g")->required();
  compose_cmd->add_option("inner", h_text, "Inner polynomial h")->required();

  std::string over;
  std::optional<std::size_t> inner_degree;
  bool full = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose f = g(h)");
  decompose_cmd->add_option("poly", f_text, "Polynomial f")->required();
  decompose_cmd->add_option("--over", over, "ring or field")->check(CLI::IsMember({"ring", "field"}));
  decompose_cmd->add_option("--inner-degree", inner_degree, "Degree of h");
  decompose_cmd->add_flag("--full", full, "Complete decomposition chain over the field");

  auto* quartic_cmd = app.add_subcommand("quartic", "Field test and ring decision for a quartic");
  quartic_cmd->add_option("poly", f_text, "Polynomial f")->required();

  std::string element;
  std::vector<std::string> factorizations;
  bool builtin = false;
  auto* witness_cmd = app.add_subcommand("witness", "Build and verify a witness quartic");
  witness_cmd->add_option("--element", element, "Element with two factorizations");
  witness_cmd->add_option("--factorization", factorizations, "Comma-separated irreducible factors (give twice)")
      ->allow_extra_args(false);
  witness_cmd->add_flag("--builtin", builtin, "Use the builtin example for --ring (default Z[sqrt(-5)])");

  std::string subring;
  auto* subring_cmd = app.add_subcommand("check-subring", "Membership test");
  subring_cmd->add_option("--subring", subring, "Z_in_Q, O_in_K, Zt23_in_Zt or QZt23_in_Qt")->required();
  subring_cmd->add_option("element", element)->required();

  std::size_t trials = 200;
  auto* q1_cmd = app.add_subcommand("demo-q1", "Monic pairs over Z[t] composing into Z[t^2,t^3][x]");
  q1_cmd->add_option("--trials", trials, "Number of compositions in Z[t^2,t^3][x] to test");

  auto* q2_cmd = app.add_subcommand("demo-q2", "Witness over Z[sqrt(-5)]");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto ring_or = [&](const char* fallback) { return parse_ring_spec(ring_text.empty() ? fallback : ring_text); };

  try {
    Outcome o;
    if (compose_cmd->parsed()) {
      o = with_domain(ring_or("Q"), [&](const auto& dom) { return cmd_compose(dom, g_text, h_text); });
    } else if (decompose_cmd->parsed()) {
      const RingSpec spec = ring_or("Q");
      const std::string mode = over.empty() ? (spec.is_ambient() ? "field" : "ring") : over;
      o = with_domain(spec, [&](const auto& dom) { return cmd_decompose(dom, f_text, mode, inner_degree, full); });
    } else if (quartic_cmd->parsed()) {
      o = with_domain(ring_or("Q"), [&](const auto& dom) { return cmd_quartic(dom, f_text); });
    } else if (witness_cmd->parsed()) {
      o = with_domain(ring_or("Z[sqrt(-5)]"),
                      [&](const auto& dom) { return cmd_witness(dom, builtin, element, factorizations); });
    } else if (subring_cmd->parsed()) {
      std::optional<RingSpec> spec;
      if (!ring_text.empty()) spec = parse_ring_spec(ring_text);
      o = cmd_check_subring(subring, spec, element);
    } else if (q1_cmd->parsed()) {
      if (trials == 0) throw PreconditionError("--trials must be positive");
      o = cmd_demo_q1(trials, seed);
    } else if (q2_cmd->parsed()) {
      o = cmd_demo_q2();
    }
    out << format_result(o, json);
    if (o.failed) {
      err << "error: verification failed\n";
      return 1;
    }
    return (fail_on_indecomposable && o.indecomposable) ? 2 : 0;
  } catch (const ParseError& e) {  // the message carries the position
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {  // PreconditionError
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), out, err);
}

}  // namespace polydecomp::cli
