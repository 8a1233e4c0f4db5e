// Copyright 2026 The Armchair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: build, gp, wiener, orbits, auts, verify.

#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "armchair/closed_form.hpp"
#include "armchair/gp_index.hpp"
#include "armchair/serialize.hpp"
#include "armchair/symmetry.hpp"
#include "armchair/tubulene.hpp"
#include "armchair/verify.hpp"

namespace armchair::cli {

inline int cmd_build(const TubuleneParams& params, const std::string& format, std::ostream& out) {
  const Graph g = build_armchair(params);
  if (format == "edges") {
    write_edge_list(out, g);
  } else {
    write_graph_json(out, params, g);
  }
  return 0;
}

// Output is buffered so a failing method never leaves a partial object.
// Under "all", closed forms are marked not_applicable below n = 4.
inline int cmd_gp(const TubuleneParams& params, const std::string& method, std::ostream& out) {
  const bool all = method == "all";
  const bool closed_applicable = params.n >= 4;
  std::ostringstream json;
  json << "{\"n\": " << params.n << ", \"p\": " << params.p << ", \"method\": \"" << method << '"';
  std::optional<BigInt> oracle, summation, table5;
  bool oracle_consistent = true;
  if (all || method == "oracle") {
    const Graph g = build_armchair(params);
    const auto auts = automorphism_group(g, params);
    const ExactRational by_definition = gp_by_definition(g, auts);
    const ExactRational by_orbits = gp_by_orbits(g, orbits_from_action(auts));
    json << ", \"oracle\": " << by_definition.str();
    if (all) json << ", \"oracle_orbits\": " << by_orbits.str();
    if (is_integer(by_definition) && by_orbits == by_definition) {
      oracle = boost::multiprecision::numerator(by_definition);
    } else {
      oracle_consistent = false;
      if (all) json << ", \"oracle_consistent\": false";
    }
  }
  if (method == "summation" || (all && closed_applicable)) {
    summation = closed_form::gp_summation(params.n, params.p).value;
    json << ", \"summation\": " << summation->str();
  } else if (all) {
    json << ", \"summation\": \"not_applicable\"";
  }
  if (method == "table5" || (all && closed_applicable)) {
    auto result = closed_form::gp_table5(params.n, params.p);
    const auto rc = closed_form::classify(params.n, params.p);
    json << ", \"regime\": \"" << closed_form::to_string(rc.regime) << '"';
    if (result) {
      table5 = result->value;
      json << ", \"table5\": " << table5->str();
    } else {
      json << ", \"table5\": \"not_covered\"";
    }
  } else if (all) {
    json << ", \"table5\": \"not_applicable\"";
  }
  if (all) {
    const bool agree = oracle_consistent && (!summation || *summation == *oracle) &&
                       (!table5 || *table5 == *oracle);
    json << ", \"agreement\": " << (agree ? "true" : "false");
  }
  json << "}\n";
  out << json.str();
  return 0;
}

inline int cmd_wiener(const TubuleneParams& params, std::ostream& out) {
  const Graph g = build_armchair(params);
  out << "{\"n\": " << params.n << ", \"p\": " << params.p << ", \"wiener\": " << wiener_index(g)
      << ", \"w_prime\": " << w_prime(g, theorem_orbits(params)).str() << "}\n";
  return 0;
}

inline int cmd_orbits(const TubuleneParams& params, const std::string& source, std::ostream& out) {
  OrbitPartition partition;
  if (source == "action") {
    const Graph g = build_armchair(params);
    partition = orbits_from_action(automorphism_group(g, params));
  } else {
    partition = theorem_orbits(params);
  }
  for (const auto& orbit : partition.canonical().orbits) {
    for (std::size_t i = 0; i < orbit.size(); ++i) out << (i ? " " : "") << orbit[i];
    out << '\n';
  }
  return 0;
}

// Disjoint cycle notation; fixed points omitted, identity printed as "()".
inline std::string cycle_notation(const Automorphism& alpha) {
  std::string text;
  std::vector<char> seen(alpha.size(), 0);
  for (VertexIndex start = 0; start < alpha.size(); ++start) {
    if (seen[start] || alpha(start) == start) continue;
    text += '(';
    for (VertexIndex v = start; !seen[v]; v = alpha(v)) {
      if (v != start) text += ' ';
      text += std::to_string(v);
      seen[v] = 1;
    }
    text += ')';
  }
  return text.empty() ? "()" : text;
}

inline int cmd_auts(const TubuleneParams& params, const std::string& method, bool check_structure,
                    std::ostream& out) {
  const Graph g = build_armchair(params);
  const auto auts = method == "brute" ? brute_force_automorphisms(g) : automorphism_group(g, params);
  for (const auto& alpha : auts) out << cycle_notation(alpha) << '\n';
  if (check_structure) {
    const auto report = group_structure(auts, params);
    out << "order " << report.order << '\n';
    out << "dihedral_times_z2 " << (report.satisfies_dihedral_times_z2 ? "true" : "false") << '\n';
    if (report.satisfies_dihedral_times_z2) {
      out << "r " << cycle_notation(*report.rotation) << '\n';
      out << "s " << cycle_notation(*report.reflection) << '\n';
      out << "z " << cycle_notation(*report.central_involution) << '\n';
    }
  }
  return 0;
}

inline int cmd_verify(const SweepRange& range, unsigned jobs, const std::string& format,
                      bool check_structure, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.check_structure = check_structure;
  const bool json = format == "json";
  bool first = true;
  if (json) {
    out << "[";
  } else {
    out << kVerifyCsvHeader << '\n';
  }
  const bool ok = run_verification(range.points(), options, jobs, [&](const VerificationRecord& r) {
    if (json) {
      out << (first ? "\n  " : ",\n  ");
      write_json_record(out, r);
      out.flush();
    } else {
      write_csv_row(out, r);
      for (const auto& m : r.mismatches) err << "n=" << r.n << " p=" << r.p << ": " << m << '\n';
    }
    first = false;
  });
  if (json) out << "\n]\n";
  return ok ? 0 : 1;
}

// Parses argv and dispatches. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Armchair nanotube graphs, automorphisms and Graovac-Pisanski index"};
  app.require_subcommand(1);

  int n = 0, p = 0;
  auto add_np = [&](CLI::App* sub) {
    sub->add_option("--n", n, "number of hexagon columns (even, >= 2)")->required();
    sub->add_option("--p", p, "hexagons per column (>= 1)")->required();
  };

  std::string format = "json";
  auto* build = app.add_subcommand("build", "emit the graph AT(n,p)");
  add_np(build);
  build->add_option("--format", format, "json or edges")->check(CLI::IsMember({"json", "edges"}));

  std::string gp_method = "all";
  auto* gp = app.add_subcommand("gp", "Graovac-Pisanski index");
  add_np(gp);
  gp->add_option("--method", gp_method, "oracle, summation, table5 or all")
      ->check(CLI::IsMember({"oracle", "summation", "table5", "all"}));

  auto* wiener = app.add_subcommand("wiener", "Wiener index and W'");
  add_np(wiener);

  std::string orbit_source = "theorem";
  auto* orbits = app.add_subcommand("orbits", "vertex orbits as sorted id lists");
  add_np(orbits);
  orbits->add_option("--source", orbit_source, "theorem or action")
      ->check(CLI::IsMember({"theorem", "action"}));

  std::string aut_method = "extension";
  bool check_structure = false;
  auto* auts = app.add_subcommand("auts", "automorphisms as permutation cycles");
  add_np(auts);
  auts->add_option("--method", aut_method, "extension or brute")
      ->check(CLI::IsMember({"extension", "brute"}));
  auts->add_flag("--check-structure", check_structure, "test for D_{n/2} x Z_2");

  SweepRange range;
  unsigned jobs = 1;
  std::string verify_format = "csv";
  bool no_structure = false;
  auto* verify = app.add_subcommand("verify", "sweep (n,p) and compare every method");
  verify->add_option("--n-min", range.n_min)->default_val(4);
  verify->add_option("--n-max", range.n_max)->default_val(14);
  verify->add_option("--p-min", range.p_min)->default_val(1);
  verify->add_option("--p-max", range.p_max)->default_val(6);
  verify->add_option("--jobs", jobs, "worker threads")->default_val(1);
  verify->add_option("--format", verify_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_flag("--no-structure", no_structure, "skip the brute-force automorphism check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*verify) return cmd_verify(range, jobs, verify_format, !no_structure, out, err);
    const auto params = TubuleneParams::make(n, p);
    if (*build) return cmd_build(params, format, out);
    if (*gp) return cmd_gp(params, gp_method, out);
    if (*wiener) return cmd_wiener(params, out);
    if (*orbits) return cmd_orbits(params, orbit_source, out);
    if (*auts) return cmd_auts(params, aut_method, check_structure, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace armchair::cli
