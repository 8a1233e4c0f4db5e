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

// Verification sweep: for each (n, p) compare the brute-force GP oracle with
// the orbit summation and the tabulated polynomial, and check automorphisms,
// orbits and tabulated distance rows against BFS.

#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "armchair/closed_form.hpp"
#include "armchair/gp_index.hpp"
#include "armchair/symmetry.hpp"
#include "armchair/tubulene.hpp"

namespace armchair {

enum class CheckState { ok, failed, skipped };

inline const char* to_string(CheckState s) {
  switch (s) {
    case CheckState::ok: return "true";
    case CheckState::failed: return "false";
    case CheckState::skipped: return "skipped";
  }
  return "?";
}

struct VerificationRecord {
  int n = 0;
  int p = 0;
  std::optional<BigInt> oracle_gp;
  std::optional<BigInt> summation_gp;
  std::optional<BigInt> table5_gp;  // nullopt: not covered by the table
  std::size_t aut_order = 0;
  CheckState structure = CheckState::skipped;
  bool orbits_match = false;
  bool distance_rows_ok = false;
  bool passed = false;
  std::vector<std::string> mismatches;
  std::string skip_reason;
};

struct VerifyOptions {
  bool check_structure = true;
  std::size_t brute_force_cap = default_brute_force_cap();
  // Replaceable so the harness itself can be tested against a broken graph.
  std::function<Graph(const TubuleneParams&)> builder = build_armchair;
};

namespace detail {

inline std::string as_string(const BigInt& v) { return v.str(); }
inline std::string as_string(const ExactRational& v) { return v.str(); }

// Tabulated distance rows and orbit Wiener values against BFS.
inline bool check_distance_rows(const Graph& g, const TubuleneParams& params,
                                std::vector<std::string>& mismatches) {
  const int n = params.n, p = params.p;
  const VertexIndex u = encode(params, {0, 0, 0});
  const VertexIndex v = encode(params, {0, 1, 0});
  const auto du = bfs_distances(g, u).dist;
  const auto dv = bfs_distances(g, v).dist;
  auto sum_to = [&](const std::vector<Distance>& row, int layer, int kind) {
    return BigInt(detail::row_sum(row, layer_set(params, layer, kind)));
  };
  bool ok = true;
  auto expect = [&](const char* what, const BigInt& got, const BigInt& want) {
    if (got != want) {
      ok = false;
      mismatches.push_back(std::string(what) + ": bfs " + got.str() + " vs closed form " + want.str());
    }
  };
  namespace cf = closed_form;
  const auto orbits = theorem_orbits(params);
  const auto o00 = [&] {
    auto orbit = layer_set(params, 0, 0);
    auto top = layer_set(params, p, 1);
    orbit.insert(orbit.end(), top.begin(), top.end());
    return orbit;
  }();
  const auto o10 = [&] {
    auto orbit = layer_set(params, 0, 1);
    auto top = layer_set(params, p, 0);
    orbit.insert(orbit.end(), top.begin(), top.end());
    return orbit;
  }();
  expect("d(u,V^0_0)", sum_to(du, 0, 0), cf::dist_u_V00(n));
  expect("d(u,V^1_p)", sum_to(du, p, 1), cf::dist_u_V1p(n, p));
  expect("d(u,O^0_0)", BigInt(detail::row_sum(du, o00)), cf::dist_u_O00(n, p));
  expect("W(O^0_0)", BigInt(wiener_of_subset(g, o00)), cf::orbit_wiener(n, p, 0));
  expect("d(v,V^1_0)", sum_to(dv, 0, 1), cf::dist_v_V10(n));
  expect("d(v,V^0_p)", sum_to(dv, p, 0), cf::dist_v_V0p(n, p));
  expect("d(v,O^1_0)", BigInt(detail::row_sum(dv, o10)), cf::dist_v_O10(n, p));
  expect("W(O^1_0)", BigInt(wiener_of_subset(g, o10)), cf::orbit_wiener(n, p, 1));
  if (p % 2 == 0) {
    auto middle = layer_set(params, p / 2, 0);
    auto upper = layer_set(params, p / 2, 1);
    middle.insert(middle.end(), upper.begin(), upper.end());
    expect("W(O_{p/2})", BigInt(wiener_of_subset(g, middle)), cf::cycle_wiener(2 * n));
  }
  return ok;
}

}  // namespace detail

inline VerificationRecord verify_point(int n, int p, const VerifyOptions& options = {}) {
  VerificationRecord rec;
  rec.n = n;
  rec.p = p;
  auto fail = [&](std::string what) { rec.mismatches.push_back(std::move(what)); };
  try {
    const auto params = TubuleneParams::make(n, p);
    const Graph g = options.builder(params);
    if (g.vertex_count() != params.vertex_count() || g.edge_count() != params.edge_count()) {
      fail("graph size " + std::to_string(g.vertex_count()) + "/" + std::to_string(g.edge_count()) +
           " vs expected " + std::to_string(params.vertex_count()) + "/" +
           std::to_string(params.edge_count()));
    }

    const auto closed = closed_form::gp_summation(n, p);
    rec.summation_gp = closed.value;
    if (auto t5 = closed_form::gp_table5(n, p)) rec.table5_gp = t5->value;
    if (auto expanded = closed_form::w_prime_expanded_case(n, p);
        expanded && *expanded != closed_form::w_prime_closed(n, p)) {
      fail("expanded case sum " + expanded->str() + " vs orbit summation " +
           closed_form::w_prime_closed(n, p).str());
    }

    const auto auts = automorphism_group(g, params);
    rec.aut_order = auts.size();
    if (rec.aut_order != 2u * n) fail("|Aut| = " + std::to_string(rec.aut_order));

    const ExactRational by_definition = gp_by_definition(g, auts);
    if (!is_integer(by_definition)) fail("oracle GP not integral: " + detail::as_string(by_definition));
    rec.oracle_gp = boost::multiprecision::numerator(by_definition);

    const auto action = orbits_from_action(auts);
    const auto theorem = theorem_orbits(params);
    rec.orbits_match = action == theorem;
    if (!rec.orbits_match) fail("action orbits differ from theorem orbits");
    const ExactRational by_action = gp_by_orbits(g, action);
    const ExactRational by_theorem = gp_by_orbits(g, theorem);
    if (by_action != by_definition) fail("GP via action orbits " + detail::as_string(by_action));
    if (by_theorem != by_definition) fail("GP via theorem orbits " + detail::as_string(by_theorem));
    const BigInt w_prime_oracle = w_prime(g, theorem);
    if (ExactRational(w_prime_oracle * (p + 1)) != by_definition) {
      fail("(p+1) W' = " + BigInt(w_prime_oracle * (p + 1)).str());
    }

    if (*rec.summation_gp != *rec.oracle_gp) fail("summation GP " + rec.summation_gp->str());
    if (rec.table5_gp && *rec.table5_gp != *rec.oracle_gp) fail("table GP " + rec.table5_gp->str());

    rec.distance_rows_ok = detail::check_distance_rows(g, params, rec.mismatches);

    if (!options.check_structure) {
      rec.skip_reason = "structure check disabled";
    } else if (g.vertex_count() > options.brute_force_cap) {
      rec.skip_reason = "brute-force oracle infeasible: " + std::to_string(g.vertex_count()) +
                        " vertices > cap " + std::to_string(options.brute_force_cap);
    } else {
      const auto brute = brute_force_automorphisms(g, options.brute_force_cap);
      const bool same_group = brute == auts;
      if (!same_group) fail("brute-force group has order " + std::to_string(brute.size()));
      // An observation, not a comparison: it never decides the status.
      const bool dihedral = group_structure(auts, params).satisfies_dihedral_times_z2;
      rec.structure = dihedral ? CheckState::ok : CheckState::failed;
    }
  } catch (const std::exception& e) {
    fail(std::string("error: ") + e.what());
  }
  rec.passed = rec.mismatches.empty() && rec.aut_order == 2u * n && rec.orbits_match &&
               rec.distance_rows_ok;
  return rec;
}

struct SweepRange {
  int n_min = 4, n_max = 14, p_min = 1, p_max = 6;

  void validate() const {
    if (n_min < 4 || n_min % 2 || n_max % 2) {
      throw ParameterError("n bounds must be even and at least 4");
    }
    if (n_min > n_max || p_min < 1 || p_min > p_max) throw ParameterError("empty sweep range");
  }

  std::vector<std::pair<int, int>> points() const {
    validate();
    std::vector<std::pair<int, int>> out;
    for (int n = n_min; n <= n_max; n += 2) {
      for (int p = p_min; p <= p_max; ++p) out.emplace_back(n, p);
    }
    return out;
  }
};

// Evaluates points on `jobs` workers and hands records to `emit` in input
// order as soon as each prefix is complete.
inline bool run_verification(const std::vector<std::pair<int, int>>& points,
                             const VerifyOptions& options, unsigned jobs,
                             const std::function<void(const VerificationRecord&)>& emit) {
  std::vector<std::optional<VerificationRecord>> results(points.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      auto rec = verify_point(points[i].first, points[i].second, options);
      {
        std::lock_guard lock(mutex);
        results[i] = std::move(rec);
      }
      ready.notify_all();
    }
  };

  bool all_passed = true;
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < std::max(1u, jobs); ++w) workers.emplace_back(worker);
  for (std::size_t i = 0; i < points.size(); ++i) {
    VerificationRecord rec;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return results[i].has_value(); });
      rec = std::move(*results[i]);
      results[i].reset();
    }
    all_passed = all_passed && rec.passed;
    emit(rec);
  }
  return all_passed;
}

inline constexpr const char* kVerifyCsvHeader =
    "n,p,oracle_gp,summation_gp,table5_gp,aut_order,structure_ok,orbits_match,distance_rows_ok,status";

inline void write_csv_row(std::ostream& out, const VerificationRecord& r) {
  auto big = [](const std::optional<BigInt>& v, const char* missing) {
    return v ? v->str() : std::string(missing);
  };
  out << r.n << ',' << r.p << ',' << big(r.oracle_gp, "n/a") << ',' << big(r.summation_gp, "n/a")
      << ',' << big(r.table5_gp, "not_covered") << ',' << r.aut_order << ','
      << to_string(r.structure) << ',' << (r.orbits_match ? "true" : "false") << ','
      << (r.distance_rows_ok ? "true" : "false") << ',' << (r.passed ? "pass" : "fail") << '\n';
  out.flush();
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// One JSON object per record, without trailing newline.
inline void write_json_record(std::ostream& out, const VerificationRecord& r) {
  auto big = [](const std::optional<BigInt>& v, const char* missing) {
    return v ? v->str() : "\"" + std::string(missing) + "\"";
  };
  auto structure = r.structure == CheckState::skipped ? std::string("\"skipped\"")
                                                      : std::string(to_string(r.structure));
  out << "{\"n\": " << r.n << ", \"p\": " << r.p << ", \"oracle_gp\": " << big(r.oracle_gp, "n/a")
      << ", \"summation_gp\": " << big(r.summation_gp, "n/a")
      << ", \"table5_gp\": " << big(r.table5_gp, "not_covered") << ", \"aut_order\": " << r.aut_order
      << ", \"structure_ok\": " << structure
      << ", \"orbits_match\": " << (r.orbits_match ? "true" : "false")
      << ", \"distance_rows_ok\": " << (r.distance_rows_ok ? "true" : "false")
      << ", \"status\": \"" << (r.passed ? "pass" : "fail") << "\", \"mismatches\": [";
  for (std::size_t i = 0; i < r.mismatches.size(); ++i) {
    out << (i ? ", " : "") << '"' << json_escape(r.mismatches[i]) << '"';
  }
  out << "]";
  if (!r.skip_reason.empty()) out << ", \"skip_reason\": \"" << json_escape(r.skip_reason) << '"';
  out << "}";
}

}  // namespace armchair
