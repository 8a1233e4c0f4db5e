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

// Closed formulas for distance sums, orbit Wiener indices and the
// Graovac-Pisanski index of AT(n, p). Everything is exact BigInt arithmetic;
// every division is guarded by a divisibility check.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "armchair/gp_index.hpp"

namespace armchair::closed_form {

namespace detail {

inline void require_n(int n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("closed forms need even n >= 4, got " + std::to_string(n));
  }
}

inline void require_np(int n, int p) {
  require_n(n);
  if (p < 1) throw std::invalid_argument("closed forms need p >= 1, got " + std::to_string(p));
}

inline BigInt exact_div(const BigInt& numerator, long divisor) {
  if (numerator % divisor != 0) {
    throw std::logic_error("closed form not integral: " + numerator.str() + " / " +
                           std::to_string(divisor));
  }
  return numerator / divisor;
}

inline bool four_divides(int n) { return n % 4 == 0; }

}  // namespace detail

// d(u, V^0_0) for u in V^0_0; also d(v, V^1_0) for v in V^1_0.
inline BigInt dist_u_V00(int n) {
  detail::require_n(n);
  BigInt nn = BigInt(n) * n;
  return detail::four_divides(n) ? detail::exact_div(nn, 2) : detail::exact_div(nn - 2, 2);
}

inline BigInt dist_v_V10(int n) { return dist_u_V00(n); }

// d(u, V^1_p) for u in V^0_0.
inline BigInt dist_u_V1p(int n, int p) {
  detail::require_np(n, p);
  const BigInt N = n, P = p;
  if (n <= 4 * p + 4) return detail::exact_div(N * N, 4) + 2 * N * P + N;
  BigInt large = detail::exact_div(N * N, 2) + 4 * P * P + 4 * P;
  return detail::four_divides(n) ? large : large + 1;
}

// d(v, V^0_p) for v in V^1_0.
inline BigInt dist_v_V0p(int n, int p) {
  detail::require_np(n, p);
  const BigInt N = n, P = p;
  if (n <= 4 * p) return detail::exact_div(N * N, 4) + 2 * N * P - N;
  BigInt large = detail::exact_div(N * N, 2) + 4 * P * P - 4 * P;
  return detail::four_divides(n) ? large : large + 1;
}

// d(u, O^0_0) as tabulated (not as the sum of the two rows above).
inline BigInt dist_u_O00(int n, int p) {
  detail::require_np(n, p);
  const BigInt N = n, P = p;
  if (n <= 4 * p + 4) {
    BigInt small = detail::exact_div(3 * N * N, 4) + 2 * N * P + N;
    return detail::four_divides(n) ? small : small - 1;
  }
  return N * N + 4 * P * P + 4 * P;
}

inline BigInt dist_v_O10(int n, int p) {
  detail::require_np(n, p);
  const BigInt N = n, P = p;
  if (n <= 4 * p) {
    BigInt small = detail::exact_div(3 * N * N, 4) + 2 * N * P - N;
    return detail::four_divides(n) ? small : small - 1;
  }
  return N * N + 4 * P * P - 4 * P;
}

// The orbit Wiener functions for 4 | n.
inline BigInt f1(int n, int p) {
  const BigInt N = n, P = p;
  return N * (detail::exact_div(3 * N * N, 4) + 2 * N * P + N);
}
inline BigInt f2(int n, int p) {
  const BigInt N = n, P = p;
  return N * (N * N + 4 * P * P + 4 * P);
}
inline BigInt g1(int n, int p) {
  const BigInt N = n, P = p;
  return N * (detail::exact_div(3 * N * N, 4) + 2 * N * P - N);
}
inline BigInt g2(int n, int p) {
  const BigInt N = n, P = p;
  return N * (N * N + 4 * P * P - 4 * P);
}

// W(O^kind_i) of AT(n, p) where depth = p - 2i: the orbit spans a convex
// copy of AT(n, depth). Ties go to the small-n formula. For 4 | (n-2) the
// small-n formulas lose n.
inline BigInt orbit_wiener(int n, int depth, int kind) {
  detail::require_n(n);
  if (depth < 1) throw std::invalid_argument("orbit depth must be >= 1, got " + std::to_string(depth));
  if (kind != 0 && kind != 1) throw std::invalid_argument("kind must be 0 or 1");
  const BigInt correction = detail::four_divides(n) ? BigInt(0) : BigInt(n);
  if (kind == 0) return n <= 4 * depth + 4 ? f1(n, depth) - correction : f2(n, depth);
  return n <= 4 * depth ? g1(n, depth) - correction : g2(n, depth);
}

// W of an even cycle of length m, m^3 / 8.
inline BigInt cycle_wiener(int m) {
  if (m < 4 || m % 2 != 0) throw std::invalid_argument("cycle_wiener needs even m >= 4");
  BigInt M = m;
  return detail::exact_div(M * M * M, 8);
}

// W'(AT(n, p)) by summing orbit_wiener over all p + 1 orbits, choosing the
// regime separately for each orbit.
inline BigInt w_prime_closed(int n, int p) {
  detail::require_np(n, p);
  BigInt total = 0;
  for (int depth = p; depth >= 1; depth -= 2) {
    total += orbit_wiener(n, depth, 0) + orbit_wiener(n, depth, 1);
  }
  if (p % 2 == 0) total += cycle_wiener(2 * n);
  return total;
}

// The four expanded sums for p even and 4 | n, where they apply. Used only
// as a cross-check of w_prime_closed.
inline std::optional<BigInt> w_prime_expanded_case(int n, int p) {
  detail::require_np(n, p);
  if (p % 2 != 0 || n % 4 != 0) return std::nullopt;
  auto sum = [&](auto fn, int from, int to) {
    BigInt s = 0;
    for (int i = from; i <= to; ++i) s += fn(n, 2 * i);
    return s;
  };
  const BigInt middle = cycle_wiener(2 * n);
  if (n > 4 * p + 4) return middle + sum(f2, 1, p / 2) + sum(g2, 1, p / 2);
  if (n == 4 * p + 4 && p >= 4) {
    return middle + sum(f2, 1, (p - 2) / 2) + f1(n, p) + sum(g2, 1, p / 2);
  }
  if (n <= 4 * p && n % 8 == 0 && n >= 16) {
    return middle + sum(f2, 1, (n - 8) / 8) + sum(f1, n / 8, p / 2) +
           sum(g2, 1, (n - 8) / 8) + sum(g1, n / 8, p / 2);
  }
  if (n <= 4 * p && n % 8 == 4 && n >= 20) {
    return middle + sum(f2, 1, (n - 12) / 8) + sum(f1, (n - 4) / 8, p / 2) +
           sum(g2, 1, (n - 4) / 8) + sum(g1, (n + 4) / 8, p / 2);
  }
  return std::nullopt;
}

enum class Regime { above_4p_plus_4, equals_4p_plus_4, equals_4p_plus_2, at_most_4p };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::above_4p_plus_4: return "n>4p+4";
    case Regime::equals_4p_plus_4: return "n=4p+4";
    case Regime::equals_4p_plus_2: return "n=4p+2";
    case Regime::at_most_4p: return "n<=4p";
  }
  return "?";
}

struct RegimeClass {
  bool p_even = false;
  int n_mod_4 = 0;
  Regime regime = Regime::at_most_4p;
  bool table5_covered = false;
  std::string notes;

  friend bool operator==(const RegimeClass&, const RegimeClass&) = default;
};

inline RegimeClass classify(int n, int p) {
  detail::require_np(n, p);
  RegimeClass rc;
  rc.p_even = p % 2 == 0;
  rc.n_mod_4 = n % 4;
  if (n > 4 * p + 4) {
    rc.regime = Regime::above_4p_plus_4;
  } else if (n == 4 * p + 4) {
    rc.regime = Regime::equals_4p_plus_4;
  } else if (n == 4 * p + 2) {
    rc.regime = Regime::equals_4p_plus_2;
  } else {
    rc.regime = Regime::at_most_4p;
  }

  const int min_p_on_boundary = rc.p_even ? 4 : 3;
  int min_n_small = 0;
  if (rc.p_even) {
    min_n_small = rc.n_mod_4 == 0 ? 16 : 14;
  } else {
    min_n_small = rc.n_mod_4 == 0 ? 12 : 10;
  }
  switch (rc.regime) {
    case Regime::above_4p_plus_4:
      rc.table5_covered = true;
      break;
    case Regime::equals_4p_plus_4:
    case Regime::equals_4p_plus_2:
      rc.table5_covered = p >= min_p_on_boundary;
      if (!rc.table5_covered) rc.notes = "boundary row needs p >= " + std::to_string(min_p_on_boundary);
      break;
    case Regime::at_most_4p:
      rc.table5_covered = n >= min_n_small;
      if (!rc.table5_covered) rc.notes = "small-n row needs n >= " + std::to_string(min_n_small);
      break;
  }
  return rc;
}

enum class Method { table5, orbit_summation };

struct ClosedFormResult {
  BigInt value;
  Method method = Method::table5;
  RegimeClass regime;
};

// 48 times the bracketed polynomial of the matching table row.
inline BigInt table5_bracket_times_48(int n, int p, const RegimeClass& rc) {
  const BigInt N = n, P = p;
  const BigInt n2 = N * N, n3 = n2 * N, n4 = n3 * N;
  const bool four = rc.n_mod_4 == 0;
  switch (rc.regime) {
    case Regime::above_4p_plus_4:
      return 48 * n3 * P + 48 * n3 + 64 * N * P * P * P + 192 * N * P * P + 128 * N * P;
    case Regime::equals_4p_plus_4:
    case Regime::equals_4p_plus_2: {
      BigInt b = 48 * n3 * P + 36 * n3 + 96 * n2 * P + 48 * n2 + 64 * N * P * P * P - 64 * N * P;
      return four ? b : b - 48 * N;
    }
    case Regime::at_most_4p:
      if (four) return n4 + 36 * n3 * P + 36 * n3 + 48 * n2 * P * P + 96 * n2 * P + 32 * n2;
      return n4 + 36 * n3 * P + 36 * n3 + 48 * n2 * P * P + 96 * n2 * P + 44 * n2 - 48 * N * P -
             48 * N;
  }
  throw std::logic_error("unreachable regime");
}

// The tabulated GP polynomial, or nullopt where the table makes no claim.
inline std::optional<ClosedFormResult> gp_table5(int n, int p) {
  RegimeClass rc = classify(n, p);
  if (!rc.table5_covered) return std::nullopt;
  BigInt bracket = detail::exact_div(table5_bracket_times_48(n, p, rc), 48);
  return ClosedFormResult{bracket * (p + 1), Method::table5, std::move(rc)};
}

// (p + 1) W' via orbit summation; valid for every even n >= 4 and p >= 1.
inline ClosedFormResult gp_summation(int n, int p) {
  return ClosedFormResult{w_prime_closed(n, p) * (p + 1), Method::orbit_summation, classify(n, p)};
}

}  // namespace armchair::closed_form
