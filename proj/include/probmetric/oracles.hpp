// Copyright 2026 The probmetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference computations. None of these share code with the
// evaluators they check: conditions are tested literally from the metric
// definitions, over a grid of eps or over every subset / vertex.

#ifndef PROBMETRIC_ORACLES_HPP_
#define PROBMETRIC_ORACLES_HPP_

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "probmetric/law.hpp"
#include "probmetric/random_variable.hpp"
#include "probmetric/transport.hpp"

namespace probmetric::oracle {

inline constexpr std::int64_t kGridDenominator = 1024;

struct GridEstimate {
  Rational grid_value;  // smallest feasible grid point
  Rational refined;     // bisection refinement below it
};

// Smallest eps = k/1024 (k >= 1) with feasible(eps), assuming feasibility is
// monotone in eps; then bisected 30 steps toward the previous grid point.
inline GridEstimate grid_infimum(
    const std::function<bool(const Rational&)>& feasible) {
  std::int64_t lo = 0;  // infeasible or zero
  std::int64_t hi = 2 * kGridDenominator;
  while (hi - lo > 1) {
    const std::int64_t mid = (lo + hi) / 2;
    if (feasible(make_rational(mid, kGridDenominator))) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  GridEstimate est{make_rational(hi, kGridDenominator),
                   make_rational(hi, kGridDenominator)};
  Rational a = make_rational(lo, kGridDenominator);
  Rational b = est.grid_value;
  for (int step = 0; step < 30; ++step) {
    Rational mid = (a + b) / 2;
    if (sgn(mid) > 0 && feasible(mid)) {
      b = mid;
    } else {
      a = mid;
    }
  }
  est.refined = b;
  return est;
}

// Ky-Fan condition P[d(xi, eta) >= lambda eps] < eps, evaluated by walking
// the sample space.
inline GridEstimate ky_fan_grid(const Rational& lambda,
                                const RandomVariable& xi,
                                const RandomVariable& eta) {
  const auto& space = *xi.space();
  return grid_infimum([&](const Rational& eps) {
    Rational mass = 0;
    for (const auto& a : xi.pieces()) {
      for (const auto& b : eta.pieces()) {
        const Rational lo = max_of(a.begin, b.begin);
        const Rational hi = min_of(a.end, b.end);
        if (lo < hi && space.dist(a.point, b.point) >= lambda * eps) {
          mass += hi - lo;
        }
      }
    }
    return mass < eps;
  });
}

// Prokhorov condition: every subset A satisfies P[A] <= Q[A^(lambda eps)] +
// eps. A^(r) is built from balls of radius r around the points of A; subset
// masses are tabulated once.
inline GridEstimate prokhorov_grid(const Rational& lambda, const Law& p,
                                   const Law& q) {
  const auto& space = *p.space();
  const std::size_t n = space.size();
  const std::uint32_t full = std::uint32_t{1} << n;
  std::vector<Rational> p_mass(full), q_mass(full);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    p_mass[mask] = p_mass[mask & (mask - 1)] + p[low];
    q_mass[mask] = q_mass[mask & (mask - 1)] + q[low];
  }
  return grid_infimum([&](const Rational& eps) {
    const Rational radius = lambda * eps;
    std::vector<std::uint32_t> ball(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t x = 0; x < n; ++x) {
        if (space.dist(a, x) <= radius) ball[a] |= std::uint32_t{1} << x;
      }
    }
    std::vector<std::uint32_t> enlarged(full, 0);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      enlarged[mask] = enlarged[mask & (mask - 1)] | ball[low];
      if (p_mass[mask] > q_mass[enlarged[mask]] + eps) return false;
    }
    return true;
  });
}

// sup_A |P[A] - Q[A]| over all subsets.
inline Rational total_variation_subsets(const Law& p, const Law& q) {
  const std::size_t n = p.size();
  Rational best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Rational diff = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (mask >> x & 1U) diff += p[x] - q[x];
    }
    if (abs(diff) > best) best = abs(diff);
  }
  return best;
}

inline Rational vertex_min_cost(const Law& p, const Law& q,
                                const std::vector<Rational>& cost) {
  const auto vertices = enumerate_vertices(p, q);
  Rational best = coupling_cost(vertices.front(), cost);
  for (const auto& v : vertices) best = min_of(best, coupling_cost(v, cost));
  return best;
}

// min over vertices of the largest distance carrying mass.
inline Rational vertex_bottleneck(const Law& p, const Law& q) {
  const auto& space = *p.space();
  std::optional<Rational> best;
  for (const auto& v : enumerate_vertices(p, q)) {
    Rational worst = 0;
    for (std::size_t i = 0; i < v.num_rows(); ++i) {
      for (std::size_t j = 0; j < v.num_cols(); ++j) {
        if (sgn(v.at(i, j)) > 0) worst = max_of(worst, space.dist(i, j));
      }
    }
    if (!best || worst < *best) best = worst;
  }
  return *best;
}

}  // namespace probmetric::oracle

#endif  // PROBMETRIC_ORACLES_HPP_
