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

// Exact evaluation of the six classical probability metrics between random
// variables on a finite metric space.
//
// Every metric here satisfies (PM): its value is a function of the joint
// law L(xi, eta). The evaluators therefore work on a CouplingMatrix; the
// random-variable entry points compute the joint law first. Prokhorov and
// total variation only look at the two marginals.

#ifndef PROBMETRIC_METRICS_HPP_
#define PROBMETRIC_METRICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "probmetric/descriptor.hpp"
#include "probmetric/law.hpp"
#include "probmetric/metric_value.hpp"
#include "probmetric/random_variable.hpp"

namespace probmetric {

inline constexpr std::size_t kMaxSubsetEnumerationPoints = 16;

// Law of d(xi, eta): distance value -> probability mass (positive masses
// only).
using DistanceDistribution = std::map<Rational, Rational>;

inline DistanceDistribution distance_distribution(const CouplingMatrix& joint) {
  if (!same_space(joint.row_space(), joint.col_space())) {
    throw InvalidArgument("metric evaluated across different spaces");
  }
  const auto& space = *joint.row_space();
  DistanceDistribution out;
  for (std::size_t i = 0; i < joint.num_rows(); ++i) {
    for (std::size_t j = 0; j < joint.num_cols(); ++j) {
      if (sgn(joint.at(i, j)) > 0) out[space.dist(i, j)] += joint.at(i, j);
    }
  }
  return out;
}

namespace detail {

inline void require_positive(const Rational& lambda) {
  if (sgn(lambda) <= 0) throw InvalidArgument("parameter must be positive");
}

inline void require_same_space(const Law& p, const Law& q) {
  if (!same_space(p.space(), q.space())) {
    throw InvalidArgument("laws live on different spaces");
  }
}

inline void require_same_space(const RandomVariable& xi,
                               const RandomVariable& eta) {
  if (!same_space(xi.space(), eta.space())) {
    throw InvalidArgument("random variables live on different spaces");
  }
}

}  // namespace detail

// K_lambda = inf { eps > 0 : P[d >= lambda eps] < eps }.
//
// With t_1 < ... < t_m the positive distance values and s_i = P[d >= t_i],
// the survival function is s_i on (t_{i-1}, t_i] and 0 beyond t_m. The
// feasible set is an up-set, so the answer is max(t_{i-1}/lambda, s_i) for
// the first interval with s_i < t_i/lambda, else t_m/lambda.
inline MetricValue ky_fan(const Rational& lambda,
                          const DistanceDistribution& dist) {
  detail::require_positive(lambda);
  std::vector<std::pair<Rational, Rational>> survival;  // (t_i, s_i)
  Rational tail = 0;
  for (auto it = dist.rbegin(); it != dist.rend(); ++it) {
    if (sgn(it->first) == 0) break;
    tail += it->second;
    survival.emplace_back(it->first, tail);
  }
  std::reverse(survival.begin(), survival.end());
  Rational previous = 0;
  for (const auto& [t, s] : survival) {
    const Rational upper = t / lambda;
    if (s < upper) return MetricValue::exact(max_of(previous / lambda, s));
    previous = t;
  }
  return MetricValue::exact(previous / lambda);
}

inline MetricValue lp_metric(const Rational& p,
                             const DistanceDistribution& dist) {
  detail::require_positive(p);
  if (is_integer(p) && p.get_num().fits_uint_p()) {
    const auto exponent = static_cast<unsigned>(p.get_num().get_ui());
    Rational total = 0;
    for (const auto& [d, mass] : dist) total += mass * pow(d, exponent);
    return MetricValue::root(std::move(total), exponent);
  }
  const double exponent = to_double(p);
  double total = 0.0;
  for (const auto& [d, mass] : dist) {
    total += to_double(mass) * std::pow(to_double(d), exponent);
  }
  return MetricValue::approximate(std::pow(total, 1.0 / exponent));
}

inline MetricValue linf_metric(const DistanceDistribution& dist) {
  return MetricValue::exact(dist.empty() ? Rational(0) : dist.rbegin()->first);
}

inline MetricValue indicator_metric(const DistanceDistribution& dist) {
  Rational total = 0;
  for (const auto& [d, mass] : dist) {
    if (sgn(d) > 0) total += mass;
  }
  return MetricValue::exact(std::move(total));
}

inline MetricValue total_variation(const Law& p, const Law& q) {
  detail::require_same_space(p, q);
  Rational half_l1 = 0;
  for (std::size_t i = 0; i < p.size(); ++i) half_l1 += abs(p[i] - q[i]);
  half_l1 /= 2;
  return MetricValue::exact(std::move(half_l1));
}

// g(t) = max over subsets A of P[A] - Q[A^(t)], for t = 0 and every positive
// distance value of the space (increasing). A^(t) is the closed
// t-enlargement of A.
inline std::vector<std::pair<Rational, Rational>> prokhorov_profile(
    const Law& p, const Law& q) {
  detail::require_same_space(p, q);
  const auto& space = *p.space();
  const std::size_t n = space.size();
  if (n > kMaxSubsetEnumerationPoints) {
    throw SizeLimitExceeded("subset enumeration refused for " +
                            std::to_string(n) + " points (limit " +
                            std::to_string(kMaxSubsetEnumerationPoints) + ")");
  }
  const std::uint32_t full = (std::uint32_t{1} << n);
  std::vector<Rational> p_mass(full), q_mass(full);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const unsigned low = static_cast<unsigned>(__builtin_ctz(mask));
    p_mass[mask] = p_mass[mask & (mask - 1)] + p[low];
    q_mass[mask] = q_mass[mask & (mask - 1)] + q[low];
  }
  std::vector<std::pair<Rational, Rational>> profile;
  for (const auto& t : space.distance_values()) {
    std::vector<std::uint32_t> ball(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t x = 0; x < n; ++x) {
        if (space.dist(a, x) <= t) ball[a] |= std::uint32_t{1} << x;
      }
    }
    std::vector<std::uint32_t> enlarged(full, 0);
    Rational best = 0;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      const unsigned low = static_cast<unsigned>(__builtin_ctz(mask));
      enlarged[mask] = enlarged[mask & (mask - 1)] | ball[low];
      Rational gap = p_mass[mask] - q_mass[enlarged[mask]];
      if (gap > best) best = gap;
    }
    profile.emplace_back(t, std::move(best));
  }
  return profile;
}

// rho_lambda = inf { eps > 0 : for all A, P[A] <= Q[A^(lambda eps)] + eps }.
//
// g is constant on [t_i, t_{i+1}); the answer is max(t_i/lambda, g(t_i)) for
// the first threshold interval with g(t_i) < t_{i+1}/lambda.
inline MetricValue prokhorov(const Rational& lambda, const Law& p,
                             const Law& q) {
  detail::require_positive(lambda);
  const auto profile = prokhorov_profile(p, q);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto& [t, g] = profile[i];
    const bool last = i + 1 == profile.size();
    if (last || g < profile[i + 1].first / lambda) {
      return MetricValue::exact(max_of(t / lambda, g));
    }
  }
  return MetricValue::exact(0);  // unreachable: profile is never empty
}

// hat() lives in minimal.hpp, which this header includes at the end.
inline MetricValue hat(const MetricDescriptor& desc, const Law& p,
                       const Law& q);

// Value of `desc` at the joint law `joint` of (xi, eta).
inline MetricValue eval_joint(const MetricDescriptor& desc,
                              const CouplingMatrix& joint) {
  switch (desc.kind()) {
    case MetricKind::kKyFan:
      return ky_fan(desc.param(), distance_distribution(joint));
    case MetricKind::kLp:
      return lp_metric(desc.param(), distance_distribution(joint));
    case MetricKind::kLinf:
      return linf_metric(distance_distribution(joint));
    case MetricKind::kIndicator:
      return indicator_metric(distance_distribution(joint));
    case MetricKind::kProkhorov:
      return prokhorov(desc.param(), joint.row_marginal(),
                       joint.col_marginal());
    case MetricKind::kTotalVariation:
      return total_variation(joint.row_marginal(), joint.col_marginal());
    case MetricKind::kSupOf: {
      MetricValue best = MetricValue::exact(0);
      for (const auto& child : desc.children()) {
        best = max_value(best, eval_joint(child, joint));
      }
      return best;
    }
    case MetricKind::kHat:
      return hat(desc.inner(), joint.row_marginal(), joint.col_marginal());
  }
  throw std::logic_error("unhandled metric kind");
}

inline MetricValue eval_metric(const MetricDescriptor& desc,
                               const RandomVariable& xi,
                               const RandomVariable& eta) {
  detail::require_same_space(xi, eta);
  return eval_joint(desc, joint_law(xi, eta));
}

inline MetricValue ky_fan(const Rational& lambda, const RandomVariable& xi,
                          const RandomVariable& eta) {
  detail::require_same_space(xi, eta);
  return ky_fan(lambda, distance_distribution(joint_law(xi, eta)));
}

inline MetricValue lp_metric(const Rational& p, const RandomVariable& xi,
                             const RandomVariable& eta) {
  detail::require_same_space(xi, eta);
  return lp_metric(p, distance_distribution(joint_law(xi, eta)));
}

inline MetricValue linf_metric(const RandomVariable& xi,
                               const RandomVariable& eta) {
  detail::require_same_space(xi, eta);
  return linf_metric(distance_distribution(joint_law(xi, eta)));
}

inline MetricValue indicator_metric(const RandomVariable& xi,
                                    const RandomVariable& eta) {
  detail::require_same_space(xi, eta);
  return indicator_metric(distance_distribution(joint_law(xi, eta)));
}

}  // namespace probmetric

#include "probmetric/minimal.hpp"

#endif  // PROBMETRIC_METRICS_HPP_
