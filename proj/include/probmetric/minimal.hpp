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

// The minimal metric d^ of a probability metric d:
//
//   d^(P, Q) = inf { d(xi', eta') : L(xi') = P, L(eta') = Q }.
//
// Because every d here is a function of the joint law, the infimum runs over
// the transportation polytope of (P, Q). On finite spaces it is attained,
// so each exact routine also returns an optimal coupling.

#ifndef PROBMETRIC_MINIMAL_HPP_
#define PROBMETRIC_MINIMAL_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "probmetric/descriptor.hpp"
#include "probmetric/gluing.hpp"
#include "probmetric/law.hpp"
#include "probmetric/metric_value.hpp"
#include "probmetric/metrics.hpp"
#include "probmetric/random_variable.hpp"
#include "probmetric/transport.hpp"

namespace probmetric {

// A probability metric seen as a function of the joint law.
struct MetricFunctional {
  std::function<MetricValue(const CouplingMatrix&)> evaluator;
  // Depends on the marginals only.
  bool simple = false;
  // Affine in the coupling (up to a monotone transform), so the minimum over
  // the polytope is attained at a vertex.
  bool affine = false;

  MetricValue operator()(const CouplingMatrix& joint) const {
    return evaluator(joint);
  }
};

inline MetricFunctional functional_of(const MetricDescriptor& desc) {
  MetricFunctional f;
  f.evaluator = [desc](const CouplingMatrix& joint) {
    return eval_joint(desc, joint);
  };
  f.simple = desc.is_simple();
  f.affine = desc.kind() == MetricKind::kLp ||
             desc.kind() == MetricKind::kIndicator;
  return f;
}

struct HatResult {
  MetricValue value;
  CouplingMatrix coupling;
  // False when value is only a certified upper bound (sup descriptors whose
  // vertex search did not meet the lower bound).
  bool exact = true;
};

struct GenericHatResult {
  MetricValue value;
  CouplingMatrix coupling;
  bool approximate = true;
};

// Minimum of f over the vertices of the transportation polytope, refined by
// a line search along segments from the best vertex to the next-best ones.
inline GenericHatResult hat_generic(const MetricFunctional& f, const Law& p,
                                    const Law& q) {
  const auto vertices = enumerate_vertices(p, q);
  std::vector<std::pair<MetricValue, std::size_t>> scored;
  scored.reserve(vertices.size());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    scored.emplace_back(f(vertices[k]), k);
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  GenericHatResult best{scored.front().first, vertices[scored.front().second],
                        !(f.affine || f.simple)};
  if (!best.approximate) return best;

  constexpr std::size_t kSegments = 8;
  constexpr int kSteps = 8;
  const CouplingMatrix& anchor = vertices[scored.front().second];
  for (std::size_t r = 1; r < scored.size() && r <= kSegments; ++r) {
    const CouplingMatrix& other = vertices[scored[r].second];
    for (int s = 1; s < kSteps; ++s) {
      const Rational t = make_rational(s, kSteps);
      CouplingMatrix mix(p.space(), q.space());
      for (std::size_t i = 0; i < mix.num_rows(); ++i) {
        for (std::size_t j = 0; j < mix.num_cols(); ++j) {
          mix.at(i, j) = (1 - t) * anchor.at(i, j) + t * other.at(i, j);
        }
      }
      MetricValue v = f(mix);
      if (v < best.value) {
        best.value = std::move(v);
        best.coupling = std::move(mix);
      }
    }
  }
  return best;
}

namespace detail {

inline HatResult hat_ky_fan(const Rational& lambda, const Law& p,
                            const Law& q) {
  const auto values = p.space()->distance_values();
  if (values.size() == 1) return {MetricValue::exact(0), diagonal_coupling(p)};
  std::optional<TransportSolution> last;
  Rational previous = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    auto solution = min_mass_above_with_witness(values[i], p, q);
    if (solution.value < values[i] / lambda) {
      return {MetricValue::exact(max_of(previous / lambda, solution.value)),
              std::move(solution.coupling)};
    }
    previous = values[i];
    last = std::move(solution);
  }
  return {MetricValue::exact(previous / lambda), std::move(last->coupling)};
}

inline HatResult hat_lp(const Rational& power, const Law& p, const Law& q) {
  if (is_integer(power) && power.get_num().fits_uint_p()) {
    const auto k = static_cast<unsigned>(power.get_num().get_ui());
    auto solution = transport_lp(TransportProblem::distance_power(p, q, k));
    return {MetricValue::root(std::move(solution.value), k),
            std::move(solution.coupling)};
  }
  // Non-integer order: the power cost is irrational, but the problem is
  // still linear, so the best vertex is optimal.
  auto generic =
      hat_generic(functional_of(MetricDescriptor::lp(power)), p, q);
  return {std::move(generic.value), std::move(generic.coupling), true};
}

}  // namespace detail

inline HatResult hat_with_witness(const MetricDescriptor& desc, const Law& p,
                                  const Law& q) {
  detail::require_same_space(p, q);
  switch (desc.kind()) {
    case MetricKind::kKyFan:
      return detail::hat_ky_fan(desc.param(), p, q);
    case MetricKind::kLp:
      return detail::hat_lp(desc.param(), p, q);
    case MetricKind::kLinf: {
      auto solution = bottleneck_with_witness(p, q);
      return {MetricValue::exact(std::move(solution.value)),
              std::move(solution.coupling)};
    }
    case MetricKind::kIndicator: {
      auto solution =
          transport_lp(TransportProblem::threshold(p, q, Rational(0), true));
      return {MetricValue::exact(std::move(solution.value)),
              std::move(solution.coupling)};
    }
    case MetricKind::kProkhorov:
    case MetricKind::kTotalVariation:
      // Simple: every coupling attains the value.
      return {eval_joint(desc, product_coupling(p, q)), product_coupling(p, q)};
    case MetricKind::kHat:
      return hat_with_witness(desc.inner(), p, q);
    case MetricKind::kSupOf: {
      auto generic = hat_generic(functional_of(desc), p, q);
      MetricValue lower = MetricValue::exact(0);
      for (const auto& child : desc.children()) {
        lower = max_value(lower, hat_with_witness(child, p, q).value);
      }
      const bool exact = generic.value == lower;
      return {std::move(generic.value), std::move(generic.coupling), exact};
    }
  }
  throw std::logic_error("unhandled metric kind");
}

inline MetricValue hat(const MetricDescriptor& desc, const Law& p,
                       const Law& q) {
  return hat_with_witness(desc, p, q).value;
}

// The hat of a probability metric depends on the marginal laws only. The
// descriptor route makes this structural; check_simple_on confirms it on two
// different joint laws with the given marginals.
inline bool check_simple(const MetricDescriptor& desc) {
  return MetricDescriptor::hat_of(desc).is_simple();
}

inline bool check_simple_on(const MetricDescriptor& desc, const Law& p,
                            const Law& q) {
  const auto hat_desc = MetricDescriptor::hat_of(desc);
  const auto [xi1, eta1] = realize_pair(product_coupling(p, q));
  const auto [xi2, eta2] = realize_pair(
      transport_lp(TransportProblem::distance_power(p, q, 1)).coupling);
  return eval_metric(hat_desc, xi1, eta1) == eval_metric(hat_desc, xi2, eta2);
}

struct TriangleCheck {
  MetricValue direct;  // d^(P, R)
  MetricValue first;   // d^(P, Q)
  MetricValue second;  // d^(Q, R)
  bool holds = false;

  // The glued construction: pi on X x X x X with pi^{0,1} the (P,Q) witness
  // and pi^{1,2} the (Q,R) witness, realized as (xi0, zeta0, eta0).
  std::optional<ChainLaw> glued;
  std::optional<MetricValue> glued_outer;  // d(xi0, eta0)
  bool marginals_reproduced = false;
  bool chain_holds = false;
};

// d^(P,R) <= d^(P,Q) + d^(Q,R), optionally with the glued witness and the
// chain d^(P,R) <= d(xi0,eta0) <= d(xi0,zeta0) + d(zeta0,eta0)
//                                = d^(P,Q) + d^(Q,R).
inline TriangleCheck check_hat_triangle(const MetricDescriptor& desc,
                                        const Law& p, const Law& q,
                                        const Law& r,
                                        bool with_witness = false) {
  auto pr = hat_with_witness(desc, p, r);
  auto pq = hat_with_witness(desc, p, q);
  auto qr = hat_with_witness(desc, q, r);
  if (!pr.exact || !pq.exact || !qr.exact) {
    throw InvalidArgument("triangle check needs exact minimal values for " +
                          desc.str());
  }
  TriangleCheck check;
  check.direct = pr.value;
  check.first = pq.value;
  check.second = qr.value;
  check.holds = leq_sum(check.direct, check.first, check.second);
  if (!with_witness) return check;

  ChainLaw glued = glue(pq.coupling, qr.coupling);
  check.marginals_reproduced =
      marginal(glued, {0, 1}) == ChainLaw::from_coupling(pq.coupling) &&
      marginal(glued, {1, 2}) == ChainLaw::from_coupling(qr.coupling);
  const auto rvs = realize_chain(glued);
  const MetricValue outer = eval_metric(desc, rvs[0], rvs[2]);
  const MetricValue left = eval_metric(desc, rvs[0], rvs[1]);
  const MetricValue right = eval_metric(desc, rvs[1], rvs[2]);
  check.chain_holds = check.direct <= outer && leq_sum(outer, left, right) &&
                      left == check.first && right == check.second;
  check.glued = std::move(glued);
  check.glued_outer = outer;
  return check;
}

// sup_{d in D} d^  <=  (sup_{d in D} d)^, evaluated at (P, Q). The right
// side is the vertex-search upper bound for the sup descriptor.
struct SupHatCheck {
  MetricValue sup_of_hats;
  MetricValue hat_of_sup_bound;
  bool bound_is_exact = false;
  bool holds = false;
};

inline SupHatCheck check_sup_of_hats(
    const std::vector<MetricDescriptor>& basis, const Law& p, const Law& q) {
  const auto sup = MetricDescriptor::sup_of(basis);
  MetricValue lower = MetricValue::exact(0);
  for (const auto& d : basis) lower = max_value(lower, hat(d, p, q));
  auto upper = hat_with_witness(sup, p, q);
  SupHatCheck check;
  check.sup_of_hats = lower;
  check.hat_of_sup_bound = upper.value;
  check.bound_is_exact = upper.exact;
  check.holds = check.sup_of_hats <= check.hat_of_sup_bound;
  return check;
}

// Transfer of (eps, omega)-domination to minimal metrics:
//   d1 ^ omega <= d2 + eps  implies  d1^ ^ omega <= d2^ + eps.
// The premise is checked on the supplied random-variable pairs and the
// conclusion on their laws. The implication is only meaningful when the
// family contains a d2-optimal coupling for each law pair; callers add the
// hat_with_witness realizations for that.
struct DominationCheck {
  bool premise = true;
  bool conclusion = true;
  std::size_t pairs = 0;
};

inline DominationCheck check_domination_transfer(
    const MetricDescriptor& d1, const MetricDescriptor& d2,
    const Rational& eps, const Rational& omega,
    const std::vector<std::pair<RandomVariable, RandomVariable>>& family) {
  DominationCheck check;
  check.pairs = family.size();
  for (const auto& [xi, eta] : family) {
    if (!capped_leq(eval_metric(d1, xi, eta), omega, eval_metric(d2, xi, eta),
                    eps)) {
      check.premise = false;
    }
    const Law p = law_of(xi);
    const Law q = law_of(eta);
    if (!capped_leq(hat(d1, p, q), omega, hat(d2, p, q), eps)) {
      check.conclusion = false;
    }
  }
  return check;
}

}  // namespace probmetric

#endif  // PROBMETRIC_MINIMAL_HPP_
