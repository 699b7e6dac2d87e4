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

// Probability uniform gauges, given by a basis of probability metrics, and
// their limit operators on eventually periodic sequences.
//
// The limit operator of a gauge is the supremum over its basis of
// limsup_n d(xi, xi_n). Metrics added by saturating the basis are dominated
// by basis members up to (eps, omega), so they cannot raise that supremum.
// For an eventually periodic sequence the limsup is a maximum over the cycle.

#ifndef PROBMETRIC_GAUGES_HPP_
#define PROBMETRIC_GAUGES_HPP_

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "probmetric/descriptor.hpp"
#include "probmetric/gluing.hpp"
#include "probmetric/metric_value.hpp"
#include "probmetric/metrics.hpp"
#include "probmetric/minimal.hpp"
#include "probmetric/random_variable.hpp"
#include "probmetric/transport.hpp"

namespace probmetric {

enum class GaugeKind {
  kFiniteBasis,
  kKyFanFamily,      // { K_lambda : lambda > 0 }
  kProkhorovFamily,  // { rho_lambda : lambda > 0 }
};

class Gauge {
 public:
  static Gauge finite(std::vector<MetricDescriptor> basis) {
    if (basis.empty()) throw InvalidArgument("gauge basis must be nonempty");
    Gauge g(GaugeKind::kFiniteBasis);
    g.basis_ = std::move(basis);
    return g;
  }
  static Gauge ky_fan_family() { return Gauge(GaugeKind::kKyFanFamily); }
  static Gauge prokhorov_family() {
    return Gauge(GaugeKind::kProkhorovFamily);
  }

  GaugeKind kind() const { return kind_; }
  const std::vector<MetricDescriptor>& basis() const { return basis_; }

  bool is_simple() const {
    switch (kind_) {
      case GaugeKind::kKyFanFamily:
        return false;
      case GaugeKind::kProkhorovFamily:
        return true;
      case GaugeKind::kFiniteBasis:
        for (const auto& d : basis_) {
          if (!d.is_simple()) return false;
        }
        return true;
    }
    return false;
  }

  std::string str() const {
    switch (kind_) {
      case GaugeKind::kKyFanFamily:
        return "kyfan-family";
      case GaugeKind::kProkhorovFamily:
        return "prok-family";
      case GaugeKind::kFiniteBasis: {
        std::string s = "basis(";
        for (std::size_t i = 0; i < basis_.size(); ++i) {
          if (i) s += ",";
          s += basis_[i].str();
        }
        return s + ")";
      }
    }
    return {};
  }

  bool operator==(const Gauge&) const = default;

 private:
  explicit Gauge(GaugeKind kind) : kind_(kind) {}

  GaugeKind kind_;
  std::vector<MetricDescriptor> basis_;
};

// kyfan-family, prok-family, basis(d1,d2,...) or a single descriptor.
inline Gauge parse_gauge(std::string_view text) {
  text = detail::trim(text);
  if (text == "kyfan-family") return Gauge::ky_fan_family();
  if (text == "prok-family") return Gauge::prokhorov_family();
  constexpr std::string_view head = "basis(";
  if (text.substr(0, head.size()) == head && text.back() == ')') {
    std::vector<MetricDescriptor> basis;
    for (auto part : detail::split_top_level(
             text.substr(head.size(), text.size() - head.size() - 1))) {
      basis.push_back(parse_descriptor(part));
    }
    return Gauge::finite(std::move(basis));
  }
  return Gauge::finite({parse_descriptor(text)});
}

// Eventually periodic sequence: prefix, then the cycle repeated forever.
struct SequenceSpec {
  std::vector<RandomVariable> prefix;
  std::vector<RandomVariable> cycle;

  SequenceSpec(std::vector<RandomVariable> prefix_rvs,
               std::vector<RandomVariable> cycle_rvs)
      : prefix(std::move(prefix_rvs)), cycle(std::move(cycle_rvs)) {
    if (cycle.empty()) throw InvalidArgument("sequence cycle must be nonempty");
    for (const auto& rv : all()) {
      if (!same_space(rv.space(), cycle.front().space())) {
        throw InvalidArgument("sequence elements live on different spaces");
      }
    }
  }

  static SequenceSpec constant(RandomVariable rv) {
    return SequenceSpec({}, {std::move(rv)});
  }

  std::vector<RandomVariable> all() const {
    std::vector<RandomVariable> out = prefix;
    out.insert(out.end(), cycle.begin(), cycle.end());
    return out;
  }

  // n-th element (0-based).
  const RandomVariable& at(std::size_t n) const {
    if (n < prefix.size()) return prefix[n];
    return cycle[(n - prefix.size()) % cycle.size()];
  }
};

// limsup_n d(xi, xi_n): the maximum over the cycle.
inline MetricValue limsup_seq(const MetricDescriptor& desc,
                              const SequenceSpec& seq,
                              const RandomVariable& target) {
  MetricValue best = MetricValue::exact(0);
  for (const auto& rv : seq.cycle) {
    best = max_value(best, eval_metric(desc, target, rv));
  }
  return best;
}

// limsup_n d^(xi, xi_n).
inline MetricValue limsup_hat(const MetricDescriptor& desc,
                              const SequenceSpec& seq,
                              const RandomVariable& target) {
  const Law base = law_of(target);
  MetricValue best = MetricValue::exact(0);
  for (const auto& rv : seq.cycle) {
    best = max_value(best, hat(desc, base, law_of(rv)));
  }
  return best;
}

// Over lambda in (0, inf), K_lambda increases to d_i and rho_lambda to d_TV
// as lambda decreases; both limits are reached once lambda < (smallest
// positive distance), so the family suprema are closed forms.
inline MetricValue limit_operator(const Gauge& g, const SequenceSpec& seq,
                                  const RandomVariable& target) {
  switch (g.kind()) {
    case GaugeKind::kKyFanFamily:
      return limsup_seq(MetricDescriptor::indicator(), seq, target);
    case GaugeKind::kProkhorovFamily:
      return limsup_seq(MetricDescriptor::total_variation(), seq, target);
    case GaugeKind::kFiniteBasis: {
      MetricValue best = MetricValue::exact(0);
      for (const auto& d : g.basis()) {
        best = max_value(best, limsup_seq(d, seq, target));
      }
      return best;
    }
  }
  throw std::logic_error("unhandled gauge kind");
}

// A parameter small enough that K_lambda = d_i and rho_lambda = d_TV on the
// whole space: half the smallest positive distance (1 on a singleton).
inline Rational small_lambda(const FinMetricSpace& space) {
  const Rational delta = space.min_positive_distance();
  return sgn(delta) == 0 ? Rational(1) : Rational(delta / 2);
}

// Closed-form minimal metric of a single descriptor, where one is known.
inline MetricDescriptor reflect(const MetricDescriptor& desc) {
  switch (desc.kind()) {
    case MetricKind::kKyFan:
      return MetricDescriptor::prokhorov(desc.param());
    case MetricKind::kIndicator:
      return MetricDescriptor::total_variation();
    case MetricKind::kProkhorov:
    case MetricKind::kTotalVariation:
    case MetricKind::kHat:
      return desc;
    default:
      return MetricDescriptor::hat_of(desc);
  }
}

// The minimal gauge: hat of every basis metric.
inline Gauge reflect(const Gauge& g) {
  switch (g.kind()) {
    case GaugeKind::kKyFanFamily:
    case GaugeKind::kProkhorovFamily:
      return Gauge::prokhorov_family();
    case GaugeKind::kFiniteBasis: {
      std::vector<MetricDescriptor> basis;
      for (const auto& d : g.basis()) basis.push_back(reflect(d));
      return Gauge::finite(std::move(basis));
    }
  }
  throw std::logic_error("unhandled gauge kind");
}

// The generating sup-metric of the finest metric coarsening.
inline MetricDescriptor coreflect(const Gauge& g) {
  switch (g.kind()) {
    case GaugeKind::kKyFanFamily:
      return MetricDescriptor::indicator();
    case GaugeKind::kProkhorovFamily:
      return MetricDescriptor::total_variation();
    case GaugeKind::kFiniteBasis:
      return g.basis().size() == 1 ? g.basis().front()
                                   : MetricDescriptor::sup_of(g.basis());
  }
  throw std::logic_error("unhandled gauge kind");
}

// A version of (xi, (xi_n)): random variables with the same laws,
// built on the same sample space.
struct VersionSequence {
  RandomVariable target;
  SequenceSpec sequence;
};

// Glues one coupling per sequence element (prefix and one period), all with
// first marginal L(xi), and realizes the result. The n-th pair of the
// version has joint law couplings[n].
inline VersionSequence version_from_couplings(
    const SequenceSpec& seq, std::span<const CouplingMatrix> couplings) {
  const std::size_t total = seq.prefix.size() + seq.cycle.size();
  if (couplings.size() != total) {
    throw InvalidArgument("one coupling per sequence element is required");
  }
  auto rvs = realize_chain(glue_chain(couplings));
  RandomVariable target = rvs.front();
  std::vector<RandomVariable> prefix(rvs.begin() + 1,
                                     rvs.begin() + 1 + seq.prefix.size());
  std::vector<RandomVariable> cycle(rvs.begin() + 1 + seq.prefix.size(),
                                    rvs.end());
  return {std::move(target), SequenceSpec(std::move(prefix), std::move(cycle))};
}

// Version whose pairs use optimal couplings for `desc`: its limsup of d
// equals limsup d^ (the minimum over versions is attained).
inline VersionSequence optimal_version(const MetricDescriptor& desc,
                                       const SequenceSpec& seq,
                                       const RandomVariable& target) {
  const Law base = law_of(target);
  std::vector<CouplingMatrix> couplings;
  for (const auto& rv : seq.all()) {
    couplings.push_back(hat_with_witness(desc, base, law_of(rv)).coupling);
  }
  return version_from_couplings(seq, couplings);
}

// Version built from random vertices of each transportation polytope.
inline VersionSequence random_version(const SequenceSpec& seq,
                                      const RandomVariable& target,
                                      std::mt19937_64& rng) {
  const Law base = law_of(target);
  std::vector<CouplingMatrix> couplings;
  for (const auto& rv : seq.all()) {
    const Law law = law_of(rv);
    std::vector<Rational> cost(base.size() * law.size());
    for (auto& c : cost) c = static_cast<long>(rng() % 17);
    couplings.push_back(transport_lp(TransportProblem(base, law, cost)).coupling);
  }
  return version_from_couplings(seq, couplings);
}

struct GapReport {
  MetricValue lower;  // limit operator of the reflected gauge
  MetricValue upper;  // best limit operator of g over constructed versions
  double gap = 0.0;   // upper - lower, for display
  bool ordered = false;           // lower <= upper (always expected)
  bool strict_candidate = false;  // upper > lower after the full budget
  std::size_t versions_tried = 0;
  std::optional<VersionSequence> best_version;
};

// lambda_{G^}(xi_n -> xi) against an upper bound on
// inf over versions of lambda_G(xi'_n -> xi'). A positive gap is only a
// candidate: the search over versions is finite.
inline GapReport min_limit_gap(const Gauge& g, const SequenceSpec& seq,
                               const RandomVariable& target,
                               std::size_t budget, std::mt19937_64 rng) {
  GapReport report;
  report.lower = limit_operator(reflect(g), seq, target);

  auto consider = [&](VersionSequence version) {
    ++report.versions_tried;
    MetricValue value = limit_operator(g, version.sequence, version.target);
    if (!report.best_version || value < report.upper) {
      report.upper = std::move(value);
      report.best_version = std::move(version);
    }
  };

  std::vector<MetricDescriptor> guides;
  switch (g.kind()) {
    case GaugeKind::kKyFanFamily:
      guides.push_back(MetricDescriptor::indicator());
      break;
    case GaugeKind::kProkhorovFamily:
      guides.push_back(MetricDescriptor::total_variation());
      break;
    case GaugeKind::kFiniteBasis:
      guides = g.basis();
      if (guides.size() > 1 &&
          target.space()->size() <= kFastVertexSearchPoints) {
        guides.push_back(MetricDescriptor::sup_of(g.basis()));
      }
      break;
  }
  for (const auto& d : guides) consider(optimal_version(d, seq, target));
  for (std::size_t k = 0; k < budget; ++k) {
    if (report.upper <= report.lower) break;
    consider(random_version(seq, target, rng));
  }
  report.ordered = report.lower <= report.upper;
  report.strict_candidate = report.lower < report.upper;
  report.gap = report.upper.approx() - report.lower.approx();
  return report;
}

using RvPair = std::pair<RandomVariable, RandomVariable>;

// Finite stand-in for a gauge basis on a given space. Family gauges are
// represented by their member at small_lambda (which equals the family
// supremum there) and a few fixed parameters.
inline std::vector<MetricDescriptor> expand_basis(const Gauge& g,
                                                  const FinMetricSpace& space) {
  if (g.kind() == GaugeKind::kFiniteBasis) return g.basis();
  std::vector<MetricDescriptor> out;
  for (const Rational& lambda :
       {small_lambda(space), Rational(1, 2), Rational(1), Rational(2)}) {
    out.push_back(g.kind() == GaugeKind::kKyFanFamily
                      ? MetricDescriptor::ky_fan(lambda)
                      : MetricDescriptor::prokhorov(lambda));
  }
  return out;
}

struct ContractionGrid {
  std::vector<Rational> eps{Rational(1, 8), Rational(1, 4), Rational(1, 2)};
  std::vector<Rational> omega{Rational(1, 2), Rational(1), Rational(2)};
};

struct ContractionViolation {
  MetricDescriptor target_metric;
  Rational eps;
  Rational omega;
  std::size_t pair_index;
};

struct ContractionReport {
  bool pass = true;
  std::size_t checks = 0;
  std::optional<ContractionViolation> counterexample;
};

// Searches the family for a violation of the contraction condition of
// f: (X, gX) -> (Y, gY): for every e in gY's basis and (eps, omega) on the
// grid, some d in gX's basis must satisfy
//   e(f xi, f eta) ^ omega <= d(xi, eta) + eps   for every pair.
// Passing is evidence on this family, not a proof.
inline ContractionReport check_random_contraction(
    std::span<const std::size_t> f, const SpacePtr& source,
    const SpacePtr& target, const Gauge& g_source, const Gauge& g_target,
    const std::vector<RvPair>& family, const ContractionGrid& grid = {}) {
  const auto source_basis = expand_basis(g_source, *source);
  const auto target_basis = expand_basis(g_target, *target);
  std::vector<std::vector<MetricValue>> source_values(source_basis.size());
  for (std::size_t k = 0; k < source_basis.size(); ++k) {
    for (const auto& [xi, eta] : family) {
      source_values[k].push_back(eval_metric(source_basis[k], xi, eta));
    }
  }
  ContractionReport report;
  for (const auto& e : target_basis) {
    std::vector<MetricValue> image_values;
    for (const auto& [xi, eta] : family) {
      image_values.push_back(eval_metric(e, push_forward(xi, f, target),
                                         push_forward(eta, f, target)));
    }
    for (const auto& eps : grid.eps) {
      for (const auto& omega : grid.omega) {
        ++report.checks;
        std::optional<std::size_t> first_violation;
        bool dominated = false;
        for (std::size_t k = 0; k < source_basis.size() && !dominated; ++k) {
          dominated = true;
          for (std::size_t n = 0; n < family.size(); ++n) {
            if (!capped_leq(image_values[n], omega, source_values[k][n],
                            eps)) {
              dominated = false;
              if (!first_violation) first_violation = n;
              break;
            }
          }
        }
        if (!dominated && report.pass) {
          report.pass = false;
          report.counterexample =
              ContractionViolation{e, eps, omega, *first_violation};
        }
      }
    }
  }
  return report;
}

enum class FactorizationStatus { kHolds, kNotApplicable, kViolated };

inline std::string to_string(FactorizationStatus s) {
  switch (s) {
    case FactorizationStatus::kHolds:
      return "holds";
    case FactorizationStatus::kNotApplicable:
      return "not applicable";
    case FactorizationStatus::kViolated:
      return "violated";
  }
  return {};
}

// For simple gY: if f is a contraction (X, gX) -> (Y, gY) on the family, it
// must also be one from the reflected object (X, gX^).
inline FactorizationStatus verify_reflection_factorization(
    std::span<const std::size_t> f, const SpacePtr& source,
    const SpacePtr& target, const Gauge& g_source, const Gauge& g_target,
    const std::vector<RvPair>& family) {
  if (!g_target.is_simple()) {
    throw InvalidArgument("reflection factorization needs a simple target " +
                          g_target.str());
  }
  if (!check_random_contraction(f, source, target, g_source, g_target, family)
           .pass) {
    return FactorizationStatus::kNotApplicable;
  }
  return check_random_contraction(f, source, target, reflect(g_source),
                                  g_target, family)
                 .pass
             ? FactorizationStatus::kHolds
             : FactorizationStatus::kViolated;
}

}  // namespace probmetric

#endif  // PROBMETRIC_GAUGES_HPP_
