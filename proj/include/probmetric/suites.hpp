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

// Property suites over generated instances, and their reports.
//
// A suite runs one check routine per seed. Each check lands in a row keyed
// by (check, metric) that counts instances, failures, the largest numeric
// discrepancy and a suite-specific hit counter (counterexamples found,
// premises that held, strict-gap candidates). Reports are deterministic:
// timing is kept out of the output unless asked for.

#ifndef PROBMETRIC_SUITES_HPP_
#define PROBMETRIC_SUITES_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "probmetric/descriptor.hpp"
#include "probmetric/gauges.hpp"
#include "probmetric/generate.hpp"
#include "probmetric/gluing.hpp"
#include "probmetric/instance_io.hpp"
#include "probmetric/metrics.hpp"
#include "probmetric/minimal.hpp"
#include "probmetric/oracles.hpp"
#include "probmetric/transport.hpp"

namespace probmetric {

struct SuiteOptions {
  // Compare values in floating point with kFloatTolerance and add
  // non-integer L^p orders, which have no exact evaluation.
  bool float_mode = false;
};

struct SuiteRow {
  std::string check;
  std::string metric;
  std::size_t instances = 0;
  std::size_t failures = 0;
  double max_abs_diff = 0.0;
  std::size_t hits = 0;
};

struct SuiteFailure {
  std::uint64_t seed = 0;
  std::string check;
  std::string metric;
  std::string message;
  std::string instance;  // instance file text, reproducible from the seed
};

struct SuiteReport {
  std::string suite;
  std::uint64_t first_seed = 0;
  std::uint64_t last_seed = 0;
  bool float_mode = false;
  std::vector<SuiteRow> rows;
  std::vector<SuiteFailure> failures;
  std::size_t failure_count = 0;
  double seconds = 0.0;

  bool passed() const { return failure_count == 0; }

  const SuiteRow* find(const std::string& check,
                       const std::string& metric = "") const {
    for (const auto& r : rows) {
      if (r.check == check && r.metric == metric) return &r;
    }
    return nullptr;
  }
};

// Failure dumps kept per report; the count covers all of them.
inline constexpr std::size_t kMaxStoredFailures = 20;

class SuiteRun {
 public:
  SuiteRun(std::string name, std::uint64_t first, std::uint64_t last,
           SuiteOptions options)
      : options_(options) {
    report_.suite = std::move(name);
    report_.first_seed = first;
    report_.last_seed = last;
    report_.float_mode = options.float_mode;
  }

  const SuiteOptions& options() const { return options_; }

  void begin_seed(std::uint64_t seed) {
    seed_ = seed;
    instance_.clear();
  }

  // The instance written out if this seed fails.
  void set_instance(const InstanceBundle& bundle) {
    instance_ = print_bundle(bundle);
  }

  SuiteRow& row(const std::string& check, const std::string& metric = "") {
    const auto key = std::make_pair(check, metric);
    auto it = index_.find(key);
    if (it == index_.end()) {
      it = index_.emplace(key, report_.rows.size()).first;
      report_.rows.push_back(SuiteRow{check, metric, 0, 0, 0.0, 0});
    }
    return report_.rows[it->second];
  }

  bool expect(bool ok, const std::string& check, const std::string& metric,
              const std::string& message, double diff = 0.0) {
    SuiteRow& r = row(check, metric);
    ++r.instances;
    if (std::isfinite(diff)) r.max_abs_diff = std::max(r.max_abs_diff, diff);
    if (!ok) fail(r, message);
    return ok;
  }

  void hit(const std::string& check, const std::string& metric = "") {
    ++row(check, metric).hits;
  }

  void fail(SuiteRow& r, const std::string& message) {
    ++r.failures;
    ++report_.failure_count;
    if (report_.failures.size() < kMaxStoredFailures) {
      report_.failures.push_back(
          SuiteFailure{seed_, r.check, r.metric, message, instance_});
    }
  }

  // Mode-aware comparisons.
  bool eq(const MetricValue& a, const MetricValue& b) const {
    if (!options_.float_mode) return a == b;
    return abs_difference(a, b) <= tolerance(a, b);
  }
  bool le(const MetricValue& a, const MetricValue& b) const {
    if (!options_.float_mode) return a <= b;
    return a.approx() <= b.approx() + tolerance(a, b);
  }
  bool le_sum(const MetricValue& a, const MetricValue& b,
              const MetricValue& c) const {
    if (!options_.float_mode) return leq_sum(a, b, c);
    return a.approx() <= b.approx() + c.approx() + tolerance(a, b);
  }

  SuiteReport finish(double seconds) {
    report_.seconds = seconds;
    return std::move(report_);
  }

 private:
  static double tolerance(const MetricValue& a, const MetricValue& b) {
    return kFloatTolerance *
           std::max({1.0, std::abs(a.approx()), std::abs(b.approx())});
  }

  SuiteOptions options_;
  SuiteReport report_;
  std::map<std::pair<std::string, std::string>, std::size_t> index_;
  std::uint64_t seed_ = 0;
  std::string instance_;
};

namespace suites {

inline std::vector<MetricDescriptor> parse_all(
    std::initializer_list<const char*> texts) {
  std::vector<MetricDescriptor> out;
  for (const char* t : texts) out.push_back(parse_descriptor(t));
  return out;
}

// The six families at a few parameters.
inline std::vector<MetricDescriptor> core_descriptors(bool float_mode) {
  auto out = parse_all({"kyfan:1/2", "kyfan:1", "kyfan:2", "lp:1", "lp:2",
                        "lp:3", "linf", "ind", "prok:1/2", "prok:1", "prok:2",
                        "tv"});
  if (float_mode) out.push_back(parse_descriptor("lp:3/2"));
  return out;
}

// Descriptors whose minimal metric has a closed form or an exact LP.
inline std::vector<MetricDescriptor> exact_hat_descriptors() {
  return core_descriptors(false);
}

inline std::vector<MetricDescriptor> basis_pool() {
  return parse_all(
      {"kyfan:1", "kyfan:1/2", "lp:1", "lp:2", "linf", "ind", "prok:1", "tv"});
}

inline std::vector<MetricDescriptor> random_basis(Rng& rng) {
  auto pool = basis_pool();
  shuffle_in_place(pool, rng);
  pool.erase(pool.begin() + uniform_int(rng, 1, 3), pool.end());
  return pool;
}

inline std::string pair_text(const char* a, const char* b) {
  return std::string("(") + a + "," + b + ")";
}

// Metric axioms on random variables: reflexivity, symmetry, triangle, and
// separation (distinct a.e. gives a positive value for metrics on random
// variables, distinct laws for all).
inline void axioms(SuiteRun& run, std::uint64_t seed) {
  const auto b = generate(seed, Profile::named("default"));
  run.set_instance(b);
  const char* names[] = {"xi", "eta", "zeta"};
  for (const auto& d : core_descriptors(run.options().float_mode)) {
    const std::string m = d.str();
    std::map<std::pair<int, int>, MetricValue> v;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        v.emplace(std::make_pair(i, j),
                  eval_metric(d, b.rv(names[i]), b.rv(names[j])));
      }
    }
    for (int i = 0; i < 3; ++i) {
      run.expect(v.at({i, i}).is_zero(), "reflexive", m,
                 std::string("d(") + names[i] + "," + names[i] + ") = " +
                     v.at({i, i}).str(),
                 v.at({i, i}).approx());
      for (int j = i + 1; j < 3; ++j) {
        const auto& a = v.at({i, j});
        const auto& c = v.at({j, i});
        run.expect(run.eq(a, c), "symmetric", m,
                   pair_text(names[i], names[j]) + ": " + a.str() + " vs " +
                       c.str(),
                   abs_difference(a, c));
        const bool distinct =
            d.is_simple()
                ? !(law_of(b.rv(names[i])) == law_of(b.rv(names[j])))
                : !equal_ae(b.rv(names[i]), b.rv(names[j]));
        if (distinct) {
          run.expect(a.approx() > 0, "separation", m,
                     pair_text(names[i], names[j]) + " distinct but d = 0");
        }
      }
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
          if (i == j || j == k || i == k || i > k) continue;
          run.expect(run.le_sum(v.at({i, k}), v.at({i, j}), v.at({j, k})),
                     "triangle", m,
                     std::string(names[i]) + "->" + names[j] + "->" +
                         names[k] + ": " + v.at({i, k}).str() + " > " +
                         v.at({i, j}).str() + " + " + v.at({j, k}).str());
        }
      }
    }
  }
}

// Values depend on the joint law only: two realizations of one coupling,
// and a.e.-equal rewrites of the same pair, give identical values.
inline void pm(SuiteRun& run, std::uint64_t seed) {
  const auto b = generate(seed, Profile::named("default"));
  run.set_instance(b);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const CouplingMatrix pi = random_coupling(b.law("P"), b.law("Q"), rng);
  const ChainLaw chain = ChainLaw::from_coupling(pi);
  const auto first = realize_chain(chain);
  const auto second = shuffled_realization(chain, rng);
  run.expect(joint_law(first[0], first[1]) == pi &&
                 joint_law(second[0], second[1]) == pi,
             "realization", "", "realized joint law differs from coupling");
  const auto& xi = b.rv("xi");
  const auto& eta = b.rv("eta");
  const RandomVariable xi2 = subdivide(xi, rng);
  const RandomVariable eta2 = subdivide(eta, rng);
  run.expect(equal_ae(xi, xi2) && equal_ae(eta, eta2), "null-set-rewrite", "",
             "subdivision changed the function");
  for (const auto& d : core_descriptors(run.options().float_mode)) {
    const auto a = eval_metric(d, first[0], first[1]);
    const auto c = eval_metric(d, second[0], second[1]);
    run.expect(a == c, "joint-law", d.str(),
               "realizations disagree: " + a.str() + " vs " + c.str(),
               abs_difference(a, c));
    const auto e = eval_metric(d, xi, eta);
    const auto f = eval_metric(d, xi2, eta2);
    run.expect(e == f, "null-set", d.str(),
               "a.e.-equal pairs disagree: " + e.str() + " vs " + f.str(),
               abs_difference(e, f));
  }
}

// Simple metrics (and every hat) are invariant under law-preserving
// changes of the pair; non-simple ones must show a counterexample somewhere
// in the run (checked when the suite finishes).
inline std::vector<MetricDescriptor> simplicity_descriptors(bool float_mode) {
  auto out = core_descriptors(float_mode);
  for (const char* t : {"hat(kyfan:1)", "hat(lp:2)", "hat(linf)", "hat(ind)"}) {
    out.push_back(parse_descriptor(t));
  }
  return out;
}

inline void simplicity(SuiteRun& run, std::uint64_t seed) {
  const auto b = generate(seed, Profile::named("default"));
  run.set_instance(b);
  Rng rng(seed ^ 0x5bd1e995ULL);
  const auto& xi = b.rv("xi");
  const auto& eta = b.rv("eta");
  const Law p = law_of(xi);
  const Law q = law_of(eta);
  // Law-preserving alternatives to the given joint realization.
  std::vector<RvPair> others;
  others.push_back(realize_pair(random_vertex_coupling(p, q, rng)));
  others.push_back(realize_pair(random_vertex_coupling(p, q, rng)));
  others.push_back(realize_pair(product_coupling(p, q)));
  auto cheapest = TransportProblem::distance_power(p, q, 1);
  others.push_back(realize_pair(transport_lp(cheapest).coupling));
  for (auto& c : cheapest.cost) c = -c;
  others.push_back(realize_pair(transport_lp(cheapest).coupling));
  for (const auto& d : simplicity_descriptors(run.options().float_mode)) {
    const auto a = eval_metric(d, xi, eta);
    bool moved = false;
    for (const auto& [xi2, eta2] : others) {
      const auto c = eval_metric(d, xi2, eta2);
      if (d.is_simple()) {
        run.expect(a == c, "law-invariant", d.str(),
                   "simple metric changed under a law-preserving map: " +
                       a.str() + " vs " + c.str(),
                   abs_difference(a, c));
      } else {
        moved = moved || !(a == c);
      }
    }
    if (!d.is_simple()) {
      run.row("law-invariant", d.str()).instances += 1;
      if (moved) run.hit("law-invariant", d.str());
    }
  }
}

inline void simplicity_finish(SuiteRun& run) {
  for (const auto& d : simplicity_descriptors(run.options().float_mode)) {
    if (d.is_simple()) continue;
    const std::size_t found = run.row("law-invariant", d.str()).hits;
    run.expect(found > 0, "counterexample", d.str(),
               "no law-preserving counterexample found for a non-simple "
               "metric");
    run.row("counterexample", d.str()).hits = found;
  }
}

// Closed forms of minimal metrics, and exactness of the witnesses.
inline void identities(SuiteRun& run, std::uint64_t seed) {
  const auto b = generate(seed, Profile::named("default"));
  run.set_instance(b);
  const Law& p = b.law("P");
  const Law& q = b.law("Q");
  for (const Rational& lambda : {Rational(1, 2), Rational(1), Rational(2)}) {
    const auto k = hat(MetricDescriptor::ky_fan(lambda), p, q);
    const auto r = prokhorov(lambda, p, q);
    run.expect(run.eq(k, r), "hat(kyfan)=prok", to_string(lambda),
               k.str() + " vs " + r.str(), abs_difference(k, r));
  }
  {
    const auto i = hat(MetricDescriptor::indicator(), p, q);
    const auto t = total_variation(p, q);
    run.expect(run.eq(i, t), "hat(ind)=tv", "", i.str() + " vs " + t.str(),
               abs_difference(i, t));
  }
  for (unsigned k : {1U, 2U, 3U}) {
    const auto h = hat(MetricDescriptor::lp(k), p, q);
    const auto w = MetricValue::root(
        transport_lp(TransportProblem::distance_power(p, q, k)).value, k);
    run.expect(run.eq(h, w), "hat(lp)=wasserstein", std::to_string(k),
               h.str() + " vs " + w.str(), abs_difference(h, w));
  }
  {
    const auto h = hat(MetricDescriptor::linf(), p, q);
    const auto w = MetricValue::exact(bottleneck(p, q));
    run.expect(run.eq(h, w), "hat(linf)=bottleneck", "",
               h.str() + " vs " + w.str(), abs_difference(h, w));
  }
  for (const char* t : {"prok:1/2", "prok:1", "prok:2", "tv"}) {
    const auto d = parse_descriptor(t);
    const auto h = hat(d, p, q);
    const auto v = eval_joint(d, product_coupling(p, q));
    run.expect(run.eq(h, v), "idempotent", d.str(), h.str() + " vs " + v.str(),
               abs_difference(h, v));
  }
  for (const auto& d : exact_hat_descriptors()) {
    const auto result = hat_with_witness(d, p, q);
    const auto [xi, eta] = realize_pair(result.coupling);
    const auto v = eval_metric(d, xi, eta);
    run.expect(
        result.exact && law_of(xi) == p && law_of(eta) == q &&
            run.eq(v, result.value),
        "witness", d.str(),
        "witness attains " + v.str() + ", minimum " + result.value.str(),
        abs_difference(v, result.value));
  }
}

// Minimal metrics sit below the metric, and satisfy the triangle
// inequality through the glued witness.
inline void prop(SuiteRun& run, std::uint64_t seed) {
  const auto b = generate(seed, Profile::named("default"));
  run.set_instance(b);
  const auto& xi = b.rv("xi");
  const auto& eta = b.rv("eta");
  for (const auto& d : exact_hat_descriptors()) {
    const std::string m = d.str();
    const auto h = hat(d, law_of(xi), law_of(eta));
    const auto v = eval_metric(d, xi, eta);
    run.expect(run.le(h, v), "hat<=d", m, h.str() + " > " + v.str());
    const auto tri =
        check_hat_triangle(d, b.law("P"), b.law("Q"), b.law("R"), true);
    run.expect(tri.holds, "triangle", m,
               tri.direct.str() + " > " + tri.first.str() + " + " +
                   tri.second.str());
    run.expect(tri.marginals_reproduced, "glued-marginals", m,
               "glued law does not reproduce its couplings");
    run.expect(tri.chain_holds, "glued-chain", m,
               "chain through the glued witness fails, outer " +
                   tri.glued_outer->str());
  }
}

struct DominationPair {
  const char* d1;
  const char* d2;
};

// Pairs whose premise holds on the generated spaces (distances are
// multiples of 1/2), so the transfer is exercised and not vacuous.
inline constexpr DominationPair kDominationPairs[] = {
    {"kyfan:1", "ind"}, {"kyfan:1/2", "ind"}, {"ind", "linf"},
    {"lp:1", "linf"},   {"lp:1", "lp:2"},     {"prok:1", "tv"}};

inline std::vector<std::pair<Rational, Rational>> domination_grid() {
  return {{Rational(0), Rational(1, 2)},
          {Rational(1, 4), Rational(2)},
          {Rational(1, 2), Rational(4)}};
}

// Minimal gauge: sup of hats below the hat of the sup, and transfer of
// (eps, omega)-domination to minimal metrics.
inline void min_gauge(SuiteRun& run, std::uint64_t seed) {
  const auto b = generate(seed, Profile::named("small"));
  run.set_instance(b);
  Rng rng(seed ^ 0x2545f4914f6cdd1dULL);
  const auto basis = random_basis(rng);
  const auto sup = check_sup_of_hats(basis, b.law("P"), b.law("Q"));
  run.expect(sup.holds, "sup-of-hats", "",
             MetricDescriptor::sup_of(basis).str() + ": " +
                 sup.sup_of_hats.str() + " > " + sup.hat_of_sup_bound.str());
  if (sup.bound_is_exact) run.hit("sup-of-hats");

  // Fixed pairs are reported by name, pairs drawn from the basis together.
  std::vector<std::tuple<MetricDescriptor, MetricDescriptor, std::string>>
      pairs;
  for (const auto& p : kDominationPairs) {
    pairs.emplace_back(parse_descriptor(p.d1), parse_descriptor(p.d2),
                       std::string(p.d1) + "<" + p.d2);
  }
  for (const auto& d1 : basis) {
    for (const auto& d2 : basis) {
      if (!(d1 == d2)) pairs.emplace_back(d1, d2, "basis");
    }
  }
  const char* names[] = {"xi", "eta", "zeta"};
  for (const auto& [d1, d2, m] : pairs) {
    std::vector<RvPair> family;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const auto& x = b.rv(names[i]);
        const auto& y = b.rv(names[j]);
        family.emplace_back(x, y);
        for (const auto* d : {&d1, &d2}) {
          auto w = hat_with_witness(*d, law_of(x), law_of(y));
          family.push_back(realize_pair(w.coupling));
        }
      }
    }
    for (const auto& [eps, omega] : domination_grid()) {
      const auto check = check_domination_transfer(d1, d2, eps, omega, family);
      run.row("domination", m).instances += 1;
      if (!check.premise) continue;
      run.hit("domination", m);
      run.expect(check.conclusion, "domination-transfer", m,
                 d1.str() + "<" + d2.str() + " premise holds at eps=" +
                     to_string(eps) +
                     " omega=" + to_string(omega) + " but not for hats");
    }
  }
}

// Gluing reproduces every prescribed coupling.
inline void gluing(SuiteRun& run, std::uint64_t seed) {
  const auto b = generate(seed, Profile::named("gluing"));
  run.set_instance(b);
  Rng rng(seed ^ 0x27d4eb2f165667c5ULL);
  const Law& mu = b.law("P");
  const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 8));
  std::vector<CouplingMatrix> couplings;
  for (std::size_t k = 0; k < n; ++k) {
    const Law other = random_law(b.space, 64, rng);
    couplings.push_back(n <= 3 ? random_coupling(mu, other, rng)
                               : random_vertex_coupling(mu, other, rng));
  }
  const ChainLaw chain = glue_chain(couplings);
  bool ok = marginal(chain, {0}) == ChainLaw::from_law(mu);
  for (std::size_t k = 0; k < n; ++k) {
    ok = ok && marginal(chain, {0, k + 1}) ==
                   ChainLaw::from_coupling(couplings[k]);
  }
  run.expect(ok, "glue-chain", std::to_string(n),
             "a two-dimensional marginal differs from its coupling");

  const Law& p = b.law("P");
  const Law& q = b.law("Q");
  const Law& r = b.law("R");
  const auto first = random_coupling(p, q, rng);
  const auto second = random_coupling(q, r, rng);
  const ChainLaw glued = glue(first, second);
  run.expect(marginal(glued, {0, 1}) == ChainLaw::from_coupling(first) &&
                 marginal(glued, {1, 2}) == ChainLaw::from_coupling(second),
             "glue", "", "glued law does not reproduce its couplings");
  bool independent = true;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < q.size(); ++y) {
      for (std::size_t z = 0; z < r.size(); ++z) {
        independent = independent && glued.mass({x, y, z}) * q[y] ==
                                         first.at(x, y) * second.at(y, z);
      }
    }
  }
  run.expect(independent, "conditional-independence", "",
             "outer coordinates are not independent given the middle one");
}

inline std::vector<MetricDescriptor> limit_descriptors() {
  return parse_all({"kyfan:1", "kyfan:1/2", "lp:1", "lp:2", "linf", "ind",
                    "prok:1", "tv"});
}

// The minimal limit operator equals limsup of the hats and is attained by
// a version built from optimal couplings.
inline void limop(SuiteRun& run, std::uint64_t seed) {
  const auto b = generate(seed, Profile::named("default"));
  run.set_instance(b);
  Rng rng(seed ^ 0x85ebca6bULL);
  const auto seq = b.sequence("seq");
  const auto& target = b.rv("xi");
  const auto elements = seq.all();
  for (const auto& d : limit_descriptors()) {
    const std::string m = d.str();
    const auto lower = limsup_hat(d, seq, target);
    const auto version = optimal_version(d, seq, target);
    const auto versioned = version.sequence.all();
    bool laws = law_of(version.target) == law_of(target) &&
                versioned.size() == elements.size();
    for (std::size_t k = 0; laws && k < elements.size(); ++k) {
      laws = law_of(versioned[k]) == law_of(elements[k]);
    }
    run.expect(laws, "version-laws", m, "version changes a law");
    const auto attained = limsup_seq(d, version.sequence, version.target);
    run.expect(run.eq(attained, lower), "attained", m,
               "optimal version gives " + attained.str() + ", limsup hat " +
                   lower.str(),
               abs_difference(attained, lower));
    const auto random = random_version(seq, target, rng);
    const auto other = limsup_seq(d, random.sequence, random.target);
    run.expect(run.le(lower, other), "lower-bound", m,
               "random version below the minimum: " + other.str() + " < " +
                   lower.str());
    run.expect(lower.is_zero() == attained.is_zero(), "genconv", m,
               "generalized convergence disagrees");
    if (lower.is_zero()) run.hit("genconv", m);
  }
}

// lambda_{G^} <= min over versions of lambda_G, and Prokhorov limits stay
// below the Ky-Fan limits of any law-preserving modification.
inline void minlimop(SuiteRun& run, std::uint64_t seed) {
  const auto b = generate(seed, Profile::named("default"));
  run.set_instance(b);
  Rng rng(seed ^ 0xc2b2ae35ULL);
  const auto seq = b.sequence("seq");
  const auto& target = b.rv("xi");
  Gauge g = Gauge::ky_fan_family();
  switch (seed % 3) {
    case 1:
      g = Gauge::prokhorov_family();
      break;
    case 2:
      g = Gauge::finite(random_basis(rng));
      break;
    default:
      break;
  }
  const auto gap = min_limit_gap(g, seq, target, 4, Rng(seed));
  const std::string label =
      g.kind() == GaugeKind::kFiniteBasis ? "basis" : g.str();
  run.expect(gap.ordered, "ordered", label,
             "reflected operator " + gap.lower.str() + " above version bound " +
                 gap.upper.str());
  run.row("strict-candidate", label).instances += 1;
  if (gap.strict_candidate) run.hit("strict-candidate", label);

  const auto kyfan = Gauge::ky_fan_family();
  const auto prok = Gauge::prokhorov_family();
  const auto lp = limit_operator(prok, seq, target);
  const auto lk = limit_operator(kyfan, seq, target);
  run.expect(run.le(lp, lk), "prok<=kyfan", "",
             lp.str() + " > " + lk.str());
  std::vector<RandomVariable> prefix, cycle;
  for (const auto& rv : seq.prefix) prefix.push_back(rerealize(rv, rng));
  for (const auto& rv : seq.cycle) cycle.push_back(rerealize(rv, rng));
  const SequenceSpec moved(std::move(prefix), std::move(cycle));
  const RandomVariable moved_target = rerealize(target, rng);
  const auto lp2 = limit_operator(prok, moved, moved_target);
  const auto lk2 = limit_operator(kyfan, moved, moved_target);
  run.expect(run.eq(lp, lp2), "law-invariant", prok.str(),
             lp.str() + " vs " + lp2.str(), abs_difference(lp, lp2));
  run.expect(run.le(lp2, lk2), "prok<=kyfan", "modified",
             lp2.str() + " > " + lk2.str());
  run.expect(run.le(lp, lk2), "prok<=kyfan-moved", "",
             lp.str() + " > " + lk2.str() + " after modification");
}

// Family suprema: K_lambda reaches d_i and rho_lambda reaches d_TV once
// lambda is below the smallest positive distance.
inline void coreflection(SuiteRun& run, std::uint64_t seed) {
  const auto b = generate(seed, Profile::named("default"));
  run.set_instance(b);
  const Rational small = small_lambda(*b.space);
  const char* names[] = {"xi", "eta", "zeta"};
  run.expect(coreflect(Gauge::ky_fan_family()) ==
                     MetricDescriptor::indicator() &&
                 coreflect(Gauge::prokhorov_family()) ==
                     MetricDescriptor::total_variation(),
             "coreflect", "", "family coreflections are not ind and tv");
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto& x = b.rv(names[i]);
      const auto& y = b.rv(names[j]);
      const auto di = indicator_metric(x, y);
      const auto tv = total_variation(law_of(x), law_of(y));
      const std::string pr = pair_text(names[i], names[j]);
      for (const Rational& lambda : {small, Rational(small / 2)}) {
        const auto k = ky_fan(lambda, x, y);
        run.expect(k == di, "kyfan-sup", pr,
                   "K at " + to_string(lambda) + " is " + k.str() +
                       ", d_i is " + di.str(),
                   abs_difference(k, di));
        const auto r = prokhorov(lambda, law_of(x), law_of(y));
        run.expect(r == tv, "prok-sup", pr,
                   "rho at " + to_string(lambda) + " is " + r.str() +
                       ", tv is " + tv.str(),
                   abs_difference(r, tv));
      }
      bool monotone = true;
      MetricValue prev_k = ky_fan(small, x, y);
      MetricValue prev_r = prokhorov(small, law_of(x), law_of(y));
      for (const Rational& lambda : {Rational(1, 2), Rational(1), Rational(2)}) {
        const auto k = ky_fan(lambda, x, y);
        const auto r = prokhorov(lambda, law_of(x), law_of(y));
        monotone = monotone && (lambda < small ||
                                (k <= prev_k && r <= prev_r));
        prev_k = k;
        prev_r = r;
      }
      run.expect(monotone, "monotone", pr, "family not monotone in lambda");
    }
  }
  const auto seq = b.sequence("seq");
  const auto& target = b.rv("xi");
  const auto lk = limit_operator(Gauge::ky_fan_family(), seq, target);
  const auto explicit_k =
      limsup_seq(MetricDescriptor::ky_fan(small), seq, target);
  run.expect(lk == explicit_k, "limit-operator", "kyfan-family",
             lk.str() + " vs " + explicit_k.str(),
             abs_difference(lk, explicit_k));
}

// Exact values against brute force: a 1/1024 grid for Ky-Fan and
// Prokhorov, subsets for TV, and vertex enumeration for the LPs.
inline void oracle_suite(SuiteRun& run, std::uint64_t seed) {
  const auto b = generate(seed, Profile::named("prokhorov"));
  run.set_instance(b);
  const Rational step(1, oracle::kGridDenominator);
  const auto& xi = b.rv("xi");
  const auto& eta = b.rv("eta");
  const Law& p = b.law("P");
  const Law& q = b.law("Q");
  for (const Rational& lambda : {Rational(1, 2), Rational(1), Rational(2)}) {
    const std::string m = to_string(lambda);
    const Rational k = ky_fan(lambda, xi, eta).rational();
    const auto kg = oracle::ky_fan_grid(lambda, xi, eta);
    run.expect(k <= kg.grid_value && kg.grid_value - k <= step, "kyfan-grid",
               m, "exact " + to_string(k) + ", grid " + to_string(kg.grid_value),
               std::abs(to_double(k - kg.refined)));
    const Rational r = prokhorov(lambda, p, q).rational();
    const auto rg = oracle::prokhorov_grid(lambda, p, q);
    run.expect(r <= rg.grid_value && rg.grid_value - r <= step, "prok-grid", m,
               "exact " + to_string(r) + ", grid " + to_string(rg.grid_value),
               std::abs(to_double(r - rg.refined)));
  }
  const Rational tv = total_variation(p, q).rational();
  const Rational tv_subsets = oracle::total_variation_subsets(p, q);
  run.expect(tv == tv_subsets, "tv-subsets", "",
             to_string(tv) + " vs " + to_string(tv_subsets),
             std::abs(to_double(tv - tv_subsets)));

  const auto s = generate(seed, Profile::named("small"));
  const Law& sp = s.law("P");
  const Law& sq = s.law("Q");
  const auto vertex_check = [&](const std::string& m,
                                const TransportProblem& problem) {
    const Rational lp = transport_lp(problem).value;
    const Rational vx = oracle::vertex_min_cost(sp, sq, problem.cost);
    run.expect(lp == vx, "lp-vertices", m,
               "simplex " + to_string(lp) + ", vertices " + to_string(vx),
               std::abs(to_double(lp - vx)));
  };
  vertex_check("d^1", TransportProblem::distance_power(sp, sq, 1));
  vertex_check("d^2", TransportProblem::distance_power(sp, sq, 2));
  vertex_check("d>0", TransportProblem::threshold(sp, sq, Rational(0), true));
  vertex_check("d>=1", TransportProblem::threshold(sp, sq, Rational(1), false));
  const Rational bn = bottleneck(sp, sq);
  const Rational bv = oracle::vertex_bottleneck(sp, sq);
  run.expect(bn == bv, "bottleneck-vertices", "",
             to_string(bn) + " vs " + to_string(bv),
             std::abs(to_double(bn - bv)));
  const auto kf = MetricDescriptor::ky_fan(Rational(1));
  MetricValue best = MetricValue::infinity();
  for (const auto& v : enumerate_vertices(sp, sq)) {
    best = std::min(best, eval_joint(kf, v));
  }
  const auto h = hat(kf, sp, sq);
  run.expect(h == best, "kyfan-vertices", "1",
             h.str() + " vs " + best.str(), abs_difference(h, best));
}

// Random contractions between gauged spaces: 1-Lipschitz maps contract the
// Ky-Fan family, and a contraction into a simple gauge factors through the
// reflection.
inline void contraction(SuiteRun& run, std::uint64_t seed) {
  const auto b = generate(seed, Profile::named("small"));
  run.set_instance(b);
  Rng rng(seed ^ 0x165667b1ULL);
  const std::size_t n = b.space->size();
  std::vector<std::size_t> f(n);
  const bool constant = uniform_index(rng, 2) == 0;
  const auto image = static_cast<std::size_t>(uniform_index(rng, n));
  for (std::size_t x = 0; x < n; ++x) {
    f[x] = constant ? image : static_cast<std::size_t>(uniform_index(rng, n));
  }
  bool lipschitz = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      lipschitz = lipschitz && b.space->dist(f[x], f[y]) <= b.space->dist(x, y);
    }
  }
  std::vector<RvPair> family;
  const char* names[] = {"xi", "eta", "zeta"};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) family.emplace_back(b.rv(names[i]), b.rv(names[j]));
    }
  }
  const auto kyfan = Gauge::ky_fan_family();
  const auto prok = Gauge::prokhorov_family();
  if (lipschitz) {
    const auto report =
        check_random_contraction(f, b.space, b.space, kyfan, kyfan, family);
    run.expect(report.pass, "lipschitz-contraction", kyfan.str(),
               "1-Lipschitz map fails the contraction check");
  }
  for (const Gauge& source : {kyfan, prok}) {
    const auto status = verify_reflection_factorization(f, b.space, b.space,
                                                        source, prok, family);
    run.expect(status != FactorizationStatus::kViolated, "factorization",
               source.str(), "contraction does not factor: " +
                                 to_string(status));
    if (status == FactorizationStatus::kHolds) run.hit("factorization",
                                                       source.str());
  }
}

using SuiteFn = void (*)(SuiteRun&, std::uint64_t);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
  void (*finish)(SuiteRun&);
};

inline constexpr SuiteEntry kSuites[] = {
    {"axioms", axioms, nullptr},
    {"pm", pm, nullptr},
    {"simplicity", simplicity, simplicity_finish},
    {"identities", identities, nullptr},
    {"prop", prop, nullptr},
    {"min_gauge", min_gauge, nullptr},
    {"gluing", gluing, nullptr},
    {"limop", limop, nullptr},
    {"minlimop", minlimop, nullptr},
    {"coreflection", coreflection, nullptr},
    {"oracle", oracle_suite, nullptr},
    {"contraction", contraction, nullptr},
};

}  // namespace suites

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites::kSuites) out.emplace_back(s.name);
  return out;
}

inline SuiteReport run_suite(const std::string& name, std::uint64_t first_seed,
                             std::uint64_t last_seed,
                             const SuiteOptions& options = {}) {
  const suites::SuiteEntry* entry = nullptr;
  for (const auto& s : suites::kSuites) {
    if (name == s.name) entry = &s;
  }
  if (entry == nullptr) throw InvalidArgument("unknown suite '" + name + "'");
  if (first_seed > last_seed) {
    throw InvalidArgument("empty seed range");
  }
  const auto start = std::chrono::steady_clock::now();
  SuiteRun run(name, first_seed, last_seed, options);
  for (std::uint64_t seed = first_seed;; ++seed) {
    run.begin_seed(seed);
    try {
      entry->fn(run, seed);
    } catch (const std::exception& e) {
      run.expect(false, "exception", "", e.what());
    }
    if (seed == last_seed) break;
  }
  if (entry->finish != nullptr) {
    run.begin_seed(last_seed);
    entry->finish(run);
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return run.finish(elapsed.count());
}

enum class ReportFormat { kText, kCsv, kJson };

inline ReportFormat parse_report_format(const std::string& s) {
  if (s == "text") return ReportFormat::kText;
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "json") return ReportFormat::kJson;
  throw InvalidArgument("unknown report format '" + s + "'");
}

namespace detail {

inline std::string format_diff(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", d);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string emit_report(const SuiteReport& report, ReportFormat format,
                               bool include_timing = false) {
  std::ostringstream out;
  const std::string mode = report.float_mode ? "float" : "exact";
  const std::string seeds = std::to_string(report.first_seed) + ".." +
                            std::to_string(report.last_seed);
  switch (format) {
    case ReportFormat::kText: {
      out << "suite " << report.suite << " seeds " << seeds << " mode " << mode
          << "\n";
      std::size_t width_check = 5, width_metric = 6;
      for (const auto& r : report.rows) {
        width_check = std::max(width_check, r.check.size());
        width_metric = std::max(width_metric, r.metric.size());
      }
      auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size() + 2, ' ');
      };
      out << pad("check", width_check) << pad("metric", width_metric)
          << "instances  failures  max_abs_diff  hits\n";
      for (const auto& r : report.rows) {
        char counts[96];
        std::snprintf(counts, sizeof counts, "%9zu  %8zu  %12s  %4zu",
                      r.instances, r.failures,
                      detail::format_diff(r.max_abs_diff).c_str(), r.hits);
        out << pad(r.check, width_check) << pad(r.metric, width_metric)
            << counts << "\n";
      }
      for (const auto& f : report.failures) {
        out << "FAIL seed=" << f.seed << " " << f.check
            << (f.metric.empty() ? "" : "[" + f.metric + "]") << ": "
            << f.message << "\n";
      }
      if (include_timing) {
        char t[64];
        std::snprintf(t, sizeof t, "time %.3fs\n", report.seconds);
        out << t;
      }
      out << "result " << (report.passed() ? "PASS" : "FAIL") << " ("
          << report.failure_count << " failures)\n";
      break;
    }
    case ReportFormat::kCsv: {
      out << "suite,check,metric,instances,failures,max_abs_diff,hits\n";
      for (const auto& r : report.rows) {
        out << report.suite << "," << detail::csv_field(r.check) << ","
            << detail::csv_field(r.metric) << "," << r.instances << ","
            << r.failures << "," << detail::format_diff(r.max_abs_diff) << ","
            << r.hits << "\n";
      }
      break;
    }
    case ReportFormat::kJson: {
      Json j;
      j["suite"] = report.suite;
      j["seeds"] = {report.first_seed, report.last_seed};
      j["mode"] = mode;
      j["passed"] = report.passed();
      j["failure_count"] = report.failure_count;
      Json rows = Json::array();
      for (const auto& r : report.rows) {
        rows.push_back({{"check", r.check},
                        {"metric", r.metric},
                        {"instances", r.instances},
                        {"failures", r.failures},
                        {"max_abs_diff", detail::format_diff(r.max_abs_diff)},
                        {"hits", r.hits}});
      }
      j["rows"] = std::move(rows);
      Json failures = Json::array();
      for (const auto& f : report.failures) {
        failures.push_back({{"seed", f.seed},
                            {"check", f.check},
                            {"metric", f.metric},
                            {"message", f.message}});
      }
      j["failures"] = std::move(failures);
      if (include_timing) j["seconds"] = report.seconds;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace probmetric

#endif  // PROBMETRIC_SUITES_HPP_
