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

// Gauges, limit operators, reflection and contractions.

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace probmetric::testing {
namespace {

struct Fixture {
  SpacePtr s = two_point();
  RandomVariable xi = RandomVariable::constant(s, 0);
  RandomVariable far = RandomVariable::constant(s, 1);
  // d(xi, near) > 0 with probability 3/10.
  RandomVariable near = rv(s, {{"0", "3/10", 1}, {"3/10", "1", 0}});
};

TEST(Gauge, ParseAndPrint) {
  for (const char* text : {"kyfan-family", "prok-family", "basis(ind,tv)"}) {
    EXPECT_EQ(parse_gauge(text).str(), text);
  }
  EXPECT_EQ(parse_gauge("lp:2").str(), "basis(lp:2)");
  EXPECT_THROW(parse_gauge("basis()"), InvalidArgument);
  EXPECT_THROW(parse_gauge("family"), InvalidArgument);
  EXPECT_TRUE(parse_gauge("prok-family").is_simple());
  EXPECT_FALSE(parse_gauge("kyfan-family").is_simple());
}

TEST(Limsup, Examples) {
  Fixture f;
  const auto constant = SequenceSpec::constant(f.xi);
  for (const char* text : {"kyfan:1", "lp:2", "linf", "ind", "prok:1", "tv"}) {
    EXPECT_TRUE(limsup_seq(parse_descriptor(text), constant, f.xi).is_zero());
  }
  EXPECT_EQ(limsup_seq(MetricDescriptor::indicator(),
                       SequenceSpec({}, {f.far}), f.xi),
            v("1"));
  const SequenceSpec two({f.far}, {f.near, f.xi});
  EXPECT_EQ(limsup_seq(MetricDescriptor::total_variation(), two, f.xi),
            max_value(total_variation(law_of(f.xi), law_of(f.near)),
                      total_variation(law_of(f.xi), law_of(f.xi))));
  EXPECT_THROW(SequenceSpec({}, {}), InvalidArgument);
}

TEST(LimitOperator, Families) {
  Fixture f;
  const auto constant = SequenceSpec::constant(f.xi);
  for (const char* g : {"kyfan-family", "prok-family", "basis(lp:1,tv)"}) {
    EXPECT_TRUE(limit_operator(parse_gauge(g), constant, f.xi).is_zero()) << g;
  }
  const SequenceSpec near({}, {f.near});
  EXPECT_EQ(limit_operator(Gauge::ky_fan_family(), near, f.xi), v("3/10"));
  EXPECT_EQ(limit_operator(Gauge::ky_fan_family(), near, f.xi),
            limsup_seq(MetricDescriptor::ky_fan(small_lambda(*f.s)), near, f.xi));
  const SequenceSpec far({}, {f.far});
  EXPECT_EQ(limit_operator(Gauge::prokhorov_family(), far, f.xi), v("1"));
}

TEST(Reflect, Examples) {
  EXPECT_EQ(reflect(parse_gauge("basis(ind)")).str(), "basis(tv)");
  EXPECT_EQ(reflect(Gauge::ky_fan_family()).str(), "prok-family");
  EXPECT_EQ(reflect(parse_gauge("basis(kyfan:2,lp:1)")).str(),
            "basis(prok:2,hat(lp:1))");
  EXPECT_EQ(coreflect(parse_gauge("basis(tv)")).str(), "tv");
  EXPECT_EQ(coreflect(parse_gauge("basis(ind,tv)")).str(), "sup(ind,tv)");
  EXPECT_EQ(coreflect(Gauge::ky_fan_family()).str(), "ind");
  EXPECT_EQ(coreflect(Gauge::prokhorov_family()).str(), "tv");
  EXPECT_TRUE(reflect(parse_gauge("basis(lp:2,linf)")).is_simple());
}

TEST(Versions, OptimalVersionAttainsMinimum) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto b = generate(seed, Profile::named("default"));
    const auto seq = b.sequence("seq");
    for (const char* text : {"kyfan:1", "lp:2", "linf", "ind"}) {
      const auto d = parse_descriptor(text);
      const auto version = optimal_version(d, seq, b.rv("xi"));
      EXPECT_EQ(law_of(version.target), law_of(b.rv("xi")));
      EXPECT_EQ(limsup_seq(d, version.sequence, version.target),
                limsup_hat(d, seq, b.rv("xi")))
          << text << " seed " << seed;
    }
  }
}

TEST(MinLimitGap, ConstantSequence) {
  Fixture f;
  const auto gap = min_limit_gap(Gauge::ky_fan_family(),
                                 SequenceSpec::constant(f.xi), f.xi, 4, Rng(1));
  EXPECT_TRUE(gap.lower.is_zero());
  EXPECT_TRUE(gap.upper.is_zero());
  EXPECT_TRUE(gap.ordered);
  EXPECT_FALSE(gap.strict_candidate);
}

TEST(MinLimitGap, DiracsAtDistanceOne) {
  Fixture f;
  const auto gap = min_limit_gap(Gauge::ky_fan_family(),
                                 SequenceSpec({}, {f.far}), f.xi, 4, Rng(1));
  EXPECT_EQ(gap.lower, v("1"));
  EXPECT_GE(gap.upper, v("1"));
  EXPECT_TRUE(gap.ordered);
}

TEST(MinLimitGap, OrderedOnGeneratedInstances) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto b = generate(seed, Profile::named("small"));
    for (const char* g : {"kyfan-family", "prok-family", "basis(lp:1,ind)"}) {
      const auto gap = min_limit_gap(parse_gauge(g), b.sequence("seq"),
                                     b.rv("xi"), 3, Rng(seed));
      EXPECT_TRUE(gap.ordered) << g << " seed " << seed;
    }
  }
}

TEST(MinLimitGap, SeededSearchIsReproducible) {
  const auto b = generate(11, Profile::named("small"));
  const auto g = parse_gauge("basis(kyfan:1,lp:2)");
  const auto a = min_limit_gap(g, b.sequence("seq"), b.rv("xi"), 5, Rng(3));
  const auto c = min_limit_gap(g, b.sequence("seq"), b.rv("xi"), 5, Rng(3));
  EXPECT_EQ(a.upper, c.upper);
  EXPECT_EQ(a.versions_tried, c.versions_tried);
}

std::vector<RvPair> pairs_of(const InstanceBundle& b) {
  std::vector<RvPair> out;
  for (const char* x : {"xi", "eta", "zeta"}) {
    for (const char* y : {"xi", "eta", "zeta"}) {
      out.emplace_back(b.rv(x), b.rv(y));
    }
  }
  return out;
}

TEST(Contraction, IdentityAndConstantPass) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto b = generate(seed, Profile::named("small"));
    const std::size_t n = b.space->size();
    std::vector<std::size_t> id(n), constant(n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    const auto family = pairs_of(b);
    for (const char* g : {"kyfan-family", "prok-family", "basis(lp:1,tv)"}) {
      const auto gauge = parse_gauge(g);
      EXPECT_TRUE(check_random_contraction(id, b.space, b.space, gauge, gauge,
                                           family)
                      .pass)
          << g;
      EXPECT_TRUE(check_random_contraction(constant, b.space, b.space, gauge,
                                           gauge, family)
                      .pass)
          << g;
    }
  }
}

TEST(Contraction, MergeIsReportedWithCounterexample) {
  auto s = two_point();
  auto one = make_space({"o"}, {{q("0")}});
  const std::vector<std::size_t> merge{0, 0};
  const std::vector<RvPair> family{
      {RandomVariable::constant(s, 0), RandomVariable::constant(s, 1)}};
  // Merging the two points makes every image distance zero: passes.
  EXPECT_TRUE(check_random_contraction(merge, s, one, parse_gauge("ind"),
                                       parse_gauge("tv"), family)
                  .pass);
  // The identity from (X, TV) to (X, ind) is not a contraction: the pair
  // (xi, xi') with equal laws has TV = 0 but d_i = 1.
  const auto a = rv(s, {{"0", "1/2", 0}, {"1/2", "1", 1}});
  const auto b = rv(s, {{"0", "1/2", 1}, {"1/2", "1", 0}});
  const std::vector<std::size_t> id{0, 1};
  const auto report = check_random_contraction(
      id, s, s, parse_gauge("tv"), parse_gauge("ind"), {{a, b}});
  EXPECT_FALSE(report.pass);
  ASSERT_TRUE(report.counterexample.has_value());
  EXPECT_EQ(report.counterexample->target_metric.str(), "ind");
}

TEST(Factorization, Examples) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto b = generate(seed, Profile::named("small"));
    const std::size_t n = b.space->size();
    std::vector<std::size_t> id(n), constant(n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    const auto family = pairs_of(b);
    EXPECT_EQ(verify_reflection_factorization(id, b.space, b.space,
                                              parse_gauge("ind"),
                                              parse_gauge("tv"), family),
              FactorizationStatus::kHolds);
    EXPECT_EQ(verify_reflection_factorization(constant, b.space, b.space,
                                              parse_gauge("lp:1"),
                                              parse_gauge("tv"), family),
              FactorizationStatus::kHolds);
  }
  auto s = two_point();
  const auto a = rv(s, {{"0", "1/2", 0}, {"1/2", "1", 1}});
  const auto b = rv(s, {{"0", "1/2", 1}, {"1/2", "1", 0}});
  const auto far = RandomVariable::constant(s, 1);
  const std::vector<std::size_t> id{0, 1};
  // K_10 is at most 1/10 on this family while TV reaches 1, so the map is
  // not a contraction and the implication is vacuous.
  EXPECT_EQ(verify_reflection_factorization(
                id, s, s, parse_gauge("kyfan:10"), parse_gauge("tv"),
                {{a, b}, {RandomVariable::constant(s, 0), far}}),
            FactorizationStatus::kNotApplicable);
  EXPECT_THROW(verify_reflection_factorization(id, s, s, parse_gauge("tv"),
                                               parse_gauge("ind"), {{a, b}}),
               InvalidArgument);
}

}  // namespace
}  // namespace probmetric::testing
