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

// Descriptors and the six probability metrics.

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace probmetric::testing {
namespace {

// d(xi, eta) = 1 on [0, 3/10), 0 elsewhere.
struct ThreeTenths {
  SpacePtr s = two_point();
  RandomVariable xi = RandomVariable::constant(s, 0);
  RandomVariable eta = rv(s, {{"0", "3/10", 1}, {"3/10", "1", 0}});
};

TEST(Descriptor, ParseAndPrint) {
  for (const char* text : {"kyfan:1/2", "lp:2", "linf", "ind", "prok:1", "tv",
                           "sup(ind,tv)", "hat(lp:2)", "sup(kyfan:1,hat(ind))"}) {
    EXPECT_EQ(parse_descriptor(text).str(), text);
  }
  EXPECT_EQ(parse_descriptor(" sup( ind , tv ) ").str(), "sup(ind,tv)");
  EXPECT_EQ(parse_descriptor("kyfan:2/4").str(), "kyfan:1/2");
}

TEST(Descriptor, RejectsMalformed) {
  for (const char* text : {"", "kyfan", "kyfan:0", "lp:-1", "prok:", "foo",
                           "sup()", "sup(ind", "hat(ind,tv)", "ind:2", "tv:1"}) {
    EXPECT_THROW(parse_descriptor(text), InvalidArgument) << text;
  }
}

TEST(Descriptor, Simplicity) {
  EXPECT_TRUE(parse_descriptor("prok:1").is_simple());
  EXPECT_TRUE(parse_descriptor("tv").is_simple());
  EXPECT_TRUE(parse_descriptor("hat(lp:1)").is_simple());
  EXPECT_TRUE(parse_descriptor("sup(tv,prok:2)").is_simple());
  for (const char* text : {"kyfan:1", "lp:1", "linf", "ind", "sup(ind,tv)"}) {
    EXPECT_FALSE(parse_descriptor(text).is_simple()) << text;
  }
}

TEST(Metrics, ZeroOnEqualArguments) {
  ThreeTenths t;
  for (const char* text : {"kyfan:1", "lp:1", "lp:2", "linf", "ind", "prok:1",
                           "tv", "sup(ind,tv)"}) {
    EXPECT_TRUE(eval_metric(parse_descriptor(text), t.eta, t.eta).is_zero())
        << text;
  }
}

TEST(Metrics, SupIsMaximum) {
  ThreeTenths t;
  const auto sup = eval_metric(parse_descriptor("sup(ind,tv)"), t.xi, t.eta);
  EXPECT_EQ(sup, max_value(indicator_metric(t.xi, t.eta),
                           total_variation(law_of(t.xi), law_of(t.eta))));
}

TEST(Metrics, LpTwo) {
  auto s = two_point();
  const auto xi = RandomVariable::constant(s, 0);
  const auto eta = rv(s, {{"0", "1/4", 1}, {"1/4", "1", 0}});
  const auto value = lp_metric(q("2"), xi, eta);
  EXPECT_EQ(value.power_value(), q("1/4"));
  EXPECT_EQ(value.root_index(), 2u);
  EXPECT_DOUBLE_EQ(value.approx(), 0.5);
  EXPECT_EQ(value, v("1/2"));
}

TEST(Metrics, LpNonIntegerIsApproximate) {
  ThreeTenths t;
  const auto value = lp_metric(q("3/2"), t.xi, t.eta);
  EXPECT_TRUE(value.is_approximate());
  EXPECT_NEAR(value.approx(), std::pow(0.3, 2.0 / 3.0), 1e-12);
}

TEST(Metrics, KyFan) {
  ThreeTenths t;
  EXPECT_EQ(ky_fan(q("1"), t.xi, t.eta), v("3/10"));
  EXPECT_EQ(ky_fan(q("10"), t.xi, t.eta), v("1/10"));
  EXPECT_TRUE(ky_fan(q("1"), t.xi, t.xi).is_zero());
  EXPECT_THROW(ky_fan(q("0"), t.xi, t.eta), InvalidArgument);
}

TEST(Metrics, TwoValuedDistance) {
  ThreeTenths t;
  EXPECT_EQ(indicator_metric(t.xi, t.eta), v("3/10"));
  EXPECT_EQ(linf_metric(t.xi, t.eta), v("1"));
  EXPECT_EQ(lp_metric(q("1"), t.xi, t.eta), v("3/10"));
}

TEST(Metrics, IndicatorIgnoresNullSets) {
  auto s = two_point();
  const auto xi = rv(s, {{"0", "1/2", 0}, {"1/2", "1", 1}});
  const auto split = rv(s, {{"0", "1/3", 0}, {"1/3", "1/2", 0}, {"1/2", "1", 1}});
  ASSERT_TRUE(equal_ae(xi, split));
  EXPECT_TRUE(indicator_metric(xi, split).is_zero());
}

TEST(Metrics, LawMetrics) {
  auto s = two_point();
  const auto a = law(s, {"1", "0"});
  const auto b = law(s, {"0", "1"});
  EXPECT_TRUE(total_variation(a, a).is_zero());
  EXPECT_TRUE(prokhorov(q("1"), a, a).is_zero());
  EXPECT_EQ(total_variation(a, b), v("1"));
  EXPECT_EQ(prokhorov(q("1"), a, b), v("1"));
  EXPECT_EQ(prokhorov(q("10"), a, b), v("1/10"));
  EXPECT_EQ(total_variation(law(s, {"1/2", "1/2"}), a), v("1/2"));
}

TEST(Metrics, ProkhorovRefusesLargeSpaces) {
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> dist(17, std::vector<Rational>(17));
  for (int i = 0; i < 17; ++i) {
    names.push_back("p" + std::to_string(i));
    for (int j = 0; j < 17; ++j) dist[i][j] = i == j ? 0 : 1;
  }
  auto s = make_space(names, dist);
  std::vector<Rational> w(17, Rational(0));
  w[0] = 1;
  const Law p(s, w);
  EXPECT_THROW(prokhorov(q("1"), p, p), SizeLimitExceeded);
}

TEST(Metrics, MismatchedSpacesRejected) {
  const auto x = RandomVariable::constant(two_point(), 0);
  const auto y = RandomVariable::constant(line3(), 0);
  EXPECT_THROW(indicator_metric(x, y), InvalidArgument);
}

TEST(Property, MonotoneInLambda) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto b = generate(seed, Profile::named("default"));
    const auto& xi = b.rv("xi");
    const auto& eta = b.rv("eta");
    MetricValue k_prev = MetricValue::infinity();
    MetricValue r_prev = MetricValue::infinity();
    for (const char* lambda : {"1/8", "1/2", "1", "3", "10"}) {
      const auto k = ky_fan(q(lambda), xi, eta);
      const auto r = prokhorov(q(lambda), b.law("P"), b.law("Q"));
      EXPECT_LE(k, k_prev) << "seed " << seed;
      EXPECT_LE(r, r_prev) << "seed " << seed;
      k_prev = k;
      r_prev = r;
    }
  }
}

TEST(Property, TvMatchesSubsetOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto b = generate(seed, Profile::named("prokhorov"));
    EXPECT_EQ(total_variation(b.law("P"), b.law("Q")).rational(),
              oracle::total_variation_subsets(b.law("P"), b.law("Q")));
  }
}

TEST(Property, KyFanAndProkhorovMatchGridOracle) {
  const Rational step(1, oracle::kGridDenominator);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto b = generate(seed, Profile::named("default"));
    for (const char* lambda : {"1/3", "1", "5/2"}) {
      const Rational k = ky_fan(q(lambda), b.rv("xi"), b.rv("zeta")).rational();
      const auto kg = oracle::ky_fan_grid(q(lambda), b.rv("xi"), b.rv("zeta"));
      EXPECT_LE(k, kg.grid_value);
      EXPECT_LE(kg.grid_value - k, step);
      const Rational r = prokhorov(q(lambda), b.law("Q"), b.law("R")).rational();
      const auto rg = oracle::prokhorov_grid(q(lambda), b.law("Q"), b.law("R"));
      EXPECT_LE(r, rg.grid_value);
      EXPECT_LE(rg.grid_value - r, step);
    }
  }
}

}  // namespace
}  // namespace probmetric::testing
