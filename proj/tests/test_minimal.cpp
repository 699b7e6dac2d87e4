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

// Minimal metrics, their witnesses, and the generic vertex search.

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace probmetric::testing {
namespace {

TEST(Hat, EqualLawsGiveZero) {
  auto s = line3();
  const auto p = law(s, {"1/2", "1/4", "1/4"});
  for (const char* text : {"kyfan:1", "lp:1", "lp:2", "linf", "ind", "prok:1",
                           "tv", "sup(ind,lp:1)"}) {
    const auto result = hat_with_witness(parse_descriptor(text), p, p);
    EXPECT_TRUE(result.value.is_zero()) << text;
  }
  EXPECT_EQ(hat_with_witness(parse_descriptor("lp:1"), p, p).coupling,
            diagonal_coupling(p));
}

TEST(Hat, IndicatorIsTotalVariation) {
  auto s = two_point();
  const auto p = law(s, {"1/2", "1/2"});
  const auto d = law(s, {"1", "0"});
  EXPECT_EQ(hat(MetricDescriptor::indicator(), p, d), v("1/2"));
  EXPECT_EQ(hat(MetricDescriptor::indicator(), p, d), total_variation(p, d));
}

TEST(Hat, KyFanIsProkhorov) {
  auto s = two_point();
  const auto a = law(s, {"1", "0"});
  const auto b = law(s, {"0", "1"});
  EXPECT_EQ(hat(MetricDescriptor::ky_fan(q("1")), a, b), v("1"));
  EXPECT_EQ(hat(MetricDescriptor::ky_fan(q("1")), a, b),
            prokhorov(q("1"), a, b));
  EXPECT_EQ(hat(MetricDescriptor::ky_fan(q("10")), a, b), v("1/10"));
}

TEST(Hat, LpWitness) {
  auto s = two_point();
  const auto result = hat_with_witness(MetricDescriptor::lp(1u),
                                       law(s, {"1/2", "1/2"}),
                                       law(s, {"1", "0"}));
  EXPECT_EQ(result.value, v("1/2"));
  EXPECT_EQ(result.coupling, coupling(s, {{"1/2", "0"}, {"1/2", "0"}}));
}

TEST(Hat, LinfOnLine) {
  auto s = line3();
  const auto result = hat_with_witness(MetricDescriptor::linf(),
                                       law(s, {"1/2", "0", "1/2"}),
                                       law(s, {"0", "1", "0"}));
  EXPECT_EQ(result.value, v("1"));
  const auto [xi, eta] = realize_pair(result.coupling);
  EXPECT_EQ(linf_metric(xi, eta), v("1"));
}

TEST(Hat, NestedHatIsIdempotent) {
  auto s = line3();
  const auto p = law(s, {"1/2", "0", "1/2"});
  const auto r = law(s, {"0", "1", "0"});
  EXPECT_EQ(hat(parse_descriptor("hat(lp:2)"), p, r),
            hat(parse_descriptor("lp:2"), p, r));
}

TEST(HatGeneric, AffineMatchesLp) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto b = generate(seed, Profile::named("small"));
    const auto generic =
        hat_generic(functional_of(MetricDescriptor::lp(1u)), b.law("P"),
                    b.law("Q"));
    EXPECT_EQ(generic.value.rational(),
              transport_lp(TransportProblem::distance_power(b.law("P"),
                                                            b.law("Q"), 1))
                  .value);
    EXPECT_FALSE(generic.approximate);
  }
}

TEST(HatGeneric, KyFanFunctionalMatchesExact) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto b = generate(seed, Profile::named("n3"));
    for (const char* lambda : {"1/2", "1", "2"}) {
      const auto d = MetricDescriptor::ky_fan(q(lambda));
      const auto generic = hat_generic(functional_of(d), b.law("P"), b.law("Q"));
      EXPECT_NEAR(generic.value.approx(), hat(d, b.law("P"), b.law("Q")).approx(),
                  1e-9)
          << "seed " << seed;
    }
  }
}

TEST(HatGeneric, ConstantFunctional) {
  auto s = line3();
  MetricFunctional f;
  f.evaluator = [](const CouplingMatrix&) { return MetricValue::exact(q("3/7")); };
  const auto g = hat_generic(f, law(s, {"1/2", "0", "1/2"}),
                             law(s, {"0", "1", "0"}));
  EXPECT_EQ(g.value, v("3/7"));
}

TEST(Hat, SupOfReportsExactness) {
  auto s = line3();
  const auto p = law(s, {"1/2", "0", "1/2"});
  const auto r = law(s, {"0", "1", "0"});
  const auto result = hat_with_witness(parse_descriptor("sup(ind,tv)"), p, r);
  EXPECT_EQ(result.value, v("1"));
  EXPECT_TRUE(result.exact);
}

TEST(Simple, HatIsSimple) {
  for (const char* text : {"kyfan:1", "lp:2", "linf", "ind", "prok:1", "tv"}) {
    EXPECT_TRUE(check_simple(parse_descriptor(text))) << text;
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto b = generate(seed, Profile::named("default"));
    for (const char* text : {"kyfan:1", "lp:2", "linf", "ind"}) {
      EXPECT_TRUE(check_simple_on(parse_descriptor(text), b.law("P"),
                                  b.law("Q")));
    }
  }
}

TEST(Triangle, DegenerateAndRandom) {
  auto s = line3();
  const auto p = law(s, {"1/2", "1/4", "1/4"});
  const auto zero = check_hat_triangle(MetricDescriptor::lp(2u), p, p, p, true);
  EXPECT_TRUE(zero.holds);
  EXPECT_TRUE(zero.direct.is_zero());
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto b = generate(seed, Profile::named("default"));
    for (const char* text : {"ind", "kyfan:1", "lp:3", "linf"}) {
      const auto check = check_hat_triangle(parse_descriptor(text), b.law("P"),
                                            b.law("Q"), b.law("R"), true);
      EXPECT_TRUE(check.holds) << text << " seed " << seed;
      EXPECT_TRUE(check.marginals_reproduced);
      EXPECT_TRUE(check.chain_holds);
    }
  }
}

TEST(MinGauge, SupOfHats) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto b = generate(seed, Profile::named("small"));
    const auto check = check_sup_of_hats(
        {MetricDescriptor::indicator(), MetricDescriptor::lp(1u)}, b.law("P"),
        b.law("Q"));
    EXPECT_TRUE(check.holds);
  }
}

TEST(MinGauge, DominationTransfer) {
  // K_1 <= d_i pointwise, so rho_1 <= TV must follow.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto b = generate(seed, Profile::named("small"));
    const auto d1 = MetricDescriptor::ky_fan(q("1"));
    const auto d2 = MetricDescriptor::indicator();
    std::vector<RvPair> family{{b.rv("xi"), b.rv("eta")}};
    family.push_back(realize_pair(
        hat_with_witness(d2, law_of(b.rv("xi")), law_of(b.rv("eta")))
            .coupling));
    const auto check =
        check_domination_transfer(d1, d2, q("1/4"), q("2"), family);
    EXPECT_TRUE(check.premise);
    EXPECT_TRUE(check.conclusion);
  }
}

TEST(MinGauge, FailedPremiseIsReported) {
  auto s = two_point();
  const auto xi = RandomVariable::constant(s, 0);
  const auto eta = RandomVariable::constant(s, 1);
  // L^1 = 1 exceeds K_10 = 1/10 with eps = 0, so the premise fails.
  const auto check = check_domination_transfer(
      MetricDescriptor::lp(1u), MetricDescriptor::ky_fan(q("10")), q("0"),
      q("2"), {{xi, eta}});
  EXPECT_FALSE(check.premise);
}

}  // namespace
}  // namespace probmetric::testing
