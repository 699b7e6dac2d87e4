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

// Rationals, metric values, spaces, laws and random variables.

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace probmetric::testing {
namespace {

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(q("2/4")), "1/2");
  EXPECT_EQ(to_string(q("3")), "3/1");
  EXPECT_EQ(to_string(q("-6/8")), "-3/4");
  EXPECT_THROW(q("1/0"), InvalidArgument);
  EXPECT_THROW(q("x"), InvalidArgument);
  EXPECT_THROW(q(""), InvalidArgument);
}

TEST(Rational, ExactRoot) {
  Rational out;
  EXPECT_TRUE(exact_root(q("9/4"), 2, out));
  EXPECT_EQ(out, q("3/2"));
  EXPECT_FALSE(exact_root(q("2"), 2, out));
  EXPECT_TRUE(exact_root(q("8/27"), 3, out));
  EXPECT_EQ(out, q("2/3"));
}

TEST(MetricValue, RootsCompareExactly) {
  const auto r2 = MetricValue::root(q("2"), 2);
  const auto r3 = MetricValue::root(q("3"), 2);
  EXPECT_LT(r2, r3);
  EXPECT_EQ(MetricValue::root(q("4"), 2), v("2"));
  EXPECT_EQ(MetricValue::root(q("1/8"), 3), v("1/2"));
  // sqrt 2 + sqrt 3 = 3.146... against pi-ish rationals.
  EXPECT_TRUE(leq_sum(v("314/100"), r2, r3));
  EXPECT_FALSE(leq_sum(v("315/100"), r2, r3));
  // sqrt 8 = 2 sqrt 2 exactly.
  EXPECT_TRUE(leq_sum(MetricValue::root(q("8"), 2), r2, r2));
  EXPECT_TRUE(leq_sum(r2, r2, v("0")));
  // Different indices: 2^(1/2) vs 3^(1/3) (1.4142 vs 1.4422).
  EXPECT_LT(r2, MetricValue::root(q("3"), 3));
}

TEST(MetricValue, CappedComparison) {
  // min(a, omega) <= b + eps
  EXPECT_TRUE(capped_leq(v("5"), q("1"), v("1/2"), q("1/2")));
  EXPECT_FALSE(capped_leq(v("5"), q("2"), v("1/2"), q("1/2")));
  EXPECT_TRUE(capped_leq(MetricValue::root(q("2"), 2), q("4"), v("1"),
                         q("1/2")));
}

TEST(MetricValue, Printing) {
  EXPECT_EQ(v("1/2").str(), "1/2");
  EXPECT_EQ(MetricValue::root(q("1/4"), 2).str(), "1/2");
  EXPECT_EQ(MetricValue::root(q("2"), 2).str(), "(2/1)^(1/2)");
  EXPECT_NEAR(MetricValue::root(q("2"), 2).approx(), 1.41421356, 1e-8);
}

TEST(Space, SingletonAndTwoPoint) {
  auto s = make_space({"a"}, {{q("0")}});
  EXPECT_EQ(s->size(), 1u);
  EXPECT_EQ(s->min_positive_distance(), 0);
  auto t = two_point();
  EXPECT_EQ(t->dist(0, 1), 1);
  EXPECT_EQ(t->index_of("b"), 1u);
}

TEST(Space, RejectsTriangleViolation) {
  try {
    make_space({"a", "b", "c"}, {{q("0"), q("1"), q("5")},
                                 {q("1"), q("0"), q("1")},
                                 {q("5"), q("1"), q("0")}});
    FAIL() << "expected a triangle violation";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("triangle violation at (a,b,c)"),
              std::string::npos)
        << e.what();
  }
}

TEST(Space, RejectsBrokenAxioms) {
  EXPECT_THROW(make_space({}, {}), InvalidArgument);
  EXPECT_THROW(make_space({"a", "a"}, {{q("0"), q("1")}, {q("1"), q("0")}}),
               InvalidArgument);
  EXPECT_THROW(make_space({"a", "b"}, {{q("0"), q("1")}, {q("2"), q("0")}}),
               InvalidArgument);
  EXPECT_THROW(make_space({"a", "b"}, {{q("0"), q("0")}, {q("0"), q("0")}}),
               InvalidArgument);
  EXPECT_THROW(make_space({"a", "b"}, {{q("0"), q("-1")}, {q("-1"), q("0")}}),
               InvalidArgument);
  EXPECT_THROW(make_space({"a", "b"}, {{q("1"), q("1")}, {q("1"), q("0")}}),
               InvalidArgument);
}

TEST(Law, Validation) {
  auto s = two_point();
  EXPECT_NO_THROW(law(s, {"1/3", "2/3"}));
  EXPECT_THROW(law(s, {"1/3", "1/3"}), InvalidArgument);
  EXPECT_THROW(law(s, {"3/2", "-1/2"}), InvalidArgument);
  EXPECT_THROW(law(s, {"1"}), InvalidArgument);
}

TEST(RandomVariable, LawOf) {
  auto s = two_point();
  EXPECT_EQ(law_of(RandomVariable::constant(s, 0)), law(s, {"1", "0"}));
  EXPECT_EQ(law_of(rv(s, {{"0", "1/2", 0}, {"1/2", "1", 1}})),
            law(s, {"1/2", "1/2"}));
  EXPECT_EQ(law_of(rv(s, {{"0", "1/3", 0}, {"1/3", "2/3", 1}, {"2/3", "1", 0}})),
            law(s, {"2/3", "1/3"}));
}

TEST(RandomVariable, RejectsBadPieces) {
  auto s = two_point();
  EXPECT_THROW(rv(s, {{"0", "1/2", 0}}), InvalidArgument);
  EXPECT_THROW(rv(s, {{"0", "1/2", 0}, {"1/4", "1", 1}}), InvalidArgument);
  EXPECT_THROW(rv(s, {{"0", "1", 2}}), InvalidArgument);
  EXPECT_THROW(rv(s, {{"0", "0", 0}, {"0", "1", 1}}), InvalidArgument);
}

TEST(RandomVariable, JointLaw) {
  auto s = two_point();
  const auto xi = rv(s, {{"0", "1/2", 0}, {"1/2", "1", 1}});
  EXPECT_EQ(joint_law(xi, xi), diagonal_coupling(law_of(xi)));
  const auto eta = rv(s, {{"0", "1/2", 1}, {"1/2", "1", 0}});
  EXPECT_EQ(joint_law(xi, eta), coupling(s, {{"0", "1/2"}, {"1/2", "0"}}));
  const auto zeta =
      rv(s, {{"0", "1/4", 0}, {"1/4", "1/2", 1}, {"1/2", "3/4", 0},
             {"3/4", "1", 1}});
  EXPECT_EQ(joint_law(xi, zeta),
            coupling(s, {{"1/4", "1/4"}, {"1/4", "1/4"}}));
}

TEST(ChainLaw, Marginals) {
  auto s = two_point();
  const auto pi = coupling(s, {{"1/4", "1/4"}, {"0", "1/2"}});
  const auto chain = ChainLaw::from_coupling(pi);
  EXPECT_EQ(marginal(chain, {0, 1}), chain);
  const auto p = law(s, {"1/3", "2/3"});
  const auto q2 = law(s, {"1/4", "3/4"});
  const auto product = ChainLaw::from_coupling(product_coupling(p, q2));
  EXPECT_EQ(marginal(product, {0}).as_law(), p);
  EXPECT_EQ(marginal(product, {1}).as_law(), q2);
  EXPECT_THROW(marginal(product, {}), InvalidArgument);
  EXPECT_THROW(marginal(product, {2}), InvalidArgument);
}

TEST(Realize, LawAndPairs) {
  auto s = two_point();
  const auto d = realize(law(s, {"1", "0"}));
  EXPECT_EQ(d.pieces().size(), 1u);
  EXPECT_EQ(d.at(q("1/2")), 0u);
  const auto half = realize(law(s, {"1/2", "1/2"}));
  EXPECT_EQ(half.at(q("1/4")), 0u);
  EXPECT_EQ(half.at(q("3/4")), 1u);
  const auto pi = coupling(s, {{"0", "1/2"}, {"1/2", "0"}});
  const auto [xi, eta] = realize_pair(pi);
  EXPECT_EQ(joint_law(xi, eta), pi);
}

TEST(Realize, RejectsBadOrder) {
  auto s = two_point();
  const auto chain =
      ChainLaw::from_coupling(coupling(s, {{"0", "1/2"}, {"1/2", "0"}}));
  const std::vector<std::size_t> dup{0, 0};
  EXPECT_THROW(realize_chain(chain, dup), InvalidArgument);
  const std::vector<std::size_t> swapped{1, 0};
  const auto rvs = realize_chain(chain, swapped);
  EXPECT_EQ(joint_law(rvs[0], rvs[1]).at(0, 1), q("1/2"));
}

TEST(EqualAe, Cases) {
  auto s = two_point();
  const auto xi = rv(s, {{"0", "1/2", 0}, {"1/2", "1", 1}});
  EXPECT_TRUE(equal_ae(xi, xi));
  const auto other = rv(s, {{"0", "1/4", 1}, {"1/4", "1/2", 0}, {"1/2", "1", 1}});
  EXPECT_FALSE(equal_ae(xi, other));
  const auto split = rv(s, {{"0", "1/8", 0}, {"1/8", "1/2", 0}, {"1/2", "1", 1}});
  EXPECT_TRUE(equal_ae(xi, split));
}

TEST(Property, SubdivisionKeepsFunction) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto b = generate(seed, Profile::named("default"));
    Rng rng(seed);
    for (const auto& [name, x] : b.random_variables) {
      const auto y = subdivide(x, rng);
      EXPECT_TRUE(equal_ae(x, y)) << name << " seed " << seed;
      EXPECT_EQ(law_of(x), law_of(y));
    }
  }
}

TEST(Property, ShuffledRealizationKeepsJointLaw) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto b = generate(seed, Profile::named("default"));
    Rng rng(seed);
    const auto pi = random_coupling(b.law("P"), b.law("Q"), rng);
    const auto rvs = shuffled_realization(ChainLaw::from_coupling(pi), rng);
    EXPECT_EQ(joint_law(rvs[0], rvs[1]), pi) << "seed " << seed;
  }
}

}  // namespace
}  // namespace probmetric::testing
