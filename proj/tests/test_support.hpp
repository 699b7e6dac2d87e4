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

// Small builders shared by the unit tests.

#ifndef PROBMETRIC_TESTS_TEST_SUPPORT_HPP_
#define PROBMETRIC_TESTS_TEST_SUPPORT_HPP_

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "probmetric/probmetric.hpp"

namespace probmetric::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline MetricValue v(const char* text) { return MetricValue::exact(q(text)); }

// Two points a, b at distance d.
inline SpacePtr two_point(const char* d = "1") {
  return make_space({"a", "b"}, {{q("0"), q(d)}, {q(d), q("0")}});
}

// The line a - b - c with unit steps.
inline SpacePtr line3() {
  return make_space({"a", "b", "c"}, {{q("0"), q("1"), q("2")},
                                      {q("1"), q("0"), q("1")},
                                      {q("2"), q("1"), q("0")}});
}

inline Law law(const SpacePtr& space, std::initializer_list<const char*> w) {
  std::vector<Rational> weights;
  for (const char* x : w) weights.push_back(q(x));
  return Law(space, std::move(weights));
}

// Pieces given as (begin, end, point index).
inline RandomVariable rv(
    const SpacePtr& space,
    std::initializer_list<std::tuple<const char*, const char*, std::size_t>>
        pieces) {
  std::vector<Piece> out;
  for (const auto& [a, b, x] : pieces) out.push_back({q(a), q(b), x});
  return RandomVariable(space, std::move(out));
}

inline CouplingMatrix coupling(
    const SpacePtr& space,
    std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Rational>> entries;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const char* x : row) r.push_back(q(x));
    entries.push_back(std::move(r));
  }
  return CouplingMatrix(space, space, entries);
}

}  // namespace probmetric::testing

#endif  // PROBMETRIC_TESTS_TEST_SUPPORT_HPP_
