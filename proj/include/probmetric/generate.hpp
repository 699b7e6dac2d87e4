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

// Seeded instance generation. All randomness flows through std::mt19937_64
// and the modulo-based helpers below, so bundles are identical across
// standard library implementations.

#ifndef PROBMETRIC_GENERATE_HPP_
#define PROBMETRIC_GENERATE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "probmetric/gauges.hpp"
#include "probmetric/instance_io.hpp"
#include "probmetric/law.hpp"
#include "probmetric/random_variable.hpp"
#include "probmetric/transport.hpp"

namespace probmetric {

using Rng = std::mt19937_64;

struct Profile {
  std::string name = "default";
  std::size_t min_points = 1;
  std::size_t max_points = 6;
  std::uint64_t max_denominator = 64;

  // minimal, small (|X| <= 4), gluing (<= 5), default (<= 6),
  // prokhorov (<= 12), or nK for exactly K points.
  static Profile named(const std::string& name) {
    if (name == "minimal") return {name, 1, 1, 64};
    if (name == "small") return {name, 1, 4, 64};
    if (name == "gluing") return {name, 1, 5, 64};
    if (name == "default") return {name, 1, 6, 64};
    if (name == "prokhorov") return {name, 1, 12, 64};
    if (name.size() > 1 && name[0] == 'n') {
      const auto n = static_cast<std::size_t>(std::stoul(name.substr(1)));
      return {name, n, n, 64};
    }
    throw InvalidArgument("unknown profile '" + name + "'");
  }
};

// Side length of the coordinate grid points are drawn from.
inline constexpr std::int64_t kGridSide = 7;

inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  return rng() % n;
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform_index(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

template <typename T>
void shuffle_in_place(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[uniform_index(rng, i)]);
  }
}

// Distinct points of a 7x7 grid with halved L1 distances.
inline SpacePtr random_space(std::size_t n, Rng& rng) {
  std::set<std::pair<std::int64_t, std::int64_t>> used;
  std::vector<std::pair<std::int64_t, std::int64_t>> coords;
  while (coords.size() < n) {
    std::pair<std::int64_t, std::int64_t> c{uniform_int(rng, 0, kGridSide - 1),
                                            uniform_int(rng, 0, kGridSide - 1)};
    if (used.insert(c).second) coords.push_back(c);
  }
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t l1 = std::abs(coords[i].first - coords[j].first) +
                              std::abs(coords[i].second - coords[j].second);
      dist[i][j] = make_rational(l1, 2);
    }
  }
  return make_space(std::move(names), dist);
}

inline Law random_law(const SpacePtr& space, std::uint64_t max_denominator,
                      Rng& rng) {
  const std::size_t n = space->size();
  const auto den = static_cast<std::int64_t>(
      uniform_int(rng, 1, static_cast<std::int64_t>(max_denominator)));
  std::vector<std::size_t> support(n);
  std::iota(support.begin(), support.end(), std::size_t{0});
  shuffle_in_place(support, rng);
  support.resize(static_cast<std::size_t>(uniform_int(rng, 1, n)));
  std::vector<std::int64_t> units(n, 0);
  for (std::int64_t u = 0; u < den; ++u) {
    units[support[uniform_index(rng, support.size())]] += 1;
  }
  std::vector<Rational> w;
  for (auto u : units) w.push_back(make_rational(u, den));
  return Law(space, std::move(w));
}

inline RandomVariable random_rv(const SpacePtr& space,
                                std::uint64_t max_denominator, Rng& rng) {
  const auto den = static_cast<std::int64_t>(
      uniform_int(rng, 1, static_cast<std::int64_t>(max_denominator)));
  const auto pieces = uniform_int(rng, 1, std::min<std::int64_t>(den, 5));
  std::set<std::int64_t> cuts;
  while (static_cast<std::int64_t>(cuts.size()) < pieces - 1) {
    cuts.insert(uniform_int(rng, 1, den - 1));
  }
  cuts.insert(den);
  std::vector<Piece> out;
  std::int64_t start = 0;
  for (auto c : cuts) {
    out.push_back({make_rational(start, den), make_rational(c, den),
                   static_cast<std::size_t>(uniform_index(rng, space->size()))});
    start = c;
  }
  return RandomVariable(space, std::move(out));
}

// A vertex of the transportation polytope, selected by a random cost.
inline CouplingMatrix random_vertex_coupling(const Law& p, const Law& q,
                                             Rng& rng) {
  std::vector<Rational> cost(p.size() * q.size());
  for (auto& c : cost) c = uniform_int(rng, 0, 16);
  return transport_lp(TransportProblem(p, q, std::move(cost))).coupling;
}

// Midpoint of two random vertices: usually not a vertex itself.
inline CouplingMatrix random_coupling(const Law& p, const Law& q, Rng& rng) {
  const auto a = random_vertex_coupling(p, q, rng);
  const auto b = random_vertex_coupling(p, q, rng);
  CouplingMatrix mix(p.space(), q.space());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      mix.at(i, j) = (a.at(i, j) + b.at(i, j)) / 2;
    }
  }
  return mix;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  shuffle_in_place(order, rng);
  return order;
}

// Realization of a joint law with a random stacking order of its atoms.
inline std::vector<RandomVariable> shuffled_realization(const ChainLaw& law,
                                                        Rng& rng) {
  const auto order = random_permutation(law.atoms().size(), rng);
  return realize_chain(law, order);
}

// Same function up to a null set, written with a different subdivision:
// every piece is split at a random interior point.
inline RandomVariable subdivide(const RandomVariable& rv, Rng& rng) {
  std::vector<Piece> out;
  for (const auto& p : rv.pieces()) {
    const Rational t = make_rational(uniform_int(rng, 1, 7), 8);
    const Rational mid = p.begin + t * p.length();
    out.push_back({p.begin, mid, p.point});
    out.push_back({mid, p.end, p.point});
  }
  return RandomVariable(rv.space(), std::move(out));
}

// Law-preserving re-realization: same law, new sample-space layout.
inline RandomVariable rerealize(const RandomVariable& rv, Rng& rng) {
  return shuffled_realization(ChainLaw::from_law(law_of(rv)), rng).front();
}

inline InstanceBundle generate(std::uint64_t seed, const Profile& profile) {
  if (profile.min_points < 1 || profile.min_points > profile.max_points ||
      profile.max_points >
          static_cast<std::size_t>(kGridSide * kGridSide) ||
      profile.max_denominator < 1) {
    throw InvalidArgument("infeasible profile '" + profile.name + "'");
  }
  Rng rng(seed);
  InstanceBundle bundle;
  const auto n = static_cast<std::size_t>(
      uniform_int(rng, static_cast<std::int64_t>(profile.min_points),
                  static_cast<std::int64_t>(profile.max_points)));
  bundle.space = random_space(n, rng);
  for (const char* name : {"P", "Q", "R"}) {
    bundle.laws.emplace(name,
                        random_law(bundle.space, profile.max_denominator, rng));
  }
  for (const char* name : {"xi", "eta", "zeta"}) {
    bundle.random_variables.emplace(
        name, random_rv(bundle.space, profile.max_denominator, rng));
  }
  const auto prefix = uniform_int(rng, 0, 2);
  const auto cycle = uniform_int(rng, 1, 3);
  NamedSequence seq;
  const RandomVariable& target = bundle.rv("xi");
  for (std::int64_t k = 0; k < prefix + cycle; ++k) {
    const std::string name = "s" + std::to_string(k);
    const auto choice = uniform_index(rng, 4);
    RandomVariable element =
        choice == 0   ? target
        : choice == 1 ? rerealize(target, rng)
                      : random_rv(bundle.space, profile.max_denominator, rng);
    bundle.random_variables.emplace(name, std::move(element));
    (k < prefix ? seq.prefix : seq.cycle).push_back(name);
  }
  bundle.sequences.emplace("seq", std::move(seq));
  bundle.seed = seed;
  bundle.note = "generated seed=" + std::to_string(seed) +
                " profile=" + profile.name;
  return bundle;
}

}  // namespace probmetric

#endif  // PROBMETRIC_GENERATE_HPP_
