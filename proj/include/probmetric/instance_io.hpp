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

// Instance files: JSON documents of the form
//
//   {
//     "space": {"points": ["a", "b"], "dist": [["0/1", "1/1"], ...]},
//     "laws": {"P": ["1/2", "1/2"]},
//     "random_variables": {"xi": [["0/1", "1/2", "a"], ["1/2", "1/1", "b"]]},
//     "sequences": {"s": {"prefix": ["xi"], "cycle": ["eta"]}},
//     "seed": 7,
//     "note": "..."
//   }
//
// Rationals are strings "p/q". Only "space" is required. Printing emits the
// canonical form (sorted keys and pieces, reduced fractions), and
// parse followed by print reproduces a canonical document byte for byte.

#ifndef PROBMETRIC_INSTANCE_IO_HPP_
#define PROBMETRIC_INSTANCE_IO_HPP_

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "probmetric/gauges.hpp"
#include "probmetric/law.hpp"
#include "probmetric/random_variable.hpp"
#include "probmetric/space.hpp"

namespace probmetric {

using Json = nlohmann::json;

struct NamedSequence {
  std::vector<std::string> prefix;
  std::vector<std::string> cycle;
  bool operator==(const NamedSequence&) const = default;
};

struct InstanceBundle {
  SpacePtr space;
  std::map<std::string, Law> laws;
  std::map<std::string, RandomVariable> random_variables;
  std::map<std::string, NamedSequence> sequences;
  std::optional<std::uint64_t> seed;
  std::string note;

  const Law& law(const std::string& name) const {
    auto it = laws.find(name);
    if (it == laws.end()) throw InvalidArgument("unknown law '" + name + "'");
    return it->second;
  }

  const RandomVariable& rv(const std::string& name) const {
    auto it = random_variables.find(name);
    if (it == random_variables.end()) {
      throw InvalidArgument("unknown random variable '" + name + "'");
    }
    return it->second;
  }

  SequenceSpec sequence(const std::string& name) const {
    auto it = sequences.find(name);
    if (it == sequences.end()) {
      throw InvalidArgument("unknown sequence '" + name + "'");
    }
    std::vector<RandomVariable> prefix, cycle;
    for (const auto& n : it->second.prefix) prefix.push_back(rv(n));
    for (const auto& n : it->second.cycle) cycle.push_back(rv(n));
    return SequenceSpec(std::move(prefix), std::move(cycle));
  }
};

namespace detail {

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidArgument("expected a rational string, got " + j.dump());
}

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace detail

inline Json rational_to_json(const Rational& r) { return to_string(r); }

inline Json space_to_json(const FinMetricSpace& space) {
  Json dist = Json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < space.size(); ++j) {
      row.push_back(rational_to_json(space.dist(i, j)));
    }
    dist.push_back(std::move(row));
  }
  return Json{{"points", space.points()}, {"dist", std::move(dist)}};
}

inline SpacePtr space_from_json(const Json& j) {
  std::vector<std::string> points;
  for (const auto& p : detail::require(j, "points")) {
    points.push_back(p.get<std::string>());
  }
  std::vector<std::vector<Rational>> dist;
  for (const auto& row : detail::require(j, "dist")) {
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(detail::rational_from_json(x));
    dist.push_back(std::move(r));
  }
  return make_space(std::move(points), dist);
}

inline Json law_to_json(const Law& law) {
  Json out = Json::array();
  for (const auto& w : law.weights()) out.push_back(rational_to_json(w));
  return out;
}

inline Json rv_to_json(const RandomVariable& rv) {
  Json out = Json::array();
  for (const auto& p : rv.pieces()) {
    out.push_back(Json::array({rational_to_json(p.begin),
                               rational_to_json(p.end),
                               rv.space()->point(p.point)}));
  }
  return out;
}

inline RandomVariable rv_from_json(const Json& j, const SpacePtr& space) {
  std::vector<Piece> pieces;
  for (const auto& triple : j) {
    if (!triple.is_array() || triple.size() != 3) {
      throw InvalidArgument("random variable piece must be [a, b, point]");
    }
    const std::size_t point =
        triple[2].is_number_integer()
            ? triple[2].get<std::size_t>()
            : space->index_of(triple[2].get<std::string>());
    pieces.push_back({detail::rational_from_json(triple[0]),
                      detail::rational_from_json(triple[1]), point});
  }
  return RandomVariable(space, std::move(pieces));
}

inline Json coupling_to_json(const CouplingMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.num_rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.num_cols(); ++j) {
      row.push_back(rational_to_json(m.at(i, j)));
    }
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.row_space()->points()},
              {"cols", m.col_space()->points()},
              {"entries", std::move(entries)}};
}

inline Json chain_law_to_json(const ChainLaw& law) {
  Json atoms = Json::array();
  for (const auto& [index, mass] : law.atoms()) {
    Json point = Json::array();
    for (std::size_t a = 0; a < index.size(); ++a) {
      point.push_back(law.axes()[a]->point(index[a]));
    }
    atoms.push_back(Json{{"point", std::move(point)},
                         {"mass", rational_to_json(mass)}});
  }
  return Json{{"arity", law.arity()}, {"atoms", std::move(atoms)}};
}

inline Json bundle_to_json(const InstanceBundle& bundle) {
  Json out;
  out["space"] = space_to_json(*bundle.space);
  if (!bundle.laws.empty()) {
    Json laws = Json::object();
    for (const auto& [name, law] : bundle.laws) laws[name] = law_to_json(law);
    out["laws"] = std::move(laws);
  }
  if (!bundle.random_variables.empty()) {
    Json rvs = Json::object();
    for (const auto& [name, rv] : bundle.random_variables) {
      rvs[name] = rv_to_json(rv);
    }
    out["random_variables"] = std::move(rvs);
  }
  if (!bundle.sequences.empty()) {
    Json seqs = Json::object();
    for (const auto& [name, s] : bundle.sequences) {
      seqs[name] = Json{{"prefix", s.prefix}, {"cycle", s.cycle}};
    }
    out["sequences"] = std::move(seqs);
  }
  if (bundle.seed) out["seed"] = *bundle.seed;
  if (!bundle.note.empty()) out["note"] = bundle.note;
  return out;
}

inline InstanceBundle bundle_from_json(const Json& j) {
  InstanceBundle bundle;
  bundle.space = space_from_json(detail::require(j, "space"));
  if (j.contains("laws")) {
    for (const auto& [name, weights] : j.at("laws").items()) {
      std::vector<Rational> w;
      for (const auto& x : weights) w.push_back(detail::rational_from_json(x));
      bundle.laws.emplace(name, Law(bundle.space, std::move(w)));
    }
  }
  if (j.contains("random_variables")) {
    for (const auto& [name, pieces] : j.at("random_variables").items()) {
      bundle.random_variables.emplace(name, rv_from_json(pieces, bundle.space));
    }
  }
  if (j.contains("sequences")) {
    for (const auto& [name, s] : j.at("sequences").items()) {
      NamedSequence seq;
      if (s.contains("prefix")) {
        seq.prefix = s.at("prefix").get<std::vector<std::string>>();
      }
      seq.cycle = detail::require(s, "cycle").get<std::vector<std::string>>();
      bundle.sequences.emplace(name, std::move(seq));
      bundle.sequence(name);  // validates names, cycle and spaces
    }
  }
  if (j.contains("seed")) bundle.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("note")) bundle.note = j.at("note").get<std::string>();
  return bundle;
}

inline std::string print_bundle(const InstanceBundle& bundle) {
  return bundle_to_json(bundle).dump(2) + "\n";
}

inline InstanceBundle parse_bundle(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed instance file: ") + e.what());
  }
  try {
    return bundle_from_json(j);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed instance file: ") + e.what());
  }
}

inline InstanceBundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_bundle(buffer.str());
}

inline void save_bundle(const InstanceBundle& bundle, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << print_bundle(bundle);
}

}  // namespace probmetric

#endif  // PROBMETRIC_INSTANCE_IO_HPP_
