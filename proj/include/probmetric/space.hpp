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

#ifndef PROBMETRIC_SPACE_HPP_
#define PROBMETRIC_SPACE_HPP_

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "probmetric/rational.hpp"

namespace probmetric {

// A finite metric space with exact rational distances. Instances are only
// created through make_space and are immutable afterwards.
class FinMetricSpace {
 public:
  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(std::size_t i) const { return points_.at(i); }
  const Rational& dist(std::size_t i, std::size_t j) const {
    return dist_[i * size() + j];
  }

  std::size_t index_of(const std::string& id) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i] == id) return i;
    }
    throw InvalidArgument("unknown point '" + id + "'");
  }

  // Distinct distance values in increasing order, 0 included.
  std::vector<Rational> distance_values() const {
    std::set<Rational> values;
    for (const auto& d : dist_) values.insert(d);
    return {values.begin(), values.end()};
  }

  // Smallest positive distance; 0 for a singleton space.
  Rational min_positive_distance() const {
    const auto values = distance_values();
    return values.size() > 1 ? values[1] : Rational(0);
  }

  Rational max_distance() const { return distance_values().back(); }

  bool operator==(const FinMetricSpace& other) const {
    return points_ == other.points_ && dist_ == other.dist_;
  }

 private:
  friend std::shared_ptr<const FinMetricSpace> make_space(
      std::vector<std::string>, const std::vector<std::vector<Rational>>&);

  FinMetricSpace() = default;

  std::vector<std::string> points_;
  std::vector<Rational> dist_;
};

using SpacePtr = std::shared_ptr<const FinMetricSpace>;

inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

// Validates every metric axiom and reports the first failing index tuple.
inline SpacePtr make_space(std::vector<std::string> points,
                           const std::vector<std::vector<Rational>>& dist) {
  const std::size_t n = points.size();
  if (n == 0) throw InvalidArgument("metric space must be nonempty");
  if (std::set<std::string>(points.begin(), points.end()).size() != n) {
    throw InvalidArgument("duplicate point identifiers");
  }
  if (dist.size() != n) throw InvalidArgument("distance matrix is not square");
  for (const auto& row : dist) {
    if (row.size() != n) throw InvalidArgument("distance matrix is not square");
  }
  auto name = [&](std::size_t i) { return points[i]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(dist[i][i]) != 0) {
      throw InvalidArgument("nonzero self-distance at (" + name(i) + ")");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i][j] != dist[j][i]) {
        throw InvalidArgument("asymmetric distance at (" + name(i) + "," +
                              name(j) + ")");
      }
      if (i != j && sgn(dist[i][j]) <= 0) {
        throw InvalidArgument("nonpositive distance at (" + name(i) + "," +
                              name(j) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (dist[i][k] > dist[i][j] + dist[j][k]) {
          throw InvalidArgument("triangle violation at (" + name(i) + "," +
                                name(j) + "," + name(k) + ")");
        }
      }
    }
  }
  auto* space = new FinMetricSpace();
  space->points_ = std::move(points);
  space->dist_.reserve(n * n);
  for (const auto& row : dist) {
    space->dist_.insert(space->dist_.end(), row.begin(), row.end());
  }
  return SpacePtr(space);
}

}  // namespace probmetric

#endif  // PROBMETRIC_SPACE_HPP_
