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

#ifndef PROBMETRIC_RANDOM_VARIABLE_HPP_
#define PROBMETRIC_RANDOM_VARIABLE_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "probmetric/law.hpp"
#include "probmetric/rational.hpp"
#include "probmetric/space.hpp"

namespace probmetric {

// The sample space is [0,1) with length measure. A random variable is a
// step function on it: finitely many half-open pieces [begin, end) with
// rational endpoints, each mapped to one point.
struct Piece {
  Rational begin;
  Rational end;
  std::size_t point;

  Rational length() const { return end - begin; }
  bool operator==(const Piece&) const = default;
};

class RandomVariable {
 public:
  // Pieces may be given in any order; they are stored sorted and must tile
  // [0,1) exactly.
  RandomVariable(SpacePtr space, std::vector<Piece> pieces)
      : space_(std::move(space)), pieces_(std::move(pieces)) {
    if (!space_) throw InvalidArgument("random variable without a space");
    if (pieces_.empty()) throw InvalidArgument("random variable has no pieces");
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.begin < b.begin; });
    Rational cursor = 0;
    for (const auto& p : pieces_) {
      if (p.point >= space_->size()) {
        throw InvalidArgument("piece maps to point index " +
                              std::to_string(p.point) + " outside the space");
      }
      if (p.begin != cursor) {
        throw InvalidArgument(p.begin < cursor
                                  ? "overlapping pieces at " + to_string(p.begin)
                                  : "gap in pieces before " + to_string(p.begin));
      }
      if (p.end <= p.begin) {
        throw InvalidArgument("empty or reversed piece at " +
                              to_string(p.begin));
      }
      cursor = p.end;
    }
    if (cursor != 1) throw InvalidArgument("pieces do not cover [0,1)");
  }

  static RandomVariable constant(SpacePtr space, std::size_t point) {
    return RandomVariable(std::move(space), {{Rational(0), Rational(1), point}});
  }

  const SpacePtr& space() const { return space_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  // Point taken on the piece containing omega.
  std::size_t at(const Rational& omega) const {
    for (const auto& p : pieces_) {
      if (p.begin <= omega && omega < p.end) return p.point;
    }
    throw InvalidArgument("sample point outside [0,1)");
  }

  bool operator==(const RandomVariable& other) const {
    return same_space(space_, other.space_) && pieces_ == other.pieces_;
  }

 private:
  SpacePtr space_;
  std::vector<Piece> pieces_;
};

inline Law law_of(const RandomVariable& xi) {
  std::vector<Rational> w(xi.space()->size(), Rational(0));
  for (const auto& p : xi.pieces()) w[p.point] += p.length();
  return Law(xi.space(), std::move(w));
}

namespace detail {

// Walks the common refinement of several step functions, calling
// visit(length, points) once per elementary interval.
template <typename Visitor>
void for_each_cell(std::span<const RandomVariable* const> rvs,
                   Visitor&& visit) {
  std::vector<Rational> cuts;
  for (const auto* rv : rvs) {
    for (const auto& p : rv->pieces()) cuts.push_back(p.end);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<std::size_t> cursor(rvs.size(), 0);
  std::vector<std::size_t> points(rvs.size());
  Rational start = 0;
  for (const auto& cut : cuts) {
    for (std::size_t k = 0; k < rvs.size(); ++k) {
      const auto& pieces = rvs[k]->pieces();
      while (pieces[cursor[k]].end <= start) ++cursor[k];
      points[k] = pieces[cursor[k]].point;
    }
    visit(Rational(cut - start), points);
    start = cut;
  }
}

}  // namespace detail

// Joint law of (xi_1, ..., xi_k) on the product of their spaces.
inline ChainLaw joint_law(std::span<const RandomVariable> rvs) {
  if (rvs.empty()) throw InvalidArgument("joint law of no random variables");
  std::vector<const RandomVariable*> ptrs;
  std::vector<SpacePtr> axes;
  for (const auto& rv : rvs) {
    ptrs.push_back(&rv);
    axes.push_back(rv.space());
  }
  ChainLaw::Atoms atoms;
  detail::for_each_cell(std::span<const RandomVariable* const>(ptrs),
                        [&](const Rational& length,
                            const std::vector<std::size_t>& points) {
                          atoms[points] += length;
                        });
  return ChainLaw(std::move(axes), std::move(atoms));
}

inline CouplingMatrix joint_law(const RandomVariable& xi,
                                const RandomVariable& eta) {
  CouplingMatrix m(xi.space(), eta.space());
  const RandomVariable* ptrs[] = {&xi, &eta};
  detail::for_each_cell(std::span<const RandomVariable* const>(ptrs),
                        [&](const Rational& length,
                            const std::vector<std::size_t>& points) {
                          m.at(points[0], points[1]) += length;
                        });
  return m;
}

inline bool equal_ae(const RandomVariable& xi, const RandomVariable& other) {
  if (!same_space(xi.space(), other.space())) {
    throw InvalidArgument("equal_ae on random variables of different spaces");
  }
  bool equal = true;
  const RandomVariable* ptrs[] = {&xi, &other};
  detail::for_each_cell(std::span<const RandomVariable* const>(ptrs),
                        [&](const Rational&,
                            const std::vector<std::size_t>& points) {
                          equal = equal && points[0] == points[1];
                        });
  return equal;
}

// Stacks the atoms of `law` as consecutive intervals, in the order given
// by `atom_order` (a permutation of the atom list); lexicographic when
// empty.
inline std::vector<RandomVariable> realize_chain(
    const ChainLaw& law, std::span<const std::size_t> atom_order = {}) {
  std::vector<const ChainLaw::Atoms::value_type*> atoms;
  for (const auto& atom : law.atoms()) atoms.push_back(&atom);
  std::vector<std::size_t> order(atoms.size());
  if (atom_order.empty()) {
    std::iota(order.begin(), order.end(), std::size_t{0});
  } else {
    std::vector<std::size_t> check(atom_order.begin(), atom_order.end());
    std::sort(check.begin(), check.end());
    bool valid = check.size() == atoms.size();
    for (std::size_t i = 0; valid && i < check.size(); ++i) {
      valid = check[i] == i;
    }
    if (!valid) throw InvalidArgument("atom order is not a permutation");
    order.assign(atom_order.begin(), atom_order.end());
  }
  std::vector<std::vector<Piece>> pieces(law.arity());
  Rational cursor = 0;
  for (std::size_t k : order) {
    const auto& [index, mass] = *atoms[k];
    Rational next = cursor + mass;
    for (std::size_t a = 0; a < law.arity(); ++a) {
      pieces[a].push_back({cursor, next, index[a]});
    }
    cursor = next;
  }
  std::vector<RandomVariable> result;
  for (std::size_t a = 0; a < law.arity(); ++a) {
    result.emplace_back(law.axes()[a], std::move(pieces[a]));
  }
  return result;
}

inline RandomVariable realize(const Law& law) {
  return realize_chain(ChainLaw::from_law(law)).front();
}

inline std::pair<RandomVariable, RandomVariable> realize_pair(
    const CouplingMatrix& coupling,
    std::span<const std::size_t> atom_order = {}) {
  auto rvs = realize_chain(ChainLaw::from_coupling(coupling), atom_order);
  return {std::move(rvs[0]), std::move(rvs[1])};
}

// Composition of xi with a point map f: X -> Y.
inline RandomVariable push_forward(const RandomVariable& xi,
                                   std::span<const std::size_t> f,
                                   SpacePtr target) {
  if (f.size() != xi.space()->size()) {
    throw InvalidArgument("point map is not total on the source space");
  }
  std::vector<Piece> pieces;
  for (const auto& p : xi.pieces()) {
    if (f[p.point] >= target->size()) {
      throw InvalidArgument("point map leaves the target space");
    }
    pieces.push_back({p.begin, p.end, f[p.point]});
  }
  return RandomVariable(std::move(target), std::move(pieces));
}

}  // namespace probmetric

#endif  // PROBMETRIC_RANDOM_VARIABLE_HPP_
