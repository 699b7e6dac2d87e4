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

#ifndef PROBMETRIC_LAW_HPP_
#define PROBMETRIC_LAW_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "probmetric/rational.hpp"
#include "probmetric/space.hpp"

namespace probmetric {

// A probability vector on the points of a finite space.
class Law {
 public:
  Law(SpacePtr space, std::vector<Rational> weights)
      : space_(std::move(space)), weights_(std::move(weights)) {
    if (!space_) throw InvalidArgument("law without a space");
    if (weights_.size() != space_->size()) {
      throw InvalidArgument("law has " + std::to_string(weights_.size()) +
                            " weights for a space of " +
                            std::to_string(space_->size()) + " points");
    }
    Rational total = 0;
    for (const auto& w : weights_) {
      if (sgn(w) < 0) throw InvalidArgument("negative law weight");
      total += w;
    }
    if (total != 1) {
      throw InvalidArgument("law weights sum to " + to_string(total));
    }
  }

  static Law dirac(SpacePtr space, std::size_t point) {
    std::vector<Rational> w(space->size(), Rational(0));
    w.at(point) = 1;
    return Law(std::move(space), std::move(w));
  }

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }

  bool operator==(const Law& other) const {
    return same_space(space_, other.space_) && weights_ == other.weights_;
  }

 private:
  SpacePtr space_;
  std::vector<Rational> weights_;
};

// Joint law on X x Y stored densely (rows index X, columns index Y).
class CouplingMatrix {
 public:
  CouplingMatrix(SpacePtr rows, SpacePtr cols)
      : rows_(std::move(rows)),
        cols_(std::move(cols)),
        entries_(rows_->size() * cols_->size(), Rational(0)) {}

  CouplingMatrix(SpacePtr rows, SpacePtr cols,
                 const std::vector<std::vector<Rational>>& entries)
      : CouplingMatrix(std::move(rows), std::move(cols)) {
    if (entries.size() != num_rows()) {
      throw InvalidArgument("coupling row count mismatch");
    }
    for (std::size_t i = 0; i < num_rows(); ++i) {
      if (entries[i].size() != num_cols()) {
        throw InvalidArgument("coupling column count mismatch");
      }
      for (std::size_t j = 0; j < num_cols(); ++j) at(i, j) = entries[i][j];
    }
    validate();
  }

  const SpacePtr& row_space() const { return rows_; }
  const SpacePtr& col_space() const { return cols_; }
  std::size_t num_rows() const { return rows_->size(); }
  std::size_t num_cols() const { return cols_->size(); }

  Rational& at(std::size_t i, std::size_t j) {
    return entries_[i * num_cols() + j];
  }
  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * num_cols() + j];
  }
  const std::vector<Rational>& entries() const { return entries_; }

  Law row_marginal() const {
    std::vector<Rational> w(num_rows(), Rational(0));
    for (std::size_t i = 0; i < num_rows(); ++i) {
      for (std::size_t j = 0; j < num_cols(); ++j) w[i] += at(i, j);
    }
    return Law(rows_, std::move(w));
  }

  Law col_marginal() const {
    std::vector<Rational> w(num_cols(), Rational(0));
    for (std::size_t i = 0; i < num_rows(); ++i) {
      for (std::size_t j = 0; j < num_cols(); ++j) w[j] += at(i, j);
    }
    return Law(cols_, std::move(w));
  }

  void validate() const {
    Rational total = 0;
    for (const auto& e : entries_) {
      if (sgn(e) < 0) throw InvalidArgument("negative coupling entry");
      total += e;
    }
    if (total != 1) {
      throw InvalidArgument("coupling mass is " + to_string(total));
    }
  }

  CouplingMatrix transposed() const {
    CouplingMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < num_rows(); ++i) {
      for (std::size_t j = 0; j < num_cols(); ++j) t.at(j, i) = at(i, j);
    }
    return t;
  }

  bool operator==(const CouplingMatrix& other) const {
    return same_space(rows_, other.rows_) && same_space(cols_, other.cols_) &&
           entries_ == other.entries_;
  }

 private:
  SpacePtr rows_;
  SpacePtr cols_;
  std::vector<Rational> entries_;
};

inline CouplingMatrix product_coupling(const Law& p, const Law& q) {
  CouplingMatrix m(p.space(), q.space());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) m.at(i, j) = p[i] * q[j];
  }
  return m;
}

inline CouplingMatrix diagonal_coupling(const Law& p) {
  CouplingMatrix m(p.space(), p.space());
  for (std::size_t i = 0; i < p.size(); ++i) m.at(i, i) = p[i];
  return m;
}

// Joint law on X_0 x ... x X_{k-1}, stored sparsely: only atoms with
// positive mass are kept, ordered lexicographically by index tuple.
class ChainLaw {
 public:
  using Index = std::vector<std::size_t>;
  using Atoms = std::map<Index, Rational>;

  ChainLaw(std::vector<SpacePtr> axes, Atoms atoms)
      : axes_(std::move(axes)), atoms_(std::move(atoms)) {
    if (axes_.empty()) throw InvalidArgument("chain law needs an axis");
    Rational total = 0;
    for (auto it = atoms_.begin(); it != atoms_.end();) {
      const auto& [index, mass] = *it;
      if (index.size() != axes_.size()) {
        throw InvalidArgument("atom arity does not match the axes");
      }
      for (std::size_t a = 0; a < axes_.size(); ++a) {
        if (index[a] >= axes_[a]->size()) {
          throw InvalidArgument("atom index out of range");
        }
      }
      if (sgn(mass) < 0) throw InvalidArgument("negative atom mass");
      total += mass;
      if (sgn(mass) == 0) {
        it = atoms_.erase(it);
      } else {
        ++it;
      }
    }
    if (total != 1) {
      throw InvalidArgument("chain law mass is " + to_string(total));
    }
  }

  static ChainLaw from_law(const Law& p) {
    Atoms atoms;
    for (std::size_t i = 0; i < p.size(); ++i) atoms[{i}] = p[i];
    return ChainLaw({p.space()}, std::move(atoms));
  }

  static ChainLaw from_coupling(const CouplingMatrix& m) {
    Atoms atoms;
    for (std::size_t i = 0; i < m.num_rows(); ++i) {
      for (std::size_t j = 0; j < m.num_cols(); ++j) {
        atoms[{i, j}] = m.at(i, j);
      }
    }
    return ChainLaw({m.row_space(), m.col_space()}, std::move(atoms));
  }

  std::size_t arity() const { return axes_.size(); }
  const std::vector<SpacePtr>& axes() const { return axes_; }
  const Atoms& atoms() const { return atoms_; }

  Rational mass(const Index& index) const {
    auto it = atoms_.find(index);
    return it == atoms_.end() ? Rational(0) : it->second;
  }

  Law as_law() const {
    if (arity() != 1) throw InvalidArgument("chain law is not one-axis");
    std::vector<Rational> w(axes_[0]->size(), Rational(0));
    for (const auto& [index, mass] : atoms_) w[index[0]] += mass;
    return Law(axes_[0], std::move(w));
  }

  CouplingMatrix as_coupling() const {
    if (arity() != 2) throw InvalidArgument("chain law is not two-axis");
    CouplingMatrix m(axes_[0], axes_[1]);
    for (const auto& [index, mass] : atoms_) m.at(index[0], index[1]) += mass;
    return m;
  }

  bool operator==(const ChainLaw& other) const {
    if (arity() != other.arity() || atoms_ != other.atoms_) return false;
    for (std::size_t a = 0; a < arity(); ++a) {
      if (!same_space(axes_[a], other.axes_[a])) return false;
    }
    return true;
  }

 private:
  std::vector<SpacePtr> axes_;
  Atoms atoms_;
};

// Image of the chain law under projection onto the axes in `keep`, taken
// in the order given.
inline ChainLaw marginal(const ChainLaw& law,
                         const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw InvalidArgument("marginal over an empty axis set");
  if (std::set<std::size_t>(keep.begin(), keep.end()).size() != keep.size()) {
    throw InvalidArgument("marginal axes must be distinct");
  }
  std::vector<SpacePtr> axes;
  for (std::size_t a : keep) {
    if (a >= law.arity()) throw InvalidArgument("marginal axis out of range");
    axes.push_back(law.axes()[a]);
  }
  ChainLaw::Atoms atoms;
  for (const auto& [index, mass] : law.atoms()) {
    ChainLaw::Index projected;
    projected.reserve(keep.size());
    for (std::size_t a : keep) projected.push_back(index[a]);
    atoms[projected] += mass;
  }
  return ChainLaw(std::move(axes), std::move(atoms));
}

}  // namespace probmetric

#endif  // PROBMETRIC_LAW_HPP_
