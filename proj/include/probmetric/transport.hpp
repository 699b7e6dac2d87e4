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

#ifndef PROBMETRIC_TRANSPORT_HPP_
#define PROBMETRIC_TRANSPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "probmetric/law.hpp"
#include "probmetric/rational.hpp"
#include "probmetric/space.hpp"

namespace probmetric {

inline constexpr std::size_t kMaxVertexEnumerationPoints = 6;

// Vertex counts grow quickly (hundreds at 4 points, about 10^4 at 5), so
// searches that enumerate vertices opportunistically stop here.
inline constexpr std::size_t kFastVertexSearchPoints = 4;

// Minimize sum pi(i,j) cost(i,j) over couplings pi of (source, target).
// Cost is row-major, source.size() x target.size().
struct TransportProblem {
  Law source;
  Law target;
  std::vector<Rational> cost;

  TransportProblem(Law p, Law q, std::vector<Rational> c)
      : source(std::move(p)), target(std::move(q)), cost(std::move(c)) {
    if (cost.size() != source.size() * target.size()) {
      throw InvalidArgument("cost matrix does not match the laws");
    }
  }

  // cost = d^power on a shared space.
  static TransportProblem distance_power(const Law& p, const Law& q,
                                         unsigned power) {
    return TransportProblem(p, q, cost_from_distance(p, q, [&](const auto& d) {
                              return pow(d, power);
                            }));
  }

  // cost = 1 on {d >= t} (or {d > t} when strict), 0 elsewhere.
  static TransportProblem threshold(const Law& p, const Law& q,
                                    const Rational& t, bool strict) {
    return TransportProblem(p, q, cost_from_distance(p, q, [&](const auto& d) {
                              const bool above = strict ? d > t : d >= t;
                              return Rational(above ? 1 : 0);
                            }));
  }

 private:
  template <typename F>
  static std::vector<Rational> cost_from_distance(const Law& p, const Law& q,
                                                  F&& f) {
    if (!same_space(p.space(), q.space())) {
      throw InvalidArgument("distance cost needs laws on one space");
    }
    const auto& space = *p.space();
    std::vector<Rational> c;
    c.reserve(space.size() * space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
      for (std::size_t j = 0; j < space.size(); ++j) {
        c.push_back(f(space.dist(i, j)));
      }
    }
    return c;
  }
};

struct TransportSolution {
  Rational value;
  CouplingMatrix coupling;
};

inline Rational coupling_cost(const CouplingMatrix& coupling,
                              const std::vector<Rational>& cost) {
  Rational total = 0;
  const auto& e = coupling.entries();
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (sgn(e[k]) != 0) total += e[k] * cost[k];
  }
  return total;
}

namespace detail {

// Exact primal transportation simplex. The basis is a spanning tree of the
// bipartite row/column graph with n + m - 1 cells (degenerate cells carry
// zero flow). Entering and leaving cells follow Bland's smallest-index rule.
class TransportSimplex {
 public:
  TransportSimplex(const TransportProblem& problem)
      : n_(problem.source.size()),
        m_(problem.target.size()),
        cost_(problem.cost),
        flow_(n_ * m_, Rational(0)),
        basic_(n_ * m_, false) {
    north_west_corner(problem.source.weights(), problem.target.weights());
  }

  void solve() {
    while (true) {
      compute_potentials();
      std::optional<std::size_t> entering;
      for (std::size_t cell = 0; cell < n_ * m_; ++cell) {
        if (basic_[cell]) continue;
        const std::size_t i = cell / m_, j = cell % m_;
        if (cost_[cell] - row_potential_[i] - col_potential_[j] < 0) {
          entering = cell;
          break;
        }
      }
      if (!entering) return;
      pivot(*entering);
    }
  }

  const std::vector<Rational>& flow() const { return flow_; }

 private:
  void north_west_corner(std::vector<Rational> supply,
                         std::vector<Rational> demand) {
    std::size_t i = 0, j = 0;
    while (i < n_ && j < m_) {
      const std::size_t cell = i * m_ + j;
      Rational x = min_of(supply[i], demand[j]);
      flow_[cell] = x;
      basic_[cell] = true;
      supply[i] -= x;
      demand[j] -= x;
      if (i + 1 < n_ && sgn(supply[i]) == 0) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  // Tree adjacency: nodes 0..n-1 are rows, n..n+m-1 are columns.
  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(n_ + m_);
    for (std::size_t cell = 0; cell < n_ * m_; ++cell) {
      if (!basic_[cell]) continue;
      adj[cell / m_].push_back(cell);
      adj[n_ + cell % m_].push_back(cell);
    }
    return adj;
  }

  std::size_t other_end(std::size_t cell, std::size_t node) const {
    const std::size_t row = cell / m_, col = n_ + cell % m_;
    return node == row ? col : row;
  }

  void compute_potentials() {
    row_potential_.assign(n_, Rational(0));
    col_potential_.assign(m_, Rational(0));
    const auto adj = adjacency();
    std::vector<bool> seen(n_ + m_, false);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = true;
    while (!frontier.empty()) {
      const std::size_t node = frontier.front();
      frontier.pop();
      for (std::size_t cell : adj[node]) {
        const std::size_t next = other_end(cell, node);
        if (seen[next]) continue;
        seen[next] = true;
        const std::size_t i = cell / m_, j = cell % m_;
        if (next >= n_) {
          col_potential_[j] = cost_[cell] - row_potential_[i];
        } else {
          row_potential_[i] = cost_[cell] - col_potential_[j];
        }
        frontier.push(next);
      }
    }
  }

  // Cells on the tree path from the entering cell's row to its column.
  std::vector<std::size_t> tree_path(std::size_t entering) const {
    const auto adj = adjacency();
    const std::size_t start = entering / m_;
    const std::size_t goal = n_ + entering % m_;
    std::vector<std::optional<std::size_t>> via(n_ + m_);
    std::vector<bool> seen(n_ + m_, false);
    std::queue<std::size_t> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty() && !seen[goal]) {
      const std::size_t node = frontier.front();
      frontier.pop();
      for (std::size_t cell : adj[node]) {
        const std::size_t next = other_end(cell, node);
        if (seen[next]) continue;
        seen[next] = true;
        via[next] = cell;
        frontier.push(next);
      }
    }
    std::vector<std::size_t> path;
    for (std::size_t node = goal; node != start;) {
      const std::size_t cell = *via[node];
      path.push_back(cell);
      node = other_end(cell, node);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  void pivot(std::size_t entering) {
    // Path cells alternate -, +, -, ... starting next to the entering row.
    const auto path = tree_path(entering);
    std::optional<std::size_t> leaving;
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const std::size_t cell = path[k];
      if (!leaving || flow_[cell] < flow_[*leaving] ||
          (flow_[cell] == flow_[*leaving] && cell < *leaving)) {
        leaving = cell;
      }
    }
    const Rational theta = flow_[*leaving];
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (k % 2 == 0) {
        flow_[path[k]] -= theta;
      } else {
        flow_[path[k]] += theta;
      }
    }
    flow_[entering] = theta;
    basic_[entering] = true;
    basic_[*leaving] = false;
    flow_[*leaving] = 0;
  }

  std::size_t n_, m_;
  std::vector<Rational> cost_;
  std::vector<Rational> flow_;
  std::vector<bool> basic_;
  std::vector<Rational> row_potential_, col_potential_;
};

}  // namespace detail

// Exact optimum; the returned coupling is a vertex of the transportation
// polytope.
inline TransportSolution transport_lp(const TransportProblem& problem) {
  detail::TransportSimplex simplex(problem);
  simplex.solve();
  CouplingMatrix coupling(problem.source.space(), problem.target.space());
  const auto& flow = simplex.flow();
  for (std::size_t i = 0; i < coupling.num_rows(); ++i) {
    for (std::size_t j = 0; j < coupling.num_cols(); ++j) {
      coupling.at(i, j) = flow[i * coupling.num_cols() + j];
    }
  }
  Rational value = coupling_cost(coupling, problem.cost);
  return {std::move(value), std::move(coupling)};
}

// min over couplings of pi[{d >= t}].
inline TransportSolution min_mass_above_with_witness(const Rational& t,
                                                     const Law& p,
                                                     const Law& q) {
  if (sgn(t) < 0) throw InvalidArgument("threshold must be nonnegative");
  return transport_lp(TransportProblem::threshold(p, q, t, false));
}

inline Rational min_mass_above(const Rational& t, const Law& p, const Law& q) {
  return min_mass_above_with_witness(t, p, q).value;
}

// W_inf: least distance value t admitting a coupling supported on {d <= t}.
inline TransportSolution bottleneck_with_witness(const Law& p, const Law& q) {
  if (!same_space(p.space(), q.space())) {
    throw InvalidArgument("bottleneck needs laws on one space");
  }
  for (const auto& t : p.space()->distance_values()) {
    auto solution = transport_lp(TransportProblem::threshold(p, q, t, true));
    if (sgn(solution.value) == 0) return {t, std::move(solution.coupling)};
  }
  throw std::logic_error("no threshold admits a coupling");  // unreachable
}

inline Rational bottleneck(const Law& p, const Law& q) {
  return bottleneck_with_witness(p, q).value;
}

namespace detail {

class VertexEnumerator {
 public:
  VertexEnumerator(const Law& p, const Law& q) : p_(p), q_(q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (sgn(p[i]) > 0) rows_.push_back(i);
    }
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (sgn(q[j]) > 0) cols_.push_back(j);
    }
  }

  std::vector<CouplingMatrix> run() {
    std::vector<Rational> state;
    for (std::size_t i : rows_) state.push_back(p_[i]);
    for (std::size_t j : cols_) state.push_back(q_[j]);
    std::vector<CouplingMatrix> out;
    for (const auto& cells : expand(state)) {
      CouplingMatrix m(p_.space(), q_.space());
      for (const auto& [cell, mass] : cells) {
        m.at(rows_[cell.first], cols_[cell.second]) = mass;
      }
      out.push_back(std::move(m));
    }
    return out;
  }

 private:
  using Cells = std::map<std::pair<std::size_t, std::size_t>, Rational>;

  // Every vertex has a leaf line in its support forest; saturating that
  // leaf with min(remaining row, remaining column) and recursing reaches
  // each vertex. Memoized on the remaining masses.
  const std::set<Cells>& expand(const std::vector<Rational>& state) {
    if (auto it = memo_.find(state); it != memo_.end()) return it->second;
    std::set<Cells> result;
    const std::size_t r = rows_.size();
    bool any = false;
    for (std::size_t a = 0; a < r; ++a) {
      if (sgn(state[a]) == 0) continue;
      for (std::size_t b = 0; b < cols_.size(); ++b) {
        if (sgn(state[r + b]) == 0) continue;
        any = true;
        std::vector<Rational> next = state;
        Rational x = min_of(state[a], state[r + b]);
        next[a] -= x;
        next[r + b] -= x;
        for (const auto& sub : expand(next)) {
          Cells cells = sub;
          cells[{a, b}] = x;
          result.insert(std::move(cells));
        }
      }
    }
    if (!any) result.insert(Cells{});
    return memo_.emplace(state, std::move(result)).first->second;
  }

  const Law& p_;
  const Law& q_;
  std::vector<std::size_t> rows_, cols_;
  std::map<std::vector<Rational>, std::set<Cells>> memo_;
};

}  // namespace detail

// All vertices of the transportation polytope of (p, q).
inline std::vector<CouplingMatrix> enumerate_vertices(const Law& p,
                                                      const Law& q) {
  if (p.size() > kMaxVertexEnumerationPoints ||
      q.size() > kMaxVertexEnumerationPoints) {
    throw SizeLimitExceeded(
        "vertex enumeration refused above " +
        std::to_string(kMaxVertexEnumerationPoints) + " points");
  }
  return detail::VertexEnumerator(p, q).run();
}

}  // namespace probmetric

#endif  // PROBMETRIC_TRANSPORT_HPP_
