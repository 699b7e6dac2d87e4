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

#ifndef PROBMETRIC_GLUING_HPP_
#define PROBMETRIC_GLUING_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "probmetric/law.hpp"
#include "probmetric/rational.hpp"

namespace probmetric {

// Joins pi1 on X0 x X1 and pi2 on X1 x X2 along their common X1 marginal
// mu, making X0 and X2 conditionally independent given X1:
//   pi(x0, x1, x2) = pi1(x0, x1) pi2(x1, x2) / mu(x1).
inline ChainLaw glue(const CouplingMatrix& first,
                     const CouplingMatrix& second) {
  const Law middle = first.col_marginal();
  if (!(middle == second.row_marginal())) {
    throw InvalidArgument("glue: middle marginals differ");
  }
  ChainLaw::Atoms atoms;
  for (std::size_t x1 = 0; x1 < middle.size(); ++x1) {
    if (sgn(middle[x1]) == 0) continue;
    for (std::size_t x0 = 0; x0 < first.num_rows(); ++x0) {
      if (sgn(first.at(x0, x1)) == 0) continue;
      for (std::size_t x2 = 0; x2 < second.num_cols(); ++x2) {
        if (sgn(second.at(x1, x2)) == 0) continue;
        atoms[{x0, x1, x2}] = first.at(x0, x1) * second.at(x1, x2) / middle[x1];
      }
    }
  }
  return ChainLaw({first.row_space(), first.col_space(), second.col_space()},
                  std::move(atoms));
}

// Joins couplings pi_n on X0 x Xn (n = 1..N) sharing the X0 marginal into one
// law on X0 x X1 x ... x XN whose {0, n} marginal is pi_n; coordinates
// 1..N are conditionally independent given coordinate 0.
inline ChainLaw glue_chain(std::span<const CouplingMatrix> couplings) {
  if (couplings.empty()) throw InvalidArgument("glue_chain of no couplings");
  const Law base = couplings.front().row_marginal();
  for (const auto& c : couplings) {
    if (!(c.row_marginal() == base)) {
      throw InvalidArgument("glue_chain: inconsistent first marginals");
    }
  }
  std::vector<SpacePtr> axes{couplings.front().row_space()};
  for (const auto& c : couplings) axes.push_back(c.col_space());

  ChainLaw::Atoms atoms;
  ChainLaw::Index index(couplings.size() + 1);
  for (std::size_t x0 = 0; x0 < base.size(); ++x0) {
    if (sgn(base[x0]) == 0) continue;
    index[0] = x0;
    // Depth-first over the conditional supports of each coordinate.
    auto extend = [&](auto&& self, std::size_t n, const Rational& mass) -> void {
      if (n == couplings.size()) {
        atoms[index] = mass;
        return;
      }
      const auto& c = couplings[n];
      for (std::size_t x = 0; x < c.num_cols(); ++x) {
        if (sgn(c.at(x0, x)) == 0) continue;
        index[n + 1] = x;
        self(self, n + 1, Rational(mass * c.at(x0, x) / base[x0]));
      }
    };
    extend(extend, 0, base[x0]);
  }
  return ChainLaw(std::move(axes), std::move(atoms));
}

}  // namespace probmetric

#endif  // PROBMETRIC_GLUING_HPP_
