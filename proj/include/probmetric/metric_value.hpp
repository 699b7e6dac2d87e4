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

#ifndef PROBMETRIC_METRIC_VALUE_HPP_
#define PROBMETRIC_METRIC_VALUE_HPP_

#include <cmath>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "probmetric/rational.hpp"

namespace probmetric {

// Absolute tolerance used whenever a floating value takes part in a
// comparison.
inline constexpr double kFloatTolerance = 1e-12;

// A value in [0, +inf]. Exact values are stored as radicand^(1/index): an
// index of 1 is a plain rational, an index p > 1 is the p-th root that an
// L^p distance produces. Approximate values only carry a double.
class MetricValue {
 public:
  MetricValue() = default;

  static MetricValue exact(Rational value) {
    if (sgn(value) < 0) throw InvalidArgument("negative metric value");
    MetricValue v;
    v.radicand_ = std::move(value);
    return v;
  }

  static MetricValue root(Rational power_value, unsigned index) {
    if (index == 0) throw InvalidArgument("root index must be positive");
    MetricValue v = exact(std::move(power_value));
    v.index_ = index;
    return v;
  }

  static MetricValue infinity() {
    MetricValue v;
    v.infinite_ = true;
    return v;
  }

  static MetricValue approximate(double value) {
    MetricValue v;
    v.approximate_ = true;
    v.approx_ = value;
    return v;
  }

  bool is_infinite() const { return infinite_; }
  bool is_approximate() const { return approximate_; }
  bool is_exact() const { return !approximate_ && !infinite_; }
  unsigned root_index() const { return index_; }

  // The radicand; for an L^p value this is the exact p-th power d_p^p.
  const Rational& power_value() const {
    require_exact();
    return radicand_;
  }

  bool is_zero() const {
    if (infinite_) return false;
    if (approximate_) return std::abs(approx_) <= kFloatTolerance;
    return sgn(radicand_) == 0;
  }

  // True when the value is a rational number; stores it in `out`.
  bool as_rational(Rational& out) const {
    if (!is_exact()) return false;
    if (index_ == 1) {
      out = radicand_;
      return true;
    }
    return exact_root(radicand_, index_, out);
  }

  Rational rational() const {
    Rational out;
    if (!as_rational(out)) {
      throw std::logic_error("metric value " + str() + " is not rational");
    }
    return out;
  }

  double approx() const {
    if (infinite_) return std::numeric_limits<double>::infinity();
    if (approximate_) return approx_;
    const double base = to_double(radicand_);
    return index_ == 1 ? base : std::pow(base, 1.0 / index_);
  }

  std::string str() const {
    if (infinite_) return "inf";
    if (approximate_) return "~" + std::to_string(approx_);
    if (index_ == 1) return to_string(radicand_);
    Rational r;
    if (exact_root(radicand_, index_, r)) return to_string(r);
    return "(" + to_string(radicand_) + ")^(1/" + std::to_string(index_) +
           ")";
  }

 private:
  void require_exact() const {
    if (!is_exact()) throw std::logic_error("metric value is not exact");
  }

  Rational radicand_{0};
  unsigned index_ = 1;
  bool infinite_ = false;
  bool approximate_ = false;
  double approx_ = 0.0;
};

namespace detail {

struct SignedTerm {
  int sign;
  const MetricValue* value;
};

struct RadicalGroup {
  Rational coefficient;
  Rational base;
  unsigned index;
};

inline int sign_of_approx(const std::vector<SignedTerm>& terms) {
  double total = 0.0;
  for (const auto& t : terms) total += t.sign * t.value->approx();
  if (std::abs(total) <= kFloatTolerance) return 0;
  return total > 0 ? 1 : -1;
}

// Sign of R + C * base^(1/k) where base^(1/k) is irrational.
inline int sign_single_radical(const Rational& rational_part,
                               const RadicalGroup& g) {
  const int rs = sgn(rational_part);
  const int cs = sgn(g.coefficient);
  if (cs == 0) return rs;
  if (rs == 0 || rs == cs) return cs;
  // Opposite signs: compare base with (|R| / |C|)^k.
  Rational ratio = abs(rational_part) / abs(g.coefficient);
  const int c = cmp(g.base, pow(ratio, g.index));
  return c == 0 ? 0 : (c > 0 ? cs : rs);
}

inline int sign_by_bracketing(const Rational& rational_part,
                              const std::vector<RadicalGroup>& groups) {
  for (unsigned bits = 64; bits <= 8192; bits *= 2) {
    Rational lo = rational_part;
    Rational hi = rational_part;
    const Rational width = power_of_two_inverse(bits);
    for (const auto& g : groups) {
      Rational root_lo = root_lower_bound(g.base, g.index, bits);
      Rational root_hi = root_lo + width;
      if (sgn(g.coefficient) > 0) {
        lo += g.coefficient * root_lo;
        hi += g.coefficient * root_hi;
      } else {
        lo += g.coefficient * root_hi;
        hi += g.coefficient * root_lo;
      }
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
  throw std::runtime_error("radical comparison could not be separated");
}

// Exact sign of sum_i sign_i * value_i for finite exact values.
inline int sign_of_exact(const std::vector<SignedTerm>& terms) {
  Rational rational_part = 0;
  std::vector<RadicalGroup> groups;
  for (const auto& t : terms) {
    Rational r;
    if (t.value->as_rational(r)) {
      rational_part += t.sign * r;
      continue;
    }
    const Rational& base = t.value->power_value();
    const unsigned k = t.value->root_index();
    bool merged = false;
    for (auto& g : groups) {
      if (g.index != k) continue;
      Rational factor;
      if (exact_root(base / g.base, k, factor)) {
        g.coefficient += t.sign * factor;
        merged = true;
        break;
      }
    }
    if (!merged) groups.push_back({Rational(t.sign), base, k});
  }
  std::erase_if(groups, [](const RadicalGroup& g) {
    return sgn(g.coefficient) == 0;
  });
  if (groups.empty()) return sgn(rational_part);
  if (groups.size() == 1) return sign_single_radical(rational_part, groups[0]);
  return sign_by_bracketing(rational_part, groups);
}

// Sign of (sum of lhs) - (sum of rhs). Infinite values dominate.
inline int compare_sums(std::initializer_list<const MetricValue*> lhs,
                        std::initializer_list<const MetricValue*> rhs) {
  bool lhs_inf = false;
  bool rhs_inf = false;
  for (auto* v : lhs) lhs_inf = lhs_inf || v->is_infinite();
  for (auto* v : rhs) rhs_inf = rhs_inf || v->is_infinite();
  if (lhs_inf || rhs_inf) {
    if (lhs_inf && rhs_inf) return 0;
    return lhs_inf ? 1 : -1;
  }
  std::vector<SignedTerm> terms;
  bool any_approx = false;
  for (auto* v : lhs) {
    terms.push_back({1, v});
    any_approx = any_approx || v->is_approximate();
  }
  for (auto* v : rhs) {
    terms.push_back({-1, v});
    any_approx = any_approx || v->is_approximate();
  }
  return any_approx ? sign_of_approx(terms) : sign_of_exact(terms);
}

}  // namespace detail

// Three-way comparison; exact unless a floating value is involved.
inline int compare(const MetricValue& a, const MetricValue& b) {
  return detail::compare_sums({&a}, {&b});
}

inline bool operator==(const MetricValue& a, const MetricValue& b) {
  return compare(a, b) == 0;
}
inline bool operator<(const MetricValue& a, const MetricValue& b) {
  return compare(a, b) < 0;
}
inline bool operator<=(const MetricValue& a, const MetricValue& b) {
  return compare(a, b) <= 0;
}
inline bool operator>(const MetricValue& a, const MetricValue& b) {
  return compare(a, b) > 0;
}
inline bool operator>=(const MetricValue& a, const MetricValue& b) {
  return compare(a, b) >= 0;
}

// a <= b + c
inline bool leq_sum(const MetricValue& a, const MetricValue& b,
                    const MetricValue& c) {
  return detail::compare_sums({&a}, {&b, &c}) <= 0;
}

// min(a, omega) <= b + eps
inline bool capped_leq(const MetricValue& a, const Rational& omega,
                       const MetricValue& b, const Rational& eps) {
  const MetricValue e = MetricValue::exact(eps);
  const MetricValue w = MetricValue::exact(omega);
  return detail::compare_sums({&a}, {&b, &e}) <= 0 ||
         detail::compare_sums({&w}, {&b, &e}) <= 0;
}

inline const MetricValue& max_value(const MetricValue& a,
                                    const MetricValue& b) {
  return compare(a, b) < 0 ? b : a;
}

// |a - b| as a double; used for reporting differences only.
inline double abs_difference(const MetricValue& a, const MetricValue& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() && b.is_infinite()
               ? 0.0
               : std::numeric_limits<double>::infinity();
  }
  if (compare(a, b) == 0) return 0.0;
  Rational ra, rb;
  if (a.as_rational(ra) && b.as_rational(rb)) {
    return to_double(Rational(abs(ra - rb)));
  }
  return std::abs(a.approx() - b.approx());
}

}  // namespace probmetric

#endif  // PROBMETRIC_METRIC_VALUE_HPP_
