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

#ifndef PROBMETRIC_DESCRIPTOR_HPP_
#define PROBMETRIC_DESCRIPTOR_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "probmetric/rational.hpp"

namespace probmetric {

enum class MetricKind {
  kKyFan,      // parameter lambda > 0
  kLp,         // parameter p > 0; integer p in exact mode
  kLinf,
  kIndicator,
  kProkhorov,  // parameter lambda > 0
  kTotalVariation,
  kSupOf,      // pointwise supremum of the children
  kHat,        // minimal metric of the single child
};

// Tagged description of a probability metric. Built-in metrics carry their
// parameter; kSupOf and kHat wrap other descriptors.
class MetricDescriptor {
 public:
  static MetricDescriptor ky_fan(Rational lambda) {
    return with_param(MetricKind::kKyFan, std::move(lambda));
  }
  static MetricDescriptor lp(Rational p) {
    return with_param(MetricKind::kLp, std::move(p));
  }
  static MetricDescriptor lp(unsigned p) { return lp(Rational(p)); }
  static MetricDescriptor linf() { return MetricDescriptor(MetricKind::kLinf); }
  static MetricDescriptor indicator() {
    return MetricDescriptor(MetricKind::kIndicator);
  }
  static MetricDescriptor prokhorov(Rational lambda) {
    return with_param(MetricKind::kProkhorov, std::move(lambda));
  }
  static MetricDescriptor total_variation() {
    return MetricDescriptor(MetricKind::kTotalVariation);
  }
  static MetricDescriptor sup_of(std::vector<MetricDescriptor> children) {
    if (children.empty()) throw InvalidArgument("sup of an empty list");
    MetricDescriptor d(MetricKind::kSupOf);
    d.children_ = std::move(children);
    return d;
  }
  static MetricDescriptor hat_of(MetricDescriptor inner) {
    MetricDescriptor d(MetricKind::kHat);
    d.children_.push_back(std::move(inner));
    return d;
  }

  MetricKind kind() const { return kind_; }
  const Rational& param() const { return param_; }
  const std::vector<MetricDescriptor>& children() const { return children_; }
  const MetricDescriptor& inner() const { return children_.at(0); }

  bool has_param() const {
    return kind_ == MetricKind::kKyFan || kind_ == MetricKind::kLp ||
           kind_ == MetricKind::kProkhorov;
  }

  // Depends on the two marginal laws only.
  bool is_simple() const {
    switch (kind_) {
      case MetricKind::kProkhorov:
      case MetricKind::kTotalVariation:
      case MetricKind::kHat:
        return true;
      case MetricKind::kSupOf:
        for (const auto& c : children_) {
          if (!c.is_simple()) return false;
        }
        return true;
      default:
        return false;
    }
  }

  // Exact evaluation needs p integral for L^p anywhere in the tree.
  bool is_exact_evaluable() const {
    if (kind_ == MetricKind::kLp && !is_integer(param_)) return false;
    for (const auto& c : children_) {
      if (!c.is_exact_evaluable()) return false;
    }
    return true;
  }

  std::string str() const {
    switch (kind_) {
      case MetricKind::kKyFan:
        return "kyfan:" + param_text();
      case MetricKind::kLp:
        return "lp:" + param_text();
      case MetricKind::kLinf:
        return "linf";
      case MetricKind::kIndicator:
        return "ind";
      case MetricKind::kProkhorov:
        return "prok:" + param_text();
      case MetricKind::kTotalVariation:
        return "tv";
      case MetricKind::kSupOf: {
        std::string s = "sup(";
        for (std::size_t i = 0; i < children_.size(); ++i) {
          if (i) s += ",";
          s += children_[i].str();
        }
        return s + ")";
      }
      case MetricKind::kHat:
        return "hat(" + inner().str() + ")";
    }
    return {};
  }

  bool operator==(const MetricDescriptor&) const = default;

 private:
  explicit MetricDescriptor(MetricKind kind) : kind_(kind) {}

  static MetricDescriptor with_param(MetricKind kind, Rational value) {
    if (sgn(value) <= 0) {
      throw InvalidArgument("metric parameter must be positive, got " +
                            to_string(value));
    }
    MetricDescriptor d(kind);
    d.param_ = std::move(value);
    return d;
  }

  std::string param_text() const {
    return is_integer(param_) ? param_.get_num().get_str() : to_string(param_);
  }

  MetricKind kind_;
  Rational param_{0};
  std::vector<MetricDescriptor> children_;
};

namespace detail {

inline std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw InvalidArgument("unbalanced parentheses");
    if (s[i] == ',' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw InvalidArgument("unbalanced parentheses");
  parts.push_back(s.substr(start));
  return parts;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace detail

// Parses the CLI descriptor syntax: kyfan:1/2, lp:2, linf, ind, prok:1,
// tv, sup(ind,tv), hat(lp:2).
inline MetricDescriptor parse_descriptor(std::string_view text) {
  text = detail::trim(text);
  auto wrapped = [&](std::string_view head) -> std::string_view {
    if (text.size() > head.size() + 1 && text.substr(0, head.size()) == head &&
        text[head.size()] == '(' && text.back() == ')') {
      return text.substr(head.size() + 1, text.size() - head.size() - 2);
    }
    return {};
  };
  if (auto body = wrapped("sup"); !body.empty()) {
    std::vector<MetricDescriptor> children;
    for (auto part : detail::split_top_level(body)) {
      children.push_back(parse_descriptor(part));
    }
    return MetricDescriptor::sup_of(std::move(children));
  }
  if (auto body = wrapped("hat"); !body.empty()) {
    return MetricDescriptor::hat_of(parse_descriptor(body));
  }
  if (text == "linf") return MetricDescriptor::linf();
  if (text == "ind") return MetricDescriptor::indicator();
  if (text == "tv") return MetricDescriptor::total_variation();
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const auto head = text.substr(0, colon);
    const Rational value = parse_rational(text.substr(colon + 1));
    if (head == "kyfan") return MetricDescriptor::ky_fan(value);
    if (head == "lp") return MetricDescriptor::lp(value);
    if (head == "prok") return MetricDescriptor::prokhorov(value);
  }
  throw InvalidArgument("unknown metric descriptor '" + std::string(text) +
                        "'");
}

}  // namespace probmetric

#endif  // PROBMETRIC_DESCRIPTOR_HPP_
