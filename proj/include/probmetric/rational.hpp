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

#ifndef PROBMETRIC_RATIONAL_HPP_
#define PROBMETRIC_RATIONAL_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace probmetric {

using Rational = mpq_class;

// Thrown for malformed input: bad fractions, invalid spaces, laws that do
// not sum to one and similar contract violations.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an exhaustive routine is asked to run beyond its size bound.
class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p/q" or "p" with optional leading sign. Result is reduced.
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + start, s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos
                        ? std::string("1")
                        : std::string(text.substr(slash + 1));
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) {
    throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Canonical text form: always "p/q" with q >= 1 and gcd(p, q) = 1.
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return result;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Exact k-th root of a nonnegative rational, when it is itself rational.
inline bool exact_root(const Rational& r, unsigned k, Rational& out) {
  if (sgn(r) < 0) return false;
  mpz_class num, den;
  if (mpz_root(num.get_mpz_t(), r.get_num_mpz_t(), k) == 0) return false;
  if (mpz_root(den.get_mpz_t(), r.get_den_mpz_t(), k) == 0) return false;
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

// Rational bracket lo <= r^(1/k) < lo + 2^-bits.
inline Rational root_lower_bound(const Rational& r, unsigned k,
                                 unsigned bits) {
  mpz_class scaled_num = r.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(),
               static_cast<mp_bitcnt_t>(bits) * k);
  mpz_class floor_value = scaled_num / r.get_den();
  mpz_class root;
  mpz_root(root.get_mpz_t(), floor_value.get_mpz_t(), k);
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Rational lo(root, scale);
  lo.canonicalize();
  return lo;
}

inline Rational power_of_two_inverse(unsigned bits) {
  mpz_class scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Rational eps(mpz_class(1), scale);
  eps.canonicalize();
  return eps;
}

inline const Rational& min_of(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& max_of(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace probmetric

#endif  // PROBMETRIC_RATIONAL_HPP_
