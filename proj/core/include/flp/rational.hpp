// Copyright 2026 the flpgame authors
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

#ifndef FLP_RATIONAL_HPP
#define FLP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flp {

/// Exact rational scalar used by default for every game-theoretic verdict.
using Rational = boost::multiprecision::cpp_rational;

template <class T>
using Vec = std::vector<T>;

template <class T>
using Mat = std::vector<std::vector<T>>;

/// Comparison policy per scalar type: rationals compare exactly, doubles
/// within a fixed absolute tolerance.
template <class T>
struct ScalarTraits {
  static T epsilon() { return T(0); }
  static constexpr bool exact = true;
};

template <>
struct ScalarTraits<double> {
  static double epsilon() { return 1e-9; }
  static constexpr bool exact = false;
};

namespace detail {

template <class T>
bool is_positive(const T& x) {
  return x > ScalarTraits<T>::epsilon();
}

template <class T>
bool is_negative(const T& x) {
  return x < -ScalarTraits<T>::epsilon();
}

template <class T>
bool is_zero(const T& x) {
  return !is_positive(x) && !is_negative(x);
}

}  // namespace detail

struct FlpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "num/den", "num" or a decimal literal into the scalar type.
inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const boost::multiprecision::cpp_int num(s.substr(0, slash));
    const boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw FlpError("rational with zero denominator: " + s);
    return Rational(num, den);
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    boost::multiprecision::cpp_int den(1);
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(boost::multiprecision::cpp_int(digits), den);
  }
  return Rational(boost::multiprecision::cpp_int(s));
}

inline std::string format_scalar(const Rational& x) {
  const auto num = boost::multiprecision::numerator(x);
  const auto den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string format_scalar(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

template <class T>
std::vector<std::string> format_vector(const Vec<T>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(format_scalar(x));
  return out;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class T>
Vec<T> mat_vec(const Mat<T>& a, const Vec<T>& x) {
  Vec<T> out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(dot(row, x));
  return out;
}

}  // namespace flp

#endif  // FLP_RATIONAL_HPP
