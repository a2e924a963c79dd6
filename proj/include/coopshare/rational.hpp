// Copyright 2026 The coopshare Authors
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

#ifndef COOPSHARE_RATIONAL_HPP
#define COOPSHARE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace coopshare {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Every quantity in the library is a Rat; nothing is ever
/// rounded.
class Rat {
 public:
  Rat() = default;
  Rat(long long value) : v_(value) {}  // NOLINT: implicit by design
  Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}
  Rat(BigInt num, BigInt den);

  /// Parses the text form: optional sign, integer, optional "/" followed by
  /// a positive integer. No whitespace, no decimals. Throws ParseError.
  static Rat parse(std::string_view text);

  /// Renders as "p/q", or plain "p" when the denominator is 1.
  std::string str() const { return v_.str(); }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(v_);
  }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_negative() const { return v_.sign() < 0; }
  bool is_positive() const { return v_.sign() > 0; }

  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) {
    Rat r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend Rat abs(const Rat& a) {
    Rat r;
    r.v_ = boost::multiprecision::abs(a.v_);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& a);

 private:
  boost::multiprecision::cpp_rational v_;
};

}  // namespace coopshare

#endif  // COOPSHARE_RATIONAL_HPP
