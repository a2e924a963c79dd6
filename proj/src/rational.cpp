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

#include "coopshare/rational.hpp"

#include <cctype>
#include <ostream>

#include "coopshare/errors.hpp"

namespace coopshare {

Rat::Rat(BigInt num, BigInt den) {
  if (den.is_zero()) {
    throw DomainError("rational with zero denominator");
  }
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) {
    throw DomainError("division by zero");
  }
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(std::string_view text) {
  const auto bad = [&] {
    return ParseError("malformed rational literal: \"" + std::string(text) +
                      "\"");
  };
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    ++pos;
  }
  const std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (pos == num_begin) {
    throw bad();
  }
  const std::string num_text(text.substr(0, pos));
  if (pos == text.size()) {
    return Rat(BigInt(num_text), BigInt(1));
  }
  if (text[pos] != '/') {
    throw bad();
  }
  ++pos;
  const std::size_t den_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (pos == den_begin || pos != text.size()) {
    throw bad();
  }
  const BigInt den{std::string(text.substr(den_begin))};
  if (den.is_zero()) {
    throw bad();
  }
  return Rat(BigInt(num_text), den);
}

std::ostream& operator<<(std::ostream& os, const Rat& a) {
  return os << a.v_;
}

}  // namespace coopshare
