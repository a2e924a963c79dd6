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

#ifndef COOPSHARE_ERRORS_HPP
#define COOPSHARE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coopshare {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coalition mask outside the owning game's player range, or an empty
/// coalition where a non-empty one is required.
class InvalidCoalition : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds the supported player cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Vector lengths do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (negative budget, zero
/// denominator, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed file or rational literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The game's core constraint system is infeasible.
class EmptyCore : public Error {
 public:
  using Error::Error;
};

/// No scaling vector in [0,1]^n satisfies the payment program.
class InfeasibleScaling : public Error {
 public:
  using Error::Error;
};

/// The union of maximal-average coalitions is not itself a maximizer;
/// happens only on non-convex inputs.
class NonConvexTieStructure : public Error {
 public:
  using Error::Error;
};

/// A weight entry is zero or negative.
class ZeroWeight : public Error {
 public:
  using Error::Error;
};

/// A lexicographic target direction is unbounded above.
class UnboundedLexTarget : public Error {
 public:
  using Error::Error;
};

/// lex_max_min was handed an infeasible base program.
class InfeasibleProgram : public Error {
 public:
  using Error::Error;
};

}  // namespace coopshare

#endif  // COOPSHARE_ERRORS_HPP
