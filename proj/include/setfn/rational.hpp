// Copyright 2026 The Authors.
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

#ifndef SETFN_RATIONAL_HPP
#define SETFN_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <string_view>

namespace Eigen {

// Exact rational scalar for Eigen dense types. All arithmetic in this
// library stays in mpq_class; nothing is ever rounded.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace setfn {

using Rational = mpq_class;
using RVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RRowVec = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using RMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Builds the canonical rational num/den. Throws ParseError on den == 0.
Rational make_rational(long long num, long long den);

/// Parses "p", "-p" or "p/q" (arbitrary precision). Throws ParseError on
/// anything else, including q == 0 and embedded whitespace.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" when integral, else "p/q" with q > 0.
std::string to_string(const Rational& q);

/// True iff q has denominator 1.
bool is_integral(const Rational& q);

}  // namespace setfn

#endif  // SETFN_RATIONAL_HPP
