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

#include "setfn/rational.hpp"

#include <cctype>

#include "setfn/errors.hpp"

namespace setfn {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_decimal_integer(s)) {
    throw ParseError("not a rational literal: \"" + std::string(whole) + "\"");
  }
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational make_rational(long long num, long long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational q(mpz_class(static_cast<long>(num)),
             mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw ParseError("rational with zero denominator: \"" + std::string(text) +
                     "\"");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace setfn
