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

#ifndef SETFN_ERRORS_HPP
#define SETFN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace setfn {

// Malformed input: bad file contents, bad literals, wrong arity.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ground set too large for an enumeration-backed operation.
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed (e.g. a reconstruction disagrees
// with a directly computed value).
class SelfCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace setfn

#endif  // SETFN_ERRORS_HPP
