// Copyright 2026 The hensym Authors
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

#ifndef HENSYM_ERRORS_HPP_
#define HENSYM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hensym {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text.  Carries a 1-based line number when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent dimensions, overlapping classes, indices out of range.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A configured node/iteration/size budget was exhausted.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace hensym

#endif  // HENSYM_ERRORS_HPP_
