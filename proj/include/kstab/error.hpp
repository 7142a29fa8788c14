// Copyright 2026 The kstab Authors
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

#ifndef KSTAB_ERROR_HPP_
#define KSTAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace kstab {

// Bad input or violated precondition (malformed rational, wrong dimension,
// non-ample class, unsupported degree). The CLI maps it to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A postcondition that the mathematics guarantees did not hold. Always a bug;
// the CLI maps it to exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace kstab

#endif  // KSTAB_ERROR_HPP_
