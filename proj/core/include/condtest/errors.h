// Copyright 2026 The condtest Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONDTEST_ERRORS_H_
#define CONDTEST_ERRORS_H_

#include <stdexcept>
#include <string>

namespace condtest {

// Invalid arguments or preconditions supplied by the caller.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Exact restriction to a set of zero mass was requested.
class ZeroMassRestriction : public std::domain_error {
 public:
  explicit ZeroMassRestriction(const std::string& what)
      : std::domain_error(what) {}
};

}  // namespace condtest

#endif  // CONDTEST_ERRORS_H_
