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

#include "condtest/profile.h"

#include "condtest/errors.h"

namespace condtest {

Profile Profile::Paper() {
  Profile p;
  p.name = "paper";
  return p;
}

Profile Profile::Desk() {
  Profile p;
  p.name = "desk";
  p.pull_divisor = 4;
  p.length_factor = 0;
  p.property_gamma_divisor = 8;
  p.exponents = {3, 2, 0.5, 4};
  p.window_samples_constant = 6e5;
  return p;
}

Profile Profile::ByName(const std::string& name) {
  if (name == "paper") return Paper();
  if (name == "desk") return Desk();
  throw UsageError("unknown profile '" + name + "' (expected paper or desk)");
}

}  // namespace condtest
