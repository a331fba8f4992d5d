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

#ifndef CONDTEST_DECOMPOSABLE_H_
#define CONDTEST_DECOMPOSABLE_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "condtest/assess.h"
#include "condtest/budgets.h"
#include "condtest/distribution.h"
#include "condtest/interval.h"
#include "condtest/oracle.h"
#include "condtest/profile.h"
#include "condtest/uniformity.h"

namespace condtest {

struct LearnOutcome {
  bool rejected = false;
  std::string reject_reason;  // "length" or "assess"
  std::optional<Distribution> learned;
  IntervalPartition partition;
  std::optional<AssessOutcome> assessment;
  LearnPlan plan;
  std::uint64_t queries = 0;
};

// Pull an (eps/DL, eps/D)-fine partition, assess it at eps/A with c = L, and
// learn its flattening at eps/F. Every step runs at confidence 1/9.
LearnOutcome LearnDecomposable(ConditionalOracle& oracle, std::size_t L, double epsilon,
                               const Profile& profile, IntervalTester& tester);

// A property given by its decomposability function and a distance oracle
// for explicit distributions.
struct PropertySpec {
  std::string name;
  std::function<std::size_t(double gamma, std::size_t n)> L;
  std::function<double(const Distribution&)> distance;
};

PropertySpec UniformProperty();
PropertySpec KHistogramProperty(std::size_t k);
PropertySpec MonotoneProperty();
// "uniform", "khist:<k>" or "monotone".
PropertySpec PropertyByName(const std::string& name);

struct PropertyVerdict {
  bool accept = false;
  std::size_t L = 0;
  std::optional<double> learned_distance;  // distance of the learned mu'
  LearnOutcome learn;
};

// Learn at eps/2 with L = prop.L(eps/G, n) and accept iff learning did not
// reject and the learned distribution is eps/2-close to the property.
PropertyVerdict TestDecomposableProperty(ConditionalOracle& oracle,
                                         const PropertySpec& prop, double epsilon,
                                         const Profile& profile, IntervalTester& tester);

}  // namespace condtest

#endif  // CONDTEST_DECOMPOSABLE_H_
