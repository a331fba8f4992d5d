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

#ifndef CONDTEST_ATLAS_LEARN_H_
#define CONDTEST_ATLAS_LEARN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "condtest/atlas.h"
#include "condtest/budgets.h"
#include "condtest/interval.h"
#include "condtest/oracle.h"
#include "condtest/profile.h"

namespace condtest {

// From class hit counts s_k out of `samples` draws, with known per-element
// class values p_k: alpha_k = s_k / samples,
// alpha'_k = min(alpha_k - eps/r, alpha_k / (1 + eps)), m_k = ceil(alpha'_k / p_k)
// (zero when alpha'_k <= 0). r is `classes`, or values.size() when zero;
// unlisted classes are taken to have no hits.
std::vector<std::uint64_t> EstimateLevelCounts(std::span<const std::uint64_t> class_hits,
                                               std::uint64_t samples,
                                               std::span<const double> values,
                                               double epsilon, std::size_t classes = 0);

struct AtlasLearnReport {
  Atlas atlas;
  double sampler_epsilon = 0;
  double estimate_epsilon = 0;
  std::size_t grid_levels = 0;      // K - 1
  std::uint64_t classes = 0;        // |P| (K - 1)
  std::uint64_t samples = 0;        // trimming-sampler draws
  std::uint64_t trimmed = 0;        // draws that came back as 0
  double scale = 1;                 // global renormalization factor
  std::uint64_t queries = 0;
};

// Atlas over P for some distribution eps-close to mu, with probability
// 1 - delta.
AtlasLearnReport LearnAtlas(ConditionalOracle& oracle, const IntervalPartition& P,
                            double epsilon, double delta, const Profile& profile);

struct AtlasTestVerdict {
  bool accept = false;
  std::string decided_by;  // "diameter", "length", "conformance"
  std::size_t k = 0;
  AtlasTestPlan plan;
  std::size_t pulls = 0;
  std::optional<IntervalPartition> partition;
  std::optional<AtlasLearnReport> learned;
  std::optional<double> conformance;
  std::uint64_t queries = 0;
};

// Pull an eps/(5k)-fine partition (one retry if it exceeds the length
// bound), learn its atlas at eps/5 and accept iff some member of the property
// is eps/5-close to conforming.
AtlasTestVerdict TestAtlasProperty(ConditionalOracle& oracle, const AtlasPropertySpec& prop,
                                   double epsilon, const Profile& profile);

// (eta, eps)-tolerant variant: the same test against the eta-relaxed
// property. Throws UsageError when eta + eps >= 1.
AtlasTestVerdict TolerantTestAtlasProperty(ConditionalOracle& oracle,
                                           const AtlasPropertySpec& prop, double eta,
                                           double epsilon, const Profile& profile);

}  // namespace condtest

#endif  // CONDTEST_ATLAS_LEARN_H_
