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

#include "condtest/learners.h"

#include <numeric>
#include <vector>

#include "condtest/budgets.h"
#include "condtest/errors.h"
#include "condtest/ops.h"

namespace condtest {

Distribution EmpiricalDistribution(std::span<const std::uint64_t> counts) {
  if (counts.empty()) throw UsageError("empirical distribution needs a non-empty support");
  const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (total == 0) return Distribution::Uniform(counts.size());
  std::vector<double> p(counts.size());
  const double inv = 1.0 / static_cast<double>(total);
  for (std::size_t i = 0; i < counts.size(); ++i) p[i] = static_cast<double>(counts[i]) * inv;
  return Distribution(std::move(p));
}

Distribution LearnL1(ConditionalOracle& oracle, double epsilon, double delta) {
  const std::uint64_t t = LearnL1Samples(oracle.domain_size(), epsilon, delta);
  return EmpiricalDistribution(oracle.UnconditionalCounts(t));
}

Distribution LearnLinf(std::span<const std::uint64_t> counts, double epsilon,
                       double delta) {
  const std::uint64_t need = LearnLinfSamples(counts.size(), epsilon, delta);
  const std::uint64_t have = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (have < need) {
    throw UsageError("learn_linf needs " + std::to_string(need) + " samples, got " +
                     std::to_string(have));
  }
  return EmpiricalDistribution(counts);
}

Distribution RestrictionFromCounts(std::span<const std::uint64_t> counts,
                                   const Interval& I) {
  if (I.hi >= counts.size()) throw UsageError("interval outside the domain");
  return EmpiricalDistribution(counts.subspan(I.lo, I.size()));
}

Distribution LearnRestrictionL1(ConditionalOracle& oracle, const Interval& I,
                                double gamma, double epsilon, double delta) {
  const std::uint64_t t = BruteForceSamples(I.size(), gamma, epsilon, delta);
  const auto counts = oracle.UnconditionalCounts(t);
  return RestrictionFromCounts(counts, I);
}

Distribution LearnFlat(ConditionalOracle& oracle, const IntervalPartition& P,
                       double epsilon, double delta) {
  const std::uint64_t t = LearnFlatSamples(P.length(), epsilon, delta);
  const auto counts = oracle.PartitionCounts(P, t);
  return Uncoarsen(EmpiricalDistribution(counts), P);
}

}  // namespace condtest
