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

#include "condtest/atlas_learn.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "condtest/errors.h"
#include "condtest/pull.h"
#include "condtest/trimming.h"

namespace condtest {

std::vector<std::uint64_t> EstimateLevelCounts(std::span<const std::uint64_t> class_hits,
                                               std::uint64_t samples,
                                               std::span<const double> values,
                                               double epsilon, std::size_t classes) {
  if (class_hits.size() != values.size()) throw UsageError("one value per class is required");
  if (samples == 0) throw UsageError("at least one sample is required");
  if (classes == 0) classes = values.size();
  if (classes < values.size()) throw UsageError("class count below the number of listed classes");
  const double r = static_cast<double>(classes);
  std::vector<std::uint64_t> m(values.size(), 0);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!(values[k] > 0)) throw UsageError("class values must be positive");
    const double alpha = static_cast<double>(class_hits[k]) / static_cast<double>(samples);
    const double adjusted = std::min(alpha - epsilon / r, alpha / (1.0 + epsilon));
    if (adjusted > 0) m[k] = static_cast<std::uint64_t>(std::ceil(adjusted / values[k]));
  }
  return m;
}

AtlasLearnReport LearnAtlas(ConditionalOracle& oracle, const IntervalPartition& P,
                            double epsilon, double delta, const Profile& profile) {
  const std::size_t n = oracle.domain_size();
  if (P.domain_size() != n) throw UsageError("partition does not cover the oracle's domain");
  if (!(epsilon > 0 && epsilon < 1)) throw UsageError("epsilon must lie in (0,1)");
  if (!(delta > 0 && delta < 1)) throw UsageError("delta must lie in (0,1)");
  const std::uint64_t before = oracle.ledger().total();

  AtlasLearnReport rep;
  rep.sampler_epsilon = epsilon / profile.sampler_divisor;
  rep.estimate_epsilon = epsilon / profile.estimate_divisor;
  const std::size_t levels = static_cast<std::size_t>(
      TrimmingGridSize(std::max<std::size_t>(n, 2), rep.sampler_epsilon) - 1);
  rep.grid_levels = levels;
  rep.classes = static_cast<std::uint64_t>(P.length()) * levels;
  rep.samples = EstimateSamples(rep.classes, rep.estimate_epsilon, delta / 2.0);

  // The failure probability is split evenly between sampler and estimates.
  TrimmingSampler sampler(oracle, rep.sampler_epsilon, delta / 2.0, rep.samples);
  const TrimmingSampler::Counts drawn = sampler.DrawCounts(rep.samples);
  rep.trimmed = drawn.trimmed;

  // Hits per (interval, level); classes never hit get m = 0.
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> hits;
  for (const auto& [i, c] : drawn.emitted) hits[{P.Locate(i), sampler.Level(i)}] += c;

  std::vector<std::uint64_t> class_hits;
  std::vector<double> values;
  for (const auto& [key, c] : hits) {
    class_hits.push_back(c);
    values.push_back(sampler.GridValue(key.second));
  }
  // r counts every class, observed or not.
  const std::vector<std::uint64_t> m = EstimateLevelCounts(
      class_hits, rep.samples, values, rep.estimate_epsilon, rep.classes);

  rep.atlas.partition = P;
  rep.atlas.inventories.assign(P.length(), Inventory{});
  std::vector<std::uint64_t> used(P.length(), 0);
  // Highest levels first, so any clamp to |I_j| drops the lightest values.
  std::size_t t = class_hits.size();
  for (auto it = hits.rbegin(); it != hits.rend(); ++it) {
    --t;
    const std::size_t j = it->first.first;
    const std::uint64_t room = P[j].size() - used[j];
    const std::uint64_t take = std::min(m[t], room);
    rep.atlas.inventories[j].Add(values[t], take);
    used[j] += take;
  }
  double total = 0;
  for (const Inventory& inv : rep.atlas.inventories) total += inv.total();
  if (total > 0) {
    rep.scale = 1.0 / total;
    for (Inventory& inv : rep.atlas.inventories) {
      Inventory scaled;
      for (const auto& [v, c] : inv.counts) scaled.Add(v * rep.scale, c);
      inv = std::move(scaled);
    }
  } else {
    // Nothing survived: fall back to the uniform atlas.
    for (std::size_t j = 0; j < P.length(); ++j) {
      rep.atlas.inventories[j] = Inventory{};
      rep.atlas.inventories[j].Add(1.0 / static_cast<double>(n), P[j].size());
      used[j] = P[j].size();
    }
  }
  for (std::size_t j = 0; j < P.length(); ++j) {
    rep.atlas.inventories[j].Add(0.0, P[j].size() - used[j]);
  }
  rep.queries = oracle.ledger().total() - before;
  return rep;
}

AtlasTestVerdict TestAtlasProperty(ConditionalOracle& oracle, const AtlasPropertySpec& prop,
                                   double epsilon, const Profile& profile) {
  if (!(epsilon > 0)) throw UsageError("epsilon must be positive");
  const std::uint64_t before = oracle.ledger().total();
  AtlasTestVerdict v;
  if (epsilon >= 2) {
    v.accept = true;
    v.decided_by = "diameter";
    return v;
  }
  const std::size_t n = oracle.domain_size();
  v.k = std::max<std::size_t>(1, prop.k(epsilon / profile.atlas_divisor, n));
  v.plan = AtlasTestPlanFor(profile, v.k, epsilon, n);
  // For eps >= 1 the length bound is vacuous.
  const bool bounded = epsilon < 1;
  for (v.pulls = 1; v.pulls <= 2; ++v.pulls) {
    v.partition = PullPartitionFromCounts(oracle.UnconditionalCounts(v.plan.pull_samples));
    if (!bounded || v.partition->length() <= v.plan.length_bound) break;
  }
  if (v.pulls > 2) {
    v.pulls = 2;
    v.accept = false;
    v.decided_by = "length";
    v.queries = oracle.ledger().total() - before;
    return v;
  }
  v.learned = LearnAtlas(oracle, *v.partition, v.plan.learn_epsilon, v.plan.confidence, profile);
  v.conformance = prop.conformance(v.learned->atlas);
  v.accept = *v.conformance <= v.plan.learn_epsilon;
  v.decided_by = "conformance";
  v.queries = oracle.ledger().total() - before;
  return v;
}

AtlasTestVerdict TolerantTestAtlasProperty(ConditionalOracle& oracle,
                                           const AtlasPropertySpec& prop, double eta,
                                           double epsilon, const Profile& profile) {
  if (!(eta >= 0) || !(epsilon > 0)) throw UsageError("eta must be >= 0 and epsilon > 0");
  if (eta + epsilon >= 1) throw UsageError("tolerant testing needs eta + epsilon < 1");
  if (eta == 0) return TestAtlasProperty(oracle, prop, epsilon, profile);
  return TestAtlasProperty(oracle, RelaxedProperty(prop, eta), epsilon, profile);
}

}  // namespace condtest
