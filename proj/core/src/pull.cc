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

#include "condtest/pull.h"

#include <algorithm>
#include <vector>

#include "condtest/budgets.h"
#include "condtest/errors.h"

namespace condtest {
namespace {

IntervalPartition FromMarks(std::size_t n, const std::vector<bool>& marked) {
  std::vector<Interval> out;
  std::size_t gap_start = 0;
  bool in_gap = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (marked[i]) {
      if (in_gap) out.push_back({gap_start, i - 1});
      in_gap = false;
      out.push_back({i, i});
    } else if (!in_gap) {
      in_gap = true;
      gap_start = i;
    }
  }
  if (in_gap) out.push_back({gap_start, n - 1});
  return IntervalPartition(n, std::move(out));
}

void Validate(const FinenessParams& params) {
  if (!(params.eta > 0 && params.eta <= 1)) throw UsageError("eta must lie in (0,1]");
  if (!(params.delta > 0 && params.delta < 1)) throw UsageError("delta must lie in (0,1)");
  if (params.gamma && !(*params.gamma > 0 && *params.gamma <= 1)) {
    throw UsageError("gamma must lie in (0,1]");
  }
}

}  // namespace

IntervalPartition PullPartitionFromSamples(std::size_t n,
                                           std::span<const std::size_t> sampled) {
  if (n == 0) throw UsageError("domain must be non-empty");
  if (sampled.empty()) throw UsageError("at least one sampled index is required");
  std::vector<bool> marked(n, false);
  for (std::size_t i : sampled) {
    if (i >= n) throw UsageError("sampled index outside the domain");
    marked[i] = true;
  }
  return FromMarks(n, marked);
}

IntervalPartition PullPartitionFromCounts(std::span<const std::uint64_t> counts) {
  std::vector<bool> marked(counts.size());
  bool any = false;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    marked[i] = counts[i] > 0;
    any = any || marked[i];
  }
  if (!any) throw UsageError("at least one sampled index is required");
  return FromMarks(counts.size(), marked);
}

std::uint64_t PullSampleCount(const FinenessParams& params) {
  Validate(params);
  return params.gamma ? PullEtaGammaFineSamples(params.eta, *params.gamma, params.delta)
                      : PullEtaFineSamples(params.eta, params.delta);
}

IntervalPartition PullPartition(ConditionalOracle& oracle,
                                const FinenessParams& params) {
  const std::uint64_t m = PullSampleCount(params);
  return PullPartitionFromCounts(oracle.UnconditionalCounts(m));
}

IntervalPartition PullEtaFine(ConditionalOracle& oracle, double eta, double delta) {
  return PullPartition(oracle, {eta, std::nullopt, delta});
}

IntervalPartition PullEtaGammaFine(ConditionalOracle& oracle, double eta,
                                   double gamma, double delta) {
  return PullPartition(oracle, {eta, gamma, delta});
}

}  // namespace condtest
