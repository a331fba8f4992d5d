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

#ifndef CONDTEST_PULL_H_
#define CONDTEST_PULL_H_

#include <cstdint>
#include <optional>
#include <span>

#include "condtest/interval.h"
#include "condtest/oracle.h"

namespace condtest {

struct FinenessParams {
  double eta = 0;
  std::optional<double> gamma;  // absent: plain eta-fine pull
  double delta = 0;
};

// Every sampled index becomes a singleton and every maximal gap between them
// becomes one interval. Input order and duplicates do not matter; `sampled`
// must be non-empty.
IntervalPartition PullPartitionFromSamples(std::size_t n,
                                           std::span<const std::size_t> sampled);
// Same, from per-element sample counts (an index is "sampled" if its count is
// positive).
IntervalPartition PullPartitionFromCounts(std::span<const std::uint64_t> counts);

// Number of unconditional samples the pull takes for these parameters.
std::uint64_t PullSampleCount(const FinenessParams& params);

IntervalPartition PullPartition(ConditionalOracle& oracle,
                                const FinenessParams& params);
IntervalPartition PullEtaFine(ConditionalOracle& oracle, double eta, double delta);
IntervalPartition PullEtaGammaFine(ConditionalOracle& oracle, double eta,
                                   double gamma, double delta);

}  // namespace condtest

#endif  // CONDTEST_PULL_H_
