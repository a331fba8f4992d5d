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

#ifndef CONDTEST_LEARNERS_H_
#define CONDTEST_LEARNERS_H_

#include <cstdint>
#include <span>

#include "condtest/distribution.h"
#include "condtest/interval.h"
#include "condtest/oracle.h"

namespace condtest {

// Normalized counts; all-zero counts give the uniform distribution.
Distribution EmpiricalDistribution(std::span<const std::uint64_t> counts);

// Empirical distribution from (n + ln(2/delta)) / (2 eps^2) unconditional
// samples; l1 error at most eps with probability 1 - delta.
Distribution LearnL1(ConditionalOracle& oracle, double epsilon, double delta);

// Empirical distribution of caller-supplied samples over a set of size
// counts.size(). Throws UsageError when fewer than ln(2|S|/delta)/(2 eps^2)
// samples are supplied.
Distribution LearnLinf(std::span<const std::uint64_t> counts, double epsilon,
                       double delta);

// Brute-force learner for mu restricted to I from
// 4(|I| + ln(2/delta)) / (eps^2 gamma) unconditional samples. Returns the
// uniform distribution on I when no sample lands in I.
Distribution LearnRestrictionL1(ConditionalOracle& oracle, const Interval& I,
                                double gamma, double epsilon, double delta);
// Same estimator applied to existing per-element counts over the domain.
Distribution RestrictionFromCounts(std::span<const std::uint64_t> counts,
                                   const Interval& I);

// Learns the flattening of mu over P from 2(|P| + ln(2/delta)) / eps^2
// unconditional samples, via the coarsening.
Distribution LearnFlat(ConditionalOracle& oracle, const IntervalPartition& P,
                       double epsilon, double delta);

}  // namespace condtest

#endif  // CONDTEST_LEARNERS_H_
