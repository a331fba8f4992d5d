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

#ifndef CONDTEST_ASSESS_H_
#define CONDTEST_ASSESS_H_

#include <cstdint>
#include <vector>

#include "condtest/interval.h"
#include "condtest/oracle.h"
#include "condtest/uniformity.h"

namespace condtest {

struct AssessParams {
  double c = 1;           // intervals longer than n/c are not tested seriously
  std::uint64_t r = 1;    // length bound, |P| <= r
  double epsilon = 0.1;
  double delta = 0.1;
};

struct AssessRound {
  std::size_t sample = 0;
  std::size_t interval = 0;  // index into the partition
  WTTVerdict verdict;
};

struct AssessOutcome {
  bool accept = true;
  std::uint64_t rounds = 0;    // s
  std::uint64_t rejected = 0;  // |B|, counted with multiplicity
  double threshold = 0;        // 4 eps s
  TesterContext tester_context;
  std::uint64_t queries = 0;
  std::vector<AssessRound> transcript;
};

// Draws s = ceil(20 ln(1/delta)/eps) samples and runs the tester on each
// sample's interval with (n/c, eps/r, eps, delta/2s); rejects when more than
// 4 eps s rounds reject.
AssessOutcome AssessPartition(ConditionalOracle& oracle, const IntervalPartition& P,
                              const AssessParams& params, IntervalTester& tester);

}  // namespace condtest

#endif  // CONDTEST_ASSESS_H_
