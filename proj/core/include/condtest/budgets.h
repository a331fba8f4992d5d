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

#ifndef CONDTEST_BUDGETS_H_
#define CONDTEST_BUDGETS_H_

#include <cstddef>
#include <cstdint>

#include "condtest/profile.h"

namespace condtest {

// Sample-count formulas. Logarithms are natural unless noted; every count is
// the ceiling of the real-valued formula.

std::uint64_t CeilCount(double x);

// Pulling: m = (3/eta) ln(3/(eta delta)) and (3/eta) ln(5/(gamma delta)).
std::uint64_t PullEtaFineSamples(double eta, double delta);
std::uint64_t PullEtaGammaFineSamples(double eta, double gamma, double delta);

// Assessment: s = 20 ln(1/delta)/eps rounds; reject when |B| > 4 eps s.
std::uint64_t AssessRounds(double epsilon, double delta);
double AssessRejectThreshold(double epsilon, std::uint64_t rounds);

// Learners.
std::uint64_t LearnL1Samples(std::size_t n, double epsilon, double delta);
std::uint64_t LearnLinfSamples(std::size_t n, double epsilon, double delta);
std::uint64_t LearnFlatSamples(std::size_t length, double epsilon, double delta);
std::uint64_t BruteForceSamples(std::size_t size, double gamma, double epsilon,
                                double delta);

// Uniformity testers.
std::uint64_t CollisionSamples(std::size_t size, double epsilon, double c);
// Smallest odd r with exp(-2 r (1/2 - p)^2) <= delta.
std::uint64_t MajorityRounds(double delta, double base_error);
std::uint64_t PairRounds(double epsilon, double delta, double c);
std::uint64_t PairQueries(std::uint64_t rounds, double epsilon, double delta,
                          double c);

// Non-adaptive tester.
struct NonAdaptivePlan {
  std::uint64_t presamples = 0;       // t
  std::uint64_t collision_draws = 0;  // log^c n per qualifying set
  double window = 0;                  // log^w n
  std::uint64_t set_samples = 0;      // m_k
  std::uint32_t max_level = 0;        // k ranges over 0..floor(log2 n)
  double small_threshold = 0;         // log^s n
};
NonAdaptivePlan NonAdaptivePlanFor(const Profile& profile, std::size_t n,
                                   double gamma, double epsilon);

// Learning pipeline parameters.
struct LearnPlan {
  double eta = 0;
  double gamma = 0;
  double confidence = 0;
  std::uint64_t pull_samples = 0;
  std::uint64_t length_bound = 0;  // r
  double assess_epsilon = 0;
  double flat_epsilon = 0;
};
LearnPlan LearnPlanFor(const Profile& profile, std::size_t L, double epsilon,
                       std::size_t n);

// Atlases.
std::uint64_t EstimateSamples(std::size_t classes, double epsilon, double delta);
std::uint64_t TrimmingGridSize(std::size_t n, double epsilon);
// 32 s eps^-4 ln^5 n ln(s ln n / delta); returned as a ceiled double since it
// overflows 64 bits for realistic s.
double TrimmingBudget(std::uint64_t samples, double epsilon, double delta,
                      std::size_t n);

struct AtlasTestPlan {
  double eta = 0;
  std::uint64_t pull_samples = 0;
  std::uint64_t length_bound = 0;  // 20 k ln n ln(1/eps) / eps
  double learn_epsilon = 0;
  double confidence = 0;
};
AtlasTestPlan AtlasTestPlanFor(const Profile& profile, std::size_t k,
                               double epsilon, std::size_t n);

}  // namespace condtest

#endif  // CONDTEST_BUDGETS_H_
