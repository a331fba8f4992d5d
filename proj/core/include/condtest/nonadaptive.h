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

#ifndef CONDTEST_NONADAPTIVE_H_
#define CONDTEST_NONADAPTIVE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "condtest/budgets.h"
#include "condtest/oracle.h"
#include "condtest/profile.h"
#include "condtest/uniformity.h"

namespace condtest {

// Every query the non-adaptive tester will ever need, drawn before any
// interval is known.
struct NonAdaptiveSeed {
  struct Level {
    double p = 1;                        // 2^-k
    std::vector<std::size_t> members;    // U_k, sorted
    std::vector<std::size_t> collision;  // draws from mu|U_k, in order
    std::vector<std::uint64_t> counts;   // m_k draws from mu|U_k, per member
  };

  std::size_t n = 0;
  double gamma = 0;
  double epsilon = 0;
  NonAdaptivePlan plan;
  std::vector<std::uint64_t> presamples;  // t unconditional draws, per element
  std::vector<Level> levels;              // k = 0 .. floor(log2 n)
  std::uint64_t queries = 0;
};

NonAdaptiveSeed DrawNonAdaptiveSeed(ConditionalOracle& oracle, const Profile& profile,
                                    double gamma, double epsilon);

// Single run at error 1/3 against a seed. Makes no queries.
WTTVerdict TestWithSeed(const NonAdaptiveSeed& seed, const WTTInput& in,
                        double linf_divisor, double hits_divisor,
                        double linf_confidence);

// Majority over MajorityRounds(delta, 1/3) independent seeds. Prepare draws
// the seed pool; Test redraws it when called with mismatched parameters.
class NonAdaptiveTester : public IntervalTester {
 public:
  explicit NonAdaptiveTester(const Profile& profile) : profile_(profile) {}
  std::string_view name() const override { return "nonadaptive"; }
  void Prepare(ConditionalOracle& oracle, const TesterContext& ctx) override;
  WTTVerdict Test(ConditionalOracle& oracle, const WTTInput& in) override;

  const std::vector<NonAdaptiveSeed>& seeds() const { return seeds_; }

 private:
  Profile profile_;
  TesterContext ctx_;
  const ConditionalOracle* prepared_for_ = nullptr;
  std::vector<NonAdaptiveSeed> seeds_;
};

}  // namespace condtest

#endif  // CONDTEST_NONADAPTIVE_H_
