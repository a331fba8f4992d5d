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

#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "condtest/budgets.h"
#include "condtest/errors.h"
#include "condtest/generators.h"
#include "condtest/nonadaptive.h"
#include "condtest/profile.h"
#include "condtest/uniformity.h"
#include "test_util.h"

namespace condtest {
namespace {

using testing::LowerEdge;
using testing::MakeOracle;

Distribution HalfHeavy(std::size_t n, double eps) {
  GeneratorSpec spec;
  spec.kind = "half-heavy";
  spec.n = n;
  spec.epsilon = eps;
  return Generate(spec).dist;
}

double AcceptRate(const std::string& model, const Distribution& d, const WTTInput& in,
                  int trials, std::uint64_t seed0) {
  int accepts = 0;
  for (int t = 0; t < trials; ++t) {
    auto oracle = MakeOracle(d, seed0 + t);
    auto tester = MakeTester(model, Profile::Desk());
    accepts += tester->Test(oracle, in).accept;
  }
  return static_cast<double>(accepts) / trials;
}

class EveryBackend : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryBackend, SingletonAcceptsWithoutQueries) {
  auto oracle = MakeOracle(Distribution({0.9, 0.1}), 1);
  auto tester = MakeTester(GetParam(), Profile::Desk());
  if (GetParam() == "nonadaptive") tester->Prepare(oracle, {2, 2, 0.1, 0.25, 0.2});
  const auto before = oracle.ledger().total();
  const WTTVerdict v = tester->Test(oracle, {Interval{1, 1}, 2, 0.1, 0.25, 0.2});
  EXPECT_TRUE(v.accept);
  EXPECT_EQ(v.queries_used, 0u);
  EXPECT_EQ(oracle.ledger().total(), before);
}

TEST_P(EveryBackend, ReportsItsOwnLedgerDelta) {
  auto oracle = MakeOracle(HalfHeavy(256, 0.25), 9);
  auto tester = MakeTester(GetParam(), Profile::Desk());
  const auto before = oracle.ledger().total();
  const WTTVerdict v = tester->Test(oracle, {Interval{0, 255}, 256, 1.0, 0.25, 0.2});
  EXPECT_EQ(v.queries_used, oracle.ledger().total() - before);
  EXPECT_EQ(tester->name(), GetParam());
}

TEST_P(EveryBackend, RejectsInvalidInput) {
  auto oracle = MakeOracle(Distribution::Uniform(8), 1);
  auto tester = MakeTester(GetParam(), Profile::Desk());
  EXPECT_THROW(tester->Test(oracle, {Interval{0, 8}, 8, 1.0, 0.25, 0.2}), UsageError);
  EXPECT_THROW(tester->Test(oracle, {Interval{0, 7}, 8, 1.0, 0.0, 0.2}), UsageError);
  EXPECT_THROW(tester->Test(oracle, {Interval{0, 7}, 8, 0.0, 0.25, 0.2}), UsageError);
}

INSTANTIATE_TEST_SUITE_P(Backends, EveryBackend,
                         ::testing::Values("uncond", "adaptive", "nonadaptive"));

TEST(MakeTester, UnknownModel) {
  EXPECT_THROW(MakeTester("quantum", Profile::Desk()), UsageError);
}

TEST(UnconditionalTester, Completeness) {
  const WTTInput in{Interval{0, 999}, 1000, 1.0, 0.25, 0.2};
  EXPECT_GE(AcceptRate("uncond", Distribution::Uniform(1000), in, 150, 1000),
            LowerEdge(0.8, 150));
}

TEST(UnconditionalTester, Soundness) {
  const WTTInput in{Interval{0, 999}, 1000, 1.0, 0.25, 0.2};
  EXPECT_LE(AcceptRate("uncond", HalfHeavy(1000, 0.5), in, 150, 2000), 1 - LowerEdge(0.8, 150));
}

TEST(AdaptiveTester, Completeness) {
  const WTTInput in{Interval{0, 999}, 1000, 1.0, 0.25, 0.2};
  EXPECT_GE(AcceptRate("adaptive", Distribution::Uniform(1000), in, 150, 3000),
            LowerEdge(0.8, 150));
}

TEST(AdaptiveTester, SoundnessOnBiasThree) {
  const WTTInput in{Interval{0, 999}, 1000, 1.0, 0.25, 0.2};
  EXPECT_LE(AcceptRate("adaptive", HalfHeavy(1000, 0.6), in, 150, 4000), 1 - LowerEdge(0.8, 150));
}

TEST(AdaptiveTester, QueryCountDoesNotDependOnN) {
  auto mean_queries = [](std::size_t n) {
    double total = 0;
    for (int t = 0; t < 60; ++t) {
      auto oracle = MakeOracle(HalfHeavy(n, 0.1), 500 + t);
      AdaptiveTester tester(Profile::Desk());
      total += static_cast<double>(
          tester.Test(oracle, {Interval{0, n - 1}, n, 1.0, 0.25, 0.2}).queries_used);
    }
    return total / 60;
  };
  const double small = mean_queries(1 << 10), large = mean_queries(1 << 16);
  EXPECT_NEAR(large / small, 1.0, 0.05);
}

// Accepts with probability 0.7 on every call, from the oracle's coins.
class NoisyStub : public IntervalTester {
 public:
  std::string_view name() const override { return "stub"; }
  WTTVerdict Test(ConditionalOracle& oracle, const WTTInput&) override {
    return {oracle.coins().Bernoulli(0.7), 0, "stub"};
  }
};

TEST(MajorityTester, ErrorFallsAtTheChernoffRate) {
  double previous = 1;
  for (std::uint64_t rounds : {1, 5, 11, 21, 41}) {
    int errors = 0;
    const int trials = 3000;
    for (int t = 0; t < trials; ++t) {
      auto oracle = MakeOracle(Distribution::Uniform(2), 10'000 * rounds + t);
      NoisyStub stub;
      MajorityTester majority(stub, rounds);
      errors += !majority.Test(oracle, {Interval{0, 1}, 2, 1.0, 0.5, 0.5}).accept;
    }
    const double rate = static_cast<double>(errors) / trials;
    const double bound = std::exp(-2.0 * static_cast<double>(rounds) * 0.2 * 0.2);
    EXPECT_LE(rate, bound + 3 * std::sqrt(bound / trials)) << rounds;
    EXPECT_LE(rate, previous + 0.01) << rounds;
    previous = rate;
  }
}

TEST(NonAdaptiveSeed, TwoElementDomainLevels) {
  auto oracle = MakeOracle(Distribution::Uniform(2), 3);
  const NonAdaptiveSeed seed = DrawNonAdaptiveSeed(oracle, Profile::Desk(), 0.5, 0.25);
  ASSERT_EQ(seed.levels.size(), 2u);
  EXPECT_EQ(seed.levels[0].members, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(seed.levels[0].p, 1.0);
  EXPECT_EQ(seed.levels[1].p, 0.5);
  EXPECT_EQ(seed.queries, oracle.ledger().total());
}

TEST(NonAdaptiveSeed, LevelSizesConcentrate) {
  double total = 0;
  for (int t = 0; t < 500; ++t) {
    auto oracle = MakeOracle(Distribution::Uniform(1024), 40'000 + t);
    Profile p = Profile::Desk();
    p.window_samples_constant = 1;
    total += static_cast<double>(
        DrawNonAdaptiveSeed(oracle, p, 1.0, 0.5).levels[5].members.size());
  }
  EXPECT_NEAR(total / 500, 32, 5);
}

TEST(NonAdaptiveSeed, TestingMakesNoQueries) {
  auto oracle = MakeOracle(Distribution::Uniform(1024), 3);
  const NonAdaptiveSeed seed = DrawNonAdaptiveSeed(oracle, Profile::Desk(), 1.0, 0.25);
  const auto before = oracle.ledger().total();
  for (std::size_t hi : {0u, 5u, 99u, 1023u}) {
    const WTTVerdict v = TestWithSeed(seed, {Interval{0, hi}, 1024, 1.0, 0.25, 0.2}, 80, 40, 0.1);
    EXPECT_EQ(v.queries_used, 0u);
  }
  EXPECT_EQ(oracle.ledger().total(), before);
}

TEST(NonAdaptiveTester, SmallUniformIntervalUsesThePresamples) {
  auto oracle = MakeOracle(Distribution::Uniform(1024), 3);
  const NonAdaptiveSeed seed = DrawNonAdaptiveSeed(oracle, Profile::Desk(), 1.0, 0.25);
  ASSERT_GE(seed.plan.small_threshold, 8.0);
  const WTTVerdict v = TestWithSeed(seed, {Interval{0, 7}, 1024, 1.0, 0.25, 0.2}, 80, 40, 0.1);
  EXPECT_EQ(v.decided_by, "small");
  EXPECT_TRUE(v.accept);
}

TEST(NonAdaptiveTester, UniformCompleteness) {
  const std::size_t n = 1 << 12;
  int accepts = 0;
  for (int t = 0; t < 100; ++t) {
    auto oracle = MakeOracle(Distribution::Uniform(n), 7000 + t);
    const NonAdaptiveSeed seed = DrawNonAdaptiveSeed(oracle, Profile::Desk(), 1.0, 0.25);
    accepts += TestWithSeed(seed, {Interval{0, n - 1}, n, 1.0, 0.25, 0.2}, 80, 40, 0.1).accept;
  }
  EXPECT_GE(accepts, 67 - 14);
}

TEST(NonAdaptiveTester, HeavyElementTriggersCollisions) {
  const std::size_t n = 1 << 16;
  std::vector<double> p(n, 0.5 / static_cast<double>(n - 1));
  p[100] = 0.5;
  const Distribution d(p);
  int collisions = 0;
  const int seeds = 30;
  for (int t = 0; t < seeds; ++t) {
    auto oracle = MakeOracle(d, 900 + t);
    const NonAdaptiveSeed seed = DrawNonAdaptiveSeed(oracle, Profile::Desk(), 0.5, 0.25);
    const WTTVerdict v = TestWithSeed(seed, {Interval{0, 8191}, n, 0.5, 0.25, 0.2}, 80, 40, 0.1);
    collisions += !v.accept && v.decided_by == "collision";
  }
  EXPECT_GE(collisions, seeds / 2);
}

TEST(NonAdaptiveTester, SeedReplayIsIntervalIndependent) {
  const Distribution d = HalfHeavy(1024, 0.25);
  auto a = MakeOracle(d, 77), b = MakeOracle(d, 77);
  a.EnableTranscript(true);
  b.EnableTranscript(true);
  NonAdaptiveTester ta(Profile::Desk()), tb(Profile::Desk());
  ta.Test(a, {Interval{0, 1023}, 1024, 1.0, 0.25, 0.2});
  tb.Test(b, {Interval{100, 400}, 1024, 1.0, 0.25, 0.2});
  EXPECT_EQ(a.transcript(), b.transcript());
  EXPECT_EQ(a.ledger().total(), b.ledger().total());
}

}  // namespace
}  // namespace condtest
