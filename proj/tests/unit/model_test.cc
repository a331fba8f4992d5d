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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "condtest/distribution.h"
#include "condtest/errors.h"
#include "condtest/interval.h"
#include "condtest/ops.h"
#include "condtest/oracle.h"
#include "condtest/rng.h"
#include "test_util.h"

namespace condtest {
namespace {

using testing::MakeOracle;

TEST(CounterRng, SameKeySameStream) {
  CounterRng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
  }
}

TEST(CounterRng, BelowStaysInRange) {
  CounterRng rng(7);
  for (int i = 0; i < 10000; ++i) EXPECT_LT(rng.Below(13), 13u);
  EXPECT_EQ(rng.Below(1), 0u);
}

TEST(CounterRng, DeriveSeparatesStreams) {
  EXPECT_NE(CounterRng::Derive(1, 0), CounterRng::Derive(1, 1));
  EXPECT_NE(CounterRng::Derive(1, 0), CounterRng::Derive(2, 0));
  EXPECT_EQ(CounterRng::Derive(9, 4), CounterRng::Derive(9, 4));
}

TEST(Distribution, RejectsInvalidMasses) {
  EXPECT_THROW(Distribution(std::vector<double>{}), UsageError);
  EXPECT_THROW(Distribution({0.5, 0.6}), UsageError);
  EXPECT_THROW(Distribution({1.5, -0.5}), UsageError);
  EXPECT_THROW(Distribution::PointMass(3, 3), UsageError);
}

TEST(Distribution, IntervalMassUsesPrefixSums) {
  const Distribution d({0.1, 0.2, 0.3, 0.4});
  EXPECT_NEAR(d.Mass(Interval{1, 2}), 0.5, 1e-15);
  EXPECT_NEAR(d.Mass(Interval{0, 3}), 1.0, 1e-15);
  const std::vector<std::size_t> set = {0, 3};
  EXPECT_NEAR(d.Mass(set), 0.5, 1e-15);
}

TEST(Interval, PartitionValidation) {
  EXPECT_THROW(IntervalPartition(4, {{0, 1}, {3, 3}}), UsageError);
  EXPECT_THROW(IntervalPartition(4, {{0, 1}, {2, 2}}), UsageError);
  EXPECT_THROW(IntervalPartition(4, {{0, 2}, {2, 3}}), UsageError);
  const IntervalPartition P(5, {{0, 1}, {2, 2}, {3, 4}});
  EXPECT_EQ(P.Locate(0), 0u);
  EXPECT_EQ(P.Locate(2), 1u);
  EXPECT_EQ(P.Locate(4), 2u);
  EXPECT_EQ(IntervalPartition::FromStarts(5, {0, 2, 3}), P);
  EXPECT_EQ(IntervalPartition::Singletons(3).length(), 3u);
  EXPECT_EQ(IntervalPartition::Whole(3).length(), 1u);
}

TEST(Oracle, PointMassAlwaysReturnsItsAtom) {
  auto oracle = MakeOracle(Distribution::PointMass(5, 2), 1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(oracle.Sample(), 2u);
}

TEST(Oracle, UniformOverTwoIsBalanced) {
  auto oracle = MakeOracle(Distribution::Uniform(2), 3);
  int ones = 0;
  for (int i = 0; i < 10000; ++i) ones += oracle.Sample() == 0;
  EXPECT_GE(ones, 4700);
  EXPECT_LE(ones, 5300);
}

TEST(Oracle, UnconditionalDrawMetersOne) {
  auto oracle = MakeOracle(Distribution::Uniform(8), 3);
  for (std::uint64_t i = 1; i <= 5; ++i) {
    oracle.Sample();
    EXPECT_EQ(oracle.ledger().unconditional, i);
    EXPECT_EQ(oracle.ledger().conditional, 0u);
  }
}

TEST(Oracle, ZeroMassSingletonFollowsUniformRule) {
  auto oracle = MakeOracle(Distribution({0.5, 0.5, 0.0}), 5);
  const std::vector<std::size_t> A = {2};
  EXPECT_EQ(oracle.Sample(A), 2u);
  EXPECT_EQ(oracle.ledger().conditional, 1u);
}

TEST(Oracle, ZeroMassSetIsUniform) {
  auto oracle = MakeOracle(Distribution({1.0, 0.0, 0.0, 0.0}), 5);
  std::vector<int> hits(4, 0);
  for (int i = 0; i < 9000; ++i) hits[oracle.Sample(Interval{1, 3})] += 1;
  EXPECT_EQ(hits[0], 0);
  for (int j = 1; j < 4; ++j) EXPECT_NEAR(hits[j], 3000, 250);
}

TEST(Oracle, ConditionalPairFrequency) {
  auto oracle = MakeOracle(Distribution({0.2, 0.3, 0.5}), 11);
  const std::vector<std::size_t> A = {0, 1};
  int first = 0;
  for (int i = 0; i < 10000; ++i) first += oracle.Sample(A) == 0;
  EXPECT_GE(first, 3700);
  EXPECT_LE(first, 4300);
}

TEST(Oracle, FullDomainQueryMatchesUnconditionalLaw) {
  const Distribution d({0.2, 0.3, 0.5});
  auto oracle = MakeOracle(d, 11);
  std::vector<int> hits(3, 0);
  const int draws = 30000;
  for (int i = 0; i < draws; ++i) hits[oracle.Sample(QuerySet{FullDomain{}})] += 1;
  // Hoeffding at failure probability 1e-6 per coordinate.
  const double tol = std::sqrt(std::log(2.0 / 1e-6) / (2.0 * draws));
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(hits[j] / double(draws), d[j], tol);
  EXPECT_EQ(oracle.ledger().conditional, static_cast<std::uint64_t>(draws));
  EXPECT_EQ(oracle.ledger().unconditional, 0u);
}

TEST(Oracle, RejectsBadQueries) {
  auto oracle = MakeOracle(Distribution::Uniform(4), 1);
  EXPECT_THROW(oracle.Sample(Interval{2, 4}), UsageError);
  EXPECT_THROW(oracle.Sample(std::vector<std::size_t>{}), UsageError);
  EXPECT_THROW(oracle.PairCount(1, 1, 5), UsageError);
}

TEST(Oracle, BatchCountsMeterEveryDraw) {
  auto oracle = MakeOracle(Distribution::Uniform(16), 2);
  const auto counts = oracle.UnconditionalCounts(1000);
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  EXPECT_EQ(total, 1000u);
  EXPECT_EQ(oracle.ledger().unconditional, 1000u);
  EXPECT_EQ(oracle.PairCount(0, 1, 300) <= 300, true);
  EXPECT_EQ(oracle.ledger().conditional, 300u);
  const std::vector<std::size_t> set = {1, 4, 9};
  const auto sc = oracle.SetCounts(set, 77);
  EXPECT_EQ(sc[0] + sc[1] + sc[2], 77u);
  EXPECT_EQ(oracle.ledger().conditional, 377u);
}

TEST(Oracle, UnconditionalUntilStopsAtTargetOrCap) {
  auto oracle = MakeOracle(Distribution::Uniform(100), 2);
  const FilteredCounts got = oracle.UnconditionalUntil(Interval{0, 9}, 20, 100000);
  EXPECT_EQ(got.landed, 20u);
  EXPECT_EQ(got.counts.size(), 10u);
  EXPECT_EQ(oracle.ledger().unconditional, got.draws);
  const FilteredCounts capped = oracle.UnconditionalUntil(Interval{0, 0}, 50, 30);
  EXPECT_EQ(capped.draws, 30u);
  EXPECT_LT(capped.landed, 50u);
}

TEST(Oracle, SeedDeterminesEverything) {
  auto a = MakeOracle(Distribution({0.1, 0.2, 0.3, 0.4}), 99);
  auto b = MakeOracle(Distribution({0.1, 0.2, 0.3, 0.4}), 99);
  a.EnableTranscript(true);
  b.EnableTranscript(true);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(a.Sample(Interval{1, 3}), b.Sample(Interval{1, 3}));
    EXPECT_EQ(a.PairCount(0, 3, 40), b.PairCount(0, 3, 40));
  }
  EXPECT_EQ(a.transcript(), b.transcript());
  EXPECT_FALSE(a.transcript().empty());
}

TEST(Ops, L1Distance) {
  EXPECT_EQ(L1Distance(Distribution({0.3, 0.7}), Distribution({0.3, 0.7})), 0.0);
  EXPECT_DOUBLE_EQ(L1Distance(Distribution({1, 0}), Distribution({0, 1})), 2.0);
  EXPECT_DOUBLE_EQ(L1Distance(Distribution({0.5, 0.5}), Distribution({0.75, 0.25})), 0.5);
  EXPECT_THROW(L1Distance(Distribution({1.0}), Distribution({0.5, 0.5})), UsageError);
}

TEST(Ops, LinfDistance) {
  EXPECT_EQ(LinfDistance(Distribution({0.3, 0.7}), Distribution({0.3, 0.7})), 0.0);
  EXPECT_DOUBLE_EQ(LinfDistance(Distribution({1, 0}), Distribution({0, 1})), 1.0);
  EXPECT_NEAR(LinfDistance(Distribution({0.5, 0.3, 0.2}), Distribution({0.4, 0.4, 0.2})), 0.1,
              1e-15);
}

TEST(Ops, Restrict) {
  const Distribution r = Restrict(Distribution::Uniform(4), Interval{1, 2});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_DOUBLE_EQ(r[0], 0.5);
  const Distribution s = Restrict(Distribution({0.1, 0.2, 0.3, 0.4}), Interval{2, 3});
  EXPECT_NEAR(s[0], 3.0 / 7.0, 1e-15);
  EXPECT_NEAR(s[1], 4.0 / 7.0, 1e-15);
  const Distribution d({0.1, 0.2, 0.3, 0.4});
  EXPECT_EQ(Restrict(d, Interval{0, 3}).masses(), d.masses());
  EXPECT_THROW(Restrict(Distribution({1.0, 0.0}), Interval{1, 1}), ZeroMassRestriction);
}

TEST(Ops, Bias) {
  EXPECT_EQ(Bias(Distribution::Uniform(5)), 0.0);
  EXPECT_DOUBLE_EQ(Bias(Distribution({0.25, 0.75})), 2.0);
  EXPECT_EQ(Bias(Distribution({0.0, 1.0})), kInfiniteBias);
  EXPECT_EQ(BiasOn(Distribution({0.0, 0.5, 0.5}), Interval{1, 2}), 0.0);
}

TEST(Ops, Flatten) {
  const Distribution d({0.5, 0.1, 0.4});
  const Distribution same = Flatten(d, IntervalPartition::Singletons(3));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(same[i], d[i], 1e-15);
  const Distribution whole = Flatten(d, IntervalPartition::Whole(3));
  for (double x : whole.masses()) EXPECT_NEAR(x, 1.0 / 3.0, 1e-15);
  const Distribution e({0.6, 0.2, 0.2});
  const Distribution f = Flatten(e, IntervalPartition::FromStarts(3, {0, 1}));
  EXPECT_NEAR(f[0], 0.6, 1e-15);
  EXPECT_NEAR(f[1], 0.2, 1e-15);
  EXPECT_NEAR(f[2], 0.2, 1e-15);
}

TEST(Ops, CoarsenAndUncoarsen) {
  const Distribution d({0.1, 0.2, 0.3, 0.4});
  const IntervalPartition P = IntervalPartition::FromStarts(4, {0, 2});
  const Distribution c = Coarsen(d, P);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(c[0], 0.3, 1e-15);
  EXPECT_NEAR(c[1], 0.7, 1e-15);
  const Distribution same = Coarsen(d, IntervalPartition::Singletons(4));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(same[i], d[i], 1e-15);
  const Distribution u = Uncoarsen(Distribution({0.3, 0.7}), P);
  EXPECT_NEAR(u[0], 0.15, 1e-15);
  EXPECT_NEAR(u[3], 0.35, 1e-15);
  const Distribution w = Uncoarsen(Distribution({1.0}), IntervalPartition::Whole(4));
  for (double x : w.masses()) EXPECT_DOUBLE_EQ(x, 0.25);
  const Distribution back = Uncoarsen(c, P);
  const Distribution flat = Flatten(d, P);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(back[i], flat[i], 1e-15);
}

TEST(Ops, InspectViolatingWeight) {
  const ViolationReport u = InspectViolatingWeight(
      Distribution::Uniform(8), IntervalPartition::FromStarts(8, {0, 4}), 0.5, 0.0, 0.0);
  EXPECT_EQ(u.heavy_weight, 0.0);
  EXPECT_EQ(u.high_bias_weight, 0.0);
  EXPECT_EQ(u.far_weight, 0.0);
  // [1,2] carries all the mass; [3,4] is empty.
  const ViolationReport h = InspectViolatingWeight(
      Distribution({0.5, 0.5, 0, 0}), IntervalPartition::FromStarts(4, {0, 2}), 0.4, 0.1, 0.1);
  EXPECT_DOUBLE_EQ(h.heavy_weight, 1.0);
  const ViolationReport q = InspectViolatingWeight(
      Distribution({0.3, 0.3, 0.4, 0}), IntervalPartition::FromStarts(4, {0, 2}), 0.45, 0.1, 0.1);
  EXPECT_DOUBLE_EQ(q.heavy_weight, 0.6);
  EXPECT_DOUBLE_EQ(q.high_bias_weight, 0.4);
  EXPECT_DOUBLE_EQ(q.far_weight, 0.4);
  const ViolationReport s = InspectViolatingWeight(
      Distribution({0.7, 0.1, 0.1, 0.1}), IntervalPartition::Singletons(4), 0.01, 0.0, 0.0);
  EXPECT_EQ(s.heavy_weight, 0.0);
}

}  // namespace
}  // namespace condtest
