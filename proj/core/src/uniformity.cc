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

#include "condtest/uniformity.h"

#include <cmath>

#include "condtest/budgets.h"
#include "condtest/errors.h"
#include "condtest/nonadaptive.h"

namespace condtest {

void ValidateInput(const WTTInput& in, std::size_t n) {
  if (in.I.lo > in.I.hi || in.I.hi >= n) throw UsageError("interval outside the domain");
  if (!(in.gamma > 0 && in.gamma <= 1)) throw UsageError("gamma must lie in (0,1]");
  if (!(in.epsilon > 0 && in.epsilon < 1)) throw UsageError("epsilon must lie in (0,1)");
  if (!(in.delta > 0 && in.delta < 1)) throw UsageError("delta must lie in (0,1)");
}

bool UnconditionalTester::CollisionRound(ConditionalOracle& oracle,
                                         const Interval& I, std::uint64_t samples,
                                         double gamma, double epsilon) {
  const std::uint64_t cap = CeilCount(3.0 * static_cast<double>(samples) / gamma);
  const FilteredCounts got = oracle.UnconditionalUntil(I, samples, cap);
  if (got.landed < 2) return true;
  double collisions = 0;
  for (std::uint64_t c : got.counts) {
    collisions += 0.5 * static_cast<double>(c) * static_cast<double>(c - (c > 0));
  }
  const double l = static_cast<double>(got.landed);
  const double pairs = 0.5 * l * (l - 1);
  const double threshold = (1.0 + epsilon * epsilon / 4.0) / static_cast<double>(I.size());
  return collisions / pairs <= threshold;
}

WTTVerdict UnconditionalTester::Test(ConditionalOracle& oracle, const WTTInput& in) {
  ValidateInput(in, oracle.domain_size());
  if (in.I.size() == 1) return {true, 0, "singleton"};
  if (in.m > 0 && in.I.size() > in.m) return {true, 0, "oversize"};
  const std::uint64_t before = oracle.ledger().total();
  const std::uint64_t rounds = MajorityRounds(in.delta, profile_.majority_base_error);
  const std::uint64_t s =
      CollisionSamples(in.I.size(), in.epsilon, profile_.collision_constant);
  std::uint64_t accepts = 0, rejects = 0;
  while (2 * accepts <= rounds && 2 * rejects <= rounds) {
    if (CollisionRound(oracle, in.I, s, in.gamma, in.epsilon)) {
      ++accepts;
    } else {
      ++rejects;
    }
  }
  return {2 * accepts > rounds, oracle.ledger().total() - before, "collision"};
}

WTTVerdict AdaptiveTester::Test(ConditionalOracle& oracle, const WTTInput& in) {
  ValidateInput(in, oracle.domain_size());
  if (in.I.size() == 1) return {true, 0, "singleton"};
  if (in.m > 0 && in.I.size() > in.m) return {true, 0, "oversize"};
  const std::uint64_t before = oracle.ledger().total();
  const std::uint64_t rounds =
      PairRounds(in.epsilon, in.delta, profile_.pair_rounds_constant);
  const std::uint64_t k =
      PairQueries(rounds, in.epsilon, in.delta, profile_.pair_queries_constant);
  const double slack =
      in.epsilon / 400.0 +
      std::sqrt(std::log(2.0 * static_cast<double>(rounds) / in.delta) /
                (2.0 * static_cast<double>(k)));
  CounterRng& coins = oracle.coins();
  for (std::uint64_t round = 0; round < rounds; ++round) {
    const std::size_t x = oracle.Sample(in.I);
    std::size_t y = x;
    while (y == x) y = in.I.lo + coins.Below(in.I.size());
    const double f =
        static_cast<double>(oracle.PairCount(x, y, k)) / static_cast<double>(k);
    if (std::abs(f - 0.5) > slack) {
      return {false, oracle.ledger().total() - before, "pair"};
    }
  }
  return {true, oracle.ledger().total() - before, "pair"};
}

WTTVerdict MajorityTester::Test(ConditionalOracle& oracle, const WTTInput& in) {
  const std::uint64_t before = oracle.ledger().total();
  std::uint64_t accepts = 0, rejects = 0;
  std::string last;
  while (2 * accepts <= rounds_ && 2 * rejects <= rounds_) {
    WTTVerdict v = base_.Test(oracle, in);
    last = std::move(v.decided_by);
    (v.accept ? accepts : rejects) += 1;
  }
  return {2 * accepts > rounds_, oracle.ledger().total() - before, last};
}

std::unique_ptr<IntervalTester> MakeTester(std::string_view model,
                                           const Profile& profile) {
  if (model == "uncond") return std::make_unique<UnconditionalTester>(profile);
  if (model == "adaptive") return std::make_unique<AdaptiveTester>(profile);
  if (model == "nonadaptive") return std::make_unique<NonAdaptiveTester>(profile);
  throw UsageError("unknown tester model '" + std::string(model) +
                   "' (expected uncond, adaptive or nonadaptive)");
}

}  // namespace condtest
