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

#include "condtest/nonadaptive.h"

#include <algorithm>
#include <cmath>

#include "condtest/errors.h"
#include "condtest/learners.h"
#include "condtest/ops.h"

namespace condtest {
namespace {

struct Slice {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
};

// Positions of U_k members inside I.
Slice Intersect(const NonAdaptiveSeed::Level& level, const Interval& I) {
  auto b = std::lower_bound(level.members.begin(), level.members.end(), I.lo);
  auto e = std::upper_bound(b, level.members.end(), I.hi);
  return {static_cast<std::size_t>(b - level.members.begin()),
          static_cast<std::size_t>(e - level.members.begin())};
}

WTTVerdict SmallBranch(const NonAdaptiveSeed& seed, const WTTInput& in,
                       const char* label) {
  const Distribution learned = RestrictionFromCounts(seed.presamples, in.I);
  const double d = L1Distance(learned, Distribution::Uniform(in.I.size()));
  return {d <= in.epsilon / 2.0, 0, label};
}

}  // namespace

NonAdaptiveSeed DrawNonAdaptiveSeed(ConditionalOracle& oracle, const Profile& profile,
                                    double gamma, double epsilon) {
  const std::uint64_t before = oracle.ledger().total();
  NonAdaptiveSeed seed;
  seed.n = oracle.domain_size();
  seed.gamma = gamma;
  seed.epsilon = epsilon;
  seed.plan = NonAdaptivePlanFor(profile, seed.n, gamma, epsilon);
  seed.presamples = oracle.UnconditionalCounts(seed.plan.presamples);
  CounterRng& coins = oracle.coins();
  for (std::uint32_t k = 0; k <= seed.plan.max_level; ++k) {
    NonAdaptiveSeed::Level level;
    level.p = std::ldexp(1.0, -static_cast<int>(k));
    if (k == 0) {
      level.members.resize(seed.n);
      for (std::size_t i = 0; i < seed.n; ++i) level.members[i] = i;
    } else {
      for (std::size_t i = 0; i < seed.n; ++i) {
        if (coins.Bernoulli(level.p)) level.members.push_back(i);
      }
    }
    if (!level.members.empty()) {
      level.collision = oracle.SampleMany(level.members, seed.plan.collision_draws);
      level.counts = oracle.SetCounts(level.members, seed.plan.set_samples);
    }
    seed.levels.push_back(std::move(level));
  }
  seed.queries = oracle.ledger().total() - before;
  return seed;
}

WTTVerdict TestWithSeed(const NonAdaptiveSeed& seed, const WTTInput& in,
                        double linf_divisor, double hits_divisor,
                        double linf_confidence) {
  ValidateInput(in, seed.n);
  if (in.m > 0 && in.I.size() > in.m) return {true, 0, "oversize"};
  const double size = static_cast<double>(in.I.size());
  if (size <= seed.plan.small_threshold) return SmallBranch(seed, in, "small");

  const double window = seed.plan.window;
  // Collision rounds over every qualifying U_k.
  for (std::size_t k = 0; k < seed.levels.size(); ++k) {
    if (static_cast<double>(k) > std::log2(size / (2.0 * window))) break;
    const auto& level = seed.levels[k];
    if (static_cast<double>(Intersect(level, in.I).size()) < window) continue;
    std::vector<std::size_t> hits;
    for (std::size_t x : level.collision) {
      if (in.I.contains(x)) hits.push_back(x);
    }
    std::sort(hits.begin(), hits.end());
    if (std::adjacent_find(hits.begin(), hits.end()) != hits.end()) {
      return {false, 0, "collision"};
    }
  }

  // The unique k with (2/3) W <= |I| p_k < (4/3) W.
  const NonAdaptiveSeed::Level* chosen = nullptr;
  for (const auto& level : seed.levels) {
    const double load = size * level.p;
    if (load >= 2.0 * window / 3.0 && load < 4.0 * window / 3.0) {
      chosen = &level;
      break;
    }
  }
  if (chosen == nullptr) return SmallBranch(seed, in, "small-fallback");

  const Slice slice = Intersect(*chosen, in.I);
  if (static_cast<double>(slice.size()) > 2.0 * size * chosen->p) {
    return {false, 0, "window-size"};
  }
  std::uint64_t hits = 0;
  for (std::size_t j = slice.begin; j < slice.end; ++j) hits += chosen->counts[j];
  const double m_k = static_cast<double>(seed.plan.set_samples);
  if (slice.size() == 0 || static_cast<double>(hits) < in.gamma * m_k / hits_divisor) {
    return {false, 0, "window-hits"};
  }
  // l-infinity learning of mu restricted to I and U_k, then a uniformity check
  // at three times the learning accuracy.
  const double s = static_cast<double>(slice.size());
  const double accuracy = in.epsilon / (linf_divisor * s);
  const std::uint64_t need = LearnLinfSamples(slice.size(), accuracy, linf_confidence);
  const double uniform = 1.0 / s;
  double gap = 0;
  for (std::size_t j = slice.begin; j < slice.end; ++j) {
    const double v = static_cast<double>(chosen->counts[j]) / static_cast<double>(hits);
    gap = std::max(gap, std::abs(v - uniform));
  }
  const bool accept = gap <= 3.0 * accuracy;
  return {accept, 0, hits >= need ? "linf" : "linf-underfed"};
}

void NonAdaptiveTester::Prepare(ConditionalOracle& oracle, const TesterContext& ctx) {
  ctx_ = ctx;
  prepared_for_ = &oracle;
  seeds_.clear();
  const std::uint64_t rounds = MajorityRounds(ctx.delta, 1.0 / 3.0);
  for (std::uint64_t r = 0; r < rounds; ++r) {
    seeds_.push_back(DrawNonAdaptiveSeed(oracle, profile_, ctx.gamma, ctx.epsilon));
  }
}

WTTVerdict NonAdaptiveTester::Test(ConditionalOracle& oracle, const WTTInput& in) {
  ValidateInput(in, oracle.domain_size());
  const std::uint64_t before = oracle.ledger().total();
  if (prepared_for_ != &oracle || seeds_.empty() || ctx_.gamma != in.gamma ||
      ctx_.epsilon != in.epsilon || ctx_.delta != in.delta ||
      ctx_.n != oracle.domain_size()) {
    Prepare(oracle, {oracle.domain_size(), in.m, in.gamma, in.epsilon, in.delta});
  }
  std::uint64_t accepts = 0;
  std::string last;
  for (const auto& seed : seeds_) {
    WTTVerdict v = TestWithSeed(seed, in, profile_.linf_divisor,
                                profile_.hits_divisor, profile_.linf_confidence);
    accepts += v.accept;
    last = std::move(v.decided_by);
  }
  return {2 * accepts > seeds_.size(), oracle.ledger().total() - before, last};
}

}  // namespace condtest
