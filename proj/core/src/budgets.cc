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

#include "condtest/budgets.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "condtest/errors.h"

namespace condtest {
namespace {

void RequireOpenUnit(double x, const char* what) {
  if (!(x > 0 && x < 1)) throw UsageError(std::string(what) + " must lie in (0,1)");
}

void RequirePositive(double x, const char* what) {
  if (!(x > 0) || !std::isfinite(x)) {
    throw UsageError(std::string(what) + " must be positive");
  }
}

double Log2AtLeastOne(std::size_t n) {
  return std::max(1.0, std::log2(static_cast<double>(n)));
}

}  // namespace

std::uint64_t CeilCount(double x) {
  if (!(x > 0)) return 0;
  if (x >= 1.8e19) throw UsageError("sample budget overflows 64 bits");
  return static_cast<std::uint64_t>(std::ceil(x));
}

std::uint64_t PullEtaFineSamples(double eta, double delta) {
  RequirePositive(eta, "eta");
  RequireOpenUnit(delta, "delta");
  return CeilCount(3.0 / eta * std::log(3.0 / (eta * delta)));
}

std::uint64_t PullEtaGammaFineSamples(double eta, double gamma, double delta) {
  RequirePositive(eta, "eta");
  RequirePositive(gamma, "gamma");
  RequireOpenUnit(delta, "delta");
  return CeilCount(3.0 / eta * std::log(5.0 / (gamma * delta)));
}

std::uint64_t AssessRounds(double epsilon, double delta) {
  RequirePositive(epsilon, "epsilon");
  RequireOpenUnit(delta, "delta");
  return std::max<std::uint64_t>(1, CeilCount(20.0 * std::log(1.0 / delta) / epsilon));
}

double AssessRejectThreshold(double epsilon, std::uint64_t rounds) {
  return 4.0 * epsilon * static_cast<double>(rounds);
}

std::uint64_t LearnL1Samples(std::size_t n, double epsilon, double delta) {
  RequirePositive(epsilon, "epsilon");
  RequireOpenUnit(delta, "delta");
  return CeilCount((static_cast<double>(n) + std::log(2.0 / delta)) /
                   (2.0 * epsilon * epsilon));
}

std::uint64_t LearnLinfSamples(std::size_t n, double epsilon, double delta) {
  RequirePositive(epsilon, "epsilon");
  RequireOpenUnit(delta, "delta");
  return CeilCount(std::log(2.0 * static_cast<double>(n) / delta) /
                   (2.0 * epsilon * epsilon));
}

std::uint64_t LearnFlatSamples(std::size_t length, double epsilon, double delta) {
  RequirePositive(epsilon, "epsilon");
  RequireOpenUnit(delta, "delta");
  return CeilCount(2.0 * (static_cast<double>(length) + std::log(2.0 / delta)) /
                   (epsilon * epsilon));
}

std::uint64_t BruteForceSamples(std::size_t size, double gamma, double epsilon,
                                double delta) {
  RequirePositive(gamma, "gamma");
  RequirePositive(epsilon, "epsilon");
  RequireOpenUnit(delta, "delta");
  return CeilCount(4.0 * (static_cast<double>(size) + std::log(2.0 / delta)) /
                   (epsilon * epsilon * gamma));
}

std::uint64_t CollisionSamples(std::size_t size, double epsilon, double c) {
  RequirePositive(epsilon, "epsilon");
  return std::max<std::uint64_t>(
      2, CeilCount(c * std::sqrt(static_cast<double>(size)) / (epsilon * epsilon)));
}

std::uint64_t MajorityRounds(double delta, double base_error) {
  RequireOpenUnit(delta, "delta");
  if (!(base_error >= 0 && base_error < 0.5)) {
    throw UsageError("majority base error must lie in [0, 1/2)");
  }
  const double gap = 0.5 - base_error;
  std::uint64_t r = std::max<std::uint64_t>(
      1, CeilCount(std::log(1.0 / delta) / (2.0 * gap * gap)));
  if (r % 2 == 0) ++r;
  return r;
}

std::uint64_t PairRounds(double epsilon, double delta, double c) {
  RequirePositive(epsilon, "epsilon");
  RequireOpenUnit(delta, "delta");
  return std::max<std::uint64_t>(1, CeilCount(c * std::log(2.0 / delta) / epsilon));
}

std::uint64_t PairQueries(std::uint64_t rounds, double epsilon, double delta,
                          double c) {
  RequirePositive(epsilon, "epsilon");
  RequireOpenUnit(delta, "delta");
  return std::max<std::uint64_t>(
      1, CeilCount(c * std::log(2.0 * static_cast<double>(rounds) / delta) /
                   (epsilon * epsilon)));
}

NonAdaptivePlan NonAdaptivePlanFor(const Profile& profile, std::size_t n,
                                   double gamma, double epsilon) {
  RequirePositive(gamma, "gamma");
  RequirePositive(epsilon, "epsilon");
  const double lg = Log2AtLeastOne(n);
  const auto& e = profile.exponents;
  const double denom = epsilon * epsilon * gamma;
  NonAdaptivePlan plan;
  plan.small_threshold = std::pow(lg, e.small_interval);
  plan.presamples = CeilCount(4.0 * (plan.small_threshold + 3.0) / denom);
  plan.window = std::pow(lg, e.window);
  plan.collision_draws = std::max<std::uint64_t>(2, CeilCount(std::pow(lg, e.collision)));
  plan.set_samples = CeilCount(profile.window_samples_constant *
                               std::pow(lg, e.samples) * std::log(3.0 * lg) / denom);
  plan.max_level = static_cast<std::uint32_t>(std::floor(std::log2(static_cast<double>(n))));
  return plan;
}

LearnPlan LearnPlanFor(const Profile& profile, std::size_t L, double epsilon,
                       std::size_t /*n*/) {
  RequireOpenUnit(epsilon, "epsilon");
  if (L == 0) throw UsageError("L must be positive");
  LearnPlan plan;
  plan.eta = epsilon / (profile.pull_divisor * static_cast<double>(L));
  plan.gamma = epsilon / profile.pull_divisor;
  plan.confidence = profile.learn_confidence;
  plan.pull_samples = PullEtaGammaFineSamples(plan.eta, plan.gamma, plan.confidence);
  if (profile.length_factor > 0) {
    plan.length_bound = CeilCount(profile.length_factor * static_cast<double>(L) *
                                  std::log(1.0 / epsilon) / epsilon);
  } else {
    plan.length_bound = 2 * plan.pull_samples + 1;
  }
  plan.assess_epsilon = epsilon / profile.assess_divisor;
  plan.flat_epsilon = epsilon / profile.flat_divisor;
  return plan;
}

std::uint64_t EstimateSamples(std::size_t classes, double epsilon, double delta) {
  RequirePositive(epsilon, "epsilon");
  RequireOpenUnit(delta, "delta");
  if (classes == 0) throw UsageError("class count must be positive");
  const double r = static_cast<double>(classes);
  return CeilCount(6.0 * r / (epsilon * epsilon) * std::log(r / delta));
}

std::uint64_t TrimmingGridSize(std::size_t n, double epsilon) {
  RequireOpenUnit(epsilon, "epsilon");
  const double l = std::log1p(epsilon);
  return std::max<std::uint64_t>(
      2, CeilCount(std::log(static_cast<double>(n)) * std::log(1.0 / epsilon) / (l * l)));
}

double TrimmingBudget(std::uint64_t samples, double epsilon, double delta,
                      std::size_t n) {
  RequirePositive(epsilon, "epsilon");
  RequireOpenUnit(delta, "delta");
  const double s = static_cast<double>(samples);
  const double ln_n = std::log(static_cast<double>(n));
  return std::ceil(32.0 * s * std::pow(epsilon, -4.0) * std::pow(ln_n, 5.0) *
                   std::log(s * ln_n / delta));
}

AtlasTestPlan AtlasTestPlanFor(const Profile& profile, std::size_t k,
                               double epsilon, std::size_t n) {
  RequirePositive(epsilon, "epsilon");
  if (k == 0) throw UsageError("k must be positive");
  AtlasTestPlan plan;
  plan.confidence = profile.atlas_confidence;
  plan.eta = epsilon / (profile.atlas_divisor * static_cast<double>(k));
  plan.pull_samples = PullEtaFineSamples(plan.eta, plan.confidence);
  plan.length_bound = CeilCount(20.0 * static_cast<double>(k) *
                                std::log(static_cast<double>(n)) *
                                std::log(1.0 / epsilon) / epsilon);
  plan.learn_epsilon = epsilon / profile.atlas_divisor;
  return plan;
}

}  // namespace condtest
