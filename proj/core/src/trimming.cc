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

#include "condtest/trimming.h"

#include <algorithm>
#include <cmath>

#include "condtest/budgets.h"
#include "condtest/errors.h"
#include "sampling.h"

namespace condtest {

TrimmingSampler::TrimmingSampler(ConditionalOracle& oracle, double epsilon, double delta,
                                 std::uint64_t samples)
    : oracle_(oracle), epsilon_(epsilon), delta_(delta), planned_(std::max<std::uint64_t>(1, samples)) {
  if (!(epsilon > 0 && epsilon < 0.5)) throw UsageError("trimming epsilon must lie in (0, 1/2)");
  if (!(delta > 0 && delta < 1)) throw UsageError("delta must lie in (0,1)");
  const std::size_t n = oracle.domain_size();
  const std::uint64_t K = TrimmingGridSize(std::max<std::size_t>(n, 2), epsilon);
  grid_.resize(K - 1);
  for (std::size_t g = 1; g < K; ++g) {
    grid_[g - 1] = std::pow(1.0 + epsilon, static_cast<double>(g) - 1.0) * epsilon /
                   static_cast<double>(n);
  }
  all_.resize(n);
  for (std::size_t i = 0; i < n; ++i) all_[i] = i;
}

void TrimmingSampler::FindReference() {
  // Dyadic descent into the heavier half; the reference's mass estimate is
  // the product of the observed fractions.
  const std::size_t n = oracle_.domain_size();
  Interval S{0, n - 1};
  const double depth = std::max(1.0, std::ceil(std::log2(static_cast<double>(n))));
  const std::uint64_t k = CeilCount(128.0 * depth * depth *
                                    std::log(4.0 * depth / delta_) / (epsilon_ * epsilon_));
  double estimate = 1.0;
  while (S.size() > 1) {
    const std::size_t mid = S.lo + S.size() / 2;
    const Interval left{S.lo, mid - 1}, right{mid, S.hi};
    const std::uint64_t in_left = oracle_.SubIntervalCount(S, left, k);
    const double f = static_cast<double>(in_left) / static_cast<double>(k);
    if (f >= 0.5) {
      S = left;
      estimate *= f;
    } else {
      S = right;
      estimate *= 1.0 - f;
    }
  }
  reference_ = S.lo;
  reference_estimate_ = estimate;
  have_reference_ = true;
}

double TrimmingSampler::Estimate(std::size_t i) {
  if (i >= oracle_.domain_size()) throw UsageError("element outside the domain");
  if (!have_reference_) FindReference();
  if (auto it = estimates_.find(i); it != estimates_.end()) return it->second;
  double est = reference_estimate_;
  if (i != reference_) {
    // Pair queries in doubling batches until both sides reach T hits, which
    // pins the ratio to (1 +- eps/16); the cap covers ratios beyond the grid.
    const double delta_e = delta_ / (2.0 * static_cast<double>(planned_));
    const double acc = epsilon_ / 16.0;
    const double T = std::ceil(3.0 * std::log(2.0 / delta_e) / (acc * acc));
    const double n = static_cast<double>(oracle_.domain_size());
    const double cap = 4.0 * T * (2.0 * n / epsilon_ + 2.0);
    std::uint64_t ci = 0, total = 0;
    std::uint64_t batch = static_cast<std::uint64_t>(2.0 * T);
    for (;;) {
      ci += oracle_.PairCount(i, reference_, batch);
      total += batch;
      const std::uint64_t cr = total - ci;
      if (static_cast<double>(std::min(ci, cr)) >= T || static_cast<double>(total) >= cap) break;
      batch = total;
    }
    const std::uint64_t cr = total - ci;
    est = cr == 0 ? 1.0 : reference_estimate_ * static_cast<double>(ci) / static_cast<double>(cr);
    est = std::min(est, 1.0);
  }
  estimates_.emplace(i, est);
  return est;
}

std::size_t TrimmingSampler::LevelOf(double estimate) const {
  if (estimate < grid_.front()) return 0;
  // Largest g with grid value <= estimate.
  auto it = std::upper_bound(grid_.begin(), grid_.end(), estimate);
  return static_cast<std::size_t>(it - grid_.begin());
}

std::size_t TrimmingSampler::Level(std::size_t i) { return LevelOf(Estimate(i)); }

double TrimmingSampler::Value(std::size_t i) {
  const std::size_t g = Level(i);
  return g == 0 ? 0.0 : GridValue(g);
}

std::vector<TrimmedSample> TrimmingSampler::Draw(std::uint64_t s) {
  std::vector<TrimmedSample> out;
  out.reserve(s);
  const Interval whole{0, oracle_.domain_size() - 1};
  for (std::uint64_t t = 0; t < s; ++t) {
    const std::size_t i = oracle_.Sample(whole);
    const double v = Value(i);
    if (v > 0 && oracle_.coins().Bernoulli(v / Estimate(i))) {
      out.push_back({i + 1, v});
    } else {
      out.push_back({0, std::nullopt});
    }
  }
  return out;
}

TrimmingSampler::Counts TrimmingSampler::DrawCounts(std::uint64_t s) {
  Counts out;
  const std::vector<std::uint64_t> raw = oracle_.SetCounts(all_, s);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == 0) continue;
    const double v = Value(i);
    const std::uint64_t kept =
        v > 0 ? internal::Binomial(oracle_.coins(), raw[i], std::min(1.0, v / Estimate(i))) : 0;
    out.trimmed += raw[i] - kept;
    if (kept > 0) out.emitted.emplace_back(i, kept);
  }
  return out;
}

std::vector<double> ReconstructTrimmed(TrimmingSampler& sampler, const Distribution& truth) {
  std::vector<double> out(truth.size() + 1, 0.0);
  double kept = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double v = sampler.Value(i);
    if (v > 0) out[i + 1] = truth[i] * std::min(1.0, v / sampler.Estimate(i));
    kept += out[i + 1];
  }
  out[0] = std::max(0.0, 1.0 - kept);
  return out;
}

}  // namespace condtest
