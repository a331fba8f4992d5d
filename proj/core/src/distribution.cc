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

#include "condtest/distribution.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "condtest/errors.h"
#include "condtest/rng.h"

namespace condtest {

Distribution::Distribution(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw UsageError("distribution over an empty domain");
  if (p_.size() > (std::size_t{1} << 31)) {
    throw UsageError("domain too large for dense storage");
  }
  double total = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!std::isfinite(p_[i]) || p_[i] < 0) {
      throw UsageError("mass at index " + std::to_string(i) +
                       " is negative or not finite");
    }
    total += p_[i];
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw UsageError("masses sum to " + std::to_string(total) +
                     ", not 1 (tolerance 1e-9)");
  }
  if (std::abs(total - 1.0) > 1e-12) {
    for (double& x : p_) x /= total;
  }
  BuildIndex();
}

Distribution Distribution::Uniform(std::size_t n) {
  if (n == 0) throw UsageError("distribution over an empty domain");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::PointMass(std::size_t n, std::size_t at) {
  if (at >= n) throw UsageError("point mass outside the domain");
  std::vector<double> p(n, 0.0);
  p[at] = 1.0;
  return Distribution(std::move(p));
}

void Distribution::BuildIndex() {
  const std::size_t n = p_.size();
  prefix_.assign(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix_[i + 1] = prefix_[i] + p_[i];

  // Vose's alias method.
  alias_prob_.assign(n, 0.0);
  alias_.assign(n, 0);
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = p_[i] * static_cast<double>(n);
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    std::uint32_t s = small.back();
    small.pop_back();
    std::uint32_t l = large.back();
    alias_prob_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  for (std::uint32_t l : large) {
    alias_prob_[l] = 1.0;
    alias_[l] = l;
  }
  for (std::uint32_t s : small) {
    // Rounding leftovers; only reachable when the residual is ~1.
    alias_prob_[s] = 1.0;
    alias_[s] = s;
  }
}

double Distribution::Mass(std::span<const std::size_t> set) const {
  double total = 0;
  for (std::size_t i : set) total += p_[i];
  return total;
}

std::size_t Distribution::Sample(CounterRng& rng) const {
  for (;;) {
    std::size_t column = rng.Below(p_.size());
    std::size_t out = rng.Uniform() < alias_prob_[column] ? column : alias_[column];
    // Guard against rounding routing a draw onto a zero-mass element.
    if (p_[out] > 0.0) return out;
  }
}

std::size_t Distribution::SampleInterval(const Interval& I,
                                         CounterRng& rng) const {
  if (I.hi >= p_.size() || I.lo > I.hi) {
    throw UsageError("interval outside the domain");
  }
  double mass = Mass(I);
  if (!(mass > 0.0)) return I.lo + rng.Below(I.size());
  for (;;) {
    double target = prefix_[I.lo] + rng.Uniform() * mass;
    auto first = prefix_.begin() + static_cast<std::ptrdiff_t>(I.lo) + 1;
    auto last = prefix_.begin() + static_cast<std::ptrdiff_t>(I.hi) + 2;
    auto it = std::upper_bound(first, last, target);
    if (it == last) continue;  // target rounded onto the upper edge
    std::size_t out = static_cast<std::size_t>(it - prefix_.begin()) - 1;
    if (p_[out] > 0.0) return out;
  }
}

}  // namespace condtest
