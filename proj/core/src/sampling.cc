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

#include "sampling.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/random/binomial_distribution.hpp>
#include <boost/random/negative_binomial_distribution.hpp>

namespace condtest::internal {

std::uint64_t Binomial(CounterRng& rng, std::uint64_t n, double p) {
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  boost::random::binomial_distribution<std::int64_t, double> dist(
      static_cast<std::int64_t>(n), p);
  return static_cast<std::uint64_t>(dist(rng));
}

std::uint64_t NegativeBinomial(CounterRng& rng, std::uint64_t k, double p) {
  if (k == 0 || p >= 1.0) return 0;
  boost::random::negative_binomial_distribution<std::int64_t, double> dist(
      static_cast<std::int64_t>(k), p);
  return static_cast<std::uint64_t>(dist(rng));
}

std::uint64_t BinomialBelow(CounterRng& rng, std::uint64_t n, double p,
                            std::uint64_t limit) {
  if (p <= 0.0) return 0;
  std::uint64_t top = std::min<std::uint64_t>(limit - 1, n);
  if (p >= 1.0) return top;
  // Inverse transform over the truncated support, in log space.
  std::vector<double> logw(top + 1);
  double lp = std::log(p);
  double lq = std::log1p(-p);
  double nn = static_cast<double>(n);
  for (std::uint64_t x = 0; x <= top; ++x) {
    double xx = static_cast<double>(x);
    logw[x] = std::lgamma(nn + 1) - std::lgamma(xx + 1) -
              std::lgamma(nn - xx + 1) + xx * lp + (nn - xx) * lq;
  }
  double peak = *std::max_element(logw.begin(), logw.end());
  double total = 0;
  for (double& w : logw) {
    w = std::exp(w - peak);
    total += w;
  }
  double u = rng.Uniform() * total;
  for (std::uint64_t x = 0; x <= top; ++x) {
    u -= logw[x];
    if (u < 0) return x;
  }
  return top;
}

void Multinomial(CounterRng& rng, std::uint64_t n,
                 std::span<const double> weights,
                 std::vector<std::uint64_t>& out) {
  out.assign(weights.size(), 0);
  if (weights.empty()) return;
  double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  bool uniform = !(total > 0.0);
  double remaining_w = uniform ? static_cast<double>(weights.size()) : total;
  std::uint64_t remaining = n;
  for (std::size_t i = 0; i + 1 < weights.size() && remaining > 0; ++i) {
    double w = uniform ? 1.0 : weights[i];
    double p = remaining_w > 0 ? std::clamp(w / remaining_w, 0.0, 1.0) : 1.0;
    std::uint64_t c = Binomial(rng, remaining, p);
    out[i] = c;
    remaining -= c;
    remaining_w -= w;
  }
  if (remaining > 0) {
    // Everything left goes to the last element that can carry mass.
    std::size_t last = weights.size() - 1;
    if (!uniform) {
      while (last > 0 && weights[last] <= 0.0) --last;
    }
    out[last] += remaining;
  }
}

}  // namespace condtest::internal
