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

#include "condtest/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "condtest/errors.h"
#include "condtest/ops.h"
#include "condtest/properties.h"
#include "condtest/rng.h"

namespace condtest {
namespace {

std::vector<double> Normalize(std::vector<double> w) {
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return w;
}

// `count` distinct sorted values from [lo, hi) by partial Fisher-Yates.
std::vector<std::size_t> DistinctSorted(CounterRng& rng, std::size_t lo, std::size_t hi,
                                        std::size_t count) {
  std::vector<std::size_t> pool(hi - lo);
  std::iota(pool.begin(), pool.end(), lo);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.Below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

double SmallestSum(std::vector<double> values, std::size_t count) {
  std::sort(values.begin(), values.end());
  double s = 0;
  for (std::size_t i = 0; i < count && i < values.size(); ++i) s += values[i];
  return s;
}

}  // namespace

const std::vector<std::string>& GeneratorKinds() {
  static const std::vector<std::string> kinds = {
      "uniform",   "point-mass", "zipf",     "k-histogram",     "staircase",
      "half-heavy", "sawtooth",  "support-limited", "mixture"};
  return kinds;
}

Generated Generate(const GeneratorSpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw UsageError("generator needs n >= 1");
  CounterRng rng(CounterRng::Derive(spec.seed, 0x67656e));
  std::vector<double> p(n, 0.0);
  std::map<std::string, double> notes;
  const std::string& kind = spec.kind;

  if (kind == "uniform") {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(n));
  } else if (kind == "point-mass") {
    if (spec.at >= n) throw UsageError("point-mass location outside the domain");
    p[spec.at] = 1.0;
  } else if (kind == "zipf") {
    if (!(spec.exponent >= 0)) throw UsageError("zipf exponent must be non-negative");
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = std::pow(static_cast<double>(i + 1), -spec.exponent);
    }
    p = Normalize(std::move(p));
  } else if (kind == "k-histogram") {
    if (spec.k == 0 || spec.k > n) throw UsageError("k-histogram needs 1 <= k <= n");
    std::vector<std::size_t> starts = {0};
    if (spec.k > 1) {
      auto cuts = DistinctSorted(rng, 1, n, spec.k - 1);
      starts.insert(starts.end(), cuts.begin(), cuts.end());
    }
    starts.push_back(n);
    for (std::size_t j = 0; j + 1 < starts.size(); ++j) {
      // Per-element level drawn from [0.2, 1].
      const double level = 0.2 + 0.8 * rng.Uniform();
      for (std::size_t i = starts[j]; i < starts[j + 1]; ++i) p[i] = level;
    }
    p = Normalize(std::move(p));
    notes["d_khist"] = 0.0;
  } else if (kind == "staircase") {
    if (spec.levels == 0 || spec.levels > n) throw UsageError("staircase needs 1 <= levels <= n");
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t block = i * spec.levels / n;
      p[i] = static_cast<double>(spec.levels - block);
    }
    p = Normalize(std::move(p));
    notes["d_monotone"] = 0.0;
  } else if (kind == "half-heavy" || kind == "sawtooth") {
    if (!(spec.epsilon >= 0 && spec.epsilon <= 1)) {
      throw UsageError(kind + " needs epsilon in [0, 1]");
    }
    if (kind == "half-heavy" && n % 2 != 0) throw UsageError("half-heavy needs even n");
    const std::size_t period = kind == "half-heavy" ? n / 2 : spec.period;
    if (period == 0 || n % (2 * period) != 0) {
      throw UsageError("sawtooth needs n divisible by 2 * period");
    }
    const double u = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      const bool high = (i / period) % 2 == 0;
      p[i] = (high ? 1.0 + spec.epsilon : 1.0 - spec.epsilon) * u;
    }
    notes["d_uniform_closed_form"] = spec.epsilon;
  } else if (kind == "support-limited") {
    if (spec.support == 0 || spec.support > n) {
      throw UsageError("support-limited needs 1 <= support <= n");
    }
    for (std::size_t i : DistinctSorted(rng, 0, n, spec.support)) {
      p[i] = 1.0 / static_cast<double>(spec.support);
    }
  } else if (kind == "mixture") {
    if (spec.components.empty() || spec.components.size() != spec.weights.size()) {
      throw UsageError("mixture needs one weight per component");
    }
    const double total = std::accumulate(spec.weights.begin(), spec.weights.end(), 0.0);
    if (!(total > 0)) throw UsageError("mixture weights must have a positive sum");
    for (std::size_t c = 0; c < spec.components.size(); ++c) {
      if (spec.weights[c] < 0) throw UsageError("mixture weights must be non-negative");
      GeneratorSpec sub = spec.components[c];
      sub.n = n;
      const Generated g = Generate(sub);
      for (std::size_t i = 0; i < n; ++i) p[i] += spec.weights[c] / total * g.dist[i];
    }
  } else {
    throw UsageError("unknown generator kind '" + kind + "'");
  }

  Distribution dist(std::move(p));
  notes["d_uniform"] = DistanceToUniform(dist);
  notes["bias"] = Bias(dist);
  // Distance to "support <= s": twice the mass outside the heaviest s points.
  std::size_t nonzero = 0;
  for (double x : dist.masses()) nonzero += x > 0;
  const std::size_t excess = nonzero > spec.support ? nonzero - spec.support : 0;
  std::vector<double> positive;
  for (double x : dist.masses()) {
    if (x > 0) positive.push_back(x);
  }
  notes["d_support"] = 2.0 * SmallestSum(positive, excess);
  return {std::move(dist), std::move(notes)};
}

}  // namespace condtest
