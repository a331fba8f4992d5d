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

#ifndef CONDTEST_TRIMMING_H_
#define CONDTEST_TRIMMING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "condtest/distribution.h"
#include "condtest/oracle.h"

namespace condtest {

struct TrimmedSample {
  std::size_t index = 0;        // 1-based element, or 0 for the trimmed outcome
  std::optional<double> value;  // grid value; absent for outcome 0
};

// Draws i ~ mu through the oracle, estimates mu(i) against a reference
// element with pair queries, rounds the estimate down to the grid
// P = {(1+eps)^(g-1) eps / n : 1 <= g <= K-1}, and emits i with probability
// v(i)/est(i) (else 0). Estimates below eps/n are trimmed (v = 0). The
// sampled distribution is therefore mu(i) v(i) / est(i) on [n].
//
// Estimates are memoized, so the sampled distribution is fixed once every
// element it touches has been estimated.
class TrimmingSampler {
 public:
  // `samples` is the number of draws the caller plans; it sets the per-draw
  // confidence delta / (2 samples). Requires 0 < eps < 1/2.
  TrimmingSampler(ConditionalOracle& oracle, double epsilon, double delta,
                  std::uint64_t samples);

  std::vector<TrimmedSample> Draw(std::uint64_t s);

  struct Counts {
    std::uint64_t trimmed = 0;  // outcome 0
    // Emitted elements (0-based) with their emission counts.
    std::vector<std::pair<std::size_t, std::uint64_t>> emitted;
  };
  // s draws tallied per element; same distribution as Draw(s).
  Counts DrawCounts(std::uint64_t s);

  double Estimate(std::size_t i);
  // Grid level g in [1, K-1], or 0 when trimmed.
  std::size_t Level(std::size_t i);
  double Value(std::size_t i);

  const std::vector<double>& grid() const { return grid_; }  // grid_[g-1]
  double GridValue(std::size_t g) const { return grid_[g - 1]; }
  std::size_t reference() const { return reference_; }
  double reference_estimate() const { return reference_estimate_; }
  double epsilon() const { return epsilon_; }

 private:
  void FindReference();
  std::size_t LevelOf(double estimate) const;

  ConditionalOracle& oracle_;
  double epsilon_;
  double delta_;
  std::uint64_t planned_;
  std::vector<double> grid_;
  std::vector<std::size_t> all_;
  std::size_t reference_ = 0;
  double reference_estimate_ = 0;
  bool have_reference_ = false;
  std::unordered_map<std::size_t, double> estimates_;
};

// Exact sampled distribution over {0} u [n] (entry 0 is the trimmed mass),
// reconstructed from the sampler's rounding rule. Estimates every element.
std::vector<double> ReconstructTrimmed(TrimmingSampler& sampler, const Distribution& truth);

}  // namespace condtest

#endif  // CONDTEST_TRIMMING_H_
