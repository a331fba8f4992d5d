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

#ifndef CONDTEST_DISTRIBUTION_H_
#define CONDTEST_DISTRIBUTION_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "condtest/interval.h"

namespace condtest {

class CounterRng;

// Immutable probability vector over [0, n) with prefix sums and an alias
// table for fast sampling.
class Distribution {
 public:
  // Inputs summing to within 1e-9 of one are renormalized; anything worse,
  // or any negative / non-finite entry, throws UsageError.
  explicit Distribution(std::vector<double> p);

  static Distribution Uniform(std::size_t n);
  static Distribution PointMass(std::size_t n, std::size_t at);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& masses() const { return p_; }

  // Exact mass of an interval; exactly zero when every member is zero.
  double Mass(const Interval& I) const { return prefix_[I.hi + 1] - prefix_[I.lo]; }
  double Mass(std::span<const std::size_t> set) const;

  // Draws from the full distribution in O(1).
  std::size_t Sample(CounterRng& rng) const;
  // Draws from the restriction to I in O(log |I|); uniform if Mass(I) == 0.
  std::size_t SampleInterval(const Interval& I, CounterRng& rng) const;

 private:
  void BuildIndex();

  std::vector<double> p_;
  std::vector<double> prefix_;
  std::vector<double> alias_prob_;
  std::vector<std::uint32_t> alias_;
};

using DistributionPtr = std::shared_ptr<const Distribution>;

}  // namespace condtest

#endif  // CONDTEST_DISTRIBUTION_H_
