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

#ifndef CONDTEST_INTERVAL_H_
#define CONDTEST_INTERVAL_H_

#include <cstddef>
#include <vector>

namespace condtest {

// Closed range {lo, ..., hi} of 0-based domain indices.
struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t size() const { return hi - lo + 1; }
  bool contains(std::size_t i) const { return lo <= i && i <= hi; }
  bool operator==(const Interval&) const = default;
};

// Ordered, contiguous, disjoint intervals whose union is [0, n).
class IntervalPartition {
 public:
  IntervalPartition() = default;
  // Throws UsageError unless `intervals` tile [0, n) in order.
  IntervalPartition(std::size_t n, std::vector<Interval> intervals);

  static IntervalPartition Whole(std::size_t n);
  static IntervalPartition Singletons(std::size_t n);
  // Intervals start at each entry of `starts` (sorted, starts[0] == 0).
  static IntervalPartition FromStarts(std::size_t n,
                                      const std::vector<std::size_t>& starts);

  std::size_t domain_size() const { return n_; }
  std::size_t length() const { return intervals_.size(); }
  const Interval& operator[](std::size_t j) const { return intervals_[j]; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  // Index of the interval containing domain element i (binary search).
  std::size_t Locate(std::size_t i) const;

  bool operator==(const IntervalPartition&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Interval> intervals_;
};

}  // namespace condtest

#endif  // CONDTEST_INTERVAL_H_
