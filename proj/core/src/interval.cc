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

#include "condtest/interval.h"

#include <algorithm>
#include <string>

#include "condtest/errors.h"

namespace condtest {

IntervalPartition::IntervalPartition(std::size_t n,
                                     std::vector<Interval> intervals)
    : n_(n), intervals_(std::move(intervals)) {
  if (n_ == 0) throw UsageError("partition over an empty domain");
  if (intervals_.empty()) throw UsageError("partition has no intervals");
  std::size_t next = 0;
  for (const Interval& I : intervals_) {
    if (I.lo != next || I.hi < I.lo || I.hi >= n_) {
      throw UsageError("intervals must tile the domain in order (at index " +
                       std::to_string(next) + ")");
    }
    next = I.hi + 1;
  }
  if (next != n_) throw UsageError("intervals do not cover the domain");
}

IntervalPartition IntervalPartition::Whole(std::size_t n) {
  if (n == 0) throw UsageError("partition over an empty domain");
  return IntervalPartition(n, {Interval{0, n - 1}});
}

IntervalPartition IntervalPartition::Singletons(std::size_t n) {
  std::vector<Interval> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Interval{i, i};
  return IntervalPartition(n, std::move(v));
}

IntervalPartition IntervalPartition::FromStarts(
    std::size_t n, const std::vector<std::size_t>& starts) {
  if (starts.empty() || starts.front() != 0) {
    throw UsageError("interval starts must begin at 0");
  }
  std::vector<Interval> v;
  v.reserve(starts.size());
  for (std::size_t j = 0; j < starts.size(); ++j) {
    std::size_t end = j + 1 < starts.size() ? starts[j + 1] : n;
    if (end <= starts[j]) throw UsageError("interval starts must increase");
    v.push_back(Interval{starts[j], end - 1});
  }
  return IntervalPartition(n, std::move(v));
}

std::size_t IntervalPartition::Locate(std::size_t i) const {
  if (i >= n_) throw UsageError("index outside the partition's domain");
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), i,
      [](std::size_t x, const Interval& I) { return x < I.lo; });
  return static_cast<std::size_t>(it - intervals_.begin()) - 1;
}

}  // namespace condtest
