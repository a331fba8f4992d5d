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

#ifndef CONDTEST_PROPERTIES_H_
#define CONDTEST_PROPERTIES_H_

#include <cstddef>

#include "condtest/distribution.h"

namespace condtest {

// Exact l1 distance to the uniform distribution.
double DistanceToUniform(const Distribution& d);

// Minimum over partitions into at most k intervals of d(mu, flattening).
// The true l1 distance to k-histograms lies in [D/2, D]. Throws UsageError
// when k == 0 or k > n.
double DistanceToKHistogram(const Distribution& d, std::size_t k);

struct MonotoneDistance {
  double value = 0;
  bool exact = false;  // false: an upper bound
};

inline constexpr std::size_t kMonotoneExactLimit = 128;

// l1 distance to the set of non-increasing distributions. Solved exactly as a
// linear program for n <= kMonotoneExactLimit; above that, the distance to
// the renormalized l1 isotonic fit is returned as an upper bound.
MonotoneDistance DistanceToMonotoneDetailed(const Distribution& d);
inline double DistanceToMonotone(const Distribution& d) {
  return DistanceToMonotoneDetailed(d).value;
}

// Renormalized l1 isotonic (non-increasing) fit.
Distribution MonotoneFit(const Distribution& d);

}  // namespace condtest

#endif  // CONDTEST_PROPERTIES_H_
