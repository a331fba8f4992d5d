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

#ifndef CONDTEST_ATLAS_H_
#define CONDTEST_ATLAS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "condtest/distribution.h"
#include "condtest/interval.h"

namespace condtest {

// Order-forgetting multiset of non-negative values.
struct Inventory {
  std::map<double, std::uint64_t> counts;  // value -> multiplicity (> 0)

  void Add(double value, std::uint64_t multiplicity = 1);
  std::uint64_t size() const;
  double total() const;
  std::size_t nonzero() const;  // members with a positive value
  std::vector<double> Sorted() const;
  bool operator==(const Inventory&) const = default;
};

struct Atlas {
  IntervalPartition partition;
  std::vector<Inventory> inventories;

  // Throws UsageError unless inventory j has |I_j| members and all values
  // sum to one within 1e-9.
  void Validate() const;
  // The conformer that lists each interval's values in increasing order.
  Distribution CanonicalConformer() const;
};

Inventory InventoryOf(const Distribution& d, const Interval& I);
Atlas AtlasOf(const Distribution& d, const IntervalPartition& P);

// l1 distance between the sorted realizations; sizes must match.
double ValueDistance(const Inventory& a, const Inventory& b);

// Distance from d to the nearest distribution conforming to A.
double ConformsDistance(const Distribution& d, const Atlas& A);

// A property characterized by atlases: k(eps, n) bounds the atlas length, and
// `conformance` gives the minimum l1 distance between any distribution
// conforming to the atlas and the property.
struct AtlasPropertySpec {
  std::string name;
  std::function<std::size_t(double epsilon, std::size_t n)> k;
  std::function<double(const Atlas&)> conformance;
};

// Support size at most s0. Symmetric, so a single interval characterizes it.
// Conformance distance: twice the sum of the smallest (N - s0) positive
// values, N the number of positive values in the atlas.
AtlasPropertySpec SupportSizeProperty(std::size_t s0);
double DistanceToSupportAtMost(std::span<const double> values, std::size_t s0);

// The property of being eta-close to `base`: conformance is relaxed to
// max(0, d - eta).
AtlasPropertySpec RelaxedProperty(const AtlasPropertySpec& base, double eta);

// "support:<s0>".
AtlasPropertySpec AtlasPropertyByName(const std::string& name);

}  // namespace condtest

#endif  // CONDTEST_ATLAS_H_
