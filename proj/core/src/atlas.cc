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

#include "condtest/atlas.h"

#include <algorithm>
#include <cmath>

#include "condtest/errors.h"

namespace condtest {

void Inventory::Add(double value, std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  if (!(value >= 0) || !std::isfinite(value)) {
    throw UsageError("inventory values must be finite and non-negative");
  }
  counts[value] += multiplicity;
}

std::uint64_t Inventory::size() const {
  std::uint64_t s = 0;
  for (const auto& [v, c] : counts) s += c;
  return s;
}

double Inventory::total() const {
  double s = 0;
  for (const auto& [v, c] : counts) s += v * static_cast<double>(c);
  return s;
}

std::size_t Inventory::nonzero() const {
  std::size_t s = 0;
  for (const auto& [v, c] : counts) {
    if (v > 0) s += c;
  }
  return s;
}

std::vector<double> Inventory::Sorted() const {
  std::vector<double> out;
  for (const auto& [v, c] : counts) out.insert(out.end(), c, v);
  return out;
}

void Atlas::Validate() const {
  if (inventories.size() != partition.length()) {
    throw UsageError("atlas needs one inventory per interval");
  }
  double total = 0;
  for (std::size_t j = 0; j < inventories.size(); ++j) {
    if (inventories[j].size() != partition[j].size()) {
      throw UsageError("inventory " + std::to_string(j) + " does not match its interval size");
    }
    total += inventories[j].total();
  }
  if (std::abs(total - 1.0) > 1e-9) throw UsageError("atlas values must sum to one");
}

Distribution Atlas::CanonicalConformer() const {
  Validate();
  std::vector<double> p(partition.domain_size());
  for (std::size_t j = 0; j < inventories.size(); ++j) {
    std::size_t i = partition[j].lo;
    for (const auto& [v, c] : inventories[j].counts) {
      for (std::uint64_t t = 0; t < c; ++t) p[i++] = v;
    }
  }
  return Distribution(std::move(p));
}

Inventory InventoryOf(const Distribution& d, const Interval& I) {
  if (I.hi >= d.size()) throw UsageError("interval outside the domain");
  Inventory inv;
  for (std::size_t i = I.lo; i <= I.hi; ++i) inv.Add(d[i]);
  return inv;
}

Atlas AtlasOf(const Distribution& d, const IntervalPartition& P) {
  if (P.domain_size() != d.size()) throw UsageError("partition does not cover the domain");
  Atlas a;
  a.partition = P;
  a.inventories.reserve(P.length());
  for (const Interval& I : P.intervals()) a.inventories.push_back(InventoryOf(d, I));
  return a;
}

double ValueDistance(const Inventory& a, const Inventory& b) {
  if (a.size() != b.size()) throw UsageError("value distance needs equal-size inventories");
  auto ia = a.counts.begin();
  auto ib = b.counts.begin();
  std::uint64_t left_a = ia == a.counts.end() ? 0 : ia->second;
  std::uint64_t left_b = ib == b.counts.end() ? 0 : ib->second;
  double s = 0;
  while (ia != a.counts.end() && ib != b.counts.end()) {
    const std::uint64_t t = std::min(left_a, left_b);
    s += std::abs(ia->first - ib->first) * static_cast<double>(t);
    left_a -= t;
    left_b -= t;
    if (left_a == 0 && ++ia != a.counts.end()) left_a = ia->second;
    if (left_b == 0 && ++ib != b.counts.end()) left_b = ib->second;
  }
  return s;
}

double ConformsDistance(const Distribution& d, const Atlas& A) {
  if (A.partition.domain_size() != d.size() || A.inventories.size() != A.partition.length()) {
    throw UsageError("atlas does not match the distribution's domain");
  }
  double s = 0;
  for (std::size_t j = 0; j < A.partition.length(); ++j) {
    s += ValueDistance(InventoryOf(d, A.partition[j]), A.inventories[j]);
  }
  return s;
}

double DistanceToSupportAtMost(std::span<const double> values, std::size_t s0) {
  std::vector<double> positive;
  for (double v : values) {
    if (v > 0) positive.push_back(v);
  }
  if (positive.size() <= s0) return 0.0;
  const std::size_t excess = positive.size() - s0;
  std::nth_element(positive.begin(), positive.begin() + static_cast<std::ptrdiff_t>(excess),
                   positive.end());
  double s = 0;
  for (std::size_t i = 0; i < excess; ++i) s += positive[i];
  return 2.0 * s;
}

AtlasPropertySpec SupportSizeProperty(std::size_t s0) {
  if (s0 == 0) throw UsageError("support bound must be positive");
  return {"support:" + std::to_string(s0), [](double, std::size_t) { return std::size_t{1}; },
          [s0](const Atlas& a) {
            // Merge all inventories; the smallest excess values go first.
            std::vector<std::pair<double, std::uint64_t>> runs;
            std::uint64_t positive = 0;
            for (const Inventory& inv : a.inventories) {
              for (const auto& [v, c] : inv.counts) {
                if (v > 0) {
                  runs.emplace_back(v, c);
                  positive += c;
                }
              }
            }
            if (positive <= s0) return 0.0;
            std::sort(runs.begin(), runs.end());
            std::uint64_t excess = positive - s0;
            double s = 0;
            for (const auto& [v, c] : runs) {
              const std::uint64_t take = std::min(c, excess);
              s += v * static_cast<double>(take);
              excess -= take;
              if (excess == 0) break;
            }
            return 2.0 * s;
          }};
}

AtlasPropertySpec RelaxedProperty(const AtlasPropertySpec& base, double eta) {
  if (!(eta >= 0)) throw UsageError("eta must be non-negative");
  AtlasPropertySpec out = base;
  out.name = base.name + "~" + std::to_string(eta);
  out.conformance = [inner = base.conformance, eta](const Atlas& a) {
    return std::max(0.0, inner(a) - eta);
  };
  return out;
}

AtlasPropertySpec AtlasPropertyByName(const std::string& name) {
  if (name.rfind("support:", 0) == 0) {
    const std::string arg = name.substr(8);
    std::size_t pos = 0;
    unsigned long long s0 = 0;
    try {
      s0 = std::stoull(arg, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != 0 && pos == arg.size() && s0 > 0) {
      return SupportSizeProperty(static_cast<std::size_t>(s0));
    }
  }
  throw UsageError("unknown atlas property '" + name + "' (expected support:<s0>)");
}

}  // namespace condtest
