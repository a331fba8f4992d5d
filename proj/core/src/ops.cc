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

#include "condtest/ops.h"

#include <algorithm>
#include <cmath>

#include "condtest/errors.h"

namespace condtest {

double L1Distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw UsageError("domain sizes differ");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

double LinfDistance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw UsageError("domain sizes differ");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a[i] - b[i]));
  return s;
}

double L1Distance(const Distribution& a, const Distribution& b) {
  return L1Distance(a.masses(), b.masses());
}

double LinfDistance(const Distribution& a, const Distribution& b) {
  return LinfDistance(a.masses(), b.masses());
}

Distribution Restrict(const Distribution& d, const Interval& I) {
  if (I.hi >= d.size() || I.lo > I.hi) throw UsageError("interval outside the domain");
  double mass = d.Mass(I);
  if (!(mass > 0.0)) throw ZeroMassRestriction("restriction to a zero-mass interval");
  std::vector<double> q(d.masses().begin() + static_cast<std::ptrdiff_t>(I.lo),
                        d.masses().begin() + static_cast<std::ptrdiff_t>(I.hi) + 1);
  double total = 0;
  for (double x : q) total += x;
  for (double& x : q) x /= total;
  return Distribution(std::move(q));
}

double Bias(std::span<const double> values) {
  if (values.empty()) return 0.0;
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*hi == *lo) return 0.0;
  if (*lo <= 0.0) return kInfiniteBias;
  return *hi / *lo - 1.0;
}

double BiasOn(const Distribution& d, const Interval& I) {
  return Bias(std::span<const double>(d.masses()).subspan(I.lo, I.size()));
}

double DistanceToUniformOn(const Distribution& d, const Interval& I) {
  double mass = d.Mass(I);
  if (!(mass > 0.0)) return 0.0;
  double u = 1.0 / static_cast<double>(I.size());
  double s = 0;
  for (std::size_t i = I.lo; i <= I.hi; ++i) s += std::abs(d[i] / mass - u);
  return s;
}

namespace {
void CheckCovers(const Distribution& d, const IntervalPartition& P) {
  if (P.domain_size() != d.size()) {
    throw UsageError("partition domain does not match the distribution");
  }
}
}  // namespace

Distribution Flatten(const Distribution& d, const IntervalPartition& P) {
  CheckCovers(d, P);
  std::vector<double> q(d.size());
  for (const Interval& I : P.intervals()) {
    // An already-flat interval is copied verbatim, so flattening is
    // idempotent bit for bit.
    bool flat = true;
    for (std::size_t i = I.lo + 1; i <= I.hi && flat; ++i) flat = d[i] == d[I.lo];
    const double avg = flat ? d[I.lo] : d.Mass(I) / static_cast<double>(I.size());
    for (std::size_t i = I.lo; i <= I.hi; ++i) q[i] = avg;
  }
  return Distribution(std::move(q));
}

Distribution Coarsen(const Distribution& d, const IntervalPartition& P) {
  CheckCovers(d, P);
  std::vector<double> c(P.length());
  for (std::size_t j = 0; j < P.length(); ++j) c[j] = d.Mass(P[j]);
  return Distribution(std::move(c));
}

Distribution Uncoarsen(const Distribution& coarse, const IntervalPartition& P) {
  if (coarse.size() != P.length()) {
    throw UsageError("coarse distribution length does not match the partition");
  }
  std::vector<double> q(P.domain_size());
  for (std::size_t j = 0; j < P.length(); ++j) {
    const Interval& I = P[j];
    double v = coarse[j] / static_cast<double>(I.size());
    for (std::size_t i = I.lo; i <= I.hi; ++i) q[i] = v;
  }
  return Distribution(std::move(q));
}

ViolationReport InspectViolatingWeight(const Distribution& d,
                                       const IntervalPartition& P, double eta,
                                       double gamma, double epsilon) {
  CheckCovers(d, P);
  ViolationReport r;
  for (const Interval& I : P.intervals()) {
    double mass = d.Mass(I);
    if (I.size() > 1 && mass > eta) r.heavy_weight += mass;
    if (BiasOn(d, I) > gamma) r.high_bias_weight += mass;
    if (DistanceToUniformOn(d, I) > epsilon) r.far_weight += mass;
  }
  return r;
}

}  // namespace condtest
