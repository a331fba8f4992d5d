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

#ifndef CONDTEST_OPS_H_
#define CONDTEST_OPS_H_

#include <limits>

#include "condtest/distribution.h"
#include "condtest/interval.h"

namespace condtest {

inline constexpr double kInfiniteBias = std::numeric_limits<double>::infinity();

double L1Distance(const Distribution& a, const Distribution& b);
double LinfDistance(const Distribution& a, const Distribution& b);
double L1Distance(std::span<const double> a, std::span<const double> b);
double LinfDistance(std::span<const double> a, std::span<const double> b);

// Renormalized restriction to I; throws ZeroMassRestriction if d(I) == 0.
Distribution Restrict(const Distribution& d, const Interval& I);

// max/min - 1; kInfiniteBias if min == 0 < max; 0 when all entries agree.
double Bias(std::span<const double> values);
inline double Bias(const Distribution& d) { return Bias(d.masses()); }
// Bias of the restriction of d to I (scale-free, so no renormalization).
double BiasOn(const Distribution& d, const Interval& I);
// l1 distance between d restricted to I and the uniform distribution on I;
// zero-mass intervals count as uniform.
double DistanceToUniformOn(const Distribution& d, const Interval& I);

Distribution Flatten(const Distribution& d, const IntervalPartition& P);
Distribution Coarsen(const Distribution& d, const IntervalPartition& P);
Distribution Uncoarsen(const Distribution& coarse, const IntervalPartition& P);

// Ground-truth accessor for tests and experiments only.
struct ViolationReport {
  double heavy_weight = 0;      // non-singleton intervals with mass > eta
  double high_bias_weight = 0;  // intervals with bias > gamma
  double far_weight = 0;        // intervals with d(mu|I, U_I) > epsilon
};
ViolationReport InspectViolatingWeight(const Distribution& d,
                                       const IntervalPartition& P, double eta,
                                       double gamma, double epsilon);

}  // namespace condtest

#endif  // CONDTEST_OPS_H_
