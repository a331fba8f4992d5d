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

#ifndef CONDTEST_STATS_H_
#define CONDTEST_STATS_H_

#include <cstdint>
#include <span>

namespace condtest {

struct RateInterval {
  double rate = 0;
  double lo = 0;
  double hi = 0;
};

// Wilson score interval for `successes` out of `trials` at normal quantile z.
RateInterval WilsonInterval(std::uint64_t successes, std::uint64_t trials, double z = 1.96);

// sqrt(p (1 - p) / trials).
double BinomialSigma(double p, std::uint64_t trials);

// Least-squares slope of log(y) against log(x). Needs two or more distinct x
// and positive values.
double LogLogSlope(std::span<const double> x, std::span<const double> y);

double Mean(std::span<const double> v);

}  // namespace condtest

#endif  // CONDTEST_STATS_H_
