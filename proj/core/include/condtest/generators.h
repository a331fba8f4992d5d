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

#ifndef CONDTEST_GENERATORS_H_
#define CONDTEST_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "condtest/distribution.h"

namespace condtest {

// Synthetic ground truth. Kinds and the fields they read:
//   uniform
//   point-mass        at
//   zipf              exponent
//   k-histogram       k, seed          (random breakpoints and levels)
//   staircase         levels           (equal blocks, masses levels:...:1)
//   half-heavy        epsilon          (first half (1+eps)/n, rest (1-eps)/n)
//   sawtooth          epsilon, period  ((1+eps)/n and (1-eps)/n alternating
//                                       in runs of `period`)
//   support-limited   support, seed    (uniform on `support` random points)
//   mixture           weights, components
struct GeneratorSpec {
  std::string kind = "uniform";
  std::size_t n = 1024;
  std::uint64_t seed = 0;
  std::size_t at = 0;
  double exponent = 1.0;
  std::size_t k = 4;
  std::size_t levels = 4;
  double epsilon = 0.25;
  std::size_t period = 1;
  std::size_t support = 8;
  std::vector<double> weights;
  std::vector<GeneratorSpec> components;
};

struct Generated {
  Distribution dist;
  // Exact ground-truth quantities: "d_uniform" and "bias" always, plus
  // kind-specific closed forms such as "d_khist" (distance to k-histograms
  // with the generator's k) or "d_support" (distance to support <= support).
  std::map<std::string, double> annotations;
};

Generated Generate(const GeneratorSpec& spec);

// Names accepted by Generate.
const std::vector<std::string>& GeneratorKinds();

}  // namespace condtest

#endif  // CONDTEST_GENERATORS_H_
