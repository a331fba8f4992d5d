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

#ifndef CONDTEST_SRC_SAMPLING_H_
#define CONDTEST_SRC_SAMPLING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "condtest/rng.h"

namespace condtest::internal {

std::uint64_t Binomial(CounterRng& rng, std::uint64_t n, double p);

// Failures before the k-th success in Bernoulli(p) trials; p > 0.
std::uint64_t NegativeBinomial(CounterRng& rng, std::uint64_t k, double p);

// Binomial(n, p) conditioned on the outcome being below `limit` (limit >= 1).
std::uint64_t BinomialBelow(CounterRng& rng, std::uint64_t n, double p,
                            std::uint64_t limit);

// Multinomial(n, weights / sum(weights)) written into `out`. A zero total
// weight is treated as uniform.
void Multinomial(CounterRng& rng, std::uint64_t n,
                 std::span<const double> weights,
                 std::vector<std::uint64_t>& out);

}  // namespace condtest::internal

#endif  // CONDTEST_SRC_SAMPLING_H_
