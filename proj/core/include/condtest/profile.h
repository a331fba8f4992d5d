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

#ifndef CONDTEST_PROFILE_H_
#define CONDTEST_PROFILE_H_

#include <string>

namespace condtest {

// Exponents of log2(n) used by the non-adaptive tester's thresholds.
struct NonAdaptiveExponents {
  double small_interval = 10;  // brute-force branch for |I| <= log^a n
  double window = 8;           // collision sets and k-selection window
  double collision = 3;        // draws per collision round
  double samples = 16;         // per-set conditional sample count
};

// Every constant that differs between the paper-faithful configuration and
// the desk-scale one. docs/constants.md lists both columns.
struct Profile {
  std::string name;

  // Learner: pull with eta = eps/(D L) and gamma = eps/D.
  double pull_divisor = 2000;
  // r = length_factor * L * ln(1/eps) / eps; a value <= 0 uses the
  // structural bound 2m + 1 of the pulled partition instead.
  double length_factor = 1e5;
  double assess_divisor = 20;
  double flat_divisor = 10;
  double learn_confidence = 1.0 / 9.0;
  // Property tester: L = L_fn(eps / G, n).
  double property_gamma_divisor = 4000;

  // Unconditional collision tester: s = c sqrt(|I|) / eps^2 per round,
  // majority vote assuming a single-round error of majority_base_error.
  double collision_constant = 24;
  double majority_base_error = 1.0 / 3.0;

  // Adaptive pair tester: R = c_r ln(2/delta)/eps pairs, each compared with
  // k = c_q ln(2R/delta)/eps^2 conditional queries.
  double pair_rounds_constant = 1;
  double pair_queries_constant = 4;

  // Non-adaptive tester.
  NonAdaptiveExponents exponents;
  double window_samples_constant = 1;  // C
  double hits_divisor = 40;
  double linf_divisor = 80;
  double linf_confidence = 0.1;

  // Atlas tester and learner.
  double atlas_divisor = 5;
  double atlas_confidence = 1.0 / 6.0;
  double sampler_divisor = 8;
  double estimate_divisor = 40;

  static Profile Paper();
  static Profile Desk();
  // "paper" or "desk"; throws UsageError otherwise.
  static Profile ByName(const std::string& name);
};

}  // namespace condtest

#endif  // CONDTEST_PROFILE_H_
