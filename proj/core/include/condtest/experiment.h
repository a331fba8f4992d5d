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

#ifndef CONDTEST_EXPERIMENT_H_
#define CONDTEST_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "condtest/distribution.h"
#include "condtest/generators.h"
#include "condtest/interval.h"

namespace condtest {

inline constexpr const char* kReportSchema = "condtest.report/1";

// Algorithms: pull-partition, assess-partition, test-uniformity, learn,
// test-property, atlas-learn, atlas-test, atlas-tolerant-test.
struct AlgorithmParams {
  double epsilon = 0.25;
  double delta = 0.1;
  std::optional<double> eta;
  std::optional<double> gamma;
  std::size_t L = 1;
  // Equal-width partition into k intervals for atlas-learn (0: pull one).
  std::size_t k = 0;
  std::string model = "adaptive";
  std::string property = "uniform";
  std::optional<Interval> interval;  // test-uniformity target (default [n])
};

struct ExperimentConfig {
  GeneratorSpec generator;
  std::optional<Distribution> distribution;  // overrides the generator
  std::string algorithm = "test-uniformity";
  AlgorithmParams params;
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  std::string profile = "desk";
  unsigned workers = 0;  // 0: hardware concurrency
  bool timing = true;    // false: runtime_ms is reported as 0
};

struct TrialReport {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::string verdict;
  std::uint64_t uncond_queries = 0;
  std::uint64_t cond_queries = 0;
  std::optional<double> truth_distance;
  double runtime_ms = 0;
  nlohmann::json details;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialReport> trials;
  nlohmann::json aggregate;
};

ExperimentConfig ConfigFromJson(const nlohmann::json& j);
nlohmann::json ConfigToJson(const ExperimentConfig& c);

// Validates the configuration without running anything.
void ValidateConfig(const ExperimentConfig& c);

TrialReport RunTrial(const ExperimentConfig& c, const Distribution& truth,
                     std::uint64_t trial);
ExperimentReport RunExperiment(const ExperimentConfig& c);

// Columns: trial, seed, verdict, uncond_queries, cond_queries, truth_distance,
// runtime_ms.
std::string ReportToCsv(const ExperimentReport& r);
nlohmann::json ReportToJson(const ExperimentReport& r);

}  // namespace condtest

#endif  // CONDTEST_EXPERIMENT_H_
