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

#include "condtest/decomposable.h"

#include <cmath>

#include "condtest/errors.h"
#include "condtest/learners.h"
#include "condtest/properties.h"
#include "condtest/pull.h"

namespace condtest {

LearnOutcome LearnDecomposable(ConditionalOracle& oracle, std::size_t L, double epsilon,
                               const Profile& profile, IntervalTester& tester) {
  const std::uint64_t before = oracle.ledger().total();
  LearnOutcome out;
  out.plan = LearnPlanFor(profile, L, epsilon, oracle.domain_size());
  const LearnPlan& plan = out.plan;
  out.partition = PullPartitionFromCounts(oracle.UnconditionalCounts(plan.pull_samples));
  if (out.partition.length() > plan.length_bound) {
    out.rejected = true;
    out.reject_reason = "length";
  } else {
    AssessParams ap;
    ap.c = static_cast<double>(L);
    ap.r = plan.length_bound;
    ap.epsilon = plan.assess_epsilon;
    ap.delta = plan.confidence;
    out.assessment = AssessPartition(oracle, out.partition, ap, tester);
    if (!out.assessment->accept) {
      out.rejected = true;
      out.reject_reason = "assess";
    } else {
      out.learned = LearnFlat(oracle, out.partition, plan.flat_epsilon, plan.confidence);
    }
  }
  out.queries = oracle.ledger().total() - before;
  return out;
}

PropertySpec UniformProperty() {
  return {"uniform", [](double, std::size_t) { return std::size_t{1}; },
          [](const Distribution& d) { return DistanceToUniform(d); }};
}

PropertySpec KHistogramProperty(std::size_t k) {
  if (k == 0) throw UsageError("k must be positive");
  return {"khist:" + std::to_string(k), [k](double, std::size_t) { return k; },
          [k](const Distribution& d) {
            return DistanceToKHistogram(d, std::min(k, d.size()));
          }};
}

PropertySpec MonotoneProperty() {
  return {"monotone",
          [](double gamma, std::size_t n) {
            return static_cast<std::size_t>(
                std::ceil(std::log(static_cast<double>(n)) * (1.0 + 1.0 / gamma)));
          },
          [](const Distribution& d) { return DistanceToMonotone(d); }};
}

PropertySpec PropertyByName(const std::string& name) {
  if (name == "uniform") return UniformProperty();
  if (name == "monotone") return MonotoneProperty();
  if (name.rfind("khist:", 0) == 0) {
    const std::string arg = name.substr(6);
    std::size_t pos = 0;
    unsigned long long k = 0;
    try {
      k = std::stoull(arg, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != arg.size() || k == 0) {
      throw UsageError("khist needs a positive integer, as in khist:4");
    }
    return KHistogramProperty(static_cast<std::size_t>(k));
  }
  throw UsageError("unknown property '" + name + "' (expected uniform, khist:<k>, monotone)");
}

PropertyVerdict TestDecomposableProperty(ConditionalOracle& oracle,
                                         const PropertySpec& prop, double epsilon,
                                         const Profile& profile, IntervalTester& tester) {
  if (!(epsilon > 0 && epsilon < 2)) throw UsageError("epsilon must lie in (0,2)");
  PropertyVerdict v;
  v.L = std::max<std::size_t>(
      1, prop.L(epsilon / profile.property_gamma_divisor, oracle.domain_size()));
  v.learn = LearnDecomposable(oracle, v.L, epsilon / 2.0, profile, tester);
  if (v.learn.learned) {
    v.learned_distance = prop.distance(*v.learn.learned);
    v.accept = *v.learned_distance <= epsilon / 2.0;
  }
  return v;
}

}  // namespace condtest
