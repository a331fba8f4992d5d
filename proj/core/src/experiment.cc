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

#include "condtest/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>
#include <thread>

#include "condtest/assess.h"
#include "condtest/atlas_learn.h"
#include "condtest/budgets.h"
#include "condtest/decomposable.h"
#include "condtest/errors.h"
#include "condtest/json_io.h"
#include "condtest/ops.h"
#include "condtest/profile.h"
#include "condtest/pull.h"
#include "condtest/stats.h"
#include "condtest/uniformity.h"

namespace condtest {

using nlohmann::json;

namespace {

const std::vector<std::string>& Algorithms() {
  static const std::vector<std::string> names = {
      "pull-partition", "assess-partition", "test-uniformity",   "learn",
      "test-property",  "atlas-learn",      "atlas-test",        "atlas-tolerant-test"};
  return names;
}

bool Positive(const std::string& verdict) {
  return verdict == "accept" || verdict == "fine" || verdict == "learned";
}

IntervalPartition EqualPartition(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw UsageError("k must lie in [1, n]");
  std::vector<std::size_t> starts;
  for (std::size_t j = 0; j < k; ++j) starts.push_back(j * n / k);
  return IntervalPartition::FromStarts(n, starts);
}

void RunPull(const ExperimentConfig& c, const Distribution& truth, ConditionalOracle& oracle,
             TrialReport& out) {
  const AlgorithmParams& a = c.params;
  const double eta = a.eta.value_or(a.epsilon);
  const IntervalPartition P = PullPartition(oracle, {eta, a.gamma, a.delta});
  const ViolationReport v = InspectViolatingWeight(truth, P, eta, a.gamma.value_or(1), 1);
  const bool fine = a.gamma ? v.heavy_weight <= *a.gamma : v.heavy_weight == 0;
  out.verdict = fine ? "fine" : "not-fine";
  out.truth_distance = v.heavy_weight;
  out.details = {{"length", P.length()}, {"heavy_weight", v.heavy_weight}};
}

void RunAssess(const ExperimentConfig& c, const Distribution& truth, ConditionalOracle& oracle,
               TrialReport& out) {
  const AlgorithmParams& a = c.params;
  const Profile profile = Profile::ByName(c.profile);
  const LearnPlan plan = LearnPlanFor(profile, a.L, a.epsilon, truth.size());
  const double eta = a.eta.value_or(plan.eta), gamma = a.gamma.value_or(plan.gamma);
  const IntervalPartition P = PullPartition(oracle, {eta, gamma, plan.confidence});
  const std::uint64_t m = PullSampleCount({eta, gamma, plan.confidence});
  auto tester = MakeTester(a.model, profile);
  AssessParams ap{static_cast<double>(a.L), 2 * m + 1, a.epsilon, a.delta};
  const AssessOutcome o = AssessPartition(oracle, P, ap, *tester);
  const ViolationReport v = InspectViolatingWeight(truth, P, eta, gamma, a.epsilon);
  out.verdict = o.accept ? "accept" : "reject";
  out.truth_distance = v.far_weight;
  out.details = {{"length", P.length()},
                 {"rounds", o.rounds},
                 {"rejected_rounds", o.rejected},
                 {"threshold", o.threshold},
                 {"far_weight", v.far_weight},
                 {"high_bias_weight", v.high_bias_weight}};
}

void RunUniformity(const ExperimentConfig& c, const Distribution& truth,
                   ConditionalOracle& oracle, TrialReport& out) {
  const AlgorithmParams& a = c.params;
  const Interval I = a.interval.value_or(Interval{0, truth.size() - 1});
  auto tester = MakeTester(a.model, Profile::ByName(c.profile));
  const WTTVerdict v = tester->Test(oracle, {I, truth.size(), a.gamma.value_or(1.0),
                                             a.epsilon, a.delta});
  out.verdict = v.accept ? "accept" : "reject";
  out.truth_distance = DistanceToUniformOn(truth, I);
  out.details = {{"decided_by", v.decided_by},
                 {"interval", IntervalToJson(I)},
                 {"bias", BiasOn(truth, I)},
                 {"interval_mass", truth.Mass(I)}};
}

void RunLearn(const ExperimentConfig& c, const Distribution& truth, ConditionalOracle& oracle,
              TrialReport& out) {
  const AlgorithmParams& a = c.params;
  const Profile profile = Profile::ByName(c.profile);
  auto tester = MakeTester(a.model, profile);
  const LearnOutcome o = LearnDecomposable(oracle, a.L, a.epsilon, profile, *tester);
  out.details = {{"length", o.partition.length()}};
  if (o.learned) {
    out.verdict = "learned";
    out.truth_distance = L1Distance(truth, *o.learned);
  } else {
    out.verdict = "reject";
    out.details["reject_reason"] = o.reject_reason;
  }
}

void RunProperty(const ExperimentConfig& c, const Distribution& truth,
                 ConditionalOracle& oracle, TrialReport& out) {
  const AlgorithmParams& a = c.params;
  const Profile profile = Profile::ByName(c.profile);
  const PropertySpec prop = PropertyByName(a.property);
  auto tester = MakeTester(a.model, profile);
  const PropertyVerdict v = TestDecomposableProperty(oracle, prop, a.epsilon, profile, *tester);
  out.verdict = v.accept ? "accept" : "reject";
  out.truth_distance = prop.distance(truth);
  out.details = {{"L", v.L}, {"property", prop.name}};
  if (v.learned_distance) out.details["learned_distance"] = *v.learned_distance;
}

void RunAtlasLearn(const ExperimentConfig& c, const Distribution& truth,
                   ConditionalOracle& oracle, TrialReport& out) {
  const AlgorithmParams& a = c.params;
  const Profile profile = Profile::ByName(c.profile);
  IntervalPartition P = a.k > 0 ? EqualPartition(truth.size(), a.k)
                                : PullEtaFine(oracle, a.eta.value_or(a.epsilon), a.delta);
  const AtlasLearnReport rep = LearnAtlas(oracle, P, a.epsilon, a.delta, profile);
  const double d = ConformsDistance(truth, rep.atlas);
  out.verdict = d <= a.epsilon ? "accept" : "reject";
  out.truth_distance = d;
  out.details = {{"length", P.length()},
                 {"samples", rep.samples},
                 {"trimmed", rep.trimmed},
                 {"atlas", AtlasToJson(rep.atlas)}};
}

void RunAtlasTest(const ExperimentConfig& c, const Distribution& truth,
                  ConditionalOracle& oracle, TrialReport& out, bool tolerant) {
  const AlgorithmParams& a = c.params;
  const Profile profile = Profile::ByName(c.profile);
  const AtlasPropertySpec prop = AtlasPropertyByName(a.property);
  const AtlasTestVerdict v =
      tolerant ? TolerantTestAtlasProperty(oracle, prop, a.eta.value_or(0), a.epsilon, profile)
               : TestAtlasProperty(oracle, prop, a.epsilon, profile);
  out.verdict = v.accept ? "accept" : "reject";
  out.truth_distance = prop.conformance(AtlasOf(truth, IntervalPartition::Whole(truth.size())));
  out.details = {{"decided_by", v.decided_by}, {"k", v.k}, {"pulls", v.pulls}};
  if (v.conformance) out.details["learned_conformance"] = *v.conformance;
}

json Aggregate(const ExperimentReport& r) {
  std::uint64_t positive = 0;
  std::vector<double> uncond, cond, total, dist;
  for (const TrialReport& t : r.trials) {
    positive += Positive(t.verdict);
    uncond.push_back(static_cast<double>(t.uncond_queries));
    cond.push_back(static_cast<double>(t.cond_queries));
    total.push_back(static_cast<double>(t.uncond_queries + t.cond_queries));
    if (t.truth_distance) dist.push_back(*t.truth_distance);
  }
  const RateInterval rate = WilsonInterval(positive, r.trials.size());
  auto stats = [](const std::vector<double>& v) {
    return json{{"mean", Mean(v)}, {"max", v.empty() ? 0.0 : *std::max_element(v.begin(), v.end())}};
  };
  json agg = {{"trials", r.trials.size()},
              {"positive", positive},
              {"positive_rate", rate.rate},
              {"wilson95", {rate.lo, rate.hi}},
              {"queries",
               {{"unconditional", stats(uncond)},
                {"conditional", stats(cond)},
                {"total", stats(total)}}}};
  if (!dist.empty()) agg["truth_distance_mean"] = Mean(dist);
  return agg;
}

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

void ValidateConfig(const ExperimentConfig& c) {
  if (std::find(Algorithms().begin(), Algorithms().end(), c.algorithm) == Algorithms().end()) {
    throw UsageError("unknown algorithm '" + c.algorithm + "'");
  }
  if (c.trials == 0) throw UsageError("trials must be at least 1");
  Profile::ByName(c.profile);
  const AlgorithmParams& a = c.params;
  if (!(a.epsilon > 0)) throw UsageError("epsilon must be positive");
  if (!(a.delta > 0 && a.delta < 1)) throw UsageError("delta must lie in (0,1)");
  if (a.L == 0) throw UsageError("L must be positive");
}

TrialReport RunTrial(const ExperimentConfig& c, const Distribution& truth, std::uint64_t trial) {
  TrialReport out;
  out.trial = trial;
  out.seed = CounterRng::Derive(c.seed, trial);
  ConditionalOracle oracle(std::make_shared<const Distribution>(truth), out.seed);
  const auto start = std::chrono::steady_clock::now();
  const std::string& alg = c.algorithm;
  if (alg == "pull-partition") {
    RunPull(c, truth, oracle, out);
  } else if (alg == "assess-partition") {
    RunAssess(c, truth, oracle, out);
  } else if (alg == "test-uniformity") {
    RunUniformity(c, truth, oracle, out);
  } else if (alg == "learn") {
    RunLearn(c, truth, oracle, out);
  } else if (alg == "test-property") {
    RunProperty(c, truth, oracle, out);
  } else if (alg == "atlas-learn") {
    RunAtlasLearn(c, truth, oracle, out);
  } else if (alg == "atlas-test") {
    RunAtlasTest(c, truth, oracle, out, false);
  } else if (alg == "atlas-tolerant-test") {
    RunAtlasTest(c, truth, oracle, out, true);
  } else {
    throw UsageError("unknown algorithm '" + alg + "'");
  }
  if (c.timing) {
    out.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  out.uncond_queries = oracle.ledger().unconditional;
  out.cond_queries = oracle.ledger().conditional;
  return out;
}

ExperimentReport RunExperiment(const ExperimentConfig& c) {
  ValidateConfig(c);
  const Distribution truth = c.distribution ? *c.distribution : Generate(c.generator).dist;
  ExperimentReport rep;
  rep.config = c;
  rep.trials.resize(c.trials);
  unsigned workers = c.workers ? c.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, c.trials));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (;;) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= c.trials || failed.load()) return;
      try {
        rep.trials[t] = RunTrial(c, truth, t);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  rep.aggregate = Aggregate(rep);
  return rep;
}

ExperimentConfig ConfigFromJson(const json& j) {
  if (!j.is_object()) throw UsageError("experiment config must be a JSON object");
  ExperimentConfig c;
  try {
    if (j.contains("generator")) c.generator = GeneratorFromJson(j.at("generator"));
    if (j.contains("distribution")) c.distribution = DistributionFromJson(j.at("distribution"));
    c.algorithm = j.value("algorithm", c.algorithm);
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
    c.profile = j.value("profile", c.profile);
    c.workers = j.value("workers", c.workers);
    c.timing = j.value("timing", c.timing);
    const json p = j.value("params", json::object());
    AlgorithmParams& a = c.params;
    a.epsilon = p.value("epsilon", a.epsilon);
    a.delta = p.value("delta", a.delta);
    if (p.contains("eta")) a.eta = p.at("eta").get<double>();
    if (p.contains("gamma")) a.gamma = p.at("gamma").get<double>();
    a.L = p.value("L", a.L);
    a.k = p.value("k", a.k);
    a.model = p.value("model", a.model);
    a.property = p.value("property", a.property);
    if (p.contains("interval")) {
      const std::size_t n = c.distribution ? c.distribution->size() : c.generator.n;
      a.interval = IntervalFromJson(p.at("interval"), n);
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid experiment config: ") + e.what());
  }
  ValidateConfig(c);
  return c;
}

json ConfigToJson(const ExperimentConfig& c) {
  const AlgorithmParams& a = c.params;
  json p = {{"epsilon", a.epsilon}, {"delta", a.delta}, {"L", a.L},
            {"k", a.k},             {"model", a.model}, {"property", a.property}};
  if (a.eta) p["eta"] = *a.eta;
  if (a.gamma) p["gamma"] = *a.gamma;
  if (a.interval) p["interval"] = IntervalToJson(*a.interval);
  json j = {{"algorithm", c.algorithm}, {"trials", c.trials}, {"seed", c.seed},
            {"profile", c.profile},     {"timing", c.timing}, {"params", p}};
  if (c.distribution) {
    j["distribution"] = DistributionToJson(*c.distribution);
  } else {
    j["generator"] = GeneratorToJson(c.generator);
  }
  return j;
}

std::string ReportToCsv(const ExperimentReport& r) {
  std::ostringstream os;
  os << "trial,seed,verdict,uncond_queries,cond_queries,truth_distance,runtime_ms\n";
  for (const TrialReport& t : r.trials) {
    os << t.trial << ',' << t.seed << ',' << t.verdict << ',' << t.uncond_queries << ','
       << t.cond_queries << ',' << (t.truth_distance ? FormatDouble(*t.truth_distance) : "")
       << ',' << FormatDouble(t.runtime_ms) << '\n';
  }
  return os.str();
}

json ReportToJson(const ExperimentReport& r) {
  json trials = json::array();
  for (const TrialReport& t : r.trials) {
    json o = {{"trial", t.trial},
              {"seed", t.seed},
              {"verdict", t.verdict},
              {"uncond_queries", t.uncond_queries},
              {"cond_queries", t.cond_queries},
              {"runtime_ms", t.runtime_ms},
              {"details", t.details}};
    o["truth_distance"] = t.truth_distance ? json(*t.truth_distance) : json(nullptr);
    trials.push_back(std::move(o));
  }
  return {{"schema", kReportSchema},
          {"config", ConfigToJson(r.config)},
          {"aggregate", r.aggregate},
          {"trials", std::move(trials)}};
}

}  // namespace condtest
