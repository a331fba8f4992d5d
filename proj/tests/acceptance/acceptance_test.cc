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

// Acceptance checks, one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "condtest/atlas.h"
#include "condtest/atlas_learn.h"
#include "condtest/budgets.h"
#include "condtest/decomposable.h"
#include "condtest/generators.h"
#include "condtest/nonadaptive.h"
#include "condtest/ops.h"
#include "condtest/profile.h"
#include "condtest/pull.h"
#include "condtest/rng.h"
#include "condtest/trimming.h"
#include "condtest/uniformity.h"

namespace condtest {
namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

ConditionalOracle Oracle(const Distribution& d, std::uint64_t seed) {
  return ConditionalOracle(std::make_shared<const Distribution>(d), seed);
}

double Sigma(double p, double trials) { return std::sqrt(p * (1 - p) / trials); }

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

GeneratorSpec Gen(const std::string& kind, std::size_t n, std::uint64_t seed = 1) {
  GeneratorSpec s;
  s.kind = kind;
  s.n = n;
  s.seed = seed;
  return s;
}

Distribution Make(const GeneratorSpec& s) { return Generate(s).dist; }

// Every generator kind once, plus a steeper Zipf.
std::vector<GeneratorSpec> Suite(std::size_t n) {
  std::vector<GeneratorSpec> out;
  for (const std::string& kind : GeneratorKinds()) {
    GeneratorSpec s = Gen(kind, n, 5);
    s.period = 8;
    s.at = n / 3;
    if (kind == "mixture") {
      s.components = {Gen("zipf", n), Gen("uniform", n)};
      s.weights = {0.5, 0.5};
    }
    out.push_back(s);
  }
  GeneratorSpec z = Gen("zipf", n);
  z.exponent = 2.0;
  out.push_back(z);
  return out;
}

std::string Label(const GeneratorSpec& s) {
  return s.kind == "zipf" ? Fmt("zipf(%.1f)", s.exponent) : s.kind;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Result PulledFineness() {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = 1 << 14;
  std::string detail;
  bool pass = true;
  for (const std::string& kind : {"zipf", "uniform"}) {
    const Distribution d = Make(Gen(kind, n));
    int fine = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
      auto o = Oracle(d, 100 + t);
      const IntervalPartition P = PullEtaFine(o, 0.05, 0.1);
      fine += InspectViolatingWeight(d, P, 0.05, 0, 1).heavy_weight == 0;
    }
    pass = pass && fine >= 170;
    detail += Fmt("%s %d/200 fine; ", kind.c_str(), fine);
  }
  const double secs = Seconds(start);
  pass = pass && secs < 10;
  return {pass, detail + Fmt("%.2fs", secs)};
}

Result RelaxedFineness() {
  const std::size_t n = 1 << 14;
  std::string detail;
  bool pass = true;
  for (const std::string& kind : {"zipf", "uniform"}) {
    const Distribution d = Make(Gen(kind, n));
    int fine = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
      auto o = Oracle(d, 300 + t);
      const IntervalPartition P = PullEtaGammaFine(o, 0.01, 0.2, 0.1);
      fine += InspectViolatingWeight(d, P, 0.01, 0, 1).heavy_weight <= 0.2;
    }
    pass = pass && fine >= 170;
    detail += Fmt("%s %d/200 with violating weight <= 0.2; ", kind.c_str(), fine);
  }
  return {pass, detail};
}

Result DecomposableSmallWeight() {
  const double gamma = 0.1;
  const std::size_t L = 8;
  int checked = 0, held = 0, pulls = 0;
  double worst = 0;
  for (std::uint64_t t = 0; checked < 100 && t < 400; ++t) {
    GeneratorSpec s = Gen("k-histogram", 4096, 10 + t);
    s.k = L;
    const Distribution d = Make(s);
    auto o = Oracle(d, 700 + t);
    const IntervalPartition P = PullEtaGammaFine(o, gamma / L, gamma, 0.1);
    ++pulls;
    const ViolationReport v = InspectViolatingWeight(d, P, gamma / L, gamma, 1);
    if (v.heavy_weight > gamma) continue;
    ++checked;
    held += v.high_bias_weight <= 3 * gamma;
    worst = std::max(worst, v.high_bias_weight);
  }
  return {checked == 100 && held == 100,
          Fmt("%d/%d fine partitions within 3*gamma (%d pulls); worst weight %.4f", held,
              checked, pulls, worst)};
}

Result FlatteningBound() {
  int pairs = 0, held = 0;
  CounterRng rng(44);
  double worst_slack = std::numeric_limits<double>::infinity();
  for (const GeneratorSpec& s : Suite(2048)) {
    const Distribution d = Make(s);
    for (std::uint64_t t = 0; t < 10; ++t) {
      auto o = Oracle(d, 900 + t);
      const IntervalPartition P = PullEtaFine(o, 0.02 + 0.02 * static_cast<double>(t), 0.1);
      const double gamma = 0.05 + 0.5 * rng.Uniform();
      const double far = InspectViolatingWeight(d, P, 1, kInfiniteBias, gamma).far_weight;
      const double lhs = L1Distance(d, Flatten(d, P));
      ++pairs;
      held += lhs <= gamma + 2 * far;
      worst_slack = std::min(worst_slack, gamma + 2 * far - lhs);
    }
  }
  return {pairs == 100 && held == 100,
          Fmt("%d/%d pairs satisfy d(mu, flat) <= gamma + 2 eta; min slack %.4g", held, pairs,
              worst_slack)};
}

Result UniformityTesters() {
  const std::size_t n = 1024;
  const int trials = 150;
  const double floor = 0.8 - 3 * Sigma(0.8, trials);
  const Distribution uniform = Distribution::Uniform(n);
  GeneratorSpec hs = Gen("half-heavy", n);
  hs.epsilon = 0.25;
  const Distribution heavy = Make(hs);
  const WTTInput in{Interval{0, n - 1}, n, 1.0, 0.25, 0.2};
  bool pass = true;
  std::string detail;
  for (const std::string model : {"uncond", "adaptive", "nonadaptive"}) {
    int accept_uniform = 0, reject_far = 0;
    for (int t = 0; t < trials; ++t) {
      auto tester = MakeTester(model, Profile::Desk());
      auto a = Oracle(uniform, 2000 + t);
      accept_uniform += tester->Test(a, in).accept;
      auto tester2 = MakeTester(model, Profile::Desk());
      auto b = Oracle(heavy, 5000 + t);
      reject_far += !tester2->Test(b, in).accept;
    }
    const double ra = accept_uniform / double(trials), rr = reject_far / double(trials);
    pass = pass && ra >= floor && rr >= floor;
    detail += Fmt("%s accept %.3f reject %.3f; ", model.c_str(), ra, rr);
  }
  return {pass, detail + Fmt("floor %.3f", floor)};
}

Result NonAdaptiveTranscripts() {
  const std::size_t n = 1024;
  GeneratorSpec hs = Gen("half-heavy", n);
  hs.epsilon = 0.25;
  const Distribution d = Make(hs);
  int same = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto a = Oracle(d, seed), b = Oracle(d, seed);
    a.EnableTranscript(true);
    b.EnableTranscript(true);
    NonAdaptiveTester ta(Profile::Desk()), tb(Profile::Desk());
    ta.Test(a, {Interval{0, n - 1}, n, 1.0, 0.25, 0.2});
    const std::size_t lo = 1 + seed * 7;
    tb.Test(b, {Interval{lo, lo + 300}, n, 1.0, 0.25, 0.2});
    same += !a.transcript().empty() && a.transcript() == b.transcript();
  }
  return {same == 50, Fmt("%d/50 seeds replay identically", same)};
}

Result LearnerCompletenessSoundness() {
  const std::size_t n = 4096;
  const int trials = 60;
  const double eps = 0.25;
  int good = 0, wrong = 0, rejected = 0;
  for (int t = 0; t < trials; ++t) {
    GeneratorSpec s = Gen("k-histogram", n, 50 + t);
    s.k = 5;
    const Distribution d = Make(s);
    auto o = Oracle(d, 3000 + t);
    AdaptiveTester tester(Profile::Desk());
    const LearnOutcome out = LearnDecomposable(o, 5, eps, Profile::Desk(), tester);
    good += !out.rejected && L1Distance(d, *out.learned) <= eps;
  }
  GeneratorSpec saw = Gen("sawtooth", n);
  saw.epsilon = 0.5;
  saw.period = 16;
  const Distribution far = Make(saw);
  for (int t = 0; t < trials; ++t) {
    auto o = Oracle(far, 8000 + t);
    AdaptiveTester tester(Profile::Desk());
    const LearnOutcome out = LearnDecomposable(o, 5, eps, Profile::Desk(), tester);
    rejected += out.rejected;
    wrong += !out.rejected && L1Distance(far, *out.learned) > eps;
  }
  const double wrong_cap = 1.0 / 3 + 3 * Sigma(1.0 / 3, trials);
  const bool pass = good >= 33 && wrong / double(trials) <= wrong_cap;
  return {pass, Fmt("5-histogram: %d/60 within eps; sawtooth: %d/60 wrong outputs, %d rejected "
                    "(cap %.3f)",
                    good, wrong, rejected, wrong_cap)};
}

Result ComplexityScaling() {
  const auto start = std::chrono::steady_clock::now();
  auto mean_queries = [](const std::string& model, std::size_t n, int trials) {
    const Distribution d = Distribution::Uniform(n);
    double total = 0;
    for (int t = 0; t < trials; ++t) {
      auto o = Oracle(d, 400 + t);
      auto tester = MakeTester(model, Profile::Desk());
      LearnDecomposable(o, 1, 0.9, Profile::Desk(), *tester);
      total += static_cast<double>(o.ledger().total());
    }
    return total / trials;
  };
  const double a_small = mean_queries("adaptive", 1 << 10, 20);
  const double a_large = mean_queries("adaptive", 1 << 16, 20);
  const double u_small = mean_queries("uncond", 1 << 10, 8);
  const double u_large = mean_queries("uncond", 1 << 16, 8);
  const double adaptive_ratio = a_large / a_small;
  const double uncond_ratio = u_large / u_small;
  const double secs = Seconds(start);
  const bool pass = std::abs(adaptive_ratio - 1) <= 0.10 && std::abs(uncond_ratio / 8 - 1) <= 0.15 &&
                    secs < 300;
  return {pass, Fmt("adaptive ratio %.3f (target 1 +- 10%%); uncond ratio %.3f (target 8 +- 15%%); "
                    "%.1fs",
                    adaptive_ratio, uncond_ratio, secs)};
}

Result PropertyTesting() {
  const std::size_t n = 1024;
  const int trials = 60;
  const double cap = 1.0 / 3 + 3 * Sigma(1.0 / 3, trials);
  GeneratorSpec hh = Gen("half-heavy", n);
  hh.epsilon = 0.5;
  GeneratorSpec saw = Gen("sawtooth", n);
  saw.epsilon = 1.0;
  saw.period = 1;
  GeneratorSpec khist = Gen("k-histogram", n, 9);
  khist.k = 4;
  struct Cell {
    PropertySpec prop;
    Distribution d;
    bool member;
    std::string name;
  };
  const std::vector<Cell> cells = {
      {UniformProperty(), Distribution::Uniform(n), true, "uniform/member"},
      {UniformProperty(), Make(hh), false, "uniform/far"},
      {KHistogramProperty(4), Make(khist), true, "4-hist/member"},
      {KHistogramProperty(4), Make(saw), false, "4-hist/far"},
  };
  bool pass = true;
  std::string detail;
  for (const Cell& c : cells) {
    const double dist = c.prop.distance(c.d);
    if (c.member ? dist > 1e-12 : dist < 0.5) {
      return {false, c.name + Fmt(" input has distance %.3f", dist)};
    }
    int errors = 0;
    for (int t = 0; t < trials; ++t) {
      auto o = Oracle(c.d, 6000 + t);
      AdaptiveTester tester(Profile::Desk());
      const PropertyVerdict v = TestDecomposableProperty(o, c.prop, 0.3, Profile::Desk(), tester);
      errors += v.accept != c.member;
    }
    const double rate = errors / double(trials);
    pass = pass && rate <= cap;
    detail += Fmt("%s error %.3f; ", c.name.c_str(), rate);
  }
  return {pass, detail + Fmt("cap %.3f", cap)};
}

double BrutePairing(std::vector<double> a, std::vector<double> b) {
  std::sort(b.begin(), b.end());
  double best = std::numeric_limits<double>::infinity();
  do {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    best = std::min(best, s);
  } while (std::next_permutation(b.begin(), b.end()));
  return best;
}

Result ValueDistanceOracle() {
  CounterRng rng(1001);
  int match = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t size = 1 + rng.Below(6);
    Inventory A, B;
    std::vector<double> a, b;
    for (std::size_t i = 0; i < size; ++i) {
      const double x = rng.Bernoulli(0.4) ? static_cast<double>(rng.Below(4)) / 4 : rng.Uniform();
      const double y = rng.Bernoulli(0.4) ? static_cast<double>(rng.Below(4)) / 4 : rng.Uniform();
      A.Add(x);
      B.Add(y);
      a.push_back(x);
      b.push_back(y);
    }
    match += std::abs(ValueDistance(A, B) - BrutePairing(a, b)) <= 1e-12;
  }
  return {match == 1000, Fmt("%d/1000 multiset pairs match the brute-force pairing", match)};
}

Distribution RandomDist(CounterRng& rng, std::size_t n) {
  std::vector<double> p(n);
  double total = 0;
  for (double& x : p) {
    x = rng.Bernoulli(0.5) ? static_cast<double>(rng.Below(4)) : rng.Uniform() * 3;
    total += x;
  }
  if (total == 0) {
    p[0] = total = 1;
  }
  for (double& x : p) x /= total;
  return Distribution(p);
}

Result ConformsDistanceOracle() {
  CounterRng rng(1002);
  int match = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng.Below(8);
    std::vector<std::size_t> starts = {0};
    for (std::size_t i = 1; i < n; ++i) {
      if (rng.Bernoulli(0.4)) starts.push_back(i);
    }
    const IntervalPartition P = IntervalPartition::FromStarts(n, starts);
    const Atlas A = AtlasOf(RandomDist(rng, n), P);
    const Distribution d = RandomDist(rng, n);
    // Exhaustive search over interval-preserving permutations of a conformer.
    std::vector<double> q = A.CanonicalConformer().masses();
    double best = std::numeric_limits<double>::infinity();
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
      if (j == P.length()) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += std::abs(d[i] - q[i]);
        best = std::min(best, s);
        return;
      }
      auto first = q.begin() + static_cast<std::ptrdiff_t>(P[j].lo);
      auto last = q.begin() + static_cast<std::ptrdiff_t>(P[j].hi + 1);
      std::sort(first, last);
      do {
        rec(j + 1);
      } while (std::next_permutation(first, last));
    };
    rec(0);
    match += std::abs(ConformsDistance(d, A) - best) <= 1e-12;
  }
  return {match == 500, Fmt("%d/500 cases match the exhaustive permutation search", match)};
}

Result TrimmingContract() {
  int ok = 0, configs = 0;
  std::string failures;
  double worst = 0;
  for (const GeneratorSpec& s : Suite(1024)) {
    const Distribution d = Make(s);
    for (double eps : {0.1, 0.2}) {
      ++configs;
      auto o = Oracle(d, 77 + configs);
      TrimmingSampler sampler(o, eps, 0.1, 1000);
      const TrimmingSampler::Counts counts = sampler.DrawCounts(1000);
      const std::vector<double> bar = ReconstructTrimmed(sampler, d);
      double l1 = bar[0];
      for (std::size_t i = 0; i < d.size(); ++i) l1 += std::abs(bar[i + 1] - d[i]);
      bool on_grid = true;
      for (const auto& [i, count] : counts.emitted) {
        const double v = sampler.Value(i);
        on_grid = on_grid && std::find(sampler.grid().begin(), sampler.grid().end(), v) !=
                                 sampler.grid().end();
      }
      for (std::size_t i = 0; i < d.size(); ++i) {
        const double v = sampler.Value(i);
        on_grid = on_grid && (v == 0 || std::find(sampler.grid().begin(), sampler.grid().end(),
                                                  v) != sampler.grid().end());
      }
      worst = std::max(worst, l1 / eps);
      if (l1 <= 4 * eps && on_grid) {
        ++ok;
      } else {
        failures += Fmt(" %s@%.1f(l1 %.3f%s)", Label(s).c_str(), eps, l1, on_grid ? "" : ", off grid");
      }
    }
  }
  return {ok == configs && configs == 20,
          Fmt("%d/%d configurations within 4 eps, values on grid; worst l1/eps %.3f", ok, configs,
              worst) +
              failures};
}

Result CountEstimation() {
  const double eps = 0.1, delta = 0.1;
  const std::vector<double> values = {0.02, 0.005, 0.001};
  const std::vector<std::uint64_t> sizes = {20, 50, 300};
  // Class masses 0.4, 0.25 and 0.3; the remaining 0.05 is trimmed.
  const Distribution classes({0.4, 0.25, 0.3, 0.05});
  const std::uint64_t samples = EstimateSamples(3, eps, delta);
  const int trials = 200;
  int ok = 0;
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    CounterRng rng(CounterRng::Derive(1300, t));
    std::vector<std::uint64_t> hits(3, 0);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const std::size_t c = classes.Sample(rng);
      if (c < 3) ++hits[c];
    }
    const auto m = EstimateLevelCounts(hits, samples, values, eps, 3);
    bool capped = true;
    double missing = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      capped = capped && m[k] <= sizes[k];
      missing += values[k] * (static_cast<double>(sizes[k]) - static_cast<double>(m[k]));
    }
    worst = std::max(worst, missing);
    ok += capped && missing <= 4 * eps;
  }
  const double need = (1 - delta) * trials - 3 * std::sqrt(trials * delta * (1 - delta));
  return {ok >= need, Fmt("%d/%d trials capped and within 4 eps (need %.1f, %llu samples); worst "
                          "missing mass %.4f",
                          ok, trials, need, static_cast<unsigned long long>(samples), worst)};
}

Result AtlasLearning() {
  const std::size_t n = 1024;
  GeneratorSpec s = Gen("staircase", n);
  s.levels = 4;
  const Distribution d = Make(s);
  std::vector<std::size_t> starts;
  for (std::size_t j = 0; j < 8; ++j) starts.push_back(j * n / 8);
  const IntervalPartition P = IntervalPartition::FromStarts(n, starts);
  const double eps = 0.3, delta = 0.1;
  const int trials = 60;
  int ok = 0;
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    auto o = Oracle(d, 1500 + t);
    const AtlasLearnReport r = LearnAtlas(o, P, eps, delta, Profile::Desk());
    const double dist = ConformsDistance(d, r.atlas);
    worst = std::max(worst, dist);
    ok += dist <= eps;
  }
  const double need = (1 - delta) - 3 * Sigma(1 - delta, trials);
  return {ok / double(trials) >= need,
          Fmt("%d/60 learned atlases within eps (need rate %.3f); worst %.4f", ok, need, worst)};
}

Result AtlasPropertyTest() {
  const std::size_t n = 1024;
  const int trials = 60;
  const double cap = 1.0 / 3 + 3 * Sigma(1.0 / 3, trials);
  const AtlasPropertySpec prop = SupportSizeProperty(8);
  auto truth = [&](const Distribution& d) {
    return prop.conformance(AtlasOf(d, IntervalPartition::Whole(n)));
  };
  auto error_rate = [&](const Distribution& d, bool should_accept, std::optional<double> eta,
                        double eps) {
    int errors = 0;
    for (int t = 0; t < trials; ++t) {
      auto o = Oracle(d, 1700 + t);
      const AtlasTestVerdict v = eta ? TolerantTestAtlasProperty(o, prop, *eta, eps, Profile::Desk())
                                     : TestAtlasProperty(o, prop, eps, Profile::Desk());
      errors += v.accept != should_accept;
    }
    return errors / double(trials);
  };
  GeneratorSpec member = Gen("support-limited", n, 3);
  member.support = 8;
  GeneratorSpec far = Gen("support-limited", n, 4);
  far.support = 32;
  auto mixture = [&](double w) {
    GeneratorSpec m = Gen("mixture", n);
    m.components = {member, Gen("uniform", n)};
    m.weights = {1 - w, w};
    return Make(m);
  };
  const Distribution dm = Make(member), df = Make(far), close = mixture(0.05), distant = mixture(0.3);
  const double eta = 0.2, eps_tol = 0.3;
  if (truth(dm) != 0 || truth(df) <= 0.5 || truth(close) > eta || truth(distant) <= eta + eps_tol) {
    return {false, Fmt("inputs misplaced: %.3f %.3f %.3f %.3f", truth(dm), truth(df), truth(close),
                       truth(distant))};
  }
  const double e_member = error_rate(dm, true, std::nullopt, 0.5);
  const double e_far = error_rate(df, false, std::nullopt, 0.5);
  const double e_close = error_rate(close, true, eta, eps_tol);
  const double e_distant = error_rate(distant, false, eta, eps_tol);
  const bool pass = e_member <= cap && e_far <= cap && e_close <= cap && e_distant <= cap;
  return {pass, Fmt("plain member %.3f far %.3f; tolerant close(d=%.3f) %.3f far(d=%.3f) %.3f; cap "
                    "%.3f",
                    e_member, e_far, truth(close), e_close, truth(distant), e_distant, cap)};
}

Result BudgetTable() {
  std::ifstream in(std::string(CONDTEST_TEST_DATA_DIR) + "/budget_table.json");
  if (!in) return {false, "budget_table.json not found"};
  const nlohmann::json table = nlohmann::json::parse(in);
  const Profile paper = Profile::Paper();
  int rows = 0, match = 0;
  std::string mismatches;
  for (const auto& row : table.at("rows")) {
    const std::string f = row.at("formula");
    const auto& a = row.at("args");
    const auto& want = row.at("expected");
    auto d = [&](const char* k) { return a.at(k).get<double>(); };
    auto z = [&](const char* k) { return a.at(k).get<std::uint64_t>(); };
    nlohmann::json got;
    if (f == "pull_eta") got = PullEtaFineSamples(d("eta"), d("delta"));
    else if (f == "pull_eta_gamma") got = PullEtaGammaFineSamples(d("eta"), d("gamma"), d("delta"));
    else if (f == "assess_rounds") got = AssessRounds(d("epsilon"), d("delta"));
    else if (f == "learn_l1") got = LearnL1Samples(z("n"), d("epsilon"), d("delta"));
    else if (f == "learn_linf") got = LearnLinfSamples(z("n"), d("epsilon"), d("delta"));
    else if (f == "learn_flat") got = LearnFlatSamples(z("length"), d("epsilon"), d("delta"));
    else if (f == "brute_force") got = BruteForceSamples(z("size"), d("gamma"), d("epsilon"), d("delta"));
    else if (f == "collision_samples") got = CollisionSamples(z("size"), d("epsilon"), d("c"));
    else if (f == "majority_rounds") got = MajorityRounds(d("delta"), d("base_error"));
    else if (f == "pair_rounds") got = PairRounds(d("epsilon"), d("delta"), d("c"));
    else if (f == "pair_queries") got = PairQueries(z("rounds"), d("epsilon"), d("delta"), d("c"));
    else if (f == "estimate_samples") got = EstimateSamples(z("classes"), d("epsilon"), d("delta"));
    else if (f == "trimming_grid") got = TrimmingGridSize(z("n"), d("epsilon"));
    else if (f == "trimming_budget") {
      got = static_cast<std::uint64_t>(TrimmingBudget(z("samples"), d("epsilon"), d("delta"), z("n")));
    } else if (f == "nonadaptive_plan") {
      const NonAdaptivePlan p = NonAdaptivePlanFor(paper, z("n"), d("gamma"), d("epsilon"));
      got = {{"presamples", p.presamples},
             {"collision_draws", p.collision_draws},
             {"set_samples", p.set_samples},
             {"max_level", p.max_level}};
    } else if (f == "learn_plan") {
      const LearnPlan p = LearnPlanFor(paper, z("L"), d("epsilon"), z("n"));
      got = {{"pull_samples", p.pull_samples}, {"length_bound", p.length_bound}};
    } else if (f == "atlas_plan") {
      const AtlasTestPlan p = AtlasTestPlanFor(paper, z("k"), d("epsilon"), z("n"));
      got = {{"pull_samples", p.pull_samples}, {"length_bound", p.length_bound}};
    }
    ++rows;
    if (got == want) {
      ++match;
    } else {
      mismatches += " " + f + ":" + got.dump() + "!=" + want.dump();
    }
  }
  return {rows > 0 && match == rows, Fmt("%d/%d table rows match", match, rows) + mismatches};
}

}  // namespace
}  // namespace condtest

int main() {
  using namespace condtest;
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"pulled partition fineness", PulledFineness},
      {"(eta,gamma)-fineness", RelaxedFineness},
      {"decomposable small weight", DecomposableSmallWeight},
      {"flattening bound", FlatteningBound},
      {"uniformity testers", UniformityTesters},
      {"non-adaptive transcripts", NonAdaptiveTranscripts},
      {"learner completeness/soundness", LearnerCompletenessSoundness},
      {"complexity scaling", ComplexityScaling},
      {"property testing", PropertyTesting},
      {"value distance oracle", ValueDistanceOracle},
      {"conforms distance oracle", ConformsDistanceOracle},
      {"trimming sampler", TrimmingContract},
      {"count estimation", CountEstimation},
      {"atlas learning", AtlasLearning},
      {"atlas property test", AtlasPropertyTest},
      {"budget formulas", BudgetTable},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.pass;
    std::printf("%s %2zu %s: %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), r.detail.c_str(), Seconds(start));
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
