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

// Command-line front end: one subcommand per algorithm plus `experiment`.
// Results go to stdout (or --out); failures print a JSON error object on
// stderr and exit nonzero.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "condtest/errors.h"
#include "condtest/experiment.h"
#include "condtest/json_io.h"

namespace {

using nlohmann::json;
using condtest::ExperimentConfig;
using condtest::UsageError;

struct Flags {
  std::size_t n = 1024;
  bool n_set = false;
  double epsilon = 0.25;
  double delta = 0.1;
  double eta = -1;
  double gamma = -1;
  std::size_t L = 1;
  std::size_t k = 0;
  std::string model = "adaptive";
  std::string profile = "desk";
  std::string property;
  std::string interval;
  std::string generator = "uniform";
  std::string dist_file;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1;
  unsigned workers = 0;
  bool no_timing = false;
  std::string out;
  std::string format = "json";
};

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// Accepts a JSON object or the short form kind[:key=value,...].
json ParseGenerator(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("bad --generator JSON: ") + e.what());
    }
  }
  json g;
  const auto colon = text.find(':');
  g["kind"] = text.substr(0, colon);
  if (colon == std::string::npos) return g;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("generator option '" + item + "' needs key=value");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    try {
      g[key] = json::parse(value);
    } catch (const json::parse_error&) {
      g[key] = value;
    }
  }
  return g;
}

ExperimentConfig ConfigFromFlags(const std::string& algorithm, const Flags& f) {
  json j;
  j["algorithm"] = algorithm;
  j["seed"] = f.seed;
  j["trials"] = f.trials;
  j["profile"] = f.profile;
  j["workers"] = f.workers;
  j["timing"] = !f.no_timing;
  if (!f.dist_file.empty()) {
    j["distribution"] = ReadJsonFile(f.dist_file);
  } else {
    json g = ParseGenerator(f.generator);
    if (f.n_set || !g.contains("n")) g["n"] = f.n;
    j["generator"] = g;
  }
  json p = {{"epsilon", f.epsilon}, {"delta", f.delta}, {"L", f.L}, {"k", f.k}, {"model", f.model}};
  if (f.eta >= 0) p["eta"] = f.eta;
  if (f.gamma >= 0) p["gamma"] = f.gamma;
  if (!f.property.empty()) {
    p["property"] = f.property;
  } else if (algorithm.rfind("atlas-", 0) == 0) {
    p["property"] = "support:8";
  }
  if (!f.interval.empty()) {
    const auto comma = f.interval.find(',');
    if (comma == std::string::npos) throw UsageError("--interval expects lo,hi");
    p["interval"] = json::array({std::stoll(f.interval.substr(0, comma)),
                                 std::stoll(f.interval.substr(comma + 1))});
  }
  j["params"] = p;
  return condtest::ConfigFromJson(j);
}

void Emit(const condtest::ExperimentReport& report, const std::string& format,
          const std::string& out) {
  std::string text;
  if (format == "csv") {
    text = condtest::ReportToCsv(report);
  } else {
    text = condtest::ReportToJson(report).dump(2) + "\n";
  }
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot write '" + out + "'");
  file << text;
}

void AddCommonFlags(CLI::App& app, Flags& f) {
  app.add_option("--n", f.n, "Domain size")->each([&f](const std::string&) { f.n_set = true; });
  app.add_option("--epsilon", f.epsilon, "Accuracy parameter");
  app.add_option("--delta", f.delta, "Confidence parameter");
  app.add_option("--eta", f.eta, "Fineness (pull) or tolerance (atlas-tolerant-test)");
  app.add_option("--gamma", f.gamma, "Allowed violating weight");
  app.add_option("--L", f.L, "Decomposability length");
  app.add_option("--k", f.k, "Equal-width partition size for atlas-learn");
  app.add_option("--model", f.model, "Interval tester backend")
      ->check(CLI::IsMember({"uncond", "adaptive", "nonadaptive"}));
  app.add_option("--profile", f.profile, "Constant profile")->check(CLI::IsMember({"paper", "desk"}));
  app.add_option("--property", f.property,
                 "uniform | khist:K | monotone, or support:S0 for atlas commands");
  app.add_option("--interval", f.interval, "Target interval lo,hi (1-based, inclusive)");
  app.add_option("--generator", f.generator, "kind[:key=value,...] or a JSON object");
  app.add_option("--dist", f.dist_file, "JSON distribution file {\"p\": [...]}");
  app.add_option("--seed", f.seed, "Base seed");
  app.add_option("--trials", f.trials, "Number of trials")->check(CLI::PositiveNumber);
  app.add_option("--workers", f.workers, "Worker threads (0: all cores)");
  app.add_flag("--no-timing", f.no_timing, "Report runtime_ms as 0");
  app.add_option("--out", f.out, "Output path (default stdout)");
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

int Fail(const std::string& type, const std::string& message, int code) {
  std::cerr << json{{"error", {{"type", type}, {"message", message}}}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditional-sampling distribution testing toolkit"};
  app.require_subcommand(1);
  Flags flags;
  const char* algorithms[] = {"pull-partition", "assess-partition", "test-uniformity",
                              "learn",          "test-property",    "atlas-learn",
                              "atlas-test",     "atlas-tolerant-test"};
  for (const char* name : algorithms) {
    CLI::App* sub = app.add_subcommand(name, std::string("Run ") + name);
    AddCommonFlags(*sub, flags);
  }
  std::string config_path;
  std::string exp_out, exp_format = "json";
  CLI::App* exp = app.add_subcommand("experiment", "Run an experiment from a JSON config file");
  exp->add_option("config", config_path, "Config file")->required();
  exp->add_option("--out", exp_out, "Output path (default stdout)");
  exp->add_option("--format", exp_format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return Fail("usage", e.what(), 2);
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    if (chosen == exp) {
      const ExperimentConfig config = condtest::ConfigFromJson(ReadJsonFile(config_path));
      Emit(condtest::RunExperiment(config), exp_format, exp_out);
    } else {
      const ExperimentConfig config = ConfigFromFlags(chosen->get_name(), flags);
      Emit(condtest::RunExperiment(config), flags.format, flags.out);
    }
  } catch (const UsageError& e) {
    return Fail("usage", e.what(), 2);
  } catch (const std::invalid_argument& e) {
    return Fail("usage", e.what(), 2);
  } catch (const std::exception& e) {
    return Fail("runtime", e.what(), 1);
  }
  return 0;
}
