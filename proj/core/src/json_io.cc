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

#include "condtest/json_io.h"

#include <cstdio>
#include <string>

#include "condtest/errors.h"

namespace condtest {

using nlohmann::json;

namespace {

template <typename T>
T Get(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("field '") + key + "': " + e.what());
  }
}

std::string ValueKey(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

json DistributionToJson(const Distribution& d) {
  return {{"n", d.size()}, {"p", d.masses()}};
}

Distribution DistributionFromJson(const json& j) {
  if (!j.is_object()) throw UsageError("distribution must be a JSON object");
  if (j.contains("kind")) return Generate(GeneratorFromJson(j)).dist;
  if (!j.contains("p")) throw UsageError("distribution needs \"p\" or \"kind\"");
  auto p = Get<std::vector<double>>(j, "p", {});
  if (j.contains("n") && Get<std::size_t>(j, "n", 0) != p.size()) {
    throw UsageError("\"n\" does not match the length of \"p\"");
  }
  if (p.empty()) throw UsageError("distribution must be non-empty");
  return Distribution(std::move(p));
}

GeneratorSpec GeneratorFromJson(const json& j) {
  if (!j.is_object()) throw UsageError("generator spec must be a JSON object");
  GeneratorSpec s;
  s.kind = Get<std::string>(j, "kind", s.kind);
  s.n = Get<std::size_t>(j, "n", s.n);
  s.seed = Get<std::uint64_t>(j, "seed", s.seed);
  if (j.contains("at")) {
    const auto at = Get<std::size_t>(j, "at", 1);
    if (at == 0) throw UsageError("\"at\" is 1-based");
    s.at = at - 1;
  }
  s.exponent = Get<double>(j, "exponent", s.exponent);
  s.k = Get<std::size_t>(j, "k", s.k);
  s.levels = Get<std::size_t>(j, "levels", s.levels);
  s.epsilon = Get<double>(j, "epsilon", s.epsilon);
  s.period = Get<std::size_t>(j, "period", s.period);
  s.support = Get<std::size_t>(j, "support", s.support);
  s.weights = Get<std::vector<double>>(j, "weights", {});
  if (j.contains("components")) {
    for (const json& c : j.at("components")) {
      GeneratorSpec sub = GeneratorFromJson(c);
      sub.n = s.n;
      s.components.push_back(std::move(sub));
    }
  }
  return s;
}

json GeneratorToJson(const GeneratorSpec& s) {
  json j = {{"kind", s.kind},       {"n", s.n},         {"seed", s.seed},
            {"at", s.at + 1},       {"exponent", s.exponent}, {"k", s.k},
            {"levels", s.levels},   {"epsilon", s.epsilon}, {"period", s.period},
            {"support", s.support}};
  if (!s.components.empty()) {
    j["weights"] = s.weights;
    j["components"] = json::array();
    for (const auto& c : s.components) j["components"].push_back(GeneratorToJson(c));
  }
  return j;
}

json IntervalToJson(const Interval& I) { return json::array({I.lo + 1, I.hi + 1}); }

Interval IntervalFromJson(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != 2) throw UsageError("interval must be [lo, hi]");
  const auto lo = j[0].get<long long>(), hi = j[1].get<long long>();
  if (lo < 1 || hi < lo || static_cast<std::size_t>(hi) > n) {
    throw UsageError("interval must satisfy 1 <= lo <= hi <= n");
  }
  return {static_cast<std::size_t>(lo - 1), static_cast<std::size_t>(hi - 1)};
}

json PartitionToJson(const IntervalPartition& P) {
  json out = json::array();
  for (const Interval& I : P.intervals()) out.push_back(IntervalToJson(I));
  return out;
}

IntervalPartition PartitionFromJson(const json& j, std::size_t n) {
  if (!j.is_array()) throw UsageError("partition must be an array of [lo, hi]");
  std::vector<Interval> out;
  for (const json& e : j) out.push_back(IntervalFromJson(e, n));
  return IntervalPartition(n, std::move(out));
}

json AtlasToJson(const Atlas& a) {
  json inv = json::array();
  for (const Inventory& m : a.inventories) {
    json o = json::object();
    for (const auto& [v, c] : m.counts) o[ValueKey(v)] = c;
    inv.push_back(std::move(o));
  }
  return {{"partition", PartitionToJson(a.partition)}, {"inventories", std::move(inv)}};
}

Atlas AtlasFromJson(const json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("partition") || !j.contains("inventories")) {
    throw UsageError("atlas needs \"partition\" and \"inventories\"");
  }
  Atlas a;
  a.partition = PartitionFromJson(j.at("partition"), n);
  for (const json& o : j.at("inventories")) {
    Inventory m;
    for (const auto& [key, c] : o.items()) m.Add(std::stod(key), c.get<std::uint64_t>());
    a.inventories.push_back(std::move(m));
  }
  a.Validate();
  return a;
}

json LedgerToJson(const QueryLedger& ledger) {
  json hist = json::object();
  for (const auto& [b, c] : ledger.set_size_histogram) {
    hist["<=2^" + std::to_string(b)] = c;
  }
  return {{"unconditional", ledger.unconditional},
          {"conditional", ledger.conditional},
          {"total", ledger.total()},
          {"conditional_set_sizes", std::move(hist)}};
}

}  // namespace condtest
