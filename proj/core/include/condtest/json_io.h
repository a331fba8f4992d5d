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

#ifndef CONDTEST_JSON_IO_H_
#define CONDTEST_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "condtest/atlas.h"
#include "condtest/distribution.h"
#include "condtest/generators.h"
#include "condtest/interval.h"
#include "condtest/oracle.h"

namespace condtest {

// Indices in JSON are 1-based and intervals are closed [lo, hi].

nlohmann::json DistributionToJson(const Distribution& d);
// Accepts {"n": int, "p": [...]} or a generator spec {"kind": ..., ...}.
Distribution DistributionFromJson(const nlohmann::json& j);

GeneratorSpec GeneratorFromJson(const nlohmann::json& j);
nlohmann::json GeneratorToJson(const GeneratorSpec& spec);

nlohmann::json IntervalToJson(const Interval& I);
Interval IntervalFromJson(const nlohmann::json& j, std::size_t n);
nlohmann::json PartitionToJson(const IntervalPartition& P);
IntervalPartition PartitionFromJson(const nlohmann::json& j, std::size_t n);

// {"partition": [[lo, hi], ...], "inventories": [{"<value>": multiplicity}]}.
nlohmann::json AtlasToJson(const Atlas& a);
Atlas AtlasFromJson(const nlohmann::json& j, std::size_t n);

nlohmann::json LedgerToJson(const QueryLedger& ledger);

}  // namespace condtest

#endif  // CONDTEST_JSON_IO_H_
