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

#include "condtest/assess.h"

#include <cmath>

#include "condtest/budgets.h"
#include "condtest/errors.h"

namespace condtest {

AssessOutcome AssessPartition(ConditionalOracle& oracle, const IntervalPartition& P,
                              const AssessParams& params, IntervalTester& tester) {
  const std::size_t n = oracle.domain_size();
  if (P.domain_size() != n) throw UsageError("partition does not cover the oracle's domain");
  if (!(params.c >= 1)) throw UsageError("c must be at least 1");
  if (P.length() > params.r) throw UsageError("partition is longer than the bound r");
  const std::uint64_t before = oracle.ledger().total();

  AssessOutcome out;
  out.rounds = AssessRounds(params.epsilon, params.delta);
  out.threshold = AssessRejectThreshold(params.epsilon, out.rounds);
  TesterContext& ctx = out.tester_context;
  ctx.n = n;
  ctx.m = static_cast<std::size_t>(std::floor(static_cast<double>(n) / params.c));
  ctx.gamma = params.epsilon / static_cast<double>(params.r);
  ctx.epsilon = params.epsilon;
  ctx.delta = params.delta / (2.0 * static_cast<double>(out.rounds));
  tester.Prepare(oracle, ctx);

  out.transcript.reserve(out.rounds);
  for (std::uint64_t round = 0; round < out.rounds; ++round) {
    AssessRound rec;
    rec.sample = oracle.Sample();
    rec.interval = P.Locate(rec.sample);
    rec.verdict =
        tester.Test(oracle, {P[rec.interval], ctx.m, ctx.gamma, ctx.epsilon, ctx.delta});
    if (!rec.verdict.accept) ++out.rejected;
    out.transcript.push_back(std::move(rec));
  }
  out.accept = !(static_cast<double>(out.rejected) > out.threshold);
  out.queries = oracle.ledger().total() - before;
  return out;
}

}  // namespace condtest
