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

#ifndef CONDTEST_ORACLE_H_
#define CONDTEST_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "condtest/distribution.h"
#include "condtest/interval.h"
#include "condtest/rng.h"

namespace condtest {

struct FullDomain {};

// A conditioning set: the whole domain, an interval, or an explicit sorted
// index set.
using QuerySet = std::variant<FullDomain, Interval, std::vector<std::size_t>>;

struct QueryLedger {
  std::uint64_t unconditional = 0;
  std::uint64_t conditional = 0;
  // Conditional queries bucketed by set size: key b counts sets with
  // 2^(b-1) < |A| <= 2^b (key 0 holds singletons).
  std::map<unsigned, std::uint64_t> set_size_histogram;

  std::uint64_t total() const { return unconditional + conditional; }
};

// Result of sampling unconditionally until `target` draws land in an
// interval, or until a cap is reached.
struct FilteredCounts {
  std::uint64_t draws = 0;
  std::uint64_t landed = 0;
  std::vector<std::uint64_t> counts;  // indexed by offset within the interval
};

// The only sampling gateway to the hidden distribution. Every draw is metered
// before a result is returned. Batch methods return counts only; they meter
// one query per underlying draw and are distributed exactly as the
// corresponding sequence of single draws.
class ConditionalOracle {
 public:
  ConditionalOracle(DistributionPtr truth, std::uint64_t seed);

  std::size_t domain_size() const { return truth_->size(); }

  std::size_t Sample();
  std::size_t Sample(const Interval& A);
  std::size_t Sample(std::span<const std::size_t> A);
  std::size_t Sample(const std::vector<std::size_t>& A) {
    return Sample(std::span<const std::size_t>(A));
  }
  std::size_t Sample(const QuerySet& A);

  // k unconditional draws, tallied per domain element.
  std::vector<std::uint64_t> UnconditionalCounts(std::uint64_t k);
  // k unconditional draws, tallied per interval of P.
  std::vector<std::uint64_t> PartitionCounts(const IntervalPartition& P,
                                             std::uint64_t k);
  // Unconditional draws until `target` land in I or `cap` draws were made.
  FilteredCounts UnconditionalUntil(const Interval& I, std::uint64_t target,
                                    std::uint64_t cap);
  // k conditional draws on {a, b} (a != b); returns how many returned a.
  std::uint64_t PairCount(std::size_t a, std::size_t b, std::uint64_t k);
  // k conditional draws on S; returns how many landed in the sub-interval T.
  std::uint64_t SubIntervalCount(const Interval& S, const Interval& T,
                                 std::uint64_t k);
  // k conditional draws on a sorted set, tallied per member.
  std::vector<std::uint64_t> SetCounts(std::span<const std::size_t> A,
                                       std::uint64_t k);
  // k conditional draws on a sorted set, in draw order.
  std::vector<std::size_t> SampleMany(std::span<const std::size_t> A,
                                      std::uint64_t k);

  const QueryLedger& ledger() const { return ledger_; }

  // Randomness for the algorithm's own coin flips; never touches the truth
  // and is not metered.
  CounterRng& coins() { return coins_; }

  void EnableTranscript(bool on) { transcript_on_ = on; }
  // Byte string describing every query made so far, in order.
  const std::string& transcript() const { return transcript_; }

 private:
  void Meter(std::size_t set_size, std::uint64_t count);
  void Record(char kind, std::uint64_t set_hash, std::uint64_t count,
              std::uint64_t result);

  DistributionPtr truth_;
  CounterRng rng_;
  CounterRng coins_;
  QueryLedger ledger_;
  bool transcript_on_ = false;
  std::string transcript_;
};

}  // namespace condtest

#endif  // CONDTEST_ORACLE_H_
