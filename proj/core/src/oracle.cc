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

#include "condtest/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "condtest/errors.h"
#include "sampling.h"

namespace condtest {

namespace {

std::uint64_t HashInterval(const Interval& I) {
  return CounterRng::Mix(CounterRng::Mix(I.lo) ^ (I.hi * 0x9E3779B97F4A7C15ULL));
}

std::uint64_t HashSet(std::span<const std::size_t> A) {
  std::uint64_t h = 0xCBF29CE484222325ULL ^ A.size();
  for (std::size_t i : A) h = CounterRng::Mix(h ^ i);
  return h;
}

std::uint64_t HashCounts(std::span<const std::uint64_t> c) {
  std::uint64_t h = 0x84222325CBF29CE4ULL ^ c.size();
  for (std::uint64_t x : c) h = CounterRng::Mix(h ^ x);
  return h;
}

void CheckSet(std::span<const std::size_t> A, std::size_t n) {
  if (A.empty()) throw UsageError("conditioning set is empty");
  if (A.back() >= n) throw UsageError("conditioning set leaves the domain");
}

void CheckInterval(const Interval& I, std::size_t n) {
  if (I.lo > I.hi || I.hi >= n) throw UsageError("interval outside the domain");
}

}  // namespace

ConditionalOracle::ConditionalOracle(DistributionPtr truth, std::uint64_t seed)
    : truth_(std::move(truth)),
      rng_(CounterRng::Derive(seed, 1)),
      coins_(CounterRng::Derive(seed, 2)) {
  if (!truth_) throw UsageError("oracle needs a distribution");
}

void ConditionalOracle::Meter(std::size_t set_size, std::uint64_t count) {
  ledger_.conditional += count;
  unsigned bucket = set_size <= 1 ? 0u : static_cast<unsigned>(std::bit_width(set_size - 1));
  ledger_.set_size_histogram[bucket] += count;
}

void ConditionalOracle::Record(char kind, std::uint64_t set_hash,
                               std::uint64_t count, std::uint64_t result) {
  if (!transcript_on_) return;
  transcript_.push_back(kind);
  for (std::uint64_t v : {set_hash, count, result}) {
    for (int b = 0; b < 8; ++b) transcript_.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
  }
}

std::size_t ConditionalOracle::Sample() {
  ledger_.unconditional += 1;
  std::size_t i = truth_->Sample(rng_);
  Record('U', 0, 1, i);
  return i;
}

std::size_t ConditionalOracle::Sample(const Interval& A) {
  CheckInterval(A, truth_->size());
  Meter(A.size(), 1);
  std::size_t i = truth_->SampleInterval(A, rng_);
  Record('I', HashInterval(A), 1, i);
  return i;
}

std::size_t ConditionalOracle::Sample(std::span<const std::size_t> A) {
  CheckSet(A, truth_->size());
  Meter(A.size(), 1);
  double mass = truth_->Mass(A);
  std::size_t out = A.back();
  if (!(mass > 0.0)) {
    out = A[rng_.Below(A.size())];
  } else {
    double u = rng_.Uniform() * mass;
    for (std::size_t i : A) {
      double w = (*truth_)[i];
      if (w > 0.0) {
        out = i;
        if (u < w) break;
        u -= w;
      }
    }
  }
  Record('S', HashSet(A), 1, out);
  return out;
}

std::size_t ConditionalOracle::Sample(const QuerySet& A) {
  if (std::holds_alternative<FullDomain>(A)) {
    return Sample(Interval{0, truth_->size() - 1});
  }
  if (const auto* I = std::get_if<Interval>(&A)) return Sample(*I);
  return Sample(std::span<const std::size_t>(std::get<std::vector<std::size_t>>(A)));
}

std::vector<std::uint64_t> ConditionalOracle::UnconditionalCounts(std::uint64_t k) {
  ledger_.unconditional += k;
  std::vector<std::uint64_t> counts;
  internal::Multinomial(rng_, k, truth_->masses(), counts);
  Record('u', 0, k, HashCounts(counts));
  return counts;
}

std::vector<std::uint64_t> ConditionalOracle::PartitionCounts(
    const IntervalPartition& P, std::uint64_t k) {
  if (P.domain_size() != truth_->size()) {
    throw UsageError("partition domain does not match the oracle");
  }
  ledger_.unconditional += k;
  std::vector<double> w(P.length());
  for (std::size_t j = 0; j < P.length(); ++j) w[j] = truth_->Mass(P[j]);
  std::vector<std::uint64_t> counts;
  internal::Multinomial(rng_, k, w, counts);
  Record('p', P.length(), k, HashCounts(counts));
  return counts;
}

FilteredCounts ConditionalOracle::UnconditionalUntil(const Interval& I,
                                                     std::uint64_t target,
                                                     std::uint64_t cap) {
  CheckInterval(I, truth_->size());
  FilteredCounts out;
  double p = std::clamp(truth_->Mass(I), 0.0, 1.0);
  if (target == 0 || cap == 0) {
    out.counts.assign(I.size(), 0);
    return out;
  }
  bool reached = false;
  if (p > 0.0) {
    std::uint64_t failures = internal::NegativeBinomial(rng_, target, p);
    if (failures <= cap - std::min(cap, target) && target <= cap) {
      out.draws = target + failures;
      out.landed = target;
      reached = true;
    }
  }
  if (!reached) {
    out.draws = cap;
    out.landed = p > 0.0 ? internal::BinomialBelow(rng_, cap, p, target) : 0;
  }
  ledger_.unconditional += out.draws;
  std::span<const double> w(truth_->masses().data() + I.lo, I.size());
  internal::Multinomial(rng_, out.landed, w, out.counts);
  Record('f', HashInterval(I), out.draws, HashCounts(out.counts));
  return out;
}

std::uint64_t ConditionalOracle::PairCount(std::size_t a, std::size_t b,
                                           std::uint64_t k) {
  if (a == b) throw UsageError("pair query needs two distinct elements");
  if (std::max(a, b) >= truth_->size()) throw UsageError("pair leaves the domain");
  Meter(2, k);
  double wa = (*truth_)[a], wb = (*truth_)[b];
  double p = (wa + wb > 0.0) ? wa / (wa + wb) : 0.5;
  std::uint64_t c = internal::Binomial(rng_, k, p);
  std::size_t lo = std::min(a, b), hi = std::max(a, b);
  const std::size_t pair[2] = {lo, hi};
  Record('P', HashSet(pair), k, c * 2 + (a < b ? 0 : 1));
  return c;
}

std::uint64_t ConditionalOracle::SubIntervalCount(const Interval& S,
                                                  const Interval& T,
                                                  std::uint64_t k) {
  CheckInterval(S, truth_->size());
  if (T.lo < S.lo || T.hi > S.hi || T.lo > T.hi) {
    throw UsageError("sub-interval is not contained in the query interval");
  }
  Meter(S.size(), k);
  double ms = truth_->Mass(S);
  double p = ms > 0.0 ? truth_->Mass(T) / ms
                      : static_cast<double>(T.size()) / static_cast<double>(S.size());
  std::uint64_t c = internal::Binomial(rng_, k, std::clamp(p, 0.0, 1.0));
  Record('D', HashInterval(S) ^ HashInterval(T), k, c);
  return c;
}

std::vector<std::uint64_t> ConditionalOracle::SetCounts(
    std::span<const std::size_t> A, std::uint64_t k) {
  CheckSet(A, truth_->size());
  Meter(A.size(), k);
  std::vector<double> w(A.size());
  for (std::size_t j = 0; j < A.size(); ++j) w[j] = (*truth_)[A[j]];
  std::vector<std::uint64_t> counts;
  internal::Multinomial(rng_, k, w, counts);
  Record('M', HashSet(A), k, HashCounts(counts));
  return counts;
}

std::vector<std::size_t> ConditionalOracle::SampleMany(
    std::span<const std::size_t> A, std::uint64_t k) {
  CheckSet(A, truth_->size());
  Meter(A.size(), k);
  std::vector<double> cum(A.size());
  double total = 0;
  for (std::size_t j = 0; j < A.size(); ++j) {
    total += (*truth_)[A[j]];
    cum[j] = total;
  }
  std::vector<std::size_t> out(k);
  for (std::uint64_t t = 0; t < k; ++t) {
    if (!(total > 0.0)) {
      out[t] = A[rng_.Below(A.size())];
      continue;
    }
    for (;;) {
      double u = rng_.Uniform() * total;
      auto it = std::upper_bound(cum.begin(), cum.end(), u);
      if (it == cum.end()) continue;
      std::size_t j = static_cast<std::size_t>(it - cum.begin());
      if ((*truth_)[A[j]] > 0.0) {
        out[t] = A[j];
        break;
      }
    }
  }
  std::vector<std::uint64_t> as64(out.begin(), out.end());
  Record('m', HashSet(A), k, HashCounts(as64));
  return out;
}

}  // namespace condtest
