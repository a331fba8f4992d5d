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

#ifndef CONDTEST_UNIFORMITY_H_
#define CONDTEST_UNIFORMITY_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "condtest/interval.h"
#include "condtest/oracle.h"
#include "condtest/profile.h"

namespace condtest {

// One call of a weakly tolerant interval tester. The contract: with
// |I| <= m and mu(I) >= gamma, accept w.p. 1 - delta when
// bias(mu|I) <= eps/100 and reject w.p. 1 - delta when d(mu|I, U_I) > eps.
struct WTTInput {
  Interval I;
  std::size_t m = 0;
  double gamma = 1;
  double epsilon = 0.5;
  double delta = 1.0 / 3.0;
};

struct WTTVerdict {
  bool accept = true;
  std::uint64_t queries_used = 0;
  // Which branch produced the verdict ("singleton", "oversize", "collision",
  // "pair", "small", "window", ...).
  std::string decided_by;
};

// Parameters shared by every call a caller is about to make; lets testers
// draw interval-independent randomness once.
struct TesterContext {
  std::size_t n = 0;
  std::size_t m = 0;
  double gamma = 1;
  double epsilon = 0.5;
  double delta = 1.0 / 3.0;
};

void ValidateInput(const WTTInput& in, std::size_t n);

class IntervalTester {
 public:
  virtual ~IntervalTester() = default;
  virtual std::string_view name() const = 0;
  // Called once before a batch of Test calls with the same parameters.
  virtual void Prepare(ConditionalOracle& /*oracle*/, const TesterContext& /*ctx*/) {}
  // queries_used in the result equals the oracle ledger delta of this call.
  virtual WTTVerdict Test(ConditionalOracle& oracle, const WTTInput& in) = 0;
};

// Collision statistic on samples of mu|I obtained by filtering unconditional
// draws, amplified by a majority vote with early stopping.
class UnconditionalTester : public IntervalTester {
 public:
  explicit UnconditionalTester(const Profile& profile) : profile_(profile) {}
  std::string_view name() const override { return "uncond"; }
  WTTVerdict Test(ConditionalOracle& oracle, const WTTInput& in) override;

  // Single collision round on `samples` draws from mu|I; true = accept.
  // Gives up after a cap of 3 samples / gamma unconditional draws and decides
  // on whatever landed.
  static bool CollisionRound(ConditionalOracle& oracle, const Interval& I,
                             std::uint64_t samples, double gamma, double epsilon);

 private:
  Profile profile_;
};

// Pair-comparison tester using conditional queries inside I only: draw
// x ~ mu|I and y uniform in I \ {x}, then estimate mu(x)/(mu(x)+mu(y)) from
// conditional queries on {x, y}. Budget does not depend on n or mu(I).
class AdaptiveTester : public IntervalTester {
 public:
  explicit AdaptiveTester(const Profile& profile) : profile_(profile) {}
  std::string_view name() const override { return "adaptive"; }
  WTTVerdict Test(ConditionalOracle& oracle, const WTTInput& in) override;

 private:
  Profile profile_;
};

// Majority of `rounds` independent runs of a base tester, stopping as soon as
// the outcome is decided.
class MajorityTester : public IntervalTester {
 public:
  MajorityTester(IntervalTester& base, std::uint64_t rounds)
      : base_(base), rounds_(rounds) {}
  std::string_view name() const override { return base_.name(); }
  void Prepare(ConditionalOracle& oracle, const TesterContext& ctx) override {
    base_.Prepare(oracle, ctx);
  }
  WTTVerdict Test(ConditionalOracle& oracle, const WTTInput& in) override;

 private:
  IntervalTester& base_;
  std::uint64_t rounds_;
};

// "uncond", "adaptive" or "nonadaptive".
std::unique_ptr<IntervalTester> MakeTester(std::string_view model,
                                           const Profile& profile);

}  // namespace condtest

#endif  // CONDTEST_UNIFORMITY_H_
