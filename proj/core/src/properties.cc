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

#include "condtest/properties.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "condtest/errors.h"

namespace condtest {
namespace {

// Fenwick tree holding (count, sum) keyed by value rank.
class RankTree {
 public:
  explicit RankTree(std::size_t size) : cnt_(size + 1, 0), sum_(size + 1, 0.0) {}
  void Clear() {
    std::fill(cnt_.begin(), cnt_.end(), 0);
    std::fill(sum_.begin(), sum_.end(), 0.0);
  }
  void Add(std::size_t rank, double value) {
    for (std::size_t i = rank + 1; i < cnt_.size(); i += i & (~i + 1)) {
      cnt_[i] += 1;
      sum_[i] += value;
    }
  }
  // Count and sum of entries with rank < r.
  void Prefix(std::size_t r, std::size_t& count, double& sum) const {
    count = 0;
    sum = 0;
    for (std::size_t i = r; i > 0; i -= i & (~i + 1)) {
      count += cnt_[i];
      sum += sum_[i];
    }
  }

 private:
  std::vector<std::size_t> cnt_;
  std::vector<double> sum_;
};

// Dense two-phase simplex for min c.x subject to A x = b, x >= 0, b >= 0,
// with Bland's rule. Returns the optimal objective value.
double SolveStandardLp(const std::vector<std::vector<double>>& A,
                       const std::vector<double>& b, const std::vector<double>& c) {
  const std::size_t rows = A.size();
  const std::size_t vars = c.size();
  const std::size_t cols = vars + rows;  // plus one artificial per row
  const double tol = 1e-12;
  // Tableau rows 0..rows-1, objective row `rows`; last column is the RHS.
  std::vector<std::vector<double>> T(rows + 1, std::vector<double>(cols + 1, 0.0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) T[i][j] = A[i][j];
    T[i][vars + i] = 1.0;
    T[i][cols] = b[i];
    basis[i] = vars + i;
  }
  auto pivot = [&](std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / T[pr][pc];
    for (double& x : T[pr]) x *= inv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == pr) continue;
      const double f = T[i][pc];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[pr][j];
    }
    basis[pr] = pc;
  };
  auto run = [&](std::size_t usable) {
    for (;;) {
      std::size_t pc = usable;
      for (std::size_t j = 0; j < usable; ++j) {
        if (T[rows][j] < -tol) {
          pc = j;
          break;
        }
      }
      if (pc == usable) return;
      std::size_t pr = rows;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows; ++i) {
        if (T[i][pc] > tol) {
          const double ratio = T[i][cols] / T[i][pc];
          if (ratio < best - tol || (ratio <= best + tol && pr < rows && basis[i] < basis[pr])) {
            best = ratio;
            pr = i;
          }
        }
      }
      if (pr == rows) throw std::runtime_error("linear program is unbounded");
      pivot(pr, pc);
    }
  };
  // Phase one: minimize the sum of artificials.
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j <= cols; ++j) {
      if (j < vars || j == cols) T[rows][j] -= T[i][j];
    }
  }
  run(cols);
  if (-T[rows][cols] > 1e-9) throw std::runtime_error("linear program is infeasible");
  // Drive remaining artificials out of the basis where possible.
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < vars) continue;
    for (std::size_t j = 0; j < vars; ++j) {
      if (std::abs(T[i][j]) > 1e-9) {
        pivot(i, j);
        break;
      }
    }
  }
  // Phase two on the original objective, artificial columns frozen.
  std::fill(T[rows].begin(), T[rows].end(), 0.0);
  for (std::size_t j = 0; j < vars; ++j) T[rows][j] = c[j];
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t bj = basis[i];
    if (bj < vars && c[bj] != 0.0) {
      const double f = c[bj];
      for (std::size_t j = 0; j <= cols; ++j) T[rows][j] -= f * T[i][j];
    }
  }
  run(vars);
  return -T[rows][cols];
}

double ExactMonotoneDistance(const std::vector<double>& p) {
  const std::size_t n = p.size();
  // Variables: x (n), u (n), v (n), slack s (n - 1).
  const std::size_t vars = 4 * n - 1;
  const std::size_t rows = 2 * n;
  std::vector<std::vector<double>> A(rows, std::vector<double>(vars, 0.0));
  std::vector<double> b(rows, 0.0), c(vars, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    // x_i - u_i + v_i = p_i
    A[i][i] = 1;
    A[i][n + i] = -1;
    A[i][2 * n + i] = 1;
    b[i] = p[i];
    c[n + i] = 1;
    c[2 * n + i] = 1;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    // x_i - x_{i+1} - s_i = 0
    A[n + i][i] = 1;
    A[n + i][i + 1] = -1;
    A[n + i][3 * n + i] = -1;
  }
  for (std::size_t i = 0; i < n; ++i) A[2 * n - 1][i] = 1;
  b[2 * n - 1] = 1;
  return std::max(0.0, SolveStandardLp(A, b, c));
}

// Lower weighted median of values[lo, hi) by unit weights.
struct Block {
  std::vector<double> values;
  double level = 0;
  std::size_t length = 0;
};

double Median(std::vector<double> v) {
  const std::size_t mid = (v.size() - 1) / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  return v[mid];
}

}  // namespace

double DistanceToUniform(const Distribution& d) {
  const double u = 1.0 / static_cast<double>(d.size());
  double s = 0;
  for (double x : d.masses()) s += std::abs(x - u);
  return s;
}

double DistanceToKHistogram(const Distribution& d, std::size_t k) {
  const std::size_t n = d.size();
  if (k == 0 || k > n) throw UsageError("k must lie in [1, n]");
  if (k == n) return 0.0;
  const auto& p = d.masses();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
  // sorted[r] is the r-th smallest mass, for locating the mean's rank.
  std::vector<double> sorted(n);
  for (std::size_t r = 0; r < n; ++r) sorted[r] = p[order[r]];

  const double inf = std::numeric_limits<double>::infinity();
  // best[j][h]: min cost covering [0, h] with exactly j+1 intervals.
  std::vector<std::vector<double>> best(k, std::vector<double>(n, inf));
  RankTree tree(n);
  for (std::size_t lo = 0; lo < n; ++lo) {
    tree.Clear();
    double total = 0;
    for (std::size_t hi = lo; hi < n; ++hi) {
      tree.Add(rank[hi], p[hi]);
      total += p[hi];
      const double len = static_cast<double>(hi - lo + 1);
      const double avg = total / len;
      // Entries with mass < avg have rank below the first sorted value >= avg.
      const std::size_t cut = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), avg) - sorted.begin());
      std::size_t below_count;
      double below_sum;
      tree.Prefix(cut, below_count, below_sum);
      const double bc = static_cast<double>(below_count);
      const double cost = (avg * bc - below_sum) + ((total - below_sum) - avg * (len - bc));
      const double c = std::max(0.0, cost);
      if (lo == 0) {
        best[0][hi] = c;
      } else {
        for (std::size_t j = 1; j < k; ++j) {
          const double prev = best[j - 1][lo - 1];
          if (prev + c < best[j][hi]) best[j][hi] = prev + c;
        }
      }
    }
  }
  double out = inf;
  for (std::size_t j = 0; j < k; ++j) out = std::min(out, best[j][n - 1]);
  return out;
}

Distribution MonotoneFit(const Distribution& d) {
  // Pool-adjacent-violators for non-increasing l1 fits: block levels are
  // medians, merged while a later block sits above an earlier one.
  std::vector<Block> blocks;
  for (double x : d.masses()) {
    blocks.push_back({{x}, x, 1});
    while (blocks.size() > 1 &&
           blocks[blocks.size() - 2].level < blocks.back().level) {
      Block top = std::move(blocks.back());
      blocks.pop_back();
      Block& prev = blocks.back();
      prev.values.insert(prev.values.end(), top.values.begin(), top.values.end());
      prev.length += top.length;
      prev.level = Median(prev.values);
    }
  }
  std::vector<double> fit;
  fit.reserve(d.size());
  for (const Block& b : blocks) fit.insert(fit.end(), b.length, std::max(0.0, b.level));
  const double total = std::accumulate(fit.begin(), fit.end(), 0.0);
  if (!(total > 0)) return Distribution::PointMass(d.size(), 0);
  for (double& x : fit) x /= total;
  return Distribution(std::move(fit));
}

MonotoneDistance DistanceToMonotoneDetailed(const Distribution& d) {
  const auto& p = d.masses();
  bool monotone = true;
  for (std::size_t i = 1; i < p.size(); ++i) monotone = monotone && p[i] <= p[i - 1];
  if (monotone) return {0.0, true};
  if (p.size() <= kMonotoneExactLimit) return {ExactMonotoneDistance(p), true};
  const Distribution fit = MonotoneFit(d);
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - fit[i]);
  return {s, false};
}

}  // namespace condtest
