// Copyright 2026 The specgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "specgap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specgap/error.hpp"

namespace specgap {

PassRate pass_rate(const SandboxResponse& outcome) {
  if (outcome.total == 0) {
    if (outcome.timed_out) return {0.0, false};
    throw DataError("empty test suite: pass rate undefined");
  }
  double pct = 100.0 * outcome.passed / outcome.total;
  return {pct, pct >= kSuccessThreshold};
}

std::optional<double> ConfusionCounts::recall() const {
  if (tp + fn == 0) return std::nullopt;
  return 100.0 * tp / (tp + fn);
}

std::optional<double> ConfusionCounts::precision() const {
  if (tp + fp == 0) return std::nullopt;
  return 100.0 * tp / (tp + fp);
}

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& o) {
  tp += o.tp;
  fn += o.fn;
  fp += o.fp;
  return *this;
}

ConfusionCounts classify_detection(double split_pass_rate, int conflicts) {
  bool failed = split_pass_rate < kFailedSplitThreshold;
  bool detected = conflicts >= 1;
  ConfusionCounts c;
  if (failed && detected) c.tp = 1;
  if (failed && !detected) c.fn = 1;
  if (!failed && detected) c.fp = 1;
  return c;
}

EffectTable factorial_effects(const std::array<std::array<std::optional<double>, 2>, 2>& cells, std::string factor1,
                              std::array<std::string, 2> levels1, std::string factor2,
                              std::array<std::string, 2> levels2) {
  EffectTable t;
  t.factor1 = std::move(factor1);
  t.factor2 = std::move(factor2);
  t.levels1 = std::move(levels1);
  t.levels2 = std::move(levels2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!cells[i][j]) {
        throw DataError("missing cell (" + t.factor1 + "=" + t.levels1[i] + ", " + t.factor2 + "=" + t.levels2[j] + ")");
      }
      t.cells[i][j] = *cells[i][j];
    }
  }
  for (int j = 0; j < 2; ++j) t.effect1_at[j] = t.cells[1][j] - t.cells[0][j];
  for (int i = 0; i < 2; ++i) t.effect2_at[i] = t.cells[i][1] - t.cells[i][0];
  t.main_effect_1 = (t.effect1_at[0] + t.effect1_at[1]) / 2.0;
  t.main_effect_2 = (t.effect2_at[0] + t.effect2_at[1]) / 2.0;
  t.interaction = t.effect1_at[1] - t.effect1_at[0];
  return t;
}

double wilcoxon_exact_p(const std::vector<double>& ranks, double w) {
  // Ranks are multiples of 1/2, so doubled ranks are exact integers and the
  // distribution of doubled W+ is a subset-sum count.
  long long total2 = 0;
  std::vector<long long> r2;
  for (double r : ranks) {
    r2.push_back(std::llround(2 * r));
    total2 += r2.back();
  }
  std::vector<double> count(static_cast<std::size_t>(total2) + 1, 0.0);
  count[0] = 1.0;
  for (long long r : r2) {
    for (long long s = total2; s >= r; --s) count[s] += count[s - r];
  }
  long long w2 = std::llround(2 * w);
  double hit = 0.0, all = 0.0;
  for (long long s = 0; s <= total2; ++s) {
    all += count[s];
    if (std::min(s, total2 - s) <= w2) hit += count[s];
  }
  return hit / all;
}

double wilcoxon_normal_p(const std::vector<double>& ranks, double w_plus) {
  double n = static_cast<double>(ranks.size());
  double mu = n * (n + 1) / 4.0;
  double var = n * (n + 1) * (2 * n + 1) / 24.0;
  std::vector<double> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    double t = static_cast<double>(j - i);
    var -= (t * t * t - t) / 48.0;
    i = j;
  }
  if (var <= 0) return 1.0;
  double z = std::max(0.0, std::fabs(w_plus - mu) - 0.5) / std::sqrt(var);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

WilcoxonResult wilcoxon_signed_rank(const std::vector<std::pair<double, double>>& pairs, WilcoxonMethod method) {
  std::vector<double> diffs;
  for (const auto& [a, b] : pairs) {
    double d = a - b;
    if (d != 0.0) diffs.push_back(d);
  }
  if (diffs.empty()) throw DataError("degenerate sample: every difference is zero");
  std::vector<std::size_t> order(diffs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return std::fabs(diffs[x]) < std::fabs(diffs[y]); });
  std::vector<double> rank(diffs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && std::fabs(diffs[order[j]]) == std::fabs(diffs[order[i]])) ++j;
    double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) rank[order[k]] = avg;
    i = j;
  }
  WilcoxonResult r;
  r.n = static_cast<int>(diffs.size());
  for (std::size_t i = 0; i < diffs.size(); ++i) (diffs[i] > 0 ? r.w_plus : r.w_minus) += rank[i];
  r.w = std::min(r.w_plus, r.w_minus);
  r.exact = method == WilcoxonMethod::Exact || (method == WilcoxonMethod::Auto && r.n <= 10);
  r.p = r.exact ? wilcoxon_exact_p(rank, r.w) : wilcoxon_normal_p(rank, r.w_plus);
  return r;
}

double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw DataError("mean of an empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

std::optional<double> sample_sd(const std::vector<double>& xs) {
  if (xs.size() < 2) return std::nullopt;
  double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double cohens_d(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 2) throw DataError("Cohen's d needs at least two pairs");
  std::vector<double> diffs;
  for (const auto& [a, b] : pairs) diffs.push_back(a - b);
  double sd = *sample_sd(diffs);
  if (sd == 0.0) throw DataError("Cohen's d undefined: zero variance of differences");
  return mean(diffs) / sd;
}

}  // namespace specgap
