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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specgap/sandbox.hpp"

namespace specgap {

struct PassRate {
  double percent = 0.0;
  bool success = false;  // percent >= 80
};

/// 100 * passed / total. Throws DataError when total is 0, except for a
/// timed-out run, which scores 0.
PassRate pass_rate(const SandboxResponse& outcome);

inline constexpr double kSuccessThreshold = 80.0;
inline constexpr double kFailedSplitThreshold = 50.0;

struct ConfusionCounts {
  int tp = 0;
  int fn = 0;
  int fp = 0;

  /// Percent; absent when the denominator is zero.
  std::optional<double> recall() const;
  std::optional<double> precision() const;
  ConfusionCounts& operator+=(const ConfusionCounts& o);
  bool operator==(const ConfusionCounts&) const = default;
};

/// One task at one level: failed when the split pass rate is below 50,
/// detected when at least one conflict was reported.
ConfusionCounts classify_detection(double split_pass_rate, int conflicts);

/// 2x2 factorial summary. Factor levels are indexed 0 (reference) and 1.
/// cells[i][j] is the mean at factor-1 level i and factor-2 level j.
struct EffectTable {
  std::string factor1, factor2;
  std::array<std::string, 2> levels1, levels2;
  std::array<std::array<double, 2>, 2> cells{};
  std::array<double, 2> effect1_at{};  // cells[1][j] - cells[0][j]
  std::array<double, 2> effect2_at{};  // cells[i][1] - cells[i][0]
  double main_effect_1 = 0.0;          // mean of effect1_at
  double main_effect_2 = 0.0;          // mean of effect2_at
  double interaction = 0.0;            // effect1_at[1] - effect1_at[0]
};

EffectTable factorial_effects(const std::array<std::array<std::optional<double>, 2>, 2>& cells,
                              std::string factor1 = "factor1", std::array<std::string, 2> levels1 = {"0", "1"},
                              std::string factor2 = "factor2", std::array<std::string, 2> levels2 = {"0", "1"});

enum class WilcoxonMethod { Auto, Exact, Normal };

struct WilcoxonResult {
  double w = 0.0;  // min(w_plus, w_minus)
  double w_plus = 0.0;
  double w_minus = 0.0;
  int n = 0;  // nonzero differences
  double p = 1.0;  // two-sided
  bool exact = false;
};

/// Paired signed-rank test on a - b. Zero differences are dropped and tied
/// magnitudes share average ranks. Auto uses exact enumeration of sign
/// patterns for n <= 10 and the normal approximation with tie correction and
/// continuity correction above. Throws DataError when every difference is zero.
WilcoxonResult wilcoxon_signed_rank(const std::vector<std::pair<double, double>>& pairs,
                                    WilcoxonMethod method = WilcoxonMethod::Auto);

/// Exact two-sided p from the ranks of nonzero differences: the share of sign
/// patterns whose min(W+, W-) is at most the observed one.
double wilcoxon_exact_p(const std::vector<double>& ranks, double w);

/// Normal-approximation two-sided p for W+ over the given ranks.
double wilcoxon_normal_p(const std::vector<double>& ranks, double w_plus);

/// Paired-samples d: mean(a - b) / sd(a - b) with the n - 1 denominator.
/// Throws DataError for fewer than two pairs or zero variance.
double cohens_d(const std::vector<std::pair<double, double>>& pairs);

double mean(const std::vector<double>& xs);
/// Sample standard deviation; absent below two values.
std::optional<double> sample_sd(const std::vector<double>& xs);

}  // namespace specgap
