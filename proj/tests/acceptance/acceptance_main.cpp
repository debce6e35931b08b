/*
 * Copyright 2026 The intervalroc Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "intervalroc/bootstrap.hpp"
#include "intervalroc/pairwise.hpp"
#include "intervalroc/rates.hpp"
#include "intervalroc/synthetic.hpp"
#include "intervalroc/tabular.hpp"
#include "oracles.hpp"

namespace intervalroc {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string Sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

bool Near(double value, double target, double tol) { return std::abs(value - target) <= tol; }

// ---------------------------------------------------------------------------
// Property criteria

std::size_t RandomSize(std::mt19937_64& rng, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(1, hi)(rng);
}

Outcome DecompositionIdentity() {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int grid = trial % 3 == 0 ? 0 : (trial % 3 == 1 ? 8 : 50);
    const auto d = testing::random_dataset(rng, RandomSize(rng, 500), RandomSize(rng, 500), grid);
    const auto r = pairwise_counts(d);
    worst = std::max(worst, std::abs(r.p_correct() + r.p_overlap() + r.p_incorrect() - 1.0));
  }
  return {worst <= 1e-12, "1000 datasets, max |sum - 1| = " + Sci(worst)};
}

Outcome OracleEquivalence() {
  std::mt19937_64 rng(202);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = testing::random_dataset(rng, RandomSize(rng, 500), RandomSize(rng, 500),
                                           trial % 2 == 0 ? 0 : 12);
    const auto fast = pairwise_counts(d);
    const auto brute = testing::brute_force_counts(d);
    if (fast.correct != brute.above || fast.incorrect != brute.below ||
        fast.overlap() != brute.overlap) {
      ++mismatches;
    }
  }
  return {mismatches == 0, "200 datasets, mismatches = " + std::to_string(mismatches)};
}

Outcome CountingCurveEquivalence() {
  std::mt19937_64 rng(303);
  double worst_step = 0.0;
  double worst_trap = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int grid = trial % 2 == 0 ? 0 : 10;
    const auto d = testing::random_dataset(rng, RandomSize(rng, 500), RandomSize(rng, 500), grid);
    const auto r = pairwise_counts(d);
    const auto strict = build_curve(d, CurvePairing::kStrict);
    const auto perm = build_curve(d, CurvePairing::kPermissive);
    worst_step = std::max({worst_step,
                           std::abs(integrate_curve(strict, IntegrationRule::kStep) - auc_l(r)),
                           std::abs(integrate_curve(perm, IntegrationRule::kStep) - auc_u(r))});
  }
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> size(100, 500);
    const auto d = testing::random_dataset(rng, size(rng), size(rng), trial % 2 == 0 ? 0 : 1000);
    const auto r = pairwise_counts(d);
    worst_trap = std::max(
        {worst_trap,
         std::abs(integrate_curve(build_curve(d, CurvePairing::kStrict)) - auc_l(r)),
         std::abs(integrate_curve(build_curve(d, CurvePairing::kPermissive)) - auc_u(r))});
  }
  return {worst_step < 1e-12 && worst_trap < 0.005,
          "step max delta " + Sci(worst_step) + " (200 datasets), trapezoid max delta " +
              Sci(worst_trap) + " (100 datasets, n >= 100, half on a 0.001 grid)"};
}

Outcome ClassicalReduction() {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> ps(RandomSize(rng, 300)), ns(RandomSize(rng, 300));
    for (auto& v : ps) v = u(rng) * 0.7 + 0.3;
    for (auto& v : ns) v = u(rng) * 0.7;
    ClassedIntervalDataset d;
    for (double v : ps) d.positives.push_back(IntervalPrediction::point(v));
    for (double v : ns) d.negatives.push_back(IntervalPrediction::point(v));
    const double classical = testing::brute_force_auc(ps, ns);
    const auto r = pairwise_counts(d);
    if (auc_l(r) != classical || auc_u(r) != classical) ++failures;
  }
  return {failures == 0, "200 point-score datasets, inexact = " + std::to_string(failures)};
}

// Scores on a dyadic lattice k/16 so that s +- m/32 is exact. Samples are
// redrawn until the empirical accuracy per score gap is non-decreasing.
struct LatticeSample {
  std::vector<int> pos;
  std::vector<int> neg;
};

bool AccuracyNonDecreasingInGap(const LatticeSample& s) {
  std::map<int, std::pair<long, long>> by_gap;  // gap -> (correct, incorrect)
  for (int a : s.pos) {
    for (int b : s.neg) {
      if (a > b) ++by_gap[a - b].first;
      if (a < b) ++by_gap[b - a].second;
    }
  }
  double prev = -1.0;
  for (const auto& [gap, counts] : by_gap) {
    const double h = static_cast<double>(counts.first) / (counts.first + counts.second);
    if (h < prev) return false;
    prev = h;
  }
  return true;
}

Outcome UaucMonotonicity() {
  std::mt19937_64 rng(505);
  int samples = 0, draws = 0, violations = 0, defined_rows = 0;
  while (samples < 50) {
    ++draws;
    if (draws > 200000) break;
    std::uniform_int_distribution<int> n(50, 400);
    std::binomial_distribution<int> pos(16, 0.6), neg(16, 0.4);
    LatticeSample s;
    s.pos.resize(n(rng));
    s.neg.resize(n(rng));
    for (auto& v : s.pos) v = pos(rng);
    for (auto& v : s.neg) v = neg(rng);
    if (!AccuracyNonDecreasingInGap(s)) continue;
    ++samples;
    std::optional<double> prev;
    for (int m = 0; m <= 34; ++m) {  // half-width m/32, non-decreasing in the level
      const double delta = m / 32.0;
      ClassedIntervalDataset d;
      for (int v : s.pos) d.positives.emplace_back(v / 16.0 - delta, v / 16.0 + delta);
      for (int v : s.neg) d.negatives.emplace_back(v / 16.0 - delta, v / 16.0 + delta);
      const auto u = uauc(pairwise_counts(d));
      if (!u) continue;
      ++defined_rows;
      if (prev && *u < *prev - 1e-12) ++violations;
      prev = u;
    }
  }
  return {samples == 50 && violations == 0,
          std::to_string(samples) + " samples (" + std::to_string(draws) + " draws), " +
              std::to_string(defined_rows) + " defined levels, decreases = " +
              std::to_string(violations)};
}

Outcome BoundContainment() {
  const std::vector<double> alphas = {0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.10};
  int contained = 0, runs = 0, width_breaks = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SyntheticConfig cfg;
    cfg.n_per_class = 20000;
    cfg.seed = seed;
    const auto rows = validate_bounds(cfg, alphas);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      ++runs;
      contained += rows[k].contained;
      if (k > 0 && rows[k].width() < rows[k - 1].width()) ++width_breaks;
    }
  }
  return {contained == 50 && runs == 50 && width_breaks == 0,
          std::to_string(contained) + "/" + std::to_string(runs) +
              " contained, width decreases = " + std::to_string(width_breaks)};
}

// ---------------------------------------------------------------------------
// Pima reproduction

const std::string kPima = std::string(INTERVALROC_DATA_DIR) + "/pima-indians-diabetes.csv";

struct PimaRun {
  PredictionMatrix matrix;
  std::vector<int> labels;
  double point_auc = 0.0;
};

PimaRun RunPima(std::uint64_t seed) {
  const auto data = load_csv(kPima);
  const auto split = stratified_split(data, 0.30, seed);
  BootstrapOptions opt;
  opt.replicates = 300;
  opt.master_seed = seed;
  PimaRun run;
  run.matrix = bootstrap_predict(split.train, split.test, opt);
  run.labels = split.test.labels;
  run.point_auc = intervalroc::point_auc(replicate_means(run.matrix), run.labels);
  return run;
}

const PimaRun& DefaultPimaRun() {
  static const PimaRun run = RunPima(42);
  return run;
}

Outcome BaselinePointAuc() {
  bool ok = true;
  std::string detail;
  double sum = 0.0;
  for (std::uint64_t seed = 42; seed < 47; ++seed) {
    const double auc = seed == 42 ? DefaultPimaRun().point_auc : RunPima(seed).point_auc;
    sum += auc;
    ok = ok && Near(auc, 0.831, 0.02);
    detail += "seed " + std::to_string(seed) + ": " + Fmt(auc) + "  ";
  }
  return {ok, detail + "(mean " + Fmt(sum / 5) + ", target 0.831 +- 0.02 each)"};
}

Outcome TableOneRow() {
  const auto& run = DefaultPimaRun();
  const auto d = percentile_intervals(run.matrix, 0.90, run.labels);
  const auto r = pairwise_counts(d);
  const double trap_l = integrate_curve(build_curve(d, CurvePairing::kStrict));
  const double trap_u = integrate_curve(build_curve(d, CurvePairing::kPermissive));
  const double dl = std::abs(trap_l - auc_l(r)), du = std::abs(trap_u - auc_u(r));
  const bool ok = Near(auc_l(r), 0.607, 0.03) && Near(auc_u(r), 0.944, 0.03) &&
                  Near(r.p_overlap(), 0.337, 0.03) && Near(r.p_incorrect(), 0.056, 0.03) &&
                  dl < 0.005 && du < 0.005;
  return {ok, "90%: auc_l " + Fmt(auc_l(r)) + " (0.607), auc_u " + Fmt(auc_u(r)) +
                  " (0.944), overlap " + Fmt(r.p_overlap()) + " (0.337), incorrect " +
                  Fmt(r.p_incorrect()) + " (0.056), deltas " + Sci(dl) + "/" + Sci(du)};
}

Outcome TableTwoTrends() {
  const auto& run = DefaultPimaRun();
  const double levels[] = {0.5, 0.7, 0.9, 0.95};
  const double target[4][3] = {{0.7492, 0.8914, 0.1423},
                               {0.6997, 0.9139, 0.2142},
                               {0.6072, 0.9439, 0.3367},
                               {0.5585, 0.9562, 0.3977}};
  bool values_ok = true, trends_ok = true;
  double prev_l = 2, prev_u = -1, prev_o = -1;
  std::string detail;
  for (int k = 0; k < 4; ++k) {
    const auto r = pairwise_counts(percentile_intervals(run.matrix, levels[k], run.labels));
    const double l = auc_l(r), u = auc_u(r), o = r.p_overlap();
    values_ok = values_ok && Near(l, target[k][0], 0.03) && Near(u, target[k][1], 0.03) &&
                Near(o, target[k][2], 0.03);
    trends_ok = trends_ok && l < prev_l && u > prev_u && o > prev_o;
    prev_l = l;
    prev_u = u;
    prev_o = o;
    detail += Fmt(levels[k] * 100, 0) + "%: " + Fmt(l) + "/" + Fmt(u) + "/" + Fmt(o) + "  ";
  }
  return {values_ok && trends_ok,
          detail + "trends " + (trends_ok ? "ok" : "broken") + ", values " +
              (values_ok ? "within 0.03" : "outside 0.03")};
}

Outcome SelectivePrediction() {
  const auto& run = DefaultPimaRun();
  const auto r = pairwise_counts(percentile_intervals(run.matrix, 0.90, run.labels));
  const auto u = uauc(r);
  const double ar = abstention_rate(r);
  const bool ok = u && Near(ar, 0.337, 0.03) && Near(*u, 0.916, 0.03) && *u > run.point_auc;
  return {ok, "AR " + Fmt(ar) + " (0.337), uAUC " + (u ? Fmt(*u) : "undefined") +
                  " (0.916), point AUC " + Fmt(run.point_auc)};
}

Outcome SyntheticReproduction() {
  SyntheticConfig cfg;
  cfg.n_per_class = 20000;
  cfg.seed = 0;
  const std::vector<double> alphas = {0.01, 0.05};
  const auto rows = validate_bounds(cfg, alphas);
  const double star = rows[0].auc_star;
  auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
  const double l1 = clamp01(rows[0].lower_bound), u1 = clamp01(rows[0].upper_bound);
  const double l5 = clamp01(rows[1].lower_bound), u5 = clamp01(rows[1].upper_bound);
  const bool ok = star >= 0.755 && star <= 0.770 && Near(l1, 0.574, 0.05) &&
                  Near(u1, 0.903, 0.05) && Near(l5, 0.459, 0.05) && Near(u5, 0.992, 0.05);
  return {ok, "AUC* " + Fmt(star) + " (analytic " + Fmt(analytic_auc_star(0, 1)) +
                  "), alpha 0.01 [" + Fmt(l1, 3) + ", " + Fmt(u1, 3) + "], alpha 0.05 [" +
                  Fmt(l5, 3) + ", " + Fmt(u5, 3) + "]"};
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0 means none
  std::function<Outcome()> check;
};

}  // namespace
}  // namespace intervalroc

int main() {
  using namespace intervalroc;
  const std::vector<Criterion> criteria = {
      {1, "decomposition identity", 10.0, DecompositionIdentity},
      {2, "fast counter equals brute force", 30.0, OracleEquivalence},
      {3, "counting equals curve area", 0.0, CountingCurveEquivalence},
      {4, "classical reduction", 0.0, ClassicalReduction},
      {5, "uAUC monotone in level", 0.0, UaucMonotonicity},
      {6, "bound containment and width", 0.0, BoundContainment},
      {7, "Pima baseline point AUC", 0.0, BaselinePointAuc},
      {8, "Pima 90% interval row", 0.0, TableOneRow},
      {9, "Pima level sweep", 0.0, TableTwoTrends},
      {10, "Pima selective prediction", 0.0, SelectivePrediction},
      {11, "synthetic bound reproduction", 60.0, SyntheticReproduction},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      out.pass = false;
      out.detail += " [over " + Fmt(c.time_limit_s, 0) + " s]";
    }
    failed += !out.pass;
    std::printf("%s criterion %2d  %-34s %7.2fs  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                secs, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
