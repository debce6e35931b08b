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

#include "intervalroc/synthetic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "intervalroc/errors.hpp"
#include "oracles.hpp"

namespace intervalroc {
namespace {

TEST(PosteriorEta, Midpoints) {
  EXPECT_DOUBLE_EQ(posterior_eta(0.5, 0.0, 1.0), 0.5);
  EXPECT_DOUBLE_EQ(posterior_eta(2.0, 1.0, 3.0), 0.5);
}

TEST(PosteriorEta, ClosedFormValue) {
  EXPECT_NEAR(posterior_eta(1.5, 0.0, 1.0), 0.7310585786300049, 1e-15);
}

TEST(PosteriorEta, MatchesDensityRatio) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-3.0, 4.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng), mu0 = u(rng) / 2, mu1 = u(rng) / 2;
    const double f1 = testing::normal_pdf(x, mu1), f0 = testing::normal_pdf(x, mu0);
    ASSERT_NEAR(posterior_eta(x, mu0, mu1), f1 / (f1 + f0), 1e-12);
  }
}

TEST(AnalyticAucStar, KnownValues) {
  EXPECT_NEAR(analytic_auc_star(0.0, 1.0), 0.7602499389065233, 1e-15);
  EXPECT_DOUBLE_EQ(analytic_auc_star(1.0, 1.0), 0.5);
}

TEST(GenerateWorld, LayoutAndMoments) {
  SyntheticConfig cfg;
  cfg.n_per_class = 100000;
  cfg.seed = 3;
  const auto w = generate_world(cfg);
  ASSERT_EQ(w.size(), 200000u);
  double m0 = 0, m1 = 0, e0 = 0, e1 = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    ASSERT_EQ(w[i].label, i < cfg.n_per_class ? 0 : 1);
    ASSERT_FALSE(w[i].interval.has_value());
    (w[i].label ? m1 : m0) += w[i].x;
    (w[i].label ? e1 : e0) += w[i].eta;
  }
  EXPECT_NEAR(m1 / cfg.n_per_class, 1.0, 0.02);
  EXPECT_NEAR(m0 / cfg.n_per_class, 0.0, 0.02);
  EXPECT_LT(e0, e1);
}

TEST(GenerateWorld, Deterministic) {
  SyntheticConfig cfg;
  cfg.n_per_class = 500;
  cfg.seed = 77;
  const auto a = generate_world(cfg), b = generate_world(cfg);
  for (std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i].x, b[i].x);
  cfg.seed = 78;
  EXPECT_NE(generate_world(cfg)[0].x, a[0].x);
}

TEST(SyntheticConfig, Validate) {
  SyntheticConfig cfg;
  cfg.alpha = 1.0;
  EXPECT_THROW(cfg.validate(), ContractError);
  cfg.alpha = 0.1;
  cfg.n_per_class = 1;
  EXPECT_THROW(cfg.validate(), ContractError);
}

TEST(IntervalHalfWidth, Formula) {
  std::vector<SyntheticSample> s(4);
  const double etas[] = {0.2, 0.4, 0.6, 0.8};
  for (int i = 0; i < 4; ++i) s[i].eta = etas[i];
  // Population std of {0.2, 0.4, 0.6, 0.8} is sqrt(0.05).
  EXPECT_NEAR(interval_half_width(s, 0.1), 0.05 + 0.03 + 0.1 * std::sqrt(0.05), 1e-15);
}

TEST(BuildIntervals, ZeroAlphaCoversEverything) {
  SyntheticConfig cfg;
  cfg.n_per_class = 5000;
  const auto s = build_intervals(generate_world(cfg), 0.0, 1);
  for (const auto& x : s) {
    ASSERT_TRUE(x.covered);
    ASSERT_TRUE(x.interval->contains(x.eta));
    ASSERT_GE(x.interval->lower(), 0.0);
    ASSERT_LE(x.interval->upper(), 1.0);
  }
}

TEST(BuildIntervals, RealizedMiscoverageMatchesAlpha) {
  SyntheticConfig cfg;
  cfg.n_per_class = 10000;
  cfg.seed = 4;
  const auto w = generate_world(cfg);
  for (double alpha : {0.01, 0.05, 0.1, 0.3}) {
    const auto s = build_intervals(w, alpha, 9);
    const auto r = empirical_miscoverage(s);
    EXPECT_NEAR(r.positive, alpha, 0.01);
    EXPECT_NEAR(r.negative, alpha, 0.01);
    for (const auto& x : s) {
      ASSERT_EQ(x.covered, x.interval->contains(x.eta));
      ASSERT_GE(x.interval->lower(), 0.0);
      ASSERT_LE(x.interval->upper(), 1.0);
    }
  }
}

TEST(BuildIntervals, NearOneAlphaMissesAlmostAll) {
  SyntheticConfig cfg;
  cfg.n_per_class = 2000;
  const auto s = build_intervals(generate_world(cfg), 0.999, 2);
  const auto r = empirical_miscoverage(s);
  EXPECT_NEAR(r.positive, 0.999, 1e-3);
  EXPECT_NEAR(r.negative, 0.999, 1e-3);
}

TEST(TrueAucStar, MatchesBruteForce) {
  SyntheticConfig cfg;
  cfg.n_per_class = 400;
  cfg.seed = 12;
  const auto w = generate_world(cfg);
  std::vector<double> ps, ns;
  for (const auto& s : w) (s.label ? ps : ns).push_back(s.eta);
  EXPECT_NEAR(true_auc_star(w), testing::brute_force_auc(ps, ns), 1e-15);
}

TEST(TrueAucStar, LimitingCases) {
  SyntheticConfig cfg;
  cfg.n_per_class = 20000;
  cfg.mu1 = 0.0;
  EXPECT_NEAR(true_auc_star(generate_world(cfg)), 0.5, 0.01);
  cfg.mu1 = 10.0;
  EXPECT_GT(true_auc_star(generate_world(cfg)), 0.9999);
}

TEST(ToIntervalDataset, RequiresIntervals) {
  SyntheticConfig cfg;
  cfg.n_per_class = 10;
  const auto w = generate_world(cfg);
  EXPECT_THROW(to_interval_dataset(w), ContractError);
  const auto d = to_interval_dataset(build_intervals(w, 0.0, 0));
  EXPECT_EQ(d.n_pos(), 10u);
  EXPECT_EQ(d.n_neg(), 10u);
}

TEST(ValidateBounds, ContainmentAndMonotoneWidth) {
  SyntheticConfig cfg;
  cfg.n_per_class = 4000;
  cfg.seed = 21;
  const std::vector<double> alphas = {0.0, 0.02, 0.05, 0.1, 0.2};
  const auto rows = validate_bounds(cfg, alphas);
  ASSERT_EQ(rows.size(), alphas.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k].alpha, alphas[k]);
    EXPECT_TRUE(rows[k].contained);
    EXPECT_DOUBLE_EQ(rows[k].p_pair, 2 * alphas[k] - alphas[k] * alphas[k]);
    EXPECT_EQ(rows[k].auc_star, rows[0].auc_star);
    if (k > 0) EXPECT_GE(rows[k].width(), rows[k - 1].width());
  }
  EXPECT_EQ(rows[0].p_pair, 0.0);
}

TEST(ValidateBounds, Deterministic) {
  SyntheticConfig cfg;
  cfg.n_per_class = 1000;
  const std::vector<double> alphas = {0.01, 0.05};
  EXPECT_EQ(validation_to_csv(validate_bounds(cfg, alphas)),
            validation_to_csv(validate_bounds(cfg, alphas)));
}

TEST(ValidateBounds, Errors) {
  SyntheticConfig cfg;
  cfg.n_per_class = 100;
  EXPECT_THROW(validate_bounds(cfg, std::vector<double>{}), ContractError);
  EXPECT_THROW(validate_bounds(cfg, std::vector<double>{1.0}), ContractError);
}

TEST(ValidationCsv, Header) {
  EXPECT_EQ(validation_to_csv({}), "alpha,auc_l,auc_u,p_pair,lower_bound,upper_bound,auc_star,contained\n");
}

}  // namespace
}  // namespace intervalroc
