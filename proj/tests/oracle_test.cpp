/*
 * Copyright 2026 The planar-frames Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "planar_frames/oracle.hpp"
#include "planar_frames/restricted.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

namespace pf = planar_frames;
using pf::Interval;
using pf::SearchSpec;
using pf::Vec2;
using pf::testing::error_kind;
using pf::testing::polar;
using pf::testing::Rng;

TEST(GridSearch, OrthonormalPairPicksSmallestEqualWeights) {
  const auto r = pf::grid_search_scaling(pf::Frame{{1, 0}, {0, 1}}, SearchSpec::uniform(0.5, 2, 11));
  EXPECT_EQ(r.result.bounds.cond, 1.0);
  EXPECT_EQ(r.result.scaling.weights, (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(r.evaluated, 121u);
  EXPECT_EQ(r.skipped, 0u);
  EXPECT_EQ(r.result.method, pf::ScalingMethod::oracle);
}

TEST(GridSearch, QuarterArcDropsInteriorVector) {
  const auto r = pf::grid_search_scaling(pf::Frame{polar(10), polar(40), polar(80)},
                                         SearchSpec::uniform(0, 2, 41));
  EXPECT_EQ(r.result.scaling[1], 0.0);
  EXPECT_EQ(r.result.scaling[0], r.result.scaling[2]);
  EXPECT_NEAR(r.result.bounds.cond, 2.0396067291614747, 1e-12);
  EXPECT_GT(r.skipped, 0u);
}

TEST(GridSearch, UnitPairIsFlatAlongEqualWeights) {
  const double a = 0.3;
  const pf::Frame f{{1, 0}, {a, std::sqrt(1 - a * a)}};
  const auto r = pf::grid_search_scaling(f, SearchSpec::uniform(0.9, 1.1, 201));
  EXPECT_NEAR(r.result.bounds.cond, 13.0 / 7.0, 1e-6);
  EXPECT_EQ(r.result.scaling[0], r.result.scaling[1]);
}

TEST(GridSearch, AgreesWithPlainEnumeration) {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = rng.integer(2, 4);
    std::vector<Vec2> v;
    for (int i = 0; i < m; ++i) v.push_back(rng.vector());
    const auto r = pf::grid_search_scaling(pf::Frame(v), SearchSpec::uniform(0.5, 1.5, 9));
    ASSERT_NEAR(r.result.bounds.cond, pf::testing::brute_grid_min(v, 0.5, 1.5, 9),
                1e-9 * r.result.bounds.cond);
  }
}

TEST(GridSearch, SameAnswerForAnyThreadCount) {
  Rng rng(72);
  for (int trial = 0; trial < 10; ++trial) {
    const pf::Frame f(rng.in_arc(4, rng.uniform(0.2, 1.5)));
    SearchSpec spec = SearchSpec::uniform(0, 2, 21);
    spec.threads = 1;
    const auto base = pf::grid_search_scaling(f, spec);
    for (unsigned t : {2u, 3u, 7u, 16u}) {
      spec.threads = t;
      const auto other = pf::grid_search_scaling(f, spec);
      ASSERT_EQ(other.result.scaling.weights, base.result.scaling.weights);
      ASSERT_EQ(other.result.bounds.cond, base.result.bounds.cond);
      ASSERT_EQ(other.skipped, base.skipped);
    }
  }
}

TEST(GridSearch, FinerNestedLatticeNeverWorse) {
  Rng rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const pf::Frame f(rng.in_arc(3, rng.uniform(0.2, 2.5)));
    int levels = 3;
    double prev = INFINITY;
    for (int step = 0; step < 5; ++step) {
      const double c = pf::grid_search_scaling(f, SearchSpec::uniform(0.2, 1.7, levels))
                           .result.bounds.cond;
      ASSERT_LE(c, prev) << "levels " << levels;
      prev = c;
      levels = 2 * levels - 1;
    }
  }
}

TEST(GridSearch, ScaleInvariance) {
  Rng rng(74);
  for (int trial = 0; trial < 30; ++trial) {
    const pf::Frame f(rng.in_arc(3, rng.uniform(0.2, 2.5)));
    const double t = rng.uniform(0.1, 10);
    const double base =
        pf::grid_search_scaling(f, SearchSpec::uniform(0.5, 1.5, 15)).result.bounds.cond;
    const double scaled =
        pf::grid_search_scaling(f, SearchSpec::uniform(0.5 * t, 1.5 * t, 15)).result.bounds.cond;
    ASSERT_NEAR(scaled, base, 1e-10 * base);
  }
}

TEST(GridSearch, PerWeightBoxes) {
  SearchSpec spec;
  spec.boxes = {Interval{1, 1}, Interval{0.25, 4}};
  spec.levels = 16;
  const auto r = pf::grid_search_scaling(pf::Frame{{1, 0}, {0, 2}}, spec);
  EXPECT_EQ(r.result.scaling[0], 1.0);
  EXPECT_EQ(r.result.scaling[1], 0.5);
  EXPECT_EQ(r.result.bounds.cond, 1.0);
}

TEST(GridSearch, Errors) {
  const pf::Frame f{{1, 0}, {0, 1}, {1, 1}};
  SearchSpec big = SearchSpec::uniform(0, 1, 101);
  big.max_evaluations = 1'000'000;
  EXPECT_EQ(error_kind([&] { pf::grid_search_scaling(f, big); }), pf::ErrorKind::budget_exceeded);
  EXPECT_EQ(error_kind([&] { pf::grid_search_scaling(f, SearchSpec::uniform(0, 0, 3)); }),
            pf::ErrorKind::degenerate_frame);
  EXPECT_EQ(error_kind([&] { pf::grid_search_scaling(f, SearchSpec::uniform(1, 0.5, 3)); }),
            pf::ErrorKind::invalid_input);
  EXPECT_EQ(error_kind([&] { pf::grid_search_scaling(f, SearchSpec::uniform(0, 1, 1)); }),
            pf::ErrorKind::invalid_input);
  SearchSpec two;
  two.boxes = {Interval{0, 1}, Interval{0, 1}};
  EXPECT_EQ(error_kind([&] { pf::grid_search_scaling(f, two); }), pf::ErrorKind::dimension);
}

TEST(RefineScaling, ApproachesEqualizingPairWeights) {
  const pf::Budget budget(0.05);
  const Vec2 u = polar(0, 0.95);
  const Vec2 v = polar(70, 1.0);
  const pf::Frame f{u, v};
  const auto exact = pf::restricted_pair(u, v, budget);
  const auto grid = pf::grid_search_scaling(f, SearchSpec::uniform(budget.lo(), budget.hi(), 21));
  const auto r = pf::refine_scaling(f, grid.result.scaling, {Interval{budget.lo(), budget.hi()}});
  ASSERT_LE(r.bounds.cond, grid.result.bounds.cond);
  EXPECT_NEAR(r.bounds.cond, exact.bounds.cond, 1e-12);
  // cond is flat to second order at the optimum, so the weights themselves
  // are only pinned to about the square root of machine precision.
  EXPECT_NEAR(r.scaling[0] / r.scaling[1], exact.scaling[0] / exact.scaling[1], 1e-6);
}

TEST(RefineScaling, FixedPoint) {
  const auto r = pf::refine_scaling(pf::Frame{{1, 0}, {0, 1}}, pf::Scaling({1, 1}),
                                    {Interval{0.5, 2}});
  EXPECT_EQ(r.scaling.weights, (std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(r.bounds.cond, 1.0);
}

TEST(RefineScaling, DegenerateBox) {
  const pf::Frame f{polar(0), polar(50, 2)};
  const auto r = pf::refine_scaling(f, pf::Scaling({0.7, 1.3}), {Interval{0.7, 0.7}, Interval{1.3, 1.3}});
  EXPECT_EQ(r.scaling.weights, (std::vector<double>{0.7, 1.3}));
}

TEST(RefineScaling, NeverWorse) {
  Rng rng(75);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = rng.integer(2, 5);
    const pf::Frame f(rng.in_arc(m, rng.uniform(0.1, 3.0)));
    std::vector<double> w;
    for (int i = 0; i < m; ++i) w.push_back(rng.uniform(0.5, 1.5));
    const pf::Scaling init(w);
    const double before = pf::frame_bounds(pf::apply_scaling(f, init)).cond;
    const auto r = pf::refine_scaling(f, init, {Interval{0.5, 1.5}}, 20);
    ASSERT_LE(r.bounds.cond, before);
    for (double x : r.scaling.weights) {
      ASSERT_GE(x, 0.5);
      ASSERT_LE(x, 1.5);
    }
  }
}

TEST(RefineScaling, InitOutsideBox) {
  EXPECT_EQ(error_kind([] {
              pf::refine_scaling(pf::Frame{{1, 0}, {0, 1}}, pf::Scaling({1, 3}), {Interval{0, 2}});
            }),
            pf::ErrorKind::invalid_input);
}

TEST(SearchScaling, RefineFlag) {
  const pf::Frame f{polar(0, 0.95), polar(70, 1.0)};
  SearchSpec spec = SearchSpec::uniform(0.95, 1.05, 5);
  const auto plain = pf::search_scaling(f, spec);
  spec.refine = true;
  const auto refined = pf::search_scaling(f, spec);
  EXPECT_FALSE(plain.refined);
  EXPECT_TRUE(refined.refined);
  EXPECT_LE(refined.result.bounds.cond, plain.result.bounds.cond);
}

TEST(VerifyScaling, Examples) {
  const double w = std::sqrt(2.0 / 3.0);
  const auto a = pf::verify_scaling(std::vector<Vec2>{polar(0), polar(60), polar(120)},
                                    pf::Scaling({w, w, w}), 1.0, 1e-9);
  EXPECT_TRUE(a.pass);
  EXPECT_TRUE(a.tightness.is_tight);

  const std::vector<Vec2> pair{{1, 0}, {0.3, std::sqrt(0.91)}};
  EXPECT_TRUE(pf::verify_scaling(pair, pf::Scaling({1, 1}), 13.0 / 7.0, 1e-9).pass);
  const auto c = pf::verify_scaling(pair, pf::Scaling({1, 1}), 2.0, 1e-9);
  EXPECT_FALSE(c.pass);
  EXPECT_NEAR(c.bounds.cond, 13.0 / 7.0, 1e-12);
}

TEST(VerifyScaling, InfiniteCondition) {
  const std::vector<Vec2> pair{{1, 0}, {0, 1}};
  EXPECT_TRUE(pf::verify_scaling(pair, pf::Scaling({1, 0}), INFINITY, 1e-9).pass);
  EXPECT_FALSE(pf::verify_scaling(pair, pf::Scaling({1, 0}), 1.0, 1e-9).pass);
  EXPECT_FALSE(pf::verify_scaling(pair, pf::Scaling({1, 1}), INFINITY, 1e-9).pass);
}
