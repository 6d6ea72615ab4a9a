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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "planar_frames/analysis.hpp"
#include "planar_frames/core.hpp"

namespace planar_frames {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Lattice for exhaustive search: `levels` evenly spaced points per weight
/// over that weight's interval, endpoints included.
struct SearchSpec {
  std::vector<Interval> boxes;  // one per weight, or a single shared interval
  int levels = 21;
  bool refine = false;
  int refine_iterations = 100;
  std::uint64_t max_evaluations = 100'000'000;
  unsigned threads = 0;  // 0: hardware concurrency

  static SearchSpec uniform(double lo, double hi, int levels) {
    SearchSpec s;
    s.boxes = {Interval{lo, hi}};
    s.levels = levels;
    return s;
  }
};

struct OracleResult {
  ScalingResult result;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;  // rank-deficient lattice points
  bool refined = false;
};

struct VerificationReport {
  bool pass = false;
  double claimed_cond = 0.0;
  double tol = 0.0;
  FrameBounds bounds;
  TightnessReport tightness;
};

namespace detail {

inline std::vector<Interval> expand_boxes(const std::vector<Interval>& boxes,
                                          std::size_t m) {
  if (boxes.size() == 1) return std::vector<Interval>(m, boxes.front());
  if (boxes.size() != m) {
    throw FrameError(ErrorKind::dimension, "search box count " +
                                               std::to_string(boxes.size()) +
                                               " does not match " + std::to_string(m) +
                                               " vectors");
  }
  return boxes;
}

inline void check_boxes(const std::vector<Interval>& boxes) {
  for (const Interval& b : boxes) {
    if (!(std::isfinite(b.lo) && std::isfinite(b.hi) && b.lo >= 0.0 && b.lo <= b.hi)) {
      throw FrameError(ErrorKind::invalid_input, "search interval must satisfy 0 <= lo <= hi");
    }
  }
}

// Lattice point t of `levels`; the product (hi - lo) * t is formed before
// dividing so that nested lattices (levels -> 2 levels - 1) share points
// bit for bit.
inline double lattice_point(const Interval& b, int t, int levels) {
  if (t == levels - 1) return b.hi;
  return b.lo + (b.hi - b.lo) * static_cast<double>(t) / static_cast<double>(levels - 1);
}

// Condition number of sum_i w_i^2 v_i v_i^T; +inf when rank-deficient.
// Same operation order as frame_bounds(apply_scaling(...)), so the value
// matches the bounds later reported for the returned scaling bit for bit.
inline double scaled_condition(Family family, std::span<const double> w) {
  SymMatrix2 s;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Vec2 v = w[i] * family[i];
    s.s11 += v.x * v.x;
    s.s12 += v.x * v.y;
    s.s22 += v.y * v.y;
  }
  const auto [upper, lower] = sym2_eigenvalues(s);
  return lower <= kRankTolerance ? std::numeric_limits<double>::infinity() : upper / lower;
}

}  // namespace detail

/// Exhaustive lattice search for the minimum condition number.
///
/// Rank-deficient points are skipped. The returned argmin is the
/// lexicographically smallest weight vector among exact minimizers; the
/// lattice is split by the leading coordinate across threads and the
/// partial minima are merged in lattice order, so the result is identical
/// for any thread count.
inline OracleResult grid_search_scaling(const Frame& frame, const SearchSpec& spec) {
  const std::size_t m = frame.size();
  if (spec.levels < 2) {
    throw FrameError(ErrorKind::invalid_input, "search needs at least 2 levels");
  }
  const std::vector<Interval> boxes = detail::expand_boxes(spec.boxes, m);
  detail::check_boxes(boxes);

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > spec.max_evaluations / static_cast<std::uint64_t>(spec.levels)) {
      throw FrameError(ErrorKind::budget_exceeded,
                       std::to_string(spec.levels) + "^" + std::to_string(m) +
                           " lattice points exceed the cap of " +
                           std::to_string(spec.max_evaluations));
    }
    total *= static_cast<std::uint64_t>(spec.levels);
  }

  std::vector<std::vector<double>> grid(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (int t = 0; t < spec.levels; ++t) {
      grid[i].push_back(detail::lattice_point(boxes[i], t, spec.levels));
    }
  }

  struct Partial {
    double cond = std::numeric_limits<double>::infinity();
    std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t skipped = 0;
  };
  const std::uint64_t per_lead = total / static_cast<std::uint64_t>(spec.levels);

  // Scans all points whose leading index lies in [lead_begin, lead_end).
  auto scan = [&](int lead_begin, int lead_end, Partial& out) {
    std::vector<int> idx(m, 0);
    std::vector<double> w(m);
    for (int lead = lead_begin; lead < lead_end; ++lead) {
      std::fill(idx.begin(), idx.end(), 0);
      idx[0] = lead;
      for (std::uint64_t k = 0; k < per_lead; ++k) {
        for (std::size_t i = 0; i < m; ++i) w[i] = grid[i][idx[i]];
        const double c = detail::scaled_condition(frame, w);
        if (std::isinf(c)) {
          ++out.skipped;
        } else if (c < out.cond) {
          out.cond = c;
          out.index = static_cast<std::uint64_t>(lead) * per_lead + k;
        }
        for (std::size_t i = m; i-- > 1;) {
          if (++idx[i] < spec.levels) break;
          idx[i] = 0;
        }
      }
    }
  };

  unsigned threads = spec.threads != 0 ? spec.threads : std::thread::hardware_concurrency();
  threads = std::clamp(threads, 1u, static_cast<unsigned>(spec.levels));
  if (total < 20'000) threads = 1;

  std::vector<Partial> partials(threads);
  if (threads == 1) {
    scan(0, spec.levels, partials[0]);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (spec.levels + static_cast<int>(threads) - 1) / static_cast<int>(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const int b = std::min(spec.levels, static_cast<int>(t) * chunk);
      const int e = std::min(spec.levels, b + chunk);
      pool.emplace_back([&, b, e, t] { scan(b, e, partials[t]); });
    }
    for (std::thread& th : pool) th.join();
  }

  Partial best;
  for (const Partial& p : partials) {
    best.skipped += p.skipped;
    if (p.cond < best.cond || (p.cond == best.cond && p.index < best.index)) {
      best.cond = p.cond;
      best.index = p.index;
    }
  }
  if (best.index == std::numeric_limits<std::uint64_t>::max()) {
    throw FrameError(ErrorKind::degenerate_frame,
                     "every lattice point yields a rank-deficient family");
  }

  std::vector<double> w(m);
  std::uint64_t rest = best.index;
  for (std::size_t i = m; i-- > 0;) {
    w[i] = grid[i][rest % static_cast<std::uint64_t>(spec.levels)];
    rest /= static_cast<std::uint64_t>(spec.levels);
  }

  OracleResult out;
  out.result = make_result(frame, Scaling(std::move(w)), ScalingMethod::oracle);
  out.evaluated = total;
  out.skipped = best.skipped;
  return out;
}

/// Cyclic coordinate descent with a golden-section line search per weight,
/// confined to `boxes`. Only strict improvements are accepted, so the
/// result is never worse than `init`.
inline ScalingResult refine_scaling(const Frame& frame, const Scaling& init,
                                    const std::vector<Interval>& box_spec,
                                    int max_sweeps = 100) {
  const std::size_t m = frame.size();
  if (init.size() != m) {
    throw FrameError(ErrorKind::dimension, "initial scaling does not match the frame");
  }
  const std::vector<Interval> boxes = detail::expand_boxes(box_spec, m);
  detail::check_boxes(boxes);
  for (std::size_t i = 0; i < m; ++i) {
    if (init[i] < boxes[i].lo || init[i] > boxes[i].hi) {
      throw FrameError(ErrorKind::invalid_input,
                       "initial weight " + std::to_string(i) + " lies outside its box");
    }
  }

  std::vector<double> w = init.weights;
  double current = detail::scaled_condition(frame, w);
  auto cond_with = [&](std::size_t i, double x) {
    const double saved = w[i];
    w[i] = x;
    const double c = detail::scaled_condition(frame, w);
    w[i] = saved;
    return c;
  };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = current;
    for (std::size_t i = 0; i < m; ++i) {
      double lo = boxes[i].lo;
      double hi = boxes[i].hi;
      if (hi <= lo) continue;
      double x1 = hi - inv_phi * (hi - lo);
      double x2 = lo + inv_phi * (hi - lo);
      double f1 = cond_with(i, x1);
      double f2 = cond_with(i, x2);
      for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
        if (f1 <= f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - inv_phi * (hi - lo);
          f1 = cond_with(i, x1);
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + inv_phi * (hi - lo);
          f2 = cond_with(i, x2);
        }
      }
      for (double x : {x1, x2, boxes[i].lo, boxes[i].hi}) {
        const double c = cond_with(i, x);
        if (c < current) {
          current = c;
          w[i] = x;
        }
      }
    }
    if (!(before - current >= 1e-12)) break;
  }
  return make_result(frame, Scaling(std::move(w)), ScalingMethod::oracle);
}

/// Lattice search followed, when `spec.refine` is set, by coordinate
/// descent from the lattice optimum.
inline OracleResult search_scaling(const Frame& frame, const SearchSpec& spec) {
  OracleResult out = grid_search_scaling(frame, spec);
  if (spec.refine) {
    out.result = refine_scaling(frame, out.result.scaling, spec.boxes, spec.refine_iterations);
    out.refined = true;
  }
  return out;
}

/// Recomputes the bounds of the scaled family and compares the condition
/// number with `claimed_cond`, relative to max(1, claimed_cond).
inline VerificationReport verify_scaling(Family family, const Scaling& s,
                                         double claimed_cond, double tol) {
  const std::vector<Vec2> scaled = apply_scaling(family, s);
  VerificationReport r;
  r.claimed_cond = claimed_cond;
  r.tol = tol;
  r.bounds = frame_bounds(scaled);
  r.tightness = is_tight(scaled);
  if (std::isinf(claimed_cond) || std::isinf(r.bounds.cond)) {
    r.pass = std::isinf(claimed_cond) && std::isinf(r.bounds.cond);
  } else {
    r.pass = std::abs(r.bounds.cond - claimed_cond) <= tol * std::max(1.0, claimed_cond);
  }
  return r;
}

}  // namespace planar_frames
