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
#include <string>
#include <vector>

#include "planar_frames/analysis.hpp"
#include "planar_frames/core.hpp"
#include "planar_frames/directions.hpp"
#include "planar_frames/two_vector.hpp"

namespace planar_frames {

/// Every weight must lie in [1 - epsilon, 1 + epsilon].
class Budget {
 public:
  explicit Budget(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
      throw FrameError(ErrorKind::invalid_input,
                       "budget epsilon must lie in [0, 1), got " + std::to_string(epsilon));
    }
  }

  double epsilon() const noexcept { return epsilon_; }
  double lo() const noexcept { return 1.0 - epsilon_; }
  double hi() const noexcept { return 1.0 + epsilon_; }

 private:
  double epsilon_;
};

inline Scaling clamp_scaling(const Scaling& s, const Budget& budget) {
  std::vector<double> w = s.weights;
  for (double& x : w) x = std::clamp(x, budget.lo(), budget.hi());
  return Scaling(std::move(w));
}

/// Budgeted two-vector rule. With a = |short| <= b = |long| and
/// delta = (b - a) / (a + b), the norms can be made equal iff delta <= eps,
/// in which case weights (1 + delta, 1 - delta) do it; otherwise the budget
/// saturates at (1 + eps, 1 - eps). Weights are returned in input order.
inline ScalingResult restricted_pair(Vec2 u, Vec2 v, const Budget& budget) {
  two_vector_config(u, v);  // rejects zero and collinear pairs
  const bool u_short = u.norm() <= v.norm();
  const double a = std::min(u.norm(), v.norm());
  const double b = std::max(u.norm(), v.norm());
  const double delta = (b - a) / (a + b);
  const double step = delta <= budget.epsilon() ? delta : budget.epsilon();
  const double w_short = 1.0 + step;
  const double w_long = 1.0 - step;
  const std::vector<Vec2> pair{u, v};
  return make_result(pair,
                     Scaling(u_short ? std::vector{w_short, w_long}
                                     : std::vector{w_long, w_short}),
                     ScalingMethod::restricted, std::pair<std::size_t, std::size_t>{0, 1});
}

/// Budgeted rule for a frame inside a closed quarter-arc: the two outer
/// vectors (endpoints of the covering arc) follow restricted_pair, every
/// interior vector is shrunk to 1 - eps. When several vectors share an
/// endpoint direction the lowest index is the outer one.
inline ScalingResult restricted_scaling(const Frame& frame, const Budget& budget) {
  const DirectionSet dirs = directions_mod_pi(frame);
  const CoveringArc arc = min_covering_arc(dirs);
  if (arc.spread > kHalfPi + kAngleTolerance) {
    throw FrameError(ErrorKind::precondition,
                     "directions are not contained in a quarter-arc (spread " +
                         std::to_string(arc.spread) + " rad)");
  }
  const std::size_t n = dirs.size();
  const std::size_t start_pos = static_cast<std::size_t>(
      std::find(dirs.angles.begin(), dirs.angles.end(), arc.start) - dirs.angles.begin());
  const std::size_t end_pos = (start_pos + n - 1) % n;

  auto lowest_index_near = [&](double angle) {
    std::size_t best = frame.size();
    for (std::size_t p = 0; p < n; ++p) {
      const double d = arc_distance(angle, dirs.angles[p]);
      if (std::min(d, kPi - d) <= kAngleTolerance) {
        best = std::min(best, dirs.source_index[p]);
      }
    }
    return best;
  };
  const std::size_t first = lowest_index_near(dirs.angles[start_pos]);
  const std::size_t last = lowest_index_near(dirs.angles[end_pos]);
  if (first == last) {
    throw FrameError(ErrorKind::degenerate_pair, "all vectors are collinear");
  }

  const ScalingResult outer = restricted_pair(frame[first], frame[last], budget);
  std::vector<double> w(frame.size(), budget.lo());
  w[first] = outer.scaling[0];
  w[last] = outer.scaling[1];
  return make_result(frame, Scaling(std::move(w)), ScalingMethod::restricted,
                     std::pair{std::min(first, last), std::max(first, last)});
}

}  // namespace planar_frames
