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

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "planar_frames/analysis.hpp"
#include "planar_frames/core.hpp"
#include "planar_frames/parseval.hpp"
#include "planar_frames/scalability.hpp"
#include "planar_frames/two_vector.hpp"

namespace planar_frames {

struct InlineComponent {
  double x = 0.0;  // squared length of the rescaled vector
  ScalingResult result;
};

/// Best length for vector j with every other vector held fixed.
///
/// With vector j rotated onto the positive first axis and a', b, p the sums
/// of x^2, y^2, xy over the others, the condition number as a function of
/// the squared length x is minimized at x = max(b - a' + 2p^2/b, 0).
inline InlineComponent optimal_inline_component(const Frame& frame, std::size_t j) {
  if (j >= frame.size()) {
    throw FrameError(ErrorKind::dimension, "index " + std::to_string(j) +
                                               " out of range for " +
                                               std::to_string(frame.size()) +
                                               " vectors");
  }
  const double angle = -std::atan2(frame[j].y, frame[j].x);
  double sum_x2 = 0.0;
  double sum_y2 = 0.0;
  double sum_xy = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (i == j) continue;
    const Vec2 v = rotate(frame[i], angle);
    sum_x2 += v.x * v.x;
    sum_y2 += v.y * v.y;
    sum_xy += v.x * v.y;
  }
  if (sum_y2 <= 1e-14 * (sum_x2 + sum_y2)) {
    throw FrameError(ErrorKind::degenerate_frame,
                     "all other vectors are collinear with vector " + std::to_string(j));
  }
  InlineComponent out;
  out.x = std::max(sum_y2 - sum_x2 + 2.0 * sum_xy * sum_xy / sum_y2, 0.0);
  std::vector<double> w(frame.size(), 1.0);
  w[j] = std::sqrt(out.x) / frame[j].norm();
  out.result = make_result(frame, Scaling(std::move(w)), ScalingMethod::inline_component);
  return out;
}

/// Equalizes the pair with the smallest |cos| between directions and zeroes
/// every other vector. For a frame inside a quarter-arc this is the pair of
/// arc endpoints, and the result has condition number (1 + a) / (1 - a).
inline ScalingResult best_pair_scaling(const Frame& frame) {
  const CoveringArc arc = min_covering_arc(frame);
  if (arc.spread >= kHalfPi - kAngleTolerance) {
    throw FrameError(ErrorKind::precondition,
                     "frame is scalable (spread " + std::to_string(arc.spread) +
                         " rad); best-pair scaling applies only inside a quadrant");
  }
  std::size_t bi = 0;
  std::size_t bj = 1;
  double best = abs_cosine(frame[0], frame[1]);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    for (std::size_t j = i + 1; j < frame.size(); ++j) {
      const double a = abs_cosine(frame[i], frame[j]);
      if (a < best) {
        best = a;
        bi = i;
        bj = j;
      }
    }
  }
  const ScalingResult pair = equalize_pair(frame[bi], frame[bj]);
  std::vector<double> w(frame.size(), 0.0);
  w[bi] = pair.scaling[0];
  w[bj] = pair.scaling[1];
  return make_result(frame, Scaling(std::move(w)), ScalingMethod::best_pair,
                     std::pair{bi, bj});
}

/// Minimum-condition scaling with nonnegative weights: a verified tight
/// witness when the frame is scalable, the best pair otherwise.
inline ScalingResult min_condition_scaling(const Frame& frame) {
  ScalabilityVerdict verdict = classify_scalability(frame);
  if (verdict.scalable) {
    return make_result(frame, std::move(*verdict.witness), ScalingMethod::tight_witness);
  }
  return best_pair_scaling(frame);
}

}  // namespace planar_frames
