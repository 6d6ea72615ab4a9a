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
#include <numeric>
#include <vector>

#include "planar_frames/core.hpp"

namespace planar_frames {

// Directions of +-v live on a circle of circumference pi. A family sits in a
// quadrant (after sign changes) exactly when those directions fit in an arc
// of length pi/2.

/// Sorted directions in [0, pi) with the frame index of each entry.
struct DirectionSet {
  std::vector<double> angles;
  std::vector<std::size_t> source_index;

  std::size_t size() const noexcept { return angles.size(); }
};

struct CoveringArc {
  double start = 0.0;
  double spread = 0.0;
};

/// Direction of v folded into [0, pi).
inline double direction_mod_pi(Vec2 v) {
  double a = std::atan2(v.y, v.x);
  if (a < 0.0) a += kPi;
  if (a >= kPi) a -= kPi;
  return a;
}

/// Counter-clockwise distance from direction `from` to direction `to` on the
/// mod-pi circle, in [0, pi).
inline double arc_distance(double from, double to) {
  double d = to - from;
  if (d < 0.0) d += kPi;
  if (d >= kPi) d -= kPi;
  return d;
}

inline DirectionSet directions_mod_pi(Family family) {
  DirectionSet out;
  std::vector<double> raw;
  raw.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family[i].is_finite() || family[i].norm() == 0.0) {
      throw FrameError(ErrorKind::invalid_input,
                       "vector " + std::to_string(i) + " has no direction");
    }
    raw.push_back(direction_mod_pi(family[i]));
  }
  out.source_index.resize(raw.size());
  std::iota(out.source_index.begin(), out.source_index.end(), std::size_t{0});
  std::stable_sort(out.source_index.begin(), out.source_index.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });
  out.angles.reserve(raw.size());
  for (std::size_t i : out.source_index) out.angles.push_back(raw[i]);
  return out;
}

/// Shortest arc covering every direction: pi minus the largest circular gap.
/// The arc starts at the direction following that gap; gaps within the
/// angular tolerance of the largest count as ties, resolved toward the
/// smallest start.
inline CoveringArc min_covering_arc(const DirectionSet& d) {
  if (d.angles.empty()) {
    throw FrameError(ErrorKind::invalid_input, "no directions");
  }
  const std::size_t n = d.angles.size();
  auto gap_before = [&](std::size_t i) {
    return i == 0 ? d.angles[0] + kPi - d.angles[n - 1]
                  : d.angles[i] - d.angles[i - 1];
  };
  double largest = 0.0;
  for (std::size_t i = 0; i < n; ++i) largest = std::max(largest, gap_before(i));

  CoveringArc arc;
  arc.spread = std::max(0.0, kPi - largest);
  bool found = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (gap_before(i) >= largest - kAngleTolerance &&
        (!found || d.angles[i] < arc.start)) {
      arc.start = d.angles[i];
      found = true;
    }
  }
  return arc;
}

inline CoveringArc min_covering_arc(Family family) {
  return min_covering_arc(directions_mod_pi(family));
}

}  // namespace planar_frames
