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
#include <vector>

#include "planar_frames/analysis.hpp"
#include "planar_frames/core.hpp"
#include "planar_frames/directions.hpp"

namespace planar_frames {

/// The c > 0 with <p1,p2><p2,p3> = -c <p1,p3>.
///
/// Requires the triple in normal position: <p1,p3> < 0 and
/// <p1,p2><p2,p3> > 0.
inline double lift_constant(Vec2 p1, Vec2 p2, Vec2 p3) {
  const double d13 = dot(p1, p3);
  const double product = dot(p1, p2) * dot(p2, p3);
  if (!(d13 < 0.0) || !(product > 0.0)) {
    throw FrameError(ErrorKind::normal_position,
                     "triple is not in normal position (<p1,p3> = " +
                         std::to_string(d13) + ", <p1,p2><p2,p3> = " +
                         std::to_string(product) + ")");
  }
  return -product / d13;
}

/// Parseval scaling of three vectors whose directions do not fit in a
/// quarter-arc.
///
/// The triple is put in normal position (sorted by direction, outer signs
/// flipped toward the middle vector), then lifted to an orthogonal triple
///   psi_1 = p1 + (-<p1,p2>/sqrt(c)) e3
///   psi_2 = p2 + sqrt(c) e3
///   psi_3 = p3 + (-<p2,p3>/sqrt(c)) e3
/// in R^3. Weights 1/|psi_i| make the lift orthonormal, so the projected
/// family has frame operator I.
inline ScalingResult three_vector_parseval(Family family) {
  if (family.size() != 3) {
    throw FrameError(ErrorKind::dimension,
                     "expected 3 vectors, got " + std::to_string(family.size()));
  }
  const DirectionSet dirs = directions_mod_pi(family);
  const CoveringArc arc = min_covering_arc(dirs);
  if (arc.spread <= kHalfPi + kAngleTolerance) {
    throw FrameError(ErrorKind::not_scalable,
                     "directions fit in a closed quarter-arc (spread " +
                         std::to_string(arc.spread) + " rad)");
  }

  const std::size_t i1 = dirs.source_index[0];
  const std::size_t i2 = dirs.source_index[1];
  const std::size_t i3 = dirs.source_index[2];
  const Vec2 p2 = family[i2];
  const Vec2 p1 = dot(family[i1], p2) < 0.0 ? -family[i1] : family[i1];
  const Vec2 p3 = dot(family[i3], p2) < 0.0 ? -family[i3] : family[i3];

  const double c = lift_constant(p1, p2, p3);
  const double d12 = dot(p1, p2);
  const double d23 = dot(p2, p3);

  std::vector<double> w(3);
  w[i1] = std::sqrt(c) / std::sqrt(c * p1.norm_squared() + d12 * d12);
  w[i2] = 1.0 / std::sqrt(p2.norm_squared() + c);
  w[i3] = std::sqrt(c) / std::sqrt(c * p3.norm_squared() + d23 * d23);

  Scaling s(std::move(w));
  const std::vector<Vec2> scaled = apply_scaling(family, s);
  const TightnessReport tight = is_tight(scaled, 1e-9);
  if (!tight.is_tight || std::abs(tight.tight_constant - 1.0) > 1e-9) {
    throw FrameError(ErrorKind::internal,
                     "three-vector construction did not produce a Parseval frame");
  }
  return make_result(family, std::move(s), ScalingMethod::tight_witness);
}

}  // namespace planar_frames
