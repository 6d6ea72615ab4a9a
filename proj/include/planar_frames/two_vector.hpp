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
#include <vector>

#include "planar_frames/analysis.hpp"
#include "planar_frames/core.hpp"

namespace planar_frames {

/// Collinearity threshold on |cos| between two directions.
inline constexpr double kCollinearTolerance = 1e-12;

/// Orthogonal moves taking an original pair to canonical position. Applied
/// in order: rotate by `rotation`, multiply by `scale`, negate the longer
/// vector if `negate_long`, reflect y -> -y if `reflect`.
struct PairTransform {
  bool swapped = false;  // the second input is the shorter vector
  double rotation = 0.0;
  double scale = 1.0;
  bool negate_long = false;
  bool reflect = false;
};

/// Canonical pair: shorter vector at (k, 0), longer at (a, b) with unit norm,
/// a >= 0 and b > 0.
struct TwoVectorConfig {
  double k = 1.0;
  double a = 0.0;
  double b = 1.0;
  PairTransform transform;

  Vec2 shorter() const { return {k, 0.0}; }
  Vec2 longer() const { return {a, b}; }

  /// Maps a canonical-position vector back to the original coordinates.
  /// `of_longer` selects whether the long-vector sign flip applies.
  Vec2 to_original(Vec2 p, bool of_longer) const {
    if (transform.reflect) p.y = -p.y;
    if (of_longer && transform.negate_long) p = -p;
    p = (1.0 / transform.scale) * p;
    return rotate(p, -transform.rotation);
  }
};

struct TwoVectorEigen {
  double discriminant = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double w = 0.0;
};

inline TwoVectorConfig two_vector_config(Vec2 u, Vec2 v) {
  if (!u.is_finite() || !v.is_finite() || u.norm() == 0.0 || v.norm() == 0.0) {
    throw FrameError(ErrorKind::invalid_input, "pair has a zero or non-finite vector");
  }
  TwoVectorConfig cfg;
  const double cosine = abs_cosine(u, v);
  if (cosine >= 1.0 - kCollinearTolerance) {
    throw FrameError(ErrorKind::degenerate_pair, "vectors are collinear");
  }
  cfg.transform.swapped = v.norm() < u.norm();
  const Vec2 shorter = cfg.transform.swapped ? v : u;
  const Vec2 longer = cfg.transform.swapped ? u : v;

  cfg.transform.rotation = -std::atan2(shorter.y, shorter.x);
  cfg.transform.scale = 1.0 / longer.norm();
  const Vec2 moved = cfg.transform.scale * rotate(longer, cfg.transform.rotation);
  cfg.transform.negate_long = moved.x < 0.0;
  const double y = cfg.transform.negate_long ? -moved.y : moved.y;
  cfg.transform.reflect = y < 0.0;

  cfg.k = shorter.norm() / longer.norm();
  cfg.a = cosine;
  cfg.b = std::sqrt((1.0 - cosine) * (1.0 + cosine));
  return cfg;
}

/// Spectrum of the canonical pair's frame operator [[k^2+a^2, ab], [ab, b^2]].
///
/// lambda = (k^2 + 1 +- sqrt(D)) / 2 with D = (1-k^2)^2 + 4k^2a^2. The
/// smaller root is taken as det / lambda1 = k^2 b^2 / lambda1, and w, the
/// positive root of (ak) w^2 + (1-k^2) w - ka = 0, in its rationalized form
/// 2ka / (1 - k^2 + sqrt(D)), which is 0 at a = 0.
inline TwoVectorEigen two_vector_eigen(const TwoVectorConfig& cfg) {
  const double k2 = cfg.k * cfg.k;
  TwoVectorEigen e;
  e.discriminant = (1.0 - k2) * (1.0 - k2) + 4.0 * k2 * cfg.a * cfg.a;
  const double root = std::sqrt(e.discriminant);
  e.lambda1 = 0.5 * (k2 + 1.0 + root);
  e.lambda2 = k2 * cfg.b * cfg.b / e.lambda1;
  const double denom = 1.0 - k2 + root;
  e.w = denom > 0.0 ? 2.0 * cfg.k * cfg.a / denom : 0.0;
  return e;
}

/// f(k, a) = lambda1 / lambda2.
inline double two_vector_condition(const TwoVectorConfig& cfg) {
  const TwoVectorEigen e = two_vector_eigen(cfg);
  return e.lambda1 / e.lambda2;
}

/// Scales the pair to a common norm of min(|u|, |v|); the result has
/// condition number (1 + a) / (1 - a) with a = |cos angle(u, v)|.
inline ScalingResult equalize_pair(Vec2 u, Vec2 v) {
  two_vector_config(u, v);  // validates
  const double nu = u.norm();
  const double nv = v.norm();
  const double top = std::max(nu, nv);
  const std::vector<Vec2> pair{u, v};
  return make_result(pair, Scaling({nv / top, nu / top}), ScalingMethod::equal_pair,
                     std::pair<std::size_t, std::size_t>{0, 1});
}

}  // namespace planar_frames
