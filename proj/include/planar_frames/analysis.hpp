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
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "planar_frames/core.hpp"

namespace planar_frames {

/// Extreme eigenvalues of the frame operator and their ratio.
/// `cond` is +inf when the lower bound has collapsed to zero.
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  double cond = std::numeric_limits<double>::infinity();

  bool spans() const { return std::isfinite(cond); }
};

struct TightnessReport {
  bool is_tight = false;
  double sum_a2 = 0.0;
  double sum_b2 = 0.0;
  double sum_ab = 0.0;
  double tight_constant = 0.0;
};

/// A minimizer over a scalar c together with the minimum value.
struct ScalarMinimum {
  double c_star = 0.0;
  double value = 0.0;
};

/// S = sum_i v_i v_i^T.
inline SymMatrix2 frame_operator(Family family) {
  if (family.empty()) {
    throw FrameError(ErrorKind::invalid_input, "empty family");
  }
  SymMatrix2 s;
  for (const Vec2& v : family) {
    if (!v.is_finite()) {
      throw FrameError(ErrorKind::invalid_input, "family has a non-finite vector");
    }
    s.s11 += v.x * v.x;
    s.s12 += v.x * v.y;
    s.s22 += v.y * v.y;
  }
  return s;
}

inline FrameBounds bounds_of(const SymMatrix2& s) {
  const EigenDecomposition eig = sym2_eigen(s);
  FrameBounds b;
  b.lower = eig.lambda_min;
  b.upper = eig.lambda_max;
  b.cond = b.lower <= kRankTolerance ? std::numeric_limits<double>::infinity()
                                     : b.upper / b.lower;
  return b;
}

inline FrameBounds frame_bounds(Family family) {
  return bounds_of(frame_operator(family));
}

/// Checks sum a_i^2 == sum b_i^2 and sum a_i b_i == 0, both relative to
/// max(1, sum a_i^2). An all-zero family is never tight.
inline TightnessReport is_tight(Family family, double tol = 1e-9) {
  const SymMatrix2 s = frame_operator(family);
  TightnessReport r;
  r.sum_a2 = s.s11;
  r.sum_b2 = s.s22;
  r.sum_ab = s.s12;
  const double scale = std::max(1.0, s.s11);
  r.is_tight = s.s11 + s.s22 > 0.0 && std::abs(s.s11 - s.s22) <= tol * scale &&
               std::abs(s.s12) <= tol * scale;
  if (r.is_tight) r.tight_constant = s.s11;
  return r;
}

/// min over c of ||S - cI|| in operator norm: attained at the midpoint of
/// the spectrum, with half the spectral width as the value.
inline ScalarMinimum best_identity_shift(const FrameBounds& bounds) {
  if (!(bounds.lower >= 0.0 && bounds.lower <= bounds.upper &&
        std::isfinite(bounds.upper))) {
    throw FrameError(ErrorKind::invalid_input,
                     "bounds must satisfy 0 <= A <= B < inf");
  }
  return {0.5 * (bounds.lower + bounds.upper),
          0.5 * (bounds.upper - bounds.lower)};
}

/// min over c >= 0 of ||I - cS||_F^2 = 2 - (sum lambda)^2 / sum lambda^2.
///
/// The minimizer is the root of d/dc = 2c sum lambda^2 - 2 sum lambda,
/// i.e. c = sum lambda / sum lambda^2.
inline ScalarMinimum frobenius_best_multiple(const SymMatrix2& s) {
  if (s.s11 == 0.0 && s.s12 == 0.0 && s.s22 == 0.0) {
    throw FrameError(ErrorKind::invalid_input, "zero frame operator");
  }
  const EigenDecomposition eig = sym2_eigen(s);
  const double sum = eig.lambda_max + eig.lambda_min;
  const double sum_sq =
      eig.lambda_max * eig.lambda_max + eig.lambda_min * eig.lambda_min;
  return {sum / sum_sq, 2.0 - sum * sum / sum_sq};
}

/// Operator-norm distance ||S - I|| = max |lambda_i - 1|.
inline double identity_distance(const FrameBounds& bounds) {
  return std::max(std::abs(bounds.upper - 1.0), std::abs(bounds.lower - 1.0));
}

/// Rescales `s` uniformly so the scaled family has (A + B) / 2 = 1.
inline Scaling normalize_scaling(Family family, const Scaling& s) {
  const FrameBounds b = frame_bounds(apply_scaling(family, s));
  if (!b.spans()) {
    throw FrameError(ErrorKind::degenerate_frame,
                     "scaled family does not span the plane");
  }
  const double factor = 1.0 / std::sqrt(0.5 * (b.lower + b.upper));
  std::vector<double> w = s.weights;
  for (double& x : w) x *= factor;
  return Scaling(std::move(w));
}

enum class ScalingMethod {
  tight_witness,
  equal_pair,
  best_pair,
  inline_component,
  restricted,
  oracle,
};

inline const char* to_string(ScalingMethod m) {
  switch (m) {
    case ScalingMethod::tight_witness: return "tight-witness";
    case ScalingMethod::equal_pair: return "equal-pair";
    case ScalingMethod::best_pair: return "best-pair";
    case ScalingMethod::inline_component: return "inline-component";
    case ScalingMethod::restricted: return "restricted";
    case ScalingMethod::oracle: return "oracle";
  }
  return "unknown";
}

/// A scaling together with the bounds of the family it produces.
struct ScalingResult {
  Scaling scaling;
  FrameBounds bounds;
  ScalingMethod method = ScalingMethod::tight_witness;
  std::optional<std::pair<std::size_t, std::size_t>> pair_indices;
};

/// Bounds are always recomputed from the scaled family.
inline ScalingResult make_result(
    Family family, Scaling s, ScalingMethod method,
    std::optional<std::pair<std::size_t, std::size_t>> pair = std::nullopt) {
  ScalingResult r;
  r.bounds = frame_bounds(apply_scaling(family, s));
  r.scaling = std::move(s);
  r.method = method;
  r.pair_indices = pair;
  return r;
}

}  // namespace planar_frames
