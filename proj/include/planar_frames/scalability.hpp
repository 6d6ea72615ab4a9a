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

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "planar_frames/analysis.hpp"
#include "planar_frames/core.hpp"
#include "planar_frames/directions.hpp"
#include "planar_frames/parseval.hpp"

namespace planar_frames {

/// Scalability with nonnegative weights (zeros allowed).
///
/// Not scalable: after rotating by -arc_start every direction lies in
/// [0, spread] with spread < pi/2, an open quadrant. Scalable: `witness`
/// makes the family tight.
struct ScalabilityVerdict {
  bool scalable = false;
  double spread = 0.0;
  double arc_start = 0.0;
  std::optional<Scaling> witness;
};

namespace detail {

// Lexicographically first pair of directions at a right angle, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> find_orthogonal_pair(
    Family family) {
  std::vector<double> angles;
  angles.reserve(family.size());
  for (const Vec2& v : family) angles.push_back(direction_mod_pi(v));
  for (std::size_t i = 0; i < angles.size(); ++i) {
    for (std::size_t j = i + 1; j < angles.size(); ++j) {
      if (std::abs(arc_distance(angles[i], angles[j]) - kHalfPi) <=
          2.0 * kAngleTolerance) {
        return std::pair{i, j};
      }
    }
  }
  return std::nullopt;
}

// Three frame indices whose directions do not fit in a quarter-arc. From
// each starting direction, step greedily to the farthest direction less than
// pi/2 away, twice; keep the triple with the widest covering arc.
inline std::optional<std::array<std::size_t, 3>> find_spanning_triple(
    const DirectionSet& d) {
  const std::size_t n = d.size();
  if (n < 3) return std::nullopt;
  const double reach = kHalfPi - kAngleTolerance;
  auto farthest_within = [&](std::size_t from) {
    std::size_t best = from;
    for (std::size_t step = 1; step < n; ++step) {
      const std::size_t j = (from + step) % n;
      if (arc_distance(d.angles[from], d.angles[j]) < reach) {
        best = j;
      } else {
        break;
      }
    }
    return best;
  };

  std::optional<std::array<std::size_t, 3>> best;
  double best_spread = kHalfPi + kAngleTolerance;
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t p2 = farthest_within(s);
    const std::size_t p3 = farthest_within(p2);
    if (p2 == s || p3 == s || p3 == p2) continue;
    DirectionSet triple;
    for (std::size_t k : {s, p2, p3}) triple.angles.push_back(d.angles[k]);
    std::sort(triple.angles.begin(), triple.angles.end());
    const double spread = min_covering_arc(triple).spread;
    if (spread > best_spread) {
      best_spread = spread;
      best = std::array{d.source_index[s], d.source_index[p2], d.source_index[p3]};
    }
  }
  if (best) std::sort(best->begin(), best->end());
  return best;
}

}  // namespace detail

inline ScalabilityVerdict classify_scalability(const Frame& frame) {
  const DirectionSet dirs = directions_mod_pi(frame);
  const CoveringArc arc = min_covering_arc(dirs);

  ScalabilityVerdict verdict;
  verdict.spread = arc.spread;
  verdict.arc_start = arc.start;
  verdict.scalable = arc.spread >= kHalfPi - kAngleTolerance;
  if (!verdict.scalable) return verdict;

  std::vector<double> weights(frame.size(), 0.0);
  if (const auto pair = detail::find_orthogonal_pair(frame)) {
    const auto [i, j] = *pair;
    const double ni = frame[i].norm();
    const double nj = frame[j].norm();
    weights[i] = nj / std::max(ni, nj);
    weights[j] = ni / std::max(ni, nj);
  } else if (const auto triple = detail::find_spanning_triple(dirs)) {
    const std::vector<Vec2> sub{frame[(*triple)[0]], frame[(*triple)[1]],
                                frame[(*triple)[2]]};
    const ScalingResult r = three_vector_parseval(sub);
    for (std::size_t k = 0; k < 3; ++k) weights[(*triple)[k]] = r.scaling[k];
  } else {
    throw FrameError(ErrorKind::internal,
                     "spread exceeds a quarter-arc but no witness subset was found");
  }

  Scaling witness(std::move(weights));
  if (!is_tight(apply_scaling(frame, witness), 1e-9).is_tight) {
    throw FrameError(ErrorKind::internal, "scalability witness is not tight");
  }
  verdict.witness = std::move(witness);
  return verdict;
}

}  // namespace planar_frames
