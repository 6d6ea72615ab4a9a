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

// Library walkthrough: classify a frame, scale it with and without a
// budget, and cross-check the result against the lattice search.

#include <cstdio>

#include "planar_frames/planar_frames.hpp"

namespace pf = planar_frames;

namespace {

void show(const char* label, const pf::ScalingResult& r) {
  std::printf("%-22s cond %.6f  weights", label, r.bounds.cond);
  for (double w : r.scaling.weights) std::printf(" %.4f", w);
  std::printf("\n");
}

pf::Vec2 at(double degrees, double norm) {
  return pf::rotate({norm, 0.0}, degrees * pf::kPi / 180.0);
}

}  // namespace

int main() {
  // Four vectors crowded into a 70 degree arc.
  const pf::Frame frame{at(10, 0.9), at(35, 1.2), at(55, 0.7), at(80, 1.1)};

  const pf::FrameBounds b = pf::frame_bounds(frame);
  std::printf("bounds A = %.6f, B = %.6f, cond = %.6f\n", b.lower, b.upper, b.cond);

  const pf::ScalabilityVerdict v = pf::classify_scalability(frame);
  std::printf("scalable: %s (directions span %.2f degrees)\n", v.scalable ? "yes" : "no",
              v.spread * 180.0 / pf::kPi);

  show("best pair", pf::min_condition_scaling(frame));
  show("budget 0.1", pf::restricted_scaling(frame, pf::Budget(0.1)));

  pf::SearchSpec spec = pf::SearchSpec::uniform(0.9, 1.1, 21);
  spec.refine = true;
  show("lattice + refine", pf::search_scaling(frame, spec).result);

  // Replace the second vector by its best multiple along its own line.
  const pf::InlineComponent x = pf::optimal_inline_component(frame, 1);
  show("best length of #1", x.result);
  return 0;
}
