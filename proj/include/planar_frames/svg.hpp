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
#include <cstdio>
#include <optional>
#include <string>

#include "planar_frames/core.hpp"
#include "planar_frames/directions.hpp"

namespace planar_frames::svg {

inline constexpr int kCanvas = 600;

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace detail

/// Before/after diagram on a fixed 600x600 canvas: the unit circle, each
/// vector's direction mod pi as a faint diameter, the original vectors, and
/// (when given) the scaled vectors. Plot units are chosen so the longest
/// drawn vector, or the unit circle, fits with a margin.
inline std::string render(const Frame& frame, const std::optional<Scaling>& scaling = {}) {
  if (scaling && scaling->size() != frame.size()) {
    throw FrameError(ErrorKind::dimension, "scaling has " + std::to_string(scaling->size()) +
                                               " weights for " + std::to_string(frame.size()) +
                                               " vectors");
  }
  double reach = 1.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    reach = std::max(reach, frame[i].norm());
    if (scaling) reach = std::max(reach, (*scaling)[i] * frame[i].norm());
  }
  const double center = kCanvas / 2.0;
  const double px = (center - 30.0) / reach;
  auto sx = [&](double x) { return detail::fmt(center + px * x); };
  auto sy = [&](double y) { return detail::fmt(center - px * y); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n";
  out += "  <style>\n"
         "    .axis { stroke: #bbbbbb; stroke-width: 1; }\n"
         "    .circle { fill: none; stroke: #888888; stroke-width: 1; }\n"
         "    .direction { stroke: #4a90d9; stroke-opacity: 0.25; stroke-width: 1; }\n"
         "    .original { stroke: #222222; stroke-width: 2; }\n"
         "    .scaled { stroke: #d0021b; stroke-width: 2; stroke-dasharray: 6 3; }\n"
         "  </style>\n";
  out += "  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  out += "  <line class=\"axis\" x1=\"0\" y1=\"300\" x2=\"600\" y2=\"300\"/>\n";
  out += "  <line class=\"axis\" x1=\"300\" y1=\"0\" x2=\"300\" y2=\"600\"/>\n";
  out += "  <circle class=\"circle\" cx=\"300\" cy=\"300\" r=\"" + detail::fmt(px) + "\"/>\n";

  for (const Vec2& v : frame) {
    const double a = direction_mod_pi(v);
    const double r = reach;
    out += "  <line class=\"direction\" x1=\"" + sx(-r * std::cos(a)) + "\" y1=\"" +
           sy(-r * std::sin(a)) + "\" x2=\"" + sx(r * std::cos(a)) + "\" y2=\"" +
           sy(r * std::sin(a)) + "\"/>\n";
  }
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Vec2 v = frame[i];
    out += "  <line class=\"original\" x1=\"300\" y1=\"300\" x2=\"" + sx(v.x) + "\" y2=\"" +
           sy(v.y) + "\"><title>phi_" + std::to_string(i + 1) + "</title></line>\n";
  }
  if (scaling) {
    for (std::size_t i = 0; i < frame.size(); ++i) {
      const Vec2 v = (*scaling)[i] * frame[i];
      out += "  <line class=\"scaled\" x1=\"300\" y1=\"300\" x2=\"" + sx(v.x) + "\" y2=\"" +
             sy(v.y) + "\"><title>w_" + std::to_string(i + 1) + " = " +
             detail::fmt((*scaling)[i]) + "</title></line>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace planar_frames::svg
