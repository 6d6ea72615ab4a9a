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
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace planar_frames {

/// Eigenvalues at or below this are treated as zero (rank loss).
inline constexpr double kRankTolerance = 1e-14;

/// Angular tolerance (radians) for direction and spread comparisons.
inline constexpr double kAngleTolerance = 1e-12;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

enum class ErrorKind {
  invalid_input,
  dimension,
  degenerate_frame,
  degenerate_pair,
  normal_position,
  not_scalable,
  precondition,
  budget_exceeded,
  parse,
  internal,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::degenerate_frame: return "degenerate-frame";
    case ErrorKind::degenerate_pair: return "degenerate-pair";
    case ErrorKind::normal_position: return "normal-position";
    case ErrorKind::not_scalable: return "not-scalable";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::parse: return "parse";
    case ErrorKind::internal: return "internal-consistency";
  }
  return "unknown";
}

class FrameError : public std::runtime_error {
 public:
  FrameError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  double norm() const { return std::hypot(x, y); }
  double norm_squared() const { return x * x + y * y; }
  bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }

  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// Counter-clockwise rotation by `angle` radians.
inline Vec2 rotate(Vec2 v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

inline Vec2 unit(Vec2 v) {
  const double n = v.norm();
  return {v.x / n, v.y / n};
}

/// |<u/|u|, v/|v|>|, the absolute cosine of the angle between two directions.
inline double abs_cosine(Vec2 u, Vec2 v) {
  return std::min(1.0, std::abs(dot(unit(u), unit(v))));
}

/// A weighted family of plane vectors; zero vectors are allowed.
using Family = std::span<const Vec2>;

/// An ordered family of at least two finite, nonzero plane vectors.
class Frame {
 public:
  explicit Frame(std::vector<Vec2> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.size() < 2) {
      throw FrameError(ErrorKind::invalid_input,
                       "a frame needs at least 2 vectors, got " +
                           std::to_string(vectors_.size()));
    }
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      if (!vectors_[i].is_finite()) {
        throw FrameError(ErrorKind::invalid_input,
                         "vector " + std::to_string(i) + " is not finite");
      }
      if (vectors_[i].norm() <= 0.0) {
        throw FrameError(ErrorKind::invalid_input,
                         "vector " + std::to_string(i) + " is zero");
      }
    }
  }

  Frame(std::initializer_list<Vec2> vectors)
      : Frame(std::vector<Vec2>(vectors)) {}

  std::size_t size() const noexcept { return vectors_.size(); }
  const Vec2& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<Vec2>& vectors() const noexcept { return vectors_; }
  auto begin() const noexcept { return vectors_.begin(); }
  auto end() const noexcept { return vectors_.end(); }

  operator Family() const noexcept { return vectors_; }

 private:
  std::vector<Vec2> vectors_;
};

/// Symmetric 2x2 matrix [[s11, s12], [s12, s22]].
struct SymMatrix2 {
  double s11 = 0.0;
  double s12 = 0.0;
  double s22 = 0.0;

  double trace() const { return s11 + s22; }
  double det() const { return std::fma(s11, s22, -s12 * s12); }
  bool is_finite() const {
    return std::isfinite(s11) && std::isfinite(s12) && std::isfinite(s22);
  }
  Vec2 operator*(Vec2 v) const {
    return {s11 * v.x + s12 * v.y, s12 * v.x + s22 * v.y};
  }
};

struct EigenDecomposition {
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  Vec2 v_max;
  Vec2 v_min;
};

/// Per-vector nonnegative weights. `strict` is set when every weight is
/// strictly positive.
struct Scaling {
  std::vector<double> weights;
  bool strict = false;

  Scaling() = default;
  explicit Scaling(std::vector<double> w) : weights(std::move(w)) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
        throw FrameError(ErrorKind::invalid_input,
                         "weight " + std::to_string(i) +
                             " must be finite and nonnegative");
      }
    }
    strict = std::all_of(weights.begin(), weights.end(),
                         [](double w) { return w > 0.0; });
  }

  static Scaling ones(std::size_t m) {
    return Scaling(std::vector<double>(m, 1.0));
  }

  std::size_t size() const noexcept { return weights.size(); }
  double operator[](std::size_t i) const { return weights[i]; }
};

namespace detail {

// First nonzero component positive.
inline Vec2 canonical_sign(Vec2 v) {
  if (v.x < 0.0 || (v.x == 0.0 && v.y < 0.0)) return -v;
  return v;
}

}  // namespace detail

/// Roots (larger, smaller) of x^2 - tr(M) x + det(M). The larger-magnitude
/// root is formed without cancellation and the other is recovered as
/// det / root.
inline std::pair<double, double> sym2_eigenvalues(const SymMatrix2& m) {
  const double half_trace = 0.5 * m.trace();
  // sqrt(tr^2/4 - det) rewritten to avoid cancellation.
  const double radius = std::hypot(0.5 * (m.s11 - m.s22), m.s12);
  const double big = half_trace >= 0.0 ? half_trace + radius : half_trace - radius;
  const double other =
      big != 0.0 ? m.det() / big : (half_trace >= 0.0 ? half_trace - radius : half_trace + radius);
  return {std::max(big, other), std::min(big, other)};
}

/// Eigen-decomposition of a symmetric 2x2 matrix from its characteristic
/// polynomial. Eigenvectors are unit length with the first nonzero
/// component positive.
inline EigenDecomposition sym2_eigen(const SymMatrix2& m) {
  if (!m.is_finite()) {
    throw FrameError(ErrorKind::invalid_input, "matrix has non-finite entries");
  }
  EigenDecomposition out;
  std::tie(out.lambda_max, out.lambda_min) = sym2_eigenvalues(m);

  Vec2 v;
  if (m.s12 == 0.0) {
    v = m.s11 >= m.s22 ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
  } else {
    // Two rows of (M - lambda I) give two candidate null vectors; keep the
    // better-conditioned one.
    const Vec2 a{m.s12, out.lambda_max - m.s11};
    const Vec2 b{out.lambda_max - m.s22, m.s12};
    v = a.norm_squared() >= b.norm_squared() ? a : b;
  }
  out.v_max = detail::canonical_sign(unit(v));
  out.v_min = detail::canonical_sign(Vec2{-out.v_max.y, out.v_max.x});
  return out;
}

/// Multiplies vector i by weights[i]. The result may contain zero vectors.
inline std::vector<Vec2> apply_scaling(Family family, const Scaling& s) {
  if (family.size() != s.size()) {
    throw FrameError(ErrorKind::dimension,
                     "scaling has " + std::to_string(s.size()) +
                         " weights for " + std::to_string(family.size()) +
                         " vectors");
  }
  std::vector<Vec2> out;
  out.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    out.push_back(s[i] * family[i]);
  }
  return out;
}

}  // namespace planar_frames
