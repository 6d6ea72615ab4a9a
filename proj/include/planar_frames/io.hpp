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
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "planar_frames/core.hpp"

namespace planar_frames::io {

using Json = nlohmann::ordered_json;

enum class FrameFormat { csv, json };

/// 17 significant digits, so every double round-trips exactly.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void write_json(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::null: out += "null"; return;
    case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; return;
    case Json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); return;
    case Json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); return;
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v)) {
        out += format_number(v);
      } else {
        out += '"' + format_number(v) + '"';
      }
      return;
    }
    case Json::value_t::string: out += j.dump(); return;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) {
        return e.is_array() || e.is_object();
      });
      out += '[';
      bool first = true;
      for (const Json& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) out += '\n' + pad;
        write_json(e, out, indent, depth + 1);
      }
      if (!flat) out += '\n' + close_pad;
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += '\n' + pad + Json(it.key()).dump() + ": ";
        write_json(it.value(), out, indent, depth + 1);
      }
      out += '\n' + close_pad + '}';
      return;
    }
    default: out += j.dump(); return;
  }
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw FrameError(ErrorKind::parse, where + ": " + what);
}

inline Frame finish_frame(std::vector<Vec2> vectors, const std::string& source) {
  if (vectors.size() < 2) {
    parse_fail(source, "a frame needs at least 2 vectors, got " + std::to_string(vectors.size()));
  }
  return Frame(std::move(vectors));
}

}  // namespace detail

/// Pretty-printed JSON with 17-significant-digit numbers.
inline std::string to_json_string(const Json& j, int indent = 2) {
  std::string out;
  detail::write_json(j, out, indent, 0);
  out += '\n';
  return out;
}

/// One "x,y" vector per line. An optional "x,y" header, '#' comment lines
/// and blank lines are skipped.
inline Frame parse_frame_csv(std::string_view text, const std::string& source = "<csv>") {
  std::vector<Vec2> vectors;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      detail::parse_fail(where, "expected exactly two comma-separated fields");
    }
    const std::string_view fx = detail::trim(line.substr(0, comma));
    const std::string_view fy = detail::trim(line.substr(comma + 1));
    if (!seen_content && fx == "x" && fy == "y") {
      seen_content = true;
      continue;
    }
    seen_content = true;
    Vec2 v;
    if (!detail::parse_double(fx, v.x) || !detail::parse_double(fy, v.y)) {
      detail::parse_fail(where, "malformed number");
    }
    if (!v.is_finite()) detail::parse_fail(where, "non-finite entry");
    if (v.x == 0.0 && v.y == 0.0) detail::parse_fail(where, "zero vector");
    vectors.push_back(v);
  }
  return detail::finish_frame(std::move(vectors), source);
}

/// {"vectors": [[x, y], ...]}
inline Frame parse_frame_json(std::string_view text, const std::string& source = "<json>") {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    detail::parse_fail(source, e.what());
  }
  if (!doc.is_object() || !doc.contains("vectors") || !doc["vectors"].is_array()) {
    detail::parse_fail(source, "expected an object with a \"vectors\" array");
  }
  std::vector<Vec2> vectors;
  const Json& arr = doc["vectors"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = source + ": vectors[" + std::to_string(i) + "]";
    const Json& e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      detail::parse_fail(where, "expected [x, y] with numeric entries");
    }
    const Vec2 v{e[0].get<double>(), e[1].get<double>()};
    if (!v.is_finite()) detail::parse_fail(where, "non-finite entry");
    if (v.x == 0.0 && v.y == 0.0) detail::parse_fail(where, "zero vector");
    vectors.push_back(v);
  }
  return detail::finish_frame(std::move(vectors), source);
}

/// [w1, ..., wm], nonnegative and finite.
inline Scaling parse_weights_json(std::string_view text, const std::string& source = "<weights>") {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    detail::parse_fail(source, e.what());
  }
  if (!doc.is_array()) detail::parse_fail(source, "expected a JSON array of weights");
  std::vector<double> w;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = source + ": [" + std::to_string(i) + "]";
    if (!doc[i].is_number()) detail::parse_fail(where, "weight is not a number");
    const double x = doc[i].get<double>();
    if (!std::isfinite(x) || x < 0.0) detail::parse_fail(where, "weight must be finite and >= 0");
    w.push_back(x);
  }
  return Scaling(std::move(w));
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FrameError(ErrorKind::parse, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FrameFormat infer_format(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".csv") return FrameFormat::csv;
  if (ext == ".json") return FrameFormat::json;
  throw FrameError(ErrorKind::parse,
                   path.string() + ": cannot infer format from extension (use --format)");
}

inline Frame parse_frame(const std::filesystem::path& path, std::optional<FrameFormat> format = {}) {
  const FrameFormat fmt = format ? *format : infer_format(path);
  const std::string text = read_file(path);
  return fmt == FrameFormat::csv ? parse_frame_csv(text, path.string())
                                 : parse_frame_json(text, path.string());
}

inline std::string write_frame_csv(const Frame& frame) {
  std::string out = "x,y\n";
  for (const Vec2& v : frame) out += format_number(v.x) + "," + format_number(v.y) + "\n";
  return out;
}

inline std::string write_frame_json(const Frame& frame) {
  Json vectors = Json::array();
  for (const Vec2& v : frame) vectors.push_back(Json::array({v.x, v.y}));
  Json doc;
  doc["vectors"] = std::move(vectors);
  return to_json_string(doc);
}

inline std::string write_weights_json(const Scaling& s) {
  return to_json_string(Json(s.weights));
}

}  // namespace planar_frames::io
