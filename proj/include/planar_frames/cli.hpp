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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "planar_frames/analysis.hpp"
#include "planar_frames/closed_form.hpp"
#include "planar_frames/core.hpp"
#include "planar_frames/directions.hpp"
#include "planar_frames/io.hpp"
#include "planar_frames/oracle.hpp"
#include "planar_frames/restricted.hpp"
#include "planar_frames/scalability.hpp"
#include "planar_frames/svg.hpp"

namespace planar_frames::cli {

inline constexpr const char* kToolName = "planar-frames";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kPreconditionError = 2,
  kInternalError = 3,
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input:
    case ErrorKind::dimension:
    case ErrorKind::parse:
      return kInputError;
    case ErrorKind::degenerate_frame:
    case ErrorKind::degenerate_pair:
    case ErrorKind::normal_position:
    case ErrorKind::not_scalable:
    case ErrorKind::precondition:
    case ErrorKind::budget_exceeded:
      return kPreconditionError;
    case ErrorKind::internal:
      return kInternalError;
  }
  return kInternalError;
}

namespace detail {

using io::Json;

inline Json numbers(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

inline Json bounds_json(const FrameBounds& b) {
  Json j;
  j["A"] = b.lower;
  j["B"] = b.upper;
  j["cond"] = b.cond;
  return j;
}

inline Json operator_json(const SymMatrix2& s) {
  Json j;
  j["s11"] = s.s11;
  j["s12"] = s.s12;
  j["s22"] = s.s22;
  return j;
}

inline Json tightness_json(const TightnessReport& t) {
  Json j;
  j["is_tight"] = t.is_tight;
  j["sum_a2"] = t.sum_a2;
  j["sum_b2"] = t.sum_b2;
  j["sum_ab"] = t.sum_ab;
  j["tight_constant"] = t.tight_constant;
  return j;
}

inline Json pair_json(const std::optional<std::pair<std::size_t, std::size_t>>& p) {
  if (!p) return nullptr;
  return Json::array({p->first, p->second});
}

inline Json scaling_json(const ScalingResult& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["weights"] = numbers(r.scaling.weights);
  j["strict"] = r.scaling.strict;
  j["pair"] = pair_json(r.pair_indices);
  j["bounds"] = bounds_json(r.bounds);
  return j;
}

// Summary shared by every command: the input frame and its own bounds.
inline Json frame_report(const std::string& command, Json echo, const Frame& frame) {
  Json report;
  report["tool"] = kToolName;
  report["version"] = kVersion;
  report["command"] = command;
  report["arguments"] = std::move(echo);

  Json vectors = Json::array();
  Json norms = Json::array();
  Json directions = Json::array();
  for (const Vec2& v : frame) {
    vectors.push_back(Json::array({v.x, v.y}));
    norms.push_back(v.norm());
    directions.push_back(direction_mod_pi(v));
  }
  Json summary;
  summary["m"] = frame.size();
  summary["vectors"] = std::move(vectors);
  summary["norms"] = std::move(norms);
  summary["directions"] = std::move(directions);
  report["frame"] = std::move(summary);

  const SymMatrix2 s = frame_operator(frame);
  report["frame_operator"] = operator_json(s);
  report["bounds"] = bounds_json(bounds_of(s));
  report["tightness"] = tightness_json(is_tight(frame));
  return report;
}

inline std::string fmt(double v) { return io::format_number(v); }

inline void print_weights(std::ostream& out, const std::vector<double>& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    out << "  w[" << i << "] = " << fmt(w[i]) << "\n";
  }
}

inline void print_bounds(std::ostream& out, const std::string& label, const FrameBounds& b) {
  out << label << "A = " << fmt(b.lower) << ", B = " << fmt(b.upper)
      << ", cond = " << fmt(b.cond) << "\n";
}

// Human-readable rendering of the common part of a report.
inline void print_frame(std::ostream& out, const Frame& frame) {
  out << "frame: " << frame.size() << " vectors\n";
  out << "  i  x                         y                         norm                      "
         "direction (rad mod pi)\n";
  for (std::size_t i = 0; i < frame.size(); ++i) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-2zu %-25s %-25s %-25s %s\n", i,
                  fmt(frame[i].x).c_str(), fmt(frame[i].y).c_str(),
                  fmt(frame[i].norm()).c_str(), fmt(direction_mod_pi(frame[i])).c_str());
    out << line;
  }
  const SymMatrix2 s = frame_operator(frame);
  out << "frame operator: [[" << fmt(s.s11) << ", " << fmt(s.s12) << "], [" << fmt(s.s12)
      << ", " << fmt(s.s22) << "]]\n";
  print_bounds(out, "bounds: ", bounds_of(s));
  const TightnessReport t = is_tight(frame);
  out << "tight: " << (t.is_tight ? "yes" : "no") << " (sum a^2 = " << fmt(t.sum_a2)
      << ", sum b^2 = " << fmt(t.sum_b2) << ", sum ab = " << fmt(t.sum_ab) << ")\n";
}

inline void print_scaling(std::ostream& out, const ScalingResult& r) {
  out << "method: " << to_string(r.method) << "\n";
  if (r.pair_indices) {
    out << "pair: (" << r.pair_indices->first << ", " << r.pair_indices->second << ")\n";
  }
  print_weights(out, r.scaling.weights);
  print_bounds(out, "scaled bounds: ", r.bounds);
}

struct Options {
  std::string file;
  std::string format;
  bool json = false;
  std::optional<double> epsilon;
  int levels = 21;
  std::optional<double> lo;
  std::optional<double> hi;
  bool refine = false;
  std::string weights_file;
  std::optional<double> claim;
  double tol = 1e-9;
  std::string output;
};

inline Frame load_frame(const Options& o) {
  std::optional<io::FrameFormat> fmt;
  if (o.format == "csv") fmt = io::FrameFormat::csv;
  if (o.format == "json") fmt = io::FrameFormat::json;
  return io::parse_frame(o.file, fmt);
}

inline Scaling load_weights(const std::string& path, std::size_t m) {
  Scaling s = io::parse_weights_json(io::read_file(path), path);
  if (s.size() != m) {
    throw FrameError(ErrorKind::parse, path + ": expected " + std::to_string(m) +
                                           " weights, got " + std::to_string(s.size()));
  }
  return s;
}

inline Json file_echo(const Options& o) {
  Json echo;
  echo["file"] = std::filesystem::path(o.file).filename().string();
  return echo;
}

inline Json optional_number(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

inline int cmd_analyze(const Options& o, std::ostream& out) {
  const Frame frame = load_frame(o);
  if (o.json) {
    out << io::to_json_string(frame_report("analyze", file_echo(o), frame));
  } else {
    print_frame(out, frame);
  }
  return kOk;
}

inline int cmd_scalable(const Options& o, std::ostream& out) {
  const Frame frame = load_frame(o);
  const ScalabilityVerdict v = classify_scalability(frame);
  if (o.json) {
    Json report = frame_report("scalable", file_echo(o), frame);
    Json verdict;
    verdict["scalable"] = v.scalable;
    verdict["spread"] = v.spread;
    verdict["arc_start"] = v.arc_start;
    verdict["witness"] = v.witness ? numbers(v.witness->weights) : Json(nullptr);
    verdict["witness_bounds"] =
        v.witness ? bounds_json(frame_bounds(apply_scaling(frame, *v.witness))) : Json(nullptr);
    report["verdict"] = std::move(verdict);
    out << io::to_json_string(report);
  } else {
    print_frame(out, frame);
    out << "scalable: " << (v.scalable ? "yes" : "no") << "\n";
    out << "covering arc: start " << fmt(v.arc_start) << " rad, spread " << fmt(v.spread)
        << " rad\n";
    if (v.witness) {
      out << "tight witness:\n";
      print_weights(out, v.witness->weights);
    } else {
      out << "certificate: after rotating by -" << fmt(v.arc_start)
          << " rad every direction lies in [0, " << fmt(v.spread) << "] (open quadrant)\n";
    }
  }
  return kOk;
}

inline int cmd_scale(const Options& o, std::ostream& out) {
  const Frame frame = load_frame(o);
  const ScalingResult r = o.epsilon ? restricted_scaling(frame, Budget(*o.epsilon))
                                    : min_condition_scaling(frame);
  if (o.json) {
    Json echo = file_echo(o);
    echo["epsilon"] = optional_number(o.epsilon);
    Json report = frame_report("scale", std::move(echo), frame);
    report["scaling"] = scaling_json(r);
    out << io::to_json_string(report);
  } else {
    print_frame(out, frame);
    print_scaling(out, r);
  }
  return kOk;
}

inline int cmd_oracle(const Options& o, std::ostream& out) {
  const Frame frame = load_frame(o);
  double lo = 0.0;
  double hi = 2.0;
  if (o.epsilon) {
    const Budget b(*o.epsilon);
    lo = b.lo();
    hi = b.hi();
  }
  if (o.lo) lo = *o.lo;
  if (o.hi) hi = *o.hi;
  SearchSpec spec = SearchSpec::uniform(lo, hi, o.levels);
  spec.refine = o.refine;
  const OracleResult found = search_scaling(frame, spec);

  std::optional<ScalingResult> closed;
  std::string closed_error;
  try {
    closed = o.epsilon ? restricted_scaling(frame, Budget(*o.epsilon))
                       : min_condition_scaling(frame);
  } catch (const FrameError& e) {
    if (e.kind() == ErrorKind::internal) throw;
    closed_error = e.what();
  }

  if (o.json) {
    Json echo = file_echo(o);
    echo["epsilon"] = optional_number(o.epsilon);
    echo["levels"] = o.levels;
    echo["lo"] = lo;
    echo["hi"] = hi;
    echo["refine"] = o.refine;
    Json report = frame_report("oracle", std::move(echo), frame);
    Json oj = scaling_json(found.result);
    oj["evaluated"] = found.evaluated;
    oj["skipped"] = found.skipped;
    oj["refined"] = found.refined;
    report["oracle"] = std::move(oj);
    report["closed_form"] = closed ? scaling_json(*closed) : Json(nullptr);
    report["closed_form_error"] = closed ? Json(nullptr) : Json(closed_error);
    Json cmp;
    cmp["oracle_cond"] = found.result.bounds.cond;
    cmp["closed_form_cond"] = closed ? Json(closed->bounds.cond) : Json(nullptr);
    cmp["closed_minus_oracle"] =
        closed ? Json(closed->bounds.cond - found.result.bounds.cond) : Json(nullptr);
    report["comparison"] = std::move(cmp);
    out << io::to_json_string(report);
  } else {
    print_frame(out, frame);
    out << "oracle: " << o.levels << " levels on [" << fmt(lo) << ", " << fmt(hi) << "]"
        << (found.refined ? ", refined" : "") << ", " << found.evaluated << " points, "
        << found.skipped << " rank-deficient\n";
    print_weights(out, found.result.scaling.weights);
    print_bounds(out, "oracle bounds: ", found.result.bounds);
    if (closed) {
      out << "closed form:\n";
      print_scaling(out, *closed);
      out << "closed minus oracle cond: " << fmt(closed->bounds.cond - found.result.bounds.cond)
          << "\n";
    } else {
      out << "closed form unavailable: " << closed_error << "\n";
    }
  }
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Frame frame = load_frame(o);
  const Scaling s = load_weights(o.weights_file, frame.size());
  const VerificationReport v =
      verify_scaling(frame, s, o.claim.value_or(0.0), o.tol);
  const bool pass = !o.claim || v.pass;
  if (o.json) {
    Json echo = file_echo(o);
    echo["weights_file"] = std::filesystem::path(o.weights_file).filename().string();
    echo["claim"] = optional_number(o.claim);
    echo["tol"] = o.tol;
    Json report = frame_report("verify", std::move(echo), frame);
    Json vj;
    vj["weights"] = numbers(s.weights);
    vj["claimed_cond"] = optional_number(o.claim);
    vj["pass"] = o.claim ? Json(v.pass) : Json(nullptr);
    vj["bounds"] = bounds_json(v.bounds);
    vj["tightness"] = tightness_json(v.tightness);
    report["verification"] = std::move(vj);
    out << io::to_json_string(report);
  } else {
    print_frame(out, frame);
    print_weights(out, s.weights);
    print_bounds(out, "scaled bounds: ", v.bounds);
    out << "scaled family tight: " << (v.tightness.is_tight ? "yes" : "no") << "\n";
    if (o.claim) {
      out << "claim cond = " << fmt(*o.claim) << " (tol " << fmt(o.tol)
          << "): " << (v.pass ? "PASS" : "FAIL") << "\n";
    }
  }
  if (!pass) {
    err << "verify: recomputed cond " << fmt(v.bounds.cond) << " does not match claim "
        << fmt(*o.claim) << "\n";
    return kInputError;
  }
  return kOk;
}

inline int cmd_plot(const Options& o, std::ostream& out) {
  const Frame frame = load_frame(o);
  std::optional<Scaling> s;
  if (!o.weights_file.empty()) s = load_weights(o.weights_file, frame.size());
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw FrameError(ErrorKind::parse, o.output + ": cannot open for writing");
  file << svg::render(frame, s);
  if (o.json) {
    Json echo = file_echo(o);
    echo["weights_file"] = o.weights_file.empty()
                               ? Json(nullptr)
                               : Json(std::filesystem::path(o.weights_file).filename().string());
    echo["output"] = std::filesystem::path(o.output).filename().string();
    Json report = frame_report("plot", std::move(echo), frame);
    report["scaled_bounds"] =
        s ? bounds_json(frame_bounds(apply_scaling(frame, *s))) : Json(nullptr);
    out << io::to_json_string(report);
  } else {
    out << "wrote " << o.output << "\n";
  }
  return kOk;
}

}  // namespace detail

/// Parses `args` (program name first) and runs one subcommand. Reports go to
/// `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Condition-number analysis and scaling of frames in the plane", kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("FILE", o.file, "Frame file (.csv or .json)")->required();
    sub->add_option("--format", o.format, "Override the frame format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--json", o.json, "Print the report as JSON");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Frame operator, bounds and tightness");
  add_common(analyze);
  CLI::App* scalable = app.add_subcommand("scalable", "Scalability verdict with certificate");
  add_common(scalable);
  CLI::App* scale = app.add_subcommand("scale", "Minimum-condition scaling");
  add_common(scale);
  scale->add_option("--epsilon", o.epsilon, "Restrict weights to [1-E, 1+E]");
  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force lattice search");
  add_common(oracle);
  oracle->add_option("--epsilon", o.epsilon, "Search the budget box [1-E, 1+E]");
  oracle->add_option("--levels", o.levels, "Lattice points per weight")->check(CLI::Range(2, 100000));
  oracle->add_option("--lo", o.lo, "Lower end of every weight interval");
  oracle->add_option("--hi", o.hi, "Upper end of every weight interval");
  oracle->add_flag("--refine", o.refine, "Refine the lattice optimum by coordinate descent");
  CLI::App* verify = app.add_subcommand("verify", "Recompute bounds for given weights");
  add_common(verify);
  verify->add_option("--weights", o.weights_file, "JSON array of weights")->required();
  verify->add_option("--claim", o.claim, "Claimed condition number");
  verify->add_option("--tol", o.tol, "Relative tolerance for --claim");
  CLI::App* plot = app.add_subcommand("plot", "SVG diagram of the frame");
  add_common(plot);
  plot->add_option("--weights", o.weights_file, "JSON array of weights to overlay");
  plot->add_option("-o,--output", o.output, "Output SVG path")->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  // With --json a failure still yields a report on stdout.
  auto fail = [&](const char* kind, const std::string& message, int code) {
    err << kToolName << ": " << kind << " error: " << message << "\n";
    if (o.json) {
      detail::Json report;
      report["tool"] = kToolName;
      report["version"] = kVersion;
      report["command"] = command;
      detail::Json error;
      error["kind"] = kind;
      error["message"] = message;
      error["exit_code"] = code;
      report["error"] = std::move(error);
      out << io::to_json_string(report);
    }
    return code;
  };

  try {
    if (analyze->parsed()) return detail::cmd_analyze(o, out);
    if (scalable->parsed()) return detail::cmd_scalable(o, out);
    if (scale->parsed()) return detail::cmd_scale(o, out);
    if (oracle->parsed()) return detail::cmd_oracle(o, out);
    if (verify->parsed()) return detail::cmd_verify(o, out, err);
    if (plot->parsed()) return detail::cmd_plot(o, out);
  } catch (const FrameError& e) {
    return fail(to_string(e.kind()), e.what(), exit_code_for(e.kind()));
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kInternalError);
  }
  return kInputError;
}

}  // namespace planar_frames::cli
