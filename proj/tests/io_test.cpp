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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "planar_frames/io.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

namespace pf = planar_frames;
namespace io = planar_frames::io;
using pf::Vec2;
using pf::testing::error_kind;

namespace {

std::string parse_message(auto&& fn) {
  try {
    fn();
  } catch (const pf::FrameError& e) {
    EXPECT_EQ(e.kind(), pf::ErrorKind::parse);
    return e.what();
  }
  ADD_FAILURE() << "expected a parse error";
  return {};
}

}  // namespace

TEST(FormatNumber, RoundTripDigits) {
  EXPECT_EQ(io::format_number(1.0), "1");
  EXPECT_EQ(io::format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(io::format_number(-2.5e-300), "-2.5e-300");
  EXPECT_EQ(io::format_number(INFINITY), "inf");
  EXPECT_EQ(io::format_number(-INFINITY), "-inf");
}

TEST(ToJsonString, Layout) {
  io::Json j;
  j["a"] = 1.0;
  j["b"] = io::Json::array({1.5, 2.0});
  j["c"] = INFINITY;
  j["d"] = nullptr;
  j["e"] = io::Json::array({io::Json::array({1, 2})});
  j["f"] = io::Json::object();
  EXPECT_EQ(io::to_json_string(j),
            "{\n"
            "  \"a\": 1,\n"
            "  \"b\": [1.5, 2],\n"
            "  \"c\": \"inf\",\n"
            "  \"d\": null,\n"
            "  \"e\": [\n"
            "    [1, 2]\n"
            "  ],\n"
            "  \"f\": {}\n"
            "}\n");
}

TEST(ParseFrameCsv, HeaderCommentsAndBlankLines) {
  const auto f = io::parse_frame_csv("# note\n\nx,y\n1,0\n\n  0.5 , -2e-3 \r\n# tail\n");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[1], (Vec2{0.5, -2e-3}));
}

TEST(ParseFrameCsv, WithoutHeader) {
  const auto f = io::parse_frame_csv("1,0\n+0,1");
  EXPECT_EQ(f[1], (Vec2{0, 1}));
}

TEST(ParseFrameCsv, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_message([] { io::parse_frame_csv("x,y\n1,0\n1;2\n", "f.csv"); }),
            "f.csv:3: expected exactly two comma-separated fields");
  EXPECT_EQ(parse_message([] { io::parse_frame_csv("1,0\n1,abc\n", "f.csv"); }),
            "f.csv:2: malformed number");
  EXPECT_EQ(parse_message([] { io::parse_frame_csv("1,0\n0,0\n", "f.csv"); }),
            "f.csv:2: zero vector");
  EXPECT_EQ(parse_message([] { io::parse_frame_csv("1,0\ninf,1\n", "f.csv"); }),
            "f.csv:2: non-finite entry");
  EXPECT_EQ(parse_message([] { io::parse_frame_csv("1,2,3\n", "f.csv"); }),
            "f.csv:1: expected exactly two comma-separated fields");
  EXPECT_EQ(parse_message([] { io::parse_frame_csv("x,y\n1,0\n", "f.csv"); }),
            "f.csv: a frame needs at least 2 vectors, got 1");
  EXPECT_EQ(parse_message([] { io::parse_frame_csv("1,0\nx,y\n", "f.csv"); }),
            "f.csv:2: malformed number");
}

TEST(ParseFrameJson, Basic) {
  const auto f = io::parse_frame_json(R"({"vectors": [[1, 0], [0.25, -3]]})");
  EXPECT_EQ(f[1], (Vec2{0.25, -3}));
}

TEST(ParseFrameJson, ErrorsCarryElementIndex) {
  EXPECT_EQ(parse_message([] { io::parse_frame_json(R"({"vectors": [[1, 0], [1]]})", "f.json"); }),
            "f.json: vectors[1]: expected [x, y] with numeric entries");
  EXPECT_EQ(parse_message([] { io::parse_frame_json(R"({"vectors": [[0, 0], [1, 1]]})", "f.json"); }),
            "f.json: vectors[0]: zero vector");
  EXPECT_EQ(parse_message([] { io::parse_frame_json(R"([[1, 0], [0, 1]])", "f.json"); }),
            "f.json: expected an object with a \"vectors\" array");
  EXPECT_EQ(parse_message([] { io::parse_frame_json(R"({"vectors": [[1, 0]]})", "f.json"); }),
            "f.json: a frame needs at least 2 vectors, got 1");
  const std::string broken = parse_message([] { io::parse_frame_json("{", "f.json"); });
  EXPECT_EQ(broken.rfind("f.json: ", 0), 0u);
}

TEST(ParseWeights, Valid) {
  EXPECT_EQ(io::parse_weights_json("[1, 0, 2.5]").weights, (std::vector<double>{1, 0, 2.5}));
}

TEST(ParseWeights, Errors) {
  EXPECT_EQ(parse_message([] { io::parse_weights_json("[1, -1]", "w.json"); }),
            "w.json: [1]: weight must be finite and >= 0");
  EXPECT_EQ(parse_message([] { io::parse_weights_json("[1, \"a\"]", "w.json"); }),
            "w.json: [1]: weight is not a number");
  EXPECT_EQ(parse_message([] { io::parse_weights_json("{}", "w.json"); }),
            "w.json: expected a JSON array of weights");
}

TEST(InferFormat, ByExtension) {
  EXPECT_EQ(io::infer_format("a/b.csv"), io::FrameFormat::csv);
  EXPECT_EQ(io::infer_format("b.json"), io::FrameFormat::json);
  EXPECT_EQ(error_kind([] { io::infer_format("b.txt"); }), pf::ErrorKind::parse);
}

TEST(ParseFrame, MissingFile) {
  EXPECT_EQ(error_kind([] { io::parse_frame("/nonexistent/frame.csv"); }), pf::ErrorKind::parse);
}

TEST(ParseFrame, Fixtures) {
  const std::filesystem::path dir = PLANAR_FRAMES_FIXTURE_DIR;
  EXPECT_EQ(io::parse_frame(dir / "orthonormal_pair.csv").size(), 2u);
  EXPECT_EQ(io::parse_frame(dir / "mercedes_dirs.json").size(), 3u);
  EXPECT_EQ(io::parse_frame(dir / "three_quadrant.csv").size(), 3u);
  // Explicit format wins over the extension.
  EXPECT_EQ(error_kind([&] { io::parse_frame(dir / "three_quadrant.csv", io::FrameFormat::json); }),
            pf::ErrorKind::parse);
}

TEST(RoundTrip, BitExact) {
  pf::testing::Rng rng(81);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Vec2> v;
    const int m = rng.integer(2, 8);
    for (int i = 0; i < m; ++i) {
      const double s = std::pow(10.0, rng.uniform(-200, 200));
      v.push_back({s * rng.uniform(-1, 1), s * rng.uniform(-1, 1)});
    }
    const pf::Frame f(v);
    const pf::Frame from_csv = io::parse_frame_csv(io::write_frame_csv(f));
    const pf::Frame from_json = io::parse_frame_json(io::write_frame_json(f));
    ASSERT_EQ(from_csv.vectors(), f.vectors());
    ASSERT_EQ(from_json.vectors(), f.vectors());

    std::vector<double> w;
    for (int i = 0; i < m; ++i) w.push_back(rng.uniform(0, 3));
    ASSERT_EQ(io::parse_weights_json(io::write_weights_json(pf::Scaling(w))).weights, w);
  }
}
