// Copyright 2026 The Pertubox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pertubox/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "pertubox/rng.hpp"

namespace pertubox {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("pertubox_test_" + std::to_string(std::rand()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  fs::path file(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

Schema two_numeric_schema() {
  return Schema({{"age", ColumnKind::kNumeric, ColumnRole::kQuasiIdentifier},
                 {"salary", ColumnKind::kNumeric, ColumnRole::kSensitive}});
}

TEST_CASE("load_csv parses a small numeric file") {
  TempDir dir;
  const auto p = dir.file("a.csv");
  write_text(p, "age,salary\n30,100.5\n40,200\n50,300.25\n");
  const Dataset d = load_csv(p, two_numeric_schema());
  REQUIRE(d.n_records() == 3);
  REQUIRE(d.numeric_block().rows() == 3);
  REQUIRE(d.numeric_block().cols() == 2);
  REQUIRE(d.numeric_block()(0, 0) == 30.0);
  REQUIRE(d.numeric_block()(2, 1) == 300.25);
}

TEST_CASE("load_csv errors") {
  TempDir dir;
  const Schema schema = two_numeric_schema();

  SECTION("missing file") {
    REQUIRE_THROWS_AS(load_csv(dir.file("nope.csv"), schema), ValidationError);
  }
  SECTION("header mismatch") {
    const auto p = dir.file("b.csv");
    write_text(p, "age,wage\n1,2\n");
    REQUIRE_THROWS_WITH(load_csv(p, schema),
                        Catch::Matchers::ContainsSubstring("wage"));
  }
  SECTION("header only") {
    const auto p = dir.file("c.csv");
    write_text(p, "age,salary\n");
    REQUIRE_THROWS_WITH(load_csv(p, schema),
                        Catch::Matchers::ContainsSubstring("empty data body"));
  }
  SECTION("unparseable numeric cell names row and column") {
    const auto p = dir.file("d.csv");
    write_text(p, "age,salary\n30,1\nabc,2\n");
    REQUIRE_THROWS_WITH(
        load_csv(p, schema),
        Catch::Matchers::ContainsSubstring("row 2") &&
            Catch::Matchers::ContainsSubstring("age"));
  }
  SECTION("non-finite numeric cell rejected") {
    const auto p = dir.file("e.csv");
    write_text(p, "age,salary\n30,inf\n");
    REQUIRE_THROWS_AS(load_csv(p, schema), ValidationError);
  }
  SECTION("missing cell rejected") {
    const auto p = dir.file("f.csv");
    write_text(p, "age,salary\n30,\n");
    REQUIRE_THROWS_AS(load_csv(p, schema), ValidationError);
  }
}

TEST_CASE("write then load round-trips a random dataset") {
  TempDir dir;
  Rng rng(101, "roundtrip");
  Matrix block(5, 3);
  for (auto& v : block.values()) v = rng.gaussian(0.0, 100.0);
  Schema schema({{"a", ColumnKind::kNumeric, ColumnRole::kOther},
                 {"b", ColumnKind::kNumeric, ColumnRole::kOther},
                 {"c", ColumnKind::kNumeric, ColumnRole::kOther}});
  const Dataset d(schema, block, {});
  const auto p = dir.file("rt.csv");
  write_csv(d, p);
  const Dataset back = load_csv(p, schema);
  REQUIRE(back.n_records() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const double orig = d.numeric_block()(i, j);
      const double got = back.numeric_block()(i, j);
      REQUIRE(std::abs(got - orig) <= 1e-12 * std::abs(orig));
    }
}

TEST_CASE("labels with commas, quotes, and newlines survive the round trip") {
  TempDir dir;
  Schema schema({{"x", ColumnKind::kNumeric, ColumnRole::kOther},
                 {"city", ColumnKind::kCategorical, ColumnRole::kOther}});
  Matrix block(3, 1);
  block(0, 0) = 1;
  block(1, 0) = 2;
  block(2, 0) = 3;
  const std::vector<std::string> labels{"Washington, DC", "say \"hi\"",
                                        "two\nlines"};
  const Dataset d(schema, block, {labels});
  const auto p = dir.file("q.csv");
  write_csv(d, p);
  const Dataset back = load_csv(p, schema);
  REQUIRE(back.categorical_block()[0] == labels);
}

TEST_CASE("boolean columns parse and convert") {
  TempDir dir;
  Schema schema({{"flag", ColumnKind::kBoolean, ColumnRole::kSensitive}});
  const auto p = dir.file("bool.csv");
  write_text(p, "flag\ntrue\nfalse\n1\n0\n");
  const Dataset d = load_csv(p, schema);
  const auto bits = d.bool_column("flag");
  REQUIRE(bits == std::vector<bool>{true, false, true, false});

  write_text(p, "flag\nyes\n");
  REQUIRE_THROWS_AS(load_csv(p, schema), ValidationError);
}

TEST_CASE("dataset rejects mismatched block rows and non-finite values") {
  Schema schema({{"a", ColumnKind::kNumeric, ColumnRole::kOther},
                 {"b", ColumnKind::kCategorical, ColumnRole::kOther}});
  Matrix block(2, 1);
  REQUIRE_THROWS_AS(
      Dataset(schema, block, {std::vector<std::string>{"x", "y", "z"}}),
      ValidationError);
  Matrix bad(2, 1);
  bad(0, 0) = std::nan("");
  REQUIRE_THROWS_AS(
      Dataset(schema, bad, {std::vector<std::string>{"x", "y"}}),
      ValidationError);
}

TEST_CASE("write_csv reports unwritable path") {
  Schema schema({{"a", ColumnKind::kNumeric, ColumnRole::kOther}});
  const Dataset d(schema, Matrix(1, 1), {});
  REQUIRE_THROWS_AS(write_csv(d, "/nonexistent_dir_zz/out.csv"),
                    ValidationError);
}

TEST_CASE("empty-categorical dataset writes only numeric columns") {
  TempDir dir;
  Schema schema({{"a", ColumnKind::kNumeric, ColumnRole::kOther},
                 {"b", ColumnKind::kNumeric, ColumnRole::kOther}});
  Matrix block(2, 2);
  block(0, 0) = 1.5;
  block(1, 1) = -2.0;
  const auto p = dir.file("num.csv");
  write_csv(Dataset(schema, block, {}), p);
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "a,b");
  std::getline(in, line);
  REQUIRE(line == "1.5,0");
}

TEST_CASE("numeric formatting is shortest round-trip") {
  REQUIRE(format_double(0.1) == "0.1");
  REQUIRE(format_double(1.0) == "1");
  REQUIRE(format_double(-3.25) == "-3.25");
  const double v = 1.0 / 3.0;
  REQUIRE(parse_double(format_double(v), 1, "x") == v);
}

}  // namespace
}  // namespace pertubox
