// Copyright 2026 The qbitsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qbitsim/cli.hpp"
#include "qbitsim/memory.hpp"

using namespace qbitsim;
using namespace qbitsim::cli;
using Catch::Matchers::ContainsSubstring;

namespace {

const std::string kBell = QBITSIM_SOURCE_DIR "/circuits/bell.qc";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "qbitsim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("parse_seed", "[cli]") {
  CHECK(parse_seed("0") == 0U);
  CHECK(parse_seed("18446744073709551615") == ~std::uint64_t{0});
  CHECK(parse_seed("0xff") == 255U);
  CHECK_FALSE(parse_seed("").has_value());
  CHECK_FALSE(parse_seed("-1").has_value());
  CHECK_FALSE(parse_seed("12ab").has_value());
  CHECK_FALSE(parse_seed("18446744073709551616").has_value());
}

TEST_CASE("run prints a sorted histogram of the Bell circuit", "[cli]") {
  const auto r = invoke({"run", "--seed", "7", kBell});
  REQUIRE(r.code == kExitOk);
  CHECK(r.err.empty());
  CHECK_THAT(r.out, ContainsSubstring("# shots 1000  seed 7  circuit "));
  CHECK_THAT(r.out, ContainsSubstring("00"));
  CHECK_THAT(r.out, ContainsSubstring("11"));
  CHECK_FALSE(r.out.find("01 ") != std::string::npos);
  // Descending count: the first data row holds the larger count.
  std::istringstream lines(r.out);
  std::string header, columns, first, second;
  std::getline(lines, header);
  std::getline(lines, columns);
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(std::stoul(first.substr(first.find_last_of(' ') + 1)) >=
        std::stoul(second.substr(second.find_last_of(' ') + 1)));
}

TEST_CASE("run reads stdin and honors overrides", "[cli]") {
  const std::string src = "qbits 1\nx 0\nmeasure 0\n";
  const auto r = invoke({"run", "--shots", "17", "--format", "records", "-"}, src);
  REQUIRE(r.code == kExitOk);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0]["record"] == "meta");
  CHECK(recs[0]["shots"] == 17);
  CHECK(recs[0]["seed"] == 0);
  CHECK(recs[0]["circuit_hash"].get<std::string>().size() == 16);
  CHECK(recs[1]["record"] == "outcome");
  CHECK(recs[1]["outcome"] == "1");
  CHECK(recs[1]["count"] == 17);

  const auto none = invoke({"run", "--shots", "5", "-"}, "qbits 1\nh 0\n");
  REQUIRE(none.code == kExitOk);
  CHECK_THAT(none.out, ContainsSubstring("(none)"));

  const auto random = invoke({"run", "--random-seed", "--format", "records", kBell});
  REQUIRE(random.code == kExitOk);
  CHECK(records(random.out)[0].contains("seed"));
}

TEST_CASE("run rejects bad input with exit 1 and a located message", "[cli]") {
  const auto r = invoke({"run", "-"}, "qbits 2\nx 5\n");
  CHECK(r.code == kExitInputError);
  CHECK(r.out.empty());
  CHECK_THAT(r.err, ContainsSubstring("2:3: error:"));

  CHECK(invoke({"run", "/nonexistent/file.qc"}).code == kExitInputError);
  CHECK(invoke({"run", "--seed", "banana", kBell}).code == kExitInputError);
  CHECK(invoke({"frobnicate"}).code == kExitInputError);
  CHECK(invoke({"run", "--shots", "0", kBell}).code == kExitInputError);
  CHECK(invoke({"run", "--exact", "-"}, "qbits 2\nmeasure 0\ncnot 0 1\n").code == kExitInputError);
}

TEST_CASE("exact mode prints probabilities without sampling", "[cli]") {
  const auto r = invoke({"run", "--exact", "--format", "records", "-"}, "qbits 1\nh 0\nmeasure 0\n");
  REQUIRE(r.code == kExitOk);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 3);
  CHECK(recs[1]["outcome"] == "0");
  CHECK(recs[2]["outcome"] == "1");
  CHECK(recs[1]["probability"].get<double>() == Catch::Approx(0.5).margin(1e-12));
  CHECK(recs[2]["probability"].get<double>() == Catch::Approx(0.5).margin(1e-12));

  const auto a = invoke({"run", "--exact", "--seed", "1", kBell});
  const auto b = invoke({"run", "--exact", "--seed", "2", kBell});
  CHECK(a.out == b.out);
}

TEST_CASE("verify succeeds and detects a corrupted gate", "[cli]") {
  const auto r = invoke({"verify"});
  CHECK(r.code == kExitOk);
  CHECK_THAT(r.out, ContainsSubstring("spin-exchange"));

  const auto rec = invoke({"verify", "--format", "records"});
  REQUIRE(rec.code == kExitOk);
  const auto recs = records(rec.out);
  CHECK(recs.size() == 12);
  for (const auto& j : recs) {
    CHECK(j.contains("name"));
    CHECK(j.contains("anchor"));
    CHECK(j["pass"] == true);
    CHECK(j["max_deviation"].get<double>() <= 1e-12);
  }

  VerifyConfig broken;
  broken.base.z = Matrix2{1, 0, 0, Complex(-1, 1e-9)};
  std::ostringstream out, err;
  CHECK(cmd_verify(broken, out, err) == kExitIdentityFailure);
  CHECK_THAT(out.str(), ContainsSubstring("FAIL"));
}

TEST_CASE("demo separates superposition from mixture", "[cli]") {
  const DemoReport rep = run_demo(10000, 0);
  CHECK(rep.superposition_after_h == 1.0);
  const double sigma = std::sqrt(0.25 / 10000);
  CHECK(std::abs(rep.mixture_after_h - 0.5) <= 3 * sigma);
  CHECK(std::abs(rep.superposition_direct - 0.5) <= 3 * sigma);
  CHECK(std::abs(rep.mixture_direct - 0.5) <= 3 * sigma);

  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const DemoReport swept = run_demo(10000, seed);
    CHECK(swept.superposition_after_h == 1.0);
    CHECK(std::abs(swept.mixture_after_h - 0.5) <= 3 * sigma);
  }

  const auto r = invoke({"demo", "--shots", "2000", "--format", "records"});
  REQUIRE(r.code == kExitOk);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0]["p0_after_h"] == 1.0);
}

TEST_CASE("bench reports exact state memory and no dense matrices", "[cli][memory]") {
  for (unsigned n : {1U, 20U}) {
    BenchConfig cfg;
    cfg.n_qbits = n;
    cfg.gates = 100;
    const BenchReport rep = run_bench(cfg);
    CHECK(rep.expected_state_bytes == (std::size_t{16} << n));
    CHECK(rep.state_peak_bytes == rep.expected_state_bytes);
    CHECK(rep.matrix_peak_bytes == 0);
    CHECK(rep.norm_deviation <= 1e-10);
  }
  const auto r = invoke({"bench", "--qbits", "4", "--gates", "10"});
  CHECK(r.code == kExitOk);
  CHECK(invoke({"bench", "--qbits", "31", "--gates", "10"}).code == kExitInputError);
}

TEST_CASE("run output is reproducible across runs and thread counts", "[cli][determinism]") {
  const auto ref = invoke({"run", "--seed", "7", "--shots", "20000", kBell});
  REQUIRE(ref.code == kExitOk);
  for (int i = 0; i < 5; ++i) CHECK(invoke({"run", "--seed", "7", "--shots", "20000", kBell}).out == ref.out);
  for (const char* t : {"1", "2", "8"}) {
    CHECK(invoke({"run", "--seed", "7", "--shots", "20000", "--threads", t, kBell}).out == ref.out);
  }
}
