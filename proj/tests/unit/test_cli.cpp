// Copyright 2026 The gensat Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gensat/cli.hpp"
#include "gensat/constructions.hpp"
#include "gensat/graph6.hpp"

using namespace gensat;
using nlohmann::json;

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
  json report;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.status = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty()) r.report = json::parse(r.out);
  return r;
}

std::string stable(const Run& r) {
  json j = json::parse(r.out);
  j.erase("wall_time_ms");
  return j.dump();
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("gensat_test_" + name);
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("satnum star-star") {
  const Run r = run({"satnum", "star-star", "--n", "9", "--r", "2", "--t", "5"});
  CHECK(r.status == kExitOk);
  CHECK(r.report["command"] == "satnum star-star");
  CHECK(r.report["result"]["satnum"] == 39);
  CHECK(r.report["result"]["m0"] == 3);
  CHECK(r.report["result"]["tie"] == false);
  CHECK(r.report["version"] == "0.1.0");
  CHECK(r.report.contains("wall_time_ms"));
  CHECK(r.err.empty());
}

TEST_CASE("check-sat on the six-vertex S5-saturated graph") {
  const Run r = run({"check-sat", "--graph", encode_graph6(fig1()), "--forbid", "S5"});
  CHECK(r.status == kExitOk);
  CHECK(r.report["result"]["saturated"] == true);
  CHECK(r.report["result"]["validated"] == true);
  const Run k4 = run({"check-sat", "--graph", encode_graph6(fig1()), "--forbid", "K4"});
  CHECK(k4.report["result"]["free"] == true);
}

TEST_CASE("count") {
  const Run r = run({"count", "--graph", encode_graph6(split_graph(6, 4)), "--pattern", "P4"});
  CHECK(r.status == kExitOk);
  CHECK(r.report["result"]["count"] == 36);
  const Run a = run({"count", "--graph", encode_graph6(star_graph(5)), "--alpha",
                     "--independent-sets", "3"});
  CHECK(a.report["result"]["alpha"] == 5);
  CHECK(a.report["result"]["independent_sets"] == 10);
}

TEST_CASE("graph input from a file") {
  const auto p = temp_file("g.g6", "\n" + encode_graph6(split_graph(6, 4)) + "\n");
  const Run r = run({"count", "--graph", "@" + p.string(), "--pattern", "P4"});
  CHECK(r.status == kExitOk);
  CHECK(r.report["result"]["count"] == 36);
  const Run missing = run({"count", "--graph", "@/nonexistent/x.g6", "--pattern", "P4"});
  CHECK(missing.status == kExitDomain);
  std::filesystem::remove(p);
}

TEST_CASE("construct reports claims that hold") {
  const std::vector<std::vector<std::string>> cases = {
      {"split", "--params", "n=8,t=4"},
      {"kr", "--params", "t=5", "--params", "n=9,m=3"},
      {"regular_multipartite", "--params", "a=3,r=3,k=4"},
      {"partite_saturated", "--params", "n=9,r=3,t=4,c=0"},
      {"g49"},
      {"g4n", "--params", "n=30"},
      {"gtn", "--params", "t=5,n=20"},
      {"w_t", "--params", "t=5,m1=1,m2=1,m3=1,m4=1,m5=1"},
      {"fig1"},
      {"fig2"},
      {"t_star"}};
  for (auto args : cases) {
    args.insert(args.begin(), "construct");
    const Run r = run(args);
    REQUIRE(r.status == kExitOk);
    CHECK(decode_graph6(r.report["result"]["graph6"].get<std::string>()).order() ==
          r.report["result"]["order"]);
    for (const auto& c : r.report["result"]["claims"]) CHECK(c["holds"] == true);
  }
  const Run kr = run({"construct", "kr", "--params", "t=5,n=9,m=3"});
  CHECK(kr.report["parameters"]["family"] == "kr");
  CHECK(kr.report["result"]["parameters"] == json({{"m", 3}, {"n", 9}, {"t", 5}}));
}

TEST_CASE("m0, tie-ts and bounds") {
  const Run m = run({"m0", "--n", "21", "--r", "2", "--t", "11"});
  CHECK(m.report["result"]["m0"] == 6);
  CHECK(m.report["result"]["tie"] == true);
  CHECK(m.report["result"]["xbar_integral"] == true);
  const Run t = run({"tie-ts", "--max", "4"});
  CHECK(t.report["result"]["ts"] == json({2, 4, 11, 37, 134}));
  const Run b = run({"bounds", "krfree", "--params", "r=3,t=12,m=3"});
  CHECK(b.status == kExitOk);
  CHECK(b.report["result"]["value"] == 13.5);
  const Run e = run({"bounds", "ehm", "--params", "n=9,t=4"});
  CHECK(e.report["result"]["exact"] == "15");
}

TEST_CASE("search commands") {
  const Run s = run({"satnum", "exact", "--n", "6", "--forbid", "S5", "--count", "S3"});
  CHECK(s.status == kExitOk);
  CHECK(s.report["result"]["minimum"] == 18);
  const Run x = run({"exists", "--n", "7", "--forbid", "K3", "--property", "bipartite"});
  CHECK(x.report["result"]["found"] == true);
  const Run none = run({"exists", "--n", "7", "--forbid", "S5", "--property", "K3-free"});
  CHECK(none.status == kExitOk);
  CHECK(none.report["result"]["found"] == false);
}

TEST_CASE("reports are stable across runs and worker counts") {
  const std::vector<std::vector<std::string>> commands = {
      {"satnum", "star-star", "--n", "9", "--r", "2", "--t", "5"},
      {"satnum", "exact", "--n", "7", "--forbid", "S4", "--count", "S2"},
      {"construct", "g49"},
      {"bounds", "best_c", "--params", "r=4,t=5"}};
  for (const auto& c : commands) {
    const Run a = run(c);
    const Run b = run(c);
    REQUIRE(a.status == kExitOk);
    CHECK(stable(a) == stable(b));
  }
  const Run w1 = run({"satnum", "exact", "--n", "8", "--forbid", "S4", "--count", "S2", "--workers", "1"});
  const Run w4 = run({"satnum", "exact", "--n", "8", "--forbid", "S4", "--count", "S2", "--workers", "4"});
  CHECK(w1.report["result"] == w4.report["result"]);
}

TEST_CASE("worker count from the environment") {
  ::setenv("GENSAT_WORKERS", "1", 1);
  const Run a = run({"satnum", "exact", "--n", "7", "--forbid", "K3", "--count", "S1"});
  ::unsetenv("GENSAT_WORKERS");
  const Run b = run({"satnum", "exact", "--n", "7", "--forbid", "K3", "--count", "S1"});
  CHECK(a.report["result"] == b.report["result"]);
  CHECK(a.report["result"]["minimum"] == 6);
}

TEST_CASE("usage errors exit 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"bogus"}, {"satnum"}, {"satnum", "star-star", "--n", "9"},
           {"count", "--graph", "D??", "--frobnicate"}, {"m0", "--n", "x", "--r", "2", "--t", "5"}}) {
    const Run r = run(args);
    CHECK(r.status == kExitUsage);
    CHECK(r.report["error"]["code"] == "usage");
    CHECK_FALSE(r.err.empty());
  }
  CHECK(run({"satnum", "star-star", "--n", "9"}).report["command"] == "satnum star-star");
}

TEST_CASE("domain errors exit 3 with a machine-readable code") {
  const Run g6 = run({"count", "--graph", "!!", "--pattern", "K3"});
  CHECK(g6.status == kExitDomain);
  CHECK(g6.report["error"]["code"] == "parse_error");
  CHECK(g6.report["command"] == "count");
  const Run fam = run({"construct", "nope"});
  CHECK(fam.status == kExitDomain);
  CHECK(fam.report["error"]["code"] == "unknown_family");
  const Run kr = run({"construct", "kr", "--params", "t=4,n=9,m=0"});
  CHECK(kr.report["error"]["code"] == "kr_parity");
  const Run none = run({"satnum", "exact", "--n", "7", "--forbid", "S5", "--count", "S1",
                        "--property", "K3-free"});
  CHECK(none.status == kExitDomain);
  CHECK(none.report["error"]["code"] == "none_exist");
  const Run cap = run({"satnum", "exact", "--n", "11", "--forbid", "K3", "--count", "S1"});
  CHECK(cap.report["error"]["code"] == "cap_exceeded");
  const Run pat = run({"count", "--graph", "D??", "--pattern", "Q4"});
  CHECK(pat.status == kExitDomain);
  const Run bound = run({"bounds", "nope"});
  CHECK(bound.report["error"]["code"] == "unknown_bound");
}

TEST_CASE("certify") {
  const auto grid = temp_file("ok.grid",
                              "# n F H\n5 K3 S1\n\n7 S4 S2   # star formula\n6 S5 S3 18\n6 K4 K3\n");
  const auto archive = std::filesystem::temp_directory_path() / "gensat_test_archive.json";
  const Run ok = run({"certify", "--grid", grid.string(), "--archive", archive.string()});
  CHECK(ok.status == kExitOk);
  const auto& entries = ok.report["result"]["entries"];
  REQUIRE(entries.size() == 4);
  CHECK(entries[0]["line"] == 2);
  CHECK(entries[0]["formula"]["name"] == "ehm");
  CHECK(entries[0]["match"] == true);
  CHECK(entries[1]["formula"]["name"] == "star_star");
  CHECK(entries[1]["match"] == true);
  CHECK(entries[2]["expected_match"] == true);
  CHECK(entries[3]["formula"]["binding"] == false);
  CHECK(ok.report["result"]["mismatches"] == 0);
  std::ifstream in(archive);
  const json arch = json::parse(in);
  CHECK(arch["entries"] == entries);

  const auto bad_value = temp_file("pin.grid", "5 K3 S1\n6 S5 S3 17\n");
  const Run mismatch = run({"certify", "--grid", bad_value.string()});
  CHECK(mismatch.status == kExitMismatch);
  CHECK(mismatch.report["result"]["mismatches"] == 1);
  CHECK(mismatch.err.find("grid line 2") != std::string::npos);

  const auto malformed = temp_file("bad.grid", "5 K3 S1\n# fine\n6 S5\n");
  const Run bad = run({"certify", "--grid", malformed.string()});
  CHECK(bad.status == kExitDomain);
  CHECK(bad.report["error"]["message"].get<std::string>().find("grid line 3") != std::string::npos);

  const Run missing = run({"certify", "--grid", "/nonexistent.grid"});
  CHECK(missing.status == kExitDomain);
  for (const auto& p : {grid, archive, bad_value, malformed}) std::filesystem::remove(p);
}

TEST_CASE("small grid shipped with the repository") {
  const Run r = run({"certify", "--grid", GENSAT_SOURCE_DIR "/data/grids/small.grid"});
  CHECK(r.status == kExitOk);
  CHECK(r.report["result"]["mismatches"] == 0);
}

TEST_CASE("schema and version") {
  const Run s = run({"--schema"});
  CHECK(s.status == kExitOk);
  CHECK(s.report["schema_version"] == 1);
  CHECK(s.report["commands"].contains("certify"));
  CHECK(s.report["commands"].contains("satnum exact"));
  const Run v = run({"version"});
  CHECK(v.report["result"]["version"] == "0.1.0");
  const Run h = run({"--help"});
  CHECK(h.status == kExitOk);
  CHECK(h.out.empty());
  CHECK(h.err.find("certify") != std::string::npos);
}

TEST_CASE("stdout carries exactly one JSON document") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"version"}, {"bogus"}, {"count", "--graph", "!!"}, {"tie-ts", "--max", "3"}}) {
    const Run r = run(args);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
  }
}
