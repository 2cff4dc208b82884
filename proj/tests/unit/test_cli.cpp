// Copyright 2026 The entbound Authors
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

// Smoke tests that run the built command-line tool.

#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(ENTBOUND_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("entbound_cli_" + name);
  std::filesystem::remove_all(p);
  return p.string();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("cli: usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("bound-single --measure nope --constraint NT").code == 2);
}

TEST_CASE("cli: measures on the maximally entangled state") {
  const std::string f = temp_path("me.json");
  write(f, R"({"dimA":2,"dimB":2,"amplitudes":[[0.7071067811865476,0],[0,0],[0,0],[0.7071067811865476,0]]})");
  Result r = run("measures " + f);
  REQUIRE(r.code == 0);
  // 2x2 has no phi map; the angular-momentum entries are null.
  CHECK(json::parse(r.out).at("n_hat_phi").is_null());
  CHECK(json::parse(r.out).at("tangle").get<double>() == doctest::Approx(1.0));

  write(f, R"({"dimA":4,"dimB":4,"amplitudes":[[0.5,0],[0,0],[0,0],[0,0],[0,0],[0.5,0],[0,0],[0,0],)"
           R"([0,0],[0,0],[0.5,0],[0,0],[0,0],[0,0],[0,0],[0.5,0]]})");
  r = run("measures " + f);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("eof").get<double>() == doctest::Approx(2.0));
  CHECK(j.at("tangle").get<double>() == doctest::Approx(1.5));
  CHECK(j.at("n_t").get<double>() == doctest::Approx(1.5));
  CHECK(j.at("n_hat_phi").get<double>() == doctest::Approx(1.5));

  write(f, "{\"dimA\": 4,\n  \"dimB\": ");
  CHECK(run("measures " + f).code == 3);
  CHECK(run("measures /nonexistent/state.json").code == 3);
  std::filesystem::remove(f);
}

TEST_CASE("cli: sample-gap is deterministic per seed") {
  const Result a = run("--seed 7 sample-gap --samples 200 --bin-width 0.05");
  const Result b = run("--seed 7 sample-gap --samples 200 --bin-width 0.05");
  const Result c = run("--seed 8 sample-gap --samples 200 --bin-width 0.05");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(a.out.rfind("bin_left,frequency\n", 0) == 0);
  // Frequencies add up to the sample count.
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  long total = 0;
  while (std::getline(in, line)) total += std::stol(line.substr(line.find(',') + 1));
  CHECK(total == 200);
}

TEST_CASE("cli: region, single bounds and comparison") {
  Result r = run("region --resolution 11");
  REQUIRE(r.code == 0);
  CHECK(count_lines(r.out) == 12);
  CHECK(r.out.find("1.5,0.5,1.5") != std::string::npos);

  r = run("bound-single --measure eof --constraint NT --resolution 4");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("1.5,2\n") != std::string::npos);

  r = run("compare-regions --measure eof --resolution 21");
  REQUIRE(r.code == 0);
  CHECK(r.out.find(",NT") != std::string::npos);
  CHECK(r.out.find(",NPHI") != std::string::npos);

  r = run("compare-regions --measure tangle --resolution 7 --split");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("n_hat_phi,n_t_split\n", 0) == 0);
}

TEST_CASE("cli: bound-double, query and the run manifest") {
  const std::string dir = temp_path("surface");
  Result r = run("bound-double --measure eof --grid 40x40 --out " + dir);
  // Exit status 1 flags a surface that needed gap filling; it is still written.
  REQUIRE((r.code == 0 || r.code == 1));
  CHECK(r.code == (json::parse(r.out).at("filled").get<int>() > 0 ? 1 : 0));
  CHECK(std::filesystem::exists(dir + "/surface.csv"));
  CHECK(std::filesystem::exists(dir + "/manifest.json"));
  std::ifstream mf(dir + "/run_manifest.json");
  const json manifest = json::parse(mf);
  CHECK(manifest.at("command") == "bound-double");
  CHECK(manifest.at("seed").get<int>() == 1);
  CHECK(manifest.contains("wall_time_s"));
  CHECK(manifest.contains("version"));

  r = run("query --surface " + dir + " 1.5 1.5");
  REQUIRE(r.code == 0);
  CHECK(std::stod(r.out) == doctest::Approx(2.0).epsilon(1e-6));
  r = run("--format json query --surface " + dir + " 0 0");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out).at("value").get<double>() == doctest::Approx(0.0));
  CHECK(run("query --surface " + dir + " 2 2").code == 2);
  CHECK(run("query --surface " + dir + "/missing 1 1").code == 3);
  CHECK(run("bound-double --measure eof --grid 40x40").code == 2);  // needs --out
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli: verify and spectrum") {
  Result r = run("verify --suite spectrum --samples 20");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out).at("passed").get<bool>());
  CHECK(run("verify --suite nope").code == 2);

  r = run("spectrum --mu 0.4,0.3,0.2,0.1");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("max_abs_diff").get<double>() < 1e-9);
  CHECK(j.at("predicted").at("r_roots").at(0).get<double>() == doctest::Approx(-0.5));
  CHECK(run("spectrum --mu 0.5,0.3,0.2").code == 2);
}
