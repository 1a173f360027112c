// Copyright 2026 The ivorder Authors
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


// Drives the built executable, whose path is IVORDER_CLI.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "ivorder/io.hpp"

namespace ivorder {
namespace {

namespace fs = std::filesystem;

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("ivorder_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const fs::path err_file = scratch() / "stderr.txt";
  const std::string cmd =
      std::string("\"") + IVORDER_CLI + "\" " + args + " 2>\"" + err_file.string() + "\"";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = read_file(err_file);
  return r;
}

std::string put(const std::string& name, const std::string& contents) {
  const fs::path p = scratch() / name;
  write_file(p, contents);
  return "\"" + p.string() + "\"";
}

TEST_SUITE("cli") {

TEST_CASE("counts") {
  CHECK(run("counts --n 4").out == "15\n");
  CHECK(run("counts --n 4 --sp").out == "14\n");
  CHECK(run("counts --n 5").out == "53\n");
}

TEST_CASE("meet, join and canon") {
  const std::string vee = put("vee.json", R"({"n":3,"lt":[[1,3],[2,3]]})");
  const std::string one = put("one.json", R"({"n":3,"lt":[[2,3]]})");
  const Run self = run("meet --a " + vee + " --b " + vee);
  CHECK(self.status == 0);
  CHECK(self.out == "{\"n\":3,\"lt\":[[1,3],[2,3]]}\n");
  CHECK(run("meet --a " + vee + " --b " + one).out == "{\"n\":3,\"lt\":[[1,3],[2,3]]}\n");

  const Run j = run("join --a " + vee + " --b " + one);
  CHECK(j.status == 0);
  CHECK(j.out == "{\"n\":3,\"lt\":[[2,3]]}\n");
  CHECK(j.err.find("catalog built in memory") != std::string::npos);

  const std::string cat = (scratch() / "av3.txt").string();
  REQUIRE(run("enumerate --n 3 --out \"" + cat + "\"").status == 0);
  const Run jc = run("join --a " + vee + " --b " + one + " --catalog \"" + cat + "\"");
  CHECK(jc.status == 0);
  CHECK(jc.out == j.out);
  CHECK(jc.err.empty());

  const std::string cat4 = (scratch() / "av4.txt").string();
  REQUIRE(run("enumerate --n 4 --out \"" + cat4 + "\"").status == 0);
  const Run mismatch = run("join --a " + vee + " --b " + one + " --catalog \"" + cat4 + "\"");
  CHECK(mismatch.status == 1);
  CHECK(mismatch.err.find("SizeMismatch") != std::string::npos);

  const std::string fence = put("fence.json", R"({"n":4,"lt":[[1,3],[2,3],[2,4]]})");
  CHECK(run("canon --in " + fence).out == "{\"n\":4,\"lt\":[[1,4],[2,3],[2,4]]}\n");
}

TEST_CASE("format conversions round trip") {
  const std::string fence = put("fence.json", R"({"n":4,"lt":[[1,3],[2,3],[2,4]]})");
  const Run rep = run("represent --in " + fence);
  CHECK(rep.out == "{\"intervals\":[[1,2],[1,1],[2,3],[3,3]]}\n");
  const Run back = run("from-intervals --in " + put("rep.json", rep.out));
  CHECK(back.out == "{\"n\":4,\"lt\":[[1,4],[2,3],[2,4]]}\n");
  CHECK(run("canon --in " + put("back.json", back.out)).out == back.out);

  const Run tree = run("tree-to-poset --in " + put("tree.json", R"({"tree":[[[]],[]]})"));
  CHECK(tree.out == "{\"n\":3,\"lt\":[[1,3],[2,3]]}\n");
}

TEST_CASE("hasse and enumerate files read back") {
  const std::string dot = (scratch() / "av3.dot").string();
  REQUIRE(run("hasse --n 3 --dot \"" + dot + "\"").status == 0);
  const std::string text = read_file(dot);
  CHECK(text.rfind("digraph AV3 {\n", 0) == 0);
  const std::string sp = (scratch() / "sp5.txt").string();
  REQUIRE(run("enumerate --n 5 --sp --out \"" + sp + "\"").status == 0);
  CHECK(read_file(sp).rfind("{\"n\":5,\"count\":42,\"sp_only\":true}\n", 0) == 0);
  const Run rejected = run("join --a " + put("c.json", R"({"n":5,"lt":[]})") + " --b " +
                           put("d.json", R"({"n":5,"lt":[]})") + " --catalog \"" + sp + "\"");
  CHECK(rejected.status == 1);
}

TEST_CASE("verify prints a report and sets the exit status") {
  const Run ok = run("verify --n 4 --suite tamari");
  CHECK(ok.status == 0);
  const Json report = parse_json(ok.out);
  CHECK(report["suite"] == "tamari");
  CHECK(report["passed"] == true);
  CHECK(run("verify --n 4 --suite meetsub").status == 0);
  CHECK(run("verify --n 4 --suite labelling").status == 0);
  CHECK(run("verify --n 4 --suite lattice").status == 0);
  const Run five = run("verify --n 5 --suite lattice");
  CHECK(five.status == 1);
  CHECK(parse_json(five.out)["passed"] == false);
}

TEST_CASE("errors") {
  const Run missing = run("canon --in /nonexistent/ivorder.json");
  CHECK(missing.status == 1);
  CHECK(parse_json(missing.err)["error"] == "Io");
  const Run malformed = run("canon --in " + put("bad.json", "{\"n\": 3,"));
  CHECK(malformed.status == 1);
  CHECK(parse_json(malformed.err)["error"] == "Format");
  const Run two2 = run("canon --in " + put("2p2.json", R"({"n":4,"lt":[[1,2],[3,4]]})"));
  CHECK(two2.status == 1);
  CHECK(parse_json(two2.err)["error"] == "NotAnIntervalOrder");
  const Run sizes = run("meet --a " + put("a2.json", R"({"n":2,"lt":[]})") + " --b " +
                        put("a3.json", R"({"n":3,"lt":[]})"));
  CHECK(sizes.status == 1);
  CHECK(parse_json(sizes.err)["error"] == "SizeMismatch");
  CHECK(run("counts").status == 2);
  CHECK(run("verify --n 3 --suite nope").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("counts --n 12").status == 1);
}

}  // TEST_SUITE

}  // namespace
}  // namespace ivorder
