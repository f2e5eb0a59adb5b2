// Copyright 2026 The wdimk Authors
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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
CliRun Cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" WDIMK_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  CliRun run;
  std::array<char, 4096> buf;
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    run.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

nlohmann::ordered_json Parse(const CliRun& run) {
  return nlohmann::ordered_json::parse(run.out);
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

const std::string kData = WDIMK_SOURCE_DIR "/data/";

TEST(CliTest, Kappa) {
  const CliRun run = Cli("kappa hamming:4,3");
  ASSERT_EQ(run.code, 0);
  EXPECT_EQ(Parse(run)["kappa"], 6);
  EXPECT_EQ(Parse(Cli("kappa hypercube:4"))["kappa"], 16);
  const CliRun csv = Cli("kappa hamming:7,3 --format csv");
  EXPECT_EQ(csv.out, "graph,kappa,method\nhamming:7x3,6,formula+brute\n");
}

TEST(CliTest, ComputeExitCodes) {
  const CliRun ok = Cli("compute hamming:5,5 -k 7");
  ASSERT_EQ(ok.code, 0);
  const auto j = Parse(ok);
  EXPECT_EQ(j["value"], 19);
  EXPECT_EQ(j["provenance"], "theorem");
  EXPECT_EQ(j["witness"].size(), 19u);

  EXPECT_EQ(Cli("compute hamming:3,3 -k 7").code, 3);
  EXPECT_EQ(Cli("compute hamming:3,3 -k 2 --method ilp:fs-").code, 64);
  EXPECT_EQ(Cli("compute hamming:3,3 -k 2 --method simplex").code, 64);
  EXPECT_EQ(Cli("compute nonsense -k 2").code, 64);
  EXPECT_EQ(Cli("compute hamming:1,3 -k 1").code, 64);
  EXPECT_EQ(Cli("").code, 64);

  const CliRun cut = Cli("compute hamming:7,9 -k 2 --budget 1");
  EXPECT_EQ(cut.code, 2);
  EXPECT_EQ(Parse(cut)["proved_optimal"], false);
  EXPECT_EQ(Cli("compute hamming:7,9 -k 2", "WDIMK_BUDGET=1").code, 2);
}

TEST(CliTest, ComputeCsv) {
  const CliRun run = Cli("compute hamming:3,3 -k 6 --method brute --format csv");
  ASSERT_EQ(run.code, 0);
  EXPECT_EQ(run.out,
            "graph,k,value,method,provenance,proved_optimal\n"
            "hamming:3x3,6,9,brute,search,1\n");
}

TEST(CliTest, ConstructThenVerify) {
  const std::string path = TempPath("wdimk_cli_y6.json");
  const CliRun built = Cli("construct yn --n 6");
  ASSERT_EQ(built.code, 0);
  EXPECT_EQ(Parse(built)["size"], 8);
  WriteFile(path, built.out);
  const CliRun good = Cli("verify hamming:6,6 " + path + " -k 2");
  EXPECT_EQ(good.code, 0);
  EXPECT_EQ(Parse(good)["valid"], true);
  const CliRun bad = Cli("verify hamming:6,6 " + path + " -k 3");
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(Parse(bad)["min_value"], 2);

  const std::string x4 = TempPath("wdimk_cli_x4.txt");
  WriteFile(x4, Parse(Cli("construct xt --n 4 --t 1"))["certificate"]["set"]
                    .dump());
  EXPECT_EQ(Cli("verify hamming:4,4 " + x4 + " -k 6").code, 0);
  EXPECT_EQ(Cli("verify hamming:4,4 " + x4 + " -k 7").code, 1);
  EXPECT_EQ(Cli("verify hamming:4,4 " + x4 + " -k 9").code, 1);

  const std::string text = TempPath("wdimk_cli_plain.txt");
  WriteFile(text, "# cells\n0 0\n0,1\n(1, 2)\n");
  EXPECT_EQ(Parse(Cli("verify hamming:3,3 " + text + " -k 1"))["set"].size(),
            3u);
  WriteFile(text, "0 0\n0 x\n");
  EXPECT_EQ(Cli("verify hamming:3,3 " + text + " -k 1").code, 65);
  WriteFile(text, "0 0\n0 0\n");
  EXPECT_EQ(Cli("verify hamming:3,3 " + text + " -k 1").code, 65);
  WriteFile(text, "5 0\n");
  EXPECT_EQ(Cli("verify hamming:3,3 " + text + " -k 1").code, 65);
}

TEST(CliTest, ExportParseRoundTrip) {
  const std::string path = TempPath("wdimk_cli_model.lp");
  ASSERT_EQ(Cli("export hamming:4,5 -k 3 --form fgh -o " + path).code, 0);
  const CliRun parsed = Cli("parse " + path + " --solve");
  ASSERT_EQ(parsed.code, 0);
  const auto j = Parse(parsed);
  EXPECT_EQ(j["formulation"], "fgh");
  EXPECT_EQ(j["optimum"], Parse(Cli("compute hamming:4,5 -k 3"))["value"]);

  const CliRun stdout_lp = Cli("export hamming:4,5 -k 3 --form fgh -o -");
  std::ifstream in(path);
  const std::string file((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(stdout_lp.out, file);
  EXPECT_EQ(Cli("export hamming:4,5 -k 3 --form fs- -o -").code, 64);
  EXPECT_EQ(Cli("parse /nonexistent/model.lp").code, 65);
  const std::string broken = TempPath("wdimk_cli_broken.lp");
  WriteFile(broken, "Minimize\n obj: x +\n");
  EXPECT_EQ(Cli("parse " + broken).code, 65);
}

TEST(CliTest, TableAgainstExpected) {
  const CliRun csv = Cli("table --n 3 --m 3..4 -k 1..7 --format csv");
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "k,3,4\n1,3,4\n2,4,4\n3,6,7\n4,6,8\n5,8,11\n6,9,12\n7,-,-\n");
  EXPECT_EQ(Cli("table --n 6 --m 6..8 -k 2..12 --expected " + kData +
                "table2.csv")
                .code,
            0);
  const CliRun off = Cli("table --n 5 --m 8..8 -k 2..3 --expected " + kData +
                      "table1.csv");
  EXPECT_EQ(off.code, 1);
  EXPECT_EQ(Parse(off)["mismatches"].size(), 1u);
  EXPECT_EQ(Cli("table --n 5 --m 8..6 -k 2..3").code, 64);
}

TEST(CliTest, Conjecture) {
  const CliRun run = Cli("conjecture --n 4 --m 5..8 -k 3..8");
  ASSERT_EQ(run.code, 0);
  EXPECT_EQ(Parse(run)["violations"], 0);
}

// Identical inputs give identical bytes once the timing object is removed.
TEST(CliTest, OutputIsDeterministic) {
  for (const std::string args :
       {"table --n 4 --m 4..6 -k 1..8", "compute hamming:6,7 -k 3",
        "conjecture --n 3 --m 4..6 -k 2..6", "construct xtprime --n 7 --t 2"}) {
    auto a = Parse(Cli(args));
    auto b = Parse(Cli(args));
    ASSERT_TRUE(a.contains("meta"));
    EXPECT_EQ(a.back(), a["meta"]);
    a.erase("meta");
    b.erase("meta");
    EXPECT_EQ(a.dump(), b.dump()) << args;
  }
  EXPECT_EQ(Cli("table --n 4 --m 4..6 -k 1..8 --format csv").out,
            Cli("table --n 4 --m 4..6 -k 1..8 --format csv").out);
}

}  // namespace
