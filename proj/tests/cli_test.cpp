/**************************************************************************
 * cli_test.cpp
 *
 * Copyright 2026 The ringdna Authors
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
 **************************************************************************/

#include "ringdna/cli.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gtest/gtest.h"

namespace ringdna::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ringdna_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name), std::ios::binary) << text;
    return Path(name);
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, Table) {
  const auto r = Invoke({"table"});
  ASSERT_EQ(r.code, kOk);
  std::istringstream is(r.out);
  std::vector<std::string> lines;
  for (std::string l; std::getline(is, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 64u);
  EXPECT_EQ(lines[0], "000\tGAG");
  EXPECT_NE(r.out.find("303\tAAA\n"), std::string::npos);
  const auto j = Json::parse(Invoke({"table", "--format", "json"}).out);
  ASSERT_EQ(j.size(), 64u);
  EXPECT_EQ(j[0]["element"], "000");
  EXPECT_EQ(j[0]["dna"], "GAG");
  EXPECT_EQ(Invoke({"table", "--format", "xml"}).code, kInvalidInput);
}

TEST_F(CliTest, Map) {
  EXPECT_EQ(Invoke({"map", "ring-to-dna", "020 103 201 300"}).out, "GTG CAG TAC GAA\n");
  EXPECT_EQ(Invoke({"map", "ring-to-dna", "020", "103"}).out, "GTG CAG\n");
  EXPECT_EQ(Invoke({"map", "dna-to-ring", "CAA"}).out, "100\n");
  const auto bad = Invoke({"map", "dna-to-ring", "CA"});
  EXPECT_EQ(bad.code, kInvalidInput);
  EXPECT_NE(bad.err.find("'CA'"), std::string::npos) << bad.err;
  EXPECT_EQ(Invoke({"map", "ring-to-dna", "040"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"map", "sideways", "CAA"}).code, kInvalidInput);
}

TEST_F(CliTest, RmMatrix) {
  const auto r = Invoke({"rm", "--m", "1", "--z", "300"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "300 300\n000 300\n");
  EXPECT_EQ(Invoke({"rm", "--m", "1", "--z", "000"}).code, kInvalidInput);
}

TEST_F(CliTest, AnalyzeIdealCode) {
  const auto r = Invoke({"analyze", "--m", "2", "--z", "020", "--distance", "exact"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["n_ring"], 4);
  EXPECT_EQ(j["n_dna"], 12);
  EXPECT_EQ(j["size"], 512);
  EXPECT_EQ(j["d_gau"], 2);
  EXPECT_EQ(j["d_hamming"], 2);
  EXPECT_EQ(j["distance_method"], "exhaustive");
  EXPECT_EQ(j["rate"], 0.375);
  EXPECT_EQ(j["rate_exact"], "9/24");
  EXPECT_EQ(j["relative_distance"], 0.167);
  for (const char* c : {"gc", "homopolymer", "reversible", "reversible_complement"}) {
    EXPECT_EQ(j["constraints"][c], true) << c;
  }
  EXPECT_EQ(j["generator"]["m"], 2);
  EXPECT_EQ(j["generator"]["z"], "020");
}

TEST_F(CliTest, AnalyzeFromMatrixFile) {
  const std::string path = Write("g.txt", "020 020 020 020\n000 020 000 020\n000 000 020 020\n");
  const auto j = Json::parse(Invoke({"analyze", "--matrix", path}).out);
  EXPECT_EQ(j["size"], 512);
  EXPECT_FALSE(j["generator"].contains("m"));
  EXPECT_EQ(Invoke({"analyze", "--matrix", Write("bad.txt", "020 02\n")}).code, kInvalidInput);
}

TEST_F(CliTest, AnalyzeTextFormat) {
  const auto r = Invoke({"analyze", "--m", "1", "--z", "002", "--format", "text"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("(n, M, d_H) = (6, 64, 1)\n", 0), 0u) << r.out;
}

TEST_F(CliTest, AnalyzeRejectsBadInput) {
  EXPECT_EQ(Invoke({"analyze", "--m", "0", "--z", "300"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"analyze", "--m", "2", "--z", "3x0"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"analyze", "--m", "2"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"analyze"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"analyze", "--m", "2", "--z", "020", "--distance", "sample"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"analyze", "--m", "2", "--z", "020", "--sample-pairs", "10"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"analyze", "--m", "2", "--z", "020", "--k", "0"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"--help"}).code, kOk);
}

TEST_F(CliTest, AnalyzeSampled) {
  const auto r = Invoke({"analyze", "--m", "2", "--z", "020", "--distance", "sample", "--sample-pairs", "2000",
                      "--seed", "7"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["distance_exact"], false);
  EXPECT_EQ(j["distance_method"], "sampled");
  EXPECT_EQ(j["sampling"]["pairs"], 2000);
  EXPECT_EQ(j["sampling"]["seed"], 7);
  EXPECT_GE(j["d_hamming"].get<int>(), 2);
  EXPECT_EQ(r.out, Invoke({"analyze", "--m", "2", "--z", "020", "--distance", "sample", "--sample-pairs", "2000",
                        "--seed", "7"})
                       .out);
}

TEST_F(CliTest, SpanGuard) {
  EXPECT_EQ(Invoke({"analyze", "--m", "2", "--z", "300", "--span-limit", "1000"}).code, kGuardRefused);
  EXPECT_EQ(Invoke({"export", "--m", "4", "--z", "300", "--out", Path("x.fa")}).code, kGuardRefused);
  EXPECT_FALSE(fs::exists(Path("x.fa")));
}

TEST_F(CliTest, Export) {
  const std::string path = Path("m1.fa");
  ASSERT_EQ(Invoke({"export", "--m", "1", "--z", "002", "--out", path}).code, kOk);
  std::istringstream is(Slurp(path));
  std::vector<std::string> lines;
  for (std::string l; std::getline(is, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 128u);
  EXPECT_EQ(lines[0], ">cw_0 m=1 z=002");
  EXPECT_EQ(lines[1], "GAGGAG");
  for (std::size_t i = 1; i < lines.size(); i += 2) EXPECT_EQ(lines[i].size(), 6u);
  EXPECT_EQ(lines[126], ">cw_63 m=1 z=002");

  ASSERT_EQ(Invoke({"export", "--m", "2", "--z", "020", "--out", Path("m2.fa")}).code, kOk);
  const std::string m2 = Slurp(Path("m2.fa"));
  EXPECT_EQ(std::count(m2.begin(), m2.end(), '>'), 512);
  EXPECT_EQ(m2.substr(0, 29), ">cw_0 m=2 z=020\nGAGGAGGAGGAG\n");
}

TEST_F(CliTest, ExportUnwritablePath) {
  EXPECT_EQ(Invoke({"export", "--m", "1", "--z", "002", "--out", Path("missing/dir/x.fa")}).code, kInvalidInput);
}

TEST_F(CliTest, ExportCheckRoundTrip) {
  for (const char* z : {"300", "020"}) {
    for (const char* m : {"1", "2"}) {
      const std::string path = Path(std::string("rt_") + z + m + ".fa");
      ASSERT_EQ(Invoke({"export", "--m", m, "--z", z, "--out", path}).code, kOk);
      const auto r = Invoke({"check", path, "--constraints", "reversible,reversible_complement"});
      EXPECT_EQ(r.code, kOk) << z << " m=" << m << "\n" << r.out << r.err;
    }
  }
  const std::string path = Path("ex2.fa");
  ASSERT_EQ(Invoke({"export", "--m", "2", "--z", "020", "--out", path}).code, kOk);
  const auto r = Invoke({"check", path, "--d", "2"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("gc: pass w=8/12"), std::string::npos) << r.out;
  EXPECT_EQ(Invoke({"check", path, "--d", "2", "--method", "closure"}).code, kOk);
  EXPECT_EQ(Invoke({"check", path, "--d", "3"}).code, kViolation);
}

TEST_F(CliTest, CheckViolationsAndErrors) {
  const auto run = Invoke({"check", Write("run.fa", ">x\nCAAAGGT\n"), "--constraints", "homopolymer", "--k", "2"});
  EXPECT_EQ(run.code, kViolation);
  EXPECT_NE(run.out.find("witness=CAAAGGT"), std::string::npos) << run.out;

  const auto bad = Invoke({"check", Write("n.fa", ">x\nACGN\n")});
  EXPECT_EQ(bad.code, kInvalidInput);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;

  const auto mixed = Invoke({"check", Write("mix.fa", ">a\nACG\n>b\nACGT\n")});
  EXPECT_EQ(mixed.code, kInvalidInput);
  EXPECT_NE(mixed.err.find("line 3"), std::string::npos) << mixed.err;

  EXPECT_EQ(Invoke({"check", Write("pre.fa", "ACG\n>a\nACG\n")}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"check", Write("empty.fa", ">a\n>b\nACG\n")}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"check", Write("none.fa", "\n")}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"check", Path("absent.fa")}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"check", Write("ok.fa", ">a\nACG\n"), "--constraints", "gc,bogus"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"check", Path("ok.fa"), "--d", "0"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"check", Path("ok.fa"), "--method", "magic"}).code, kInvalidInput);
}

TEST_F(CliTest, CheckMultiLineFasta) {
  const auto r = Invoke({"check", Write("ml.fa", ">a\r\nGA\r\nG\r\n\r\n>b\nct\nc\n"), "--d", "3"});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("codewords 2, length 3"), std::string::npos);
}

TEST_F(CliTest, Determinism) {
  ASSERT_EQ(Invoke({"export", "--m", "2", "--z", "300", "--out", Path("a.fa")}).code, kOk);
  ASSERT_EQ(Invoke({"export", "--m", "2", "--z", "300", "--out", Path("b.fa")}).code, kOk);
  EXPECT_EQ(Slurp(Path("a.fa")), Slurp(Path("b.fa")));
  const std::vector<std::string> args = {"analyze", "--m", "2", "--z", "020", "--threads", "1"};
  std::vector<std::string> more = args;
  more.back() = "3";
  EXPECT_EQ(Invoke(args).out, Invoke(more).out);
  EXPECT_EQ(Invoke(args).out, Invoke(args).out);
}

}  // namespace
}  // namespace ringdna::cli
