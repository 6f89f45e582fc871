#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "support.hpp"

namespace fs = std::filesystem;
using namespace superder;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + SUPERDER_BINARY + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return (fs::path(SUPERDER_FIXTURE_DIR) / name).string(); }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("superder_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    write_file(path(name), text);
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ValidateExitCodes) {
  EXPECT_EQ(run("validate " + fixture("h3.json")).code, 0);

  const std::string bad = write("bad.json", R"({"name": "bad", "even": ["z"], "odd": ["f1", "f2"],
    "brackets": [{"x": "f1", "y": "f1", "value": [{"coeff": "1", "basis": "f2"}]}]})");
  const CliResult r = run("validate --json " + bad);
  EXPECT_EQ(r.code, 1);
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j["valid"].get<bool>());
  EXPECT_EQ(j["violations"][0]["kind"], "grading");
  EXPECT_EQ(j["violations"][0]["labels"], Json::parse(R"(["f1", "f1", "f2"])"));

  EXPECT_EQ(run("validate " + path("missing.json")).code, 2);
  EXPECT_EQ(run("validate " + write("broken.json", "{\"name\": ")).code, 3);
  EXPECT_EQ(run("validate " + write("schema.json", R"({"name": "x", "even": "a", "odd": [], "brackets": []})")).code,
            3);
  EXPECT_EQ(run("frobnicate").code, 3);
}

TEST_F(Cli, FixtureNamesResolveThroughFixtureDirectory) {
  EXPECT_EQ(run("validate h3.json").code, 0);
  write("mine.json", serialize_algebra(fixtures::sh12().renamed("Mine")));
  const CliResult r = run("validate mine.json", "SUPERDER_FIXTURES='" + dir_.string() + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Mine"), std::string::npos);
}

TEST_F(Cli, AnalyzeReports) {
  const Json h3 = Json::parse(run("analyze --json " + fixture("h3.json")).out);
  EXPECT_EQ(h3["center"], Json::parse(R"({"even": 1, "odd": 0})"));
  EXPECT_EQ(h3["derived"], Json::parse(R"({"even": 1, "odd": 0})"));
  EXPECT_EQ(h3["nilindex"], 2);
  EXPECT_TRUE(h3["stem"].get<bool>());
  EXPECT_EQ(h3["SDer_z"], Json::parse(R"({"even": 2, "odd": 0})"));

  const Json ab = Json::parse(run("analyze --json " + fixture("ab_2_3.json")).out);
  EXPECT_TRUE(ab["abelian"].get<bool>());
  EXPECT_EQ(ab["SDer"]["even"], 13);

  const Json sh12 = Json::parse(run("analyze --json " + fixture("sh12.json")).out);
  EXPECT_EQ(sh12["SDer_z"], Json::parse(R"({"even": 0, "odd": 2})"));

  const CliResult text = run("analyze " + fixture("h3w.json"));
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("SDer_z           (6|0)"), std::string::npos);
}

TEST_F(Cli, VerifySuites) {
  const CliResult h3w = run("verify --json " + fixture("h3w.json"));
  EXPECT_EQ(h3w.code, 0);
  const Json j = Json::parse(h3w.out);
  EXPECT_FALSE(j["failures"].get<bool>());
  EXPECT_EQ(j["results"].size(), theorem_catalog().size());
  EXPECT_FALSE(j["results"][0]["applicable"].get<bool>());

  const CliResult f4 = run("verify --theorems kappa-derived,central-hom-iso --json " + fixture("f4.json"));
  EXPECT_EQ(f4.code, 0);
  const Json k = Json::parse(f4.out);
  ASSERT_EQ(k["results"].size(), 2u);
  EXPECT_FALSE(k["results"][0]["applicable"].get<bool>());
  EXPECT_TRUE(k["results"][1]["holds"].get<bool>());

  EXPECT_EQ(run("verify --theorems nope " + fixture("h3.json")).code, 3);

  const std::string bad = write("bad.json", R"({"name": "bad", "even": ["a", "b"], "odd": [],
    "brackets": [{"x": "a", "y": "b", "value": [{"coeff": "1", "basis": "b"}]},
                 {"x": "b", "y": "a", "value": [{"coeff": "1", "basis": "b"}]}]})");
  EXPECT_EQ(run("verify " + bad).code, 1);
}

TEST_F(Cli, StemReduceAndVerifyPair) {
  const CliResult r = run("stem-reduce --json --out " + path("out") + " " + fixture("h3w.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["stem_dims"], Json::parse(R"({"even": 3, "odd": 0})"));
  EXPECT_TRUE(j["pair_verified"].get<bool>());
  ASSERT_TRUE(fs::exists(path("out/h3w_stem.json")));
  ASSERT_TRUE(fs::exists(path("out/h3w_complement.json")));
  const std::string pair = path("out/h3w_pair.json");

  const CliResult ok = run("verify-pair --json " + fixture("h3.json") + " " + fixture("h3w.json") + " " + pair);
  EXPECT_EQ(ok.code, 0) << ok.out;
  const Json checks = Json::parse(ok.out)["checks"];
  for (const auto& c : checks) {
    EXPECT_TRUE(c["applicable"].get<bool>()) << c.dump();
    EXPECT_TRUE(c["holds"].get<bool>()) << c.dump();
  }
  EXPECT_EQ(checks[3]["detail"], "rank 2 of (2|0)");

  Json scaled = Json::parse(read_file(pair));
  scaled["theta"][0][0] = "2";
  const std::string bad = write("scaled.json", scaled.dump(2));
  const CliResult fail = run("verify-pair --json " + fixture("h3.json") + " " + fixture("h3w.json") + " " + bad);
  EXPECT_EQ(fail.code, 1);
  EXPECT_EQ(Json::parse(fail.out)["witness"], Json::parse(R"(["e1", "e2"])"));

  const CliResult shape = run("verify-pair " + fixture("h3.json") + " " + fixture("f4.json") + " " + pair);
  EXPECT_EQ(shape.code, 1);
  EXPECT_NE(shape.out.find("shape mismatch"), std::string::npos);
}

TEST_F(Cli, StemInputsAndOddComplement) {
  const CliResult h3 = run("stem-reduce --json --out " + path("a") + " " + fixture("h3.json"));
  EXPECT_EQ(h3.code, 0);
  EXPECT_EQ(Json::parse(h3.out)["complement_dims"], Json::parse(R"({"even": 0, "odd": 0})"));
  EXPECT_EQ(read_file(path("a/h3_stem.json")), read_file(fixture("h3.json")));
  EXPECT_EQ(run("verify-pair " + fixture("h3.json") + " " + fixture("h3.json") + " " + path("a/h3_pair.json")).code,
            0);

  const CliResult sh = run("stem-reduce --json --out " + path("b") + " " + fixture("sh12w.json"));
  EXPECT_EQ(Json::parse(sh.out)["stem_dims"], Json::parse(R"({"even": 1, "odd": 2})"));
}

TEST_F(Cli, GenerateIsDeterministic) {
  const std::string args = " --dims '2|1,1|1' --seed 5 --count 3 --out ";
  ASSERT_EQ(run("generate" + args + path("one")).code, 0);
  ASSERT_EQ(run("generate" + args + path("two")).code, 0);
  for (int i = 0; i < 3; ++i) {
    const std::string name = "gen_5_" + std::to_string(i) + ".json";
    EXPECT_EQ(read_file(path("one/" + name)), read_file(path("two/" + name)));
    EXPECT_EQ(run("validate " + path("one/" + name)).code, 0);
  }
  EXPECT_EQ(run("generate --dims '7|0,1|0' --out " + path("x")).code, 3);
  EXPECT_EQ(run("generate --dims nonsense --out " + path("x")).code, 3);

  const CliResult small = run("generate --json --dims '2|0,1|0' --seed 1 --count 1 --out " + path("s"));
  const Json j = Json::parse(small.out);
  EXPECT_LE(j["files"][0]["nilindex"].get<int>(), 2);
}

TEST_F(Cli, FixturesCommandMatchesCheckedInFiles) {
  ASSERT_EQ(run("fixtures --out " + path("fx")).code, 0);
  for (const auto& f : fixtures::all()) EXPECT_EQ(read_file(path("fx/" + f.file)), read_file(fixture(f.file)));
}
