#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lpproj/errors.hpp"
#include "lpproj/json_io.hpp"
#include "lpproj/operators.hpp"
#include "lpproj/verify.hpp"

using namespace lpproj;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lpproj_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  // Runs the CLI; stdout goes to out.txt, stderr to err.txt.
  int run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " \"" LPPROJ_CLI_PATH "\" " + args + " > \"" +
                            path("out.txt").string() + "\" 2> \"" + path("err.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string out() const { return read_file(path("out.txt")); }
  std::string err() const { return read_file(path("err.txt")); }

  fs::path dir_;
};

}  // namespace

TEST(JsonIo, PolytopeRoundTrip) {
  Rng rng(6);
  for (int c = 0; c < 10; ++c) {
    const auto P = random_polytope(3, rng, c % 2 == 0);
    const auto j = to_json(P);
    EXPECT_EQ(polytope_from_json(j), P);
    EXPECT_EQ(polytope_from_json(parse_json_text(j.dump())), P);
  }
  const auto j = to_json(shifted_simplex(3));
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["vertices"].size(), 4u);
  EXPECT_TRUE(j["vertices"][0][0].is_string());
}

TEST(JsonIo, PolytopeAcceptsIntegersAndFractions) {
  const auto j = parse_json_text(R"({"n": 2, "vertices": [[0, 0], ["1/2", "0"], [0, "2/4"], ["1/8", "1/8"]]})");
  const auto P = polytope_from_json(j);
  EXPECT_EQ(P.vertices().size(), 3u);
  EXPECT_EQ(P.volume(), Rational(1, 8));
}

TEST(JsonIo, MalformedPolytopes) {
  EXPECT_THROW(parse_json_text("{not json"), ParseError);
  EXPECT_THROW(polytope_from_json(json::array()), ParseError);
  EXPECT_THROW(polytope_from_json(json{{"n", 2}}), ParseError);
  EXPECT_THROW(polytope_from_json(parse_json_text(R"({"n": 2, "vertices": [[0]]})")), ParseError);
  EXPECT_THROW(polytope_from_json(parse_json_text(R"({"n": 2, "vertices": [[0, "x"]]})")), ParseError);
  EXPECT_THROW(polytope_from_json(parse_json_text(R"({"n": 2, "vertices": [[0, 0.5]]})")), ParseError);
  EXPECT_THROW(polytope_from_json(parse_json_text(R"({"n": 0, "vertices": []})")), ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/lpproj.json"), ParseError);
}

TEST(JsonIo, LpFunctionRoundTrip) {
  const auto f = pi_plus(unit_cube(3), 2.5);
  const auto g = lp_function_from_json(parse_json_text(to_json(f).dump()));
  EXPECT_TRUE(structurally_equal(f, g, 0.0));
  const auto d = delta_plus(shifted_simplex(3), 1.5);
  const auto e = signed_from_json(parse_json_text(to_json(d).dump()));
  EXPECT_TRUE(structurally_equal(d.pos(), e.pos(), 0.0));
  EXPECT_TRUE(structurally_equal(d.neg(), e.neg(), 0.0));
  const auto bare = signed_from_json(to_json(f));
  EXPECT_TRUE(structurally_equal(bare.pos(), f, 0.0));
  EXPECT_TRUE(bare.neg().is_zero());
}

TEST(JsonIo, MalformedFunctions) {
  EXPECT_THROW(lp_function_from_json(parse_json_text(R"({"p": 2, "n": 2})")), ParseError);
  EXPECT_THROW(lp_function_from_json(parse_json_text(
                   R"({"p": 2, "n": 2, "terms": [{"dir": [1, 0], "sign": "?", "coef": 1}]})")),
               ParseError);
  EXPECT_THROW(lp_function_from_json(parse_json_text(
                   R"({"p": 2, "n": 2, "terms": [{"dir": [0.5, 0], "sign": "+", "coef": 1}]})")),
               ParseError);
}

TEST(JsonIo, FileRoundTrip) {
  const auto file = fs::temp_directory_path() / ("lpproj_io_" + std::to_string(::getpid()) + ".json");
  write_json_file(file.string(), to_json(standard_simplex(4)));
  EXPECT_EQ(polytope_from_json(read_json_file(file.string())), standard_simplex(4));
  fs::remove(file);
}

TEST_F(Cli, GenBodyEvalComposes) {
  ASSERT_EQ(run("gen --shape simplex --n 3 --out " + path("t3.json").string()), 0);
  EXPECT_EQ(polytope_from_json(read_json_file(path("t3.json").string())), standard_simplex(3));
  ASSERT_EQ(run("body --op pi-plus --p 2 --in " + path("t3.json").string() + " --out " +
                path("b.json").string()),
            0);
  const auto body = signed_from_json(read_json_file(path("b.json").string()));
  EXPECT_EQ(body.pos().terms().size(), 1u);
  ASSERT_EQ(run("eval --body " + path("b.json").string() + " --dir 1,0,0"), 0);
  EXPECT_EQ(out(), "0.5\n");
  ASSERT_EQ(run("eval --body " + path("b.json").string() + " --dir 0,0,0"), 0);
  EXPECT_EQ(out(), "0\n");
  ASSERT_EQ(run("eval --body " + path("b.json").string() + " --dir -1,0,0"), 0);
  EXPECT_EQ(out(), "0\n");
}

TEST_F(Cli, EvalMatchesInProcessDigits) {
  ASSERT_EQ(run("gen --shape random --n 3 --seed 11 --out " + path("r.json").string()), 0);
  ASSERT_EQ(run("body --op delta-minus --p 2.5 --in " + path("r.json").string() + " --out " +
                path("b.json").string()),
            0);
  ASSERT_EQ(run("eval --body " + path("b.json").string() + " --dir 1/3,-2,5/7"), 0);
  const auto P = polytope_from_json(read_json_file(path("r.json").string()));
  const double v = delta_minus(P, 2.5)(std::vector<double>{1.0 / 3, -2, 5.0 / 7});
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g\n", v);
  EXPECT_EQ(out(), buf);
}

TEST_F(Cli, BodyOnSimplexNegIsEmpty) {
  ASSERT_EQ(run("gen --shape simplex --n 3 --out " + path("t3.json").string()), 0);
  ASSERT_EQ(run("body --op pi-plus-neg --p 2 --in " + path("t3.json").string()), 0);
  const auto j = parse_json_text(out());
  EXPECT_TRUE(j["pos"]["terms"].empty());
  EXPECT_TRUE(j["neg"]["terms"].empty());
}

TEST_F(Cli, ExitCodes) {
  std::ofstream(path("bad.json")) << "{\"n\": 3, \"vertices\": [";
  EXPECT_EQ(run("body --op pi-plus --p 2 --in " + path("bad.json").string()), 2);
  ASSERT_EQ(run("gen --shape shifted-simplex --n 3 --out " + path("s.json").string()), 0);
  EXPECT_EQ(polytope_from_json(read_json_file(path("s.json").string())), shifted_simplex(3));
  EXPECT_EQ(run("body --op pi-plus --p 2 --in " + path("s.json").string()), 3);
  EXPECT_NE(err().find("origin"), std::string::npos) << err();
  EXPECT_EQ(run("body --op pi-sideways --p 2 --in " + path("s.json").string()), 2);
  EXPECT_EQ(run("verify --suite nonsense --n 3"), 2);
  EXPECT_EQ(run("verify --suite classification --n 2"), 2);
  EXPECT_NE(err().find("classification requires n >= 3"), std::string::npos);
  EXPECT_EQ(run("verify --suite valuation --n 3 --p 1"), 2);
  EXPECT_EQ(run("gen --shape blob --n 3"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run(""), 2);
}

TEST_F(Cli, VerifyPassAndNegativeControl) {
  ASSERT_EQ(run("verify --suite homogeneity --n 3 --p 2 --cases 2 --seed 7"), 0);
  const auto reports = parse_json_text(out());
  ASSERT_TRUE(reports.is_array());
  EXPECT_EQ(reports.size(), 8u);
  for (const auto& r : reports) EXPECT_TRUE(r["passed"].get<bool>());
  EXPECT_EQ(run("verify --suite valuation --n 3 --p 2 --cases 20 --seed 7 --corrupted"), 1);
}

TEST_F(Cli, GenIsByteStableAndHonoursSeedEnv) {
  ASSERT_EQ(run("gen --shape random --n 4 --seed 42 --out " + path("a.json").string()), 0);
  ASSERT_EQ(run("gen --shape random --n 4 --seed 42 --out " + path("b.json").string()), 0);
  EXPECT_EQ(read_file(path("a.json")), read_file(path("b.json")));
  ASSERT_EQ(run("gen --shape random --n 4 --out " + path("c.json").string(), "LPPROJ_SEED=42"), 0);
  EXPECT_EQ(read_file(path("a.json")), read_file(path("c.json")));
  ASSERT_EQ(run("gen --shape random --n 4 --seed 43 --out " + path("d.json").string()), 0);
  EXPECT_NE(read_file(path("a.json")), read_file(path("d.json")));
  EXPECT_EQ(run("gen --shape random --n 4", "LPPROJ_SEED=abc"), 2);
}

TEST_F(Cli, GenShapes) {
  for (const char* shape : {"simplex", "shifted-simplex", "probe-simplex", "cube", "random", "random-o"}) {
    ASSERT_EQ(run(std::string("gen --shape ") + shape + " --n 3"), 0) << shape;
    const auto P = polytope_from_json(parse_json_text(out()));
    EXPECT_EQ(P.dim(), std::string(shape) == "probe-simplex" ? 2 : 3) << shape;
    if (std::string(shape) == "random-o") EXPECT_TRUE(contains_origin(P));
  }
}
