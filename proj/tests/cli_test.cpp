#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("geocompress_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  Outcome run(const std::string& args) {
    const auto out = dir_ / "stdout.txt";
    const auto err = dir_ / "stderr.txt";
    const std::string cmd = std::string("'") + GEOCOMPRESS_CLI + "' " + args + " >'" +
                            out.string() + "' 2>'" + err.string() + "'";
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SingleRow) {
  const auto in = write("in.csv", "lat,lon,city\n41.37,2.15,Barcelona\n");
  const auto res = run("--input " + in.string() + " --output " + (dir_ / "out.csv").string());
  EXPECT_EQ(res.status, 0) << res.err;
  EXPECT_EQ(res.out, "clusters=1 original=1 reduced=1 compression=0.0% noise=0\n");
  EXPECT_EQ(slurp(dir_ / "out.csv"),
            "lat,lon,city,cluster_label,cluster_size\n41.37,2.15,Barcelona,0,1\n");
}

TEST_F(CliTest, StackedPointsWithPlot) {
  std::string csv = "city,lat,lon\n";
  for (int i = 0; i < 9; ++i) csv += "Barcelona,41.37,2.15\n";
  csv += "Paris,48.85,2.35\n";
  const auto in = write("in.csv", csv);
  const auto res = run("--input " + in.string() + " --output " + (dir_ / "out.csv").string() +
                       " --plot " + (dir_ / "plot.svg").string());
  ASSERT_EQ(res.status, 0) << res.err;
  EXPECT_EQ(res.out, "clusters=2 original=10 reduced=2 compression=80.0% noise=0\n");
  EXPECT_EQ(slurp(dir_ / "out.csv"),
            "city,lat,lon,cluster_label,cluster_size\nBarcelona,41.37,2.15,0,9\nParis,48.85,2.35,1,1\n");
  const auto svg = slurp(dir_ / "plot.svg");
  std::size_t circles = 0;
  for (auto pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
  EXPECT_EQ(circles, 12u);
  EXPECT_EQ(slurp(in), csv);
}

TEST_F(CliTest, OptionsAndQuiet) {
  const auto in = write("in.csv", "y,x\n0,0\n0,0\n0,0\n10,10\n");
  const auto res = run("--input " + in.string() + " --output " + (dir_ / "out.csv").string() +
                       " --lat-col y --lon-col x --min-samples 3 --eps-km 0.5");
  ASSERT_EQ(res.status, 0) << res.err;
  EXPECT_EQ(res.out, "clusters=1 original=4 reduced=1 compression=75.0% noise=1\n");
  const auto quiet = run("--input " + in.string() + " --output " + (dir_ / "out.csv").string() +
                         " --lat-col y --lon-col x --quiet");
  EXPECT_EQ(quiet.status, 0);
  EXPECT_EQ(quiet.out, "");
}

TEST_F(CliTest, BadFlagsExitOne) {
  const auto in = write("in.csv", "lat,lon\n1,2\n");
  const auto out = (dir_ / "out.csv").string();
  EXPECT_EQ(run("--input " + in.string() + " --output " + out + " --eps-km 0").status, 1);
  EXPECT_EQ(run("--input " + in.string() + " --output " + out + " --eps-km -2").status, 1);
  EXPECT_EQ(run("--input " + in.string() + " --output " + out + " --min-samples 0").status, 1);
  EXPECT_EQ(run("--input " + in.string() + " --output " + out + " --bogus").status, 1);
  EXPECT_EQ(run("--output " + out).status, 1);
  const auto same = run("--input " + in.string() + " --output " + in.string());
  EXPECT_EQ(same.status, 1);
  EXPECT_EQ(slurp(in), "lat,lon\n1,2\n");
  EXPECT_FALSE(fs::exists(out));
}

TEST_F(CliTest, IngestionErrorsExitTwo) {
  const auto out = (dir_ / "out.csv").string();
  const auto range = run("--input " + write("a.csv", "lat,lon\n91.0,0.0\n").string() + " --output " + out);
  EXPECT_EQ(range.status, 2);
  EXPECT_NE(range.err.find("row 1"), std::string::npos) << range.err;
  EXPECT_EQ(std::count(range.err.begin(), range.err.end(), '\n'), 1);
  EXPECT_EQ(range.out, "");
  EXPECT_EQ(run("--input " + (dir_ / "missing.csv").string() + " --output " + out).status, 2);
  EXPECT_EQ(run("--input " + write("b.csv", "lat,lon\n").string() + " --output " + out).status, 2);
  EXPECT_EQ(run("--input " + write("c.csv", "la,lon\n1,1\n").string() + " --output " + out).status, 2);
  EXPECT_EQ(run("--input " + write("d.csv", "lat,lon\n1,1\n").string() + " --output /nonexistent/x.csv").status, 2);
}
