#include "confspace/demo_loops.hpp"
#include "confspace/json_io.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sys/wait.h>

using namespace confspace;

namespace {

struct Run
{
  int code = -1;
  std::string out;
};

Run run(const std::string& args)
{
  const std::string cmd = std::string(CONFSPACE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Run r;
  if (pipe == nullptr) {
    return r;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write(const std::string& path, const std::string& text)
{
  std::ofstream(path) << text;
}

std::string coarse_swap_json(std::size_t steps)
{
  PathSamples path;
  path.closed = true;
  for (std::size_t s = 0; s <= steps; ++s) {
    const double t = std::numbers::pi * static_cast<double>(s) / static_cast<double>(steps);
    Configuration x(2, 3);
    x.point(0) << 0.5 - 0.5 * std::cos(t), -0.5 * std::sin(t), 0.0;
    x.point(1) << 0.5 + 0.5 * std::cos(t), 0.5 * std::sin(t), 0.0;
    path.samples.push_back(x);
  }
  return io::to_json(path).dump();
}

class Cli : public ::testing::Test
{
protected:
  static void SetUpTestSuite()
  {
    write("cli_s2.json", R"({"n": 2, "generators": [[1, 0]]})");
    write("cli_s3.json", R"({"n": 3, "generators": [[1, 0, 2], [0, 2, 1]]})");
    write("cli_a.json", R"({"n": 2, "d": 3, "points": [[0, 0, 0], [1, 0, 0]]})");
    write("cli_b.json", R"({"n": 2, "d": 3, "points": [[1, 0, 0], [3, 0, 0]]})");
    write("cli_coarse.json", coarse_swap_json(4));
  }
};

} // namespace

TEST_F(Cli, Distance)
{
  const auto r = run("dist cli_s2.json cli_a.json cli_b.json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "distance: 2.23606797749979\nwitness: [0, 1]\n");
  EXPECT_EQ(run("dist cli_s3.json cli_a.json cli_b.json").code, 2);
  EXPECT_EQ(run("dist cli_s2.json cli_a.json missing.json").code, 2);
  EXPECT_EQ(run("dist cli_s2.json").code, 2);
}

TEST_F(Cli, DemoAndMonodromy)
{
  ASSERT_EQ(run("demo swap-loop --steps 64 -o cli_swap.json").code, 0);
  ASSERT_EQ(run("demo rotation --steps 64 -o cli_rot.json").code, 0);
  EXPECT_EQ(run("monodromy cli_s2.json cli_swap.json").out, "[1, 0]\n");
  EXPECT_EQ(run("monodromy cli_s2.json cli_rot.json").out, "[0, 1]\n");
  EXPECT_EQ(run("demo swap-loop --steps 3").code, 2);
  EXPECT_EQ(run("demo nonsense").code, 2);

  const auto a = run("demo random-braid --n 3 --steps 40 --seed 9");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run("demo random-braid --n 3 --steps 40 --seed 9").out);
}

TEST_F(Cli, MonodromyErrors)
{
  EXPECT_EQ(run("monodromy cli_s2.json cli_coarse.json").code, 3);
  EXPECT_EQ(run("monodromy cli_s2.json cli_coarse.json --auto-resample").out, "[1, 0]\n");

  auto open = io::Json::parse(coarse_swap_json(16));
  open["samples"].erase(open["samples"].size() - 1);
  open["samples"].erase(open["samples"].size() - 1);
  open["samples"].erase(open["samples"].size() - 1);
  write("cli_open.json", open.dump());
  EXPECT_EQ(run("monodromy cli_s2.json cli_open.json").code, 4);
}

TEST_F(Cli, Contract)
{
  ASSERT_EQ(run("demo swap-loop --steps 64 -o cli_swap.json").code, 0);
  ASSERT_EQ(run("demo rotation --steps 64 -o cli_rot.json").code, 0);
  const auto swap = run("contract cli_swap.json");
  EXPECT_EQ(swap.code, 5);
  EXPECT_EQ(swap.out, "[1, 0]\n");

  const auto rot = run("contract cli_rot.json --trace cli_trace.json");
  EXPECT_EQ(rot.code, 0);
  EXPECT_NE(rot.out.find("final vertices: 2"), std::string::npos);
  const auto trace = io::read_json_file("cli_trace.json");
  EXPECT_LE(trace["final"]["vertices"].size(), 2u);
  EXPECT_GT(trace["collapses"].get<int>(), 0);

  ASSERT_EQ(run("demo rotation --dim 2 --steps 64 -o cli_rot2.json").code, 0);
  EXPECT_EQ(run("contract cli_rot2.json").code, 2);
}

TEST_F(Cli, PlotIsDeterministic)
{
  ASSERT_EQ(run("demo swap-loop --n 3 --steps 32 -o cli_swap3.json").code, 0);
  const auto a = run("plot cli_swap3.json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run("plot cli_swap3.json").out);
  EXPECT_NE(a.out.find("<svg"), std::string::npos);
  EXPECT_EQ(run("plot cli_swap3.json --proj 0,7").code, 2);
  EXPECT_EQ(run("plot cli_swap3.json --pca --stride 4").code, 0);
}

TEST_F(Cli, Vieta)
{
  const auto c = run("vieta --roots '[[1,0],[2,0],[3,0]]'");
  EXPECT_EQ(c.code, 0);
  const auto j = io::Json::parse(c.out);
  EXPECT_EQ(j["coefficients"], io::Json::parse("[[-6.0,0.0],[11.0,0.0],[-6.0,0.0]]"));

  const auto r = run("vieta --coeffs '[[-6,0],[11,0],[-6,0]]'");
  EXPECT_EQ(r.code, 0);
  const auto roots = io::Json::parse(r.out)["roots"];
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_NEAR(roots[2][0].get<double>(), 3.0, 1e-12);
  EXPECT_EQ(run("vieta").code, 2);
  EXPECT_EQ(run("vieta --roots '[[1]]'").code, 2);
}
