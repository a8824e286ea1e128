#include "doctest.h"
#include "support.hpp"

#include "commands.hpp"
#include "render.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace allee;
using namespace allee::cli;
using namespace testing;

namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name)
{
  const fs::path d = fs::temp_directory_path() / ("allee_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int shell(const std::string& args, const fs::path& log)
{
  const std::string cmd = std::string(ALLEE_RRC_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count at the worked-example point")
{
  const auto dir = scratch("count");
  RunConfig cfg;
  cfg.a = kSampleA;
  cfg.b = kSampleB;
  cfg.out = dir / "count.json";
  std::ostringstream out, err;
  REQUIRE(run_count(cfg, out, err) == kOk);
  const std::string s = out.str();
  CHECK(s.find("c1(2,2) = 6  (positive 8, distinct-valued 6)") != std::string::npos);
  CHECK(s.find("c2(2,1,1) = 3  (positive 26, distinct-valued 6)") != std::string::npos);
  CHECK(s.find("total (dedup) = 81  <- selected") != std::string::npos);
  CHECK(s.find("total (closed formula) = 99\n") != std::string::npos);
  CHECK(s.find("printed example expression = 93") != std::string::npos);
  const json j = json::parse(slurp(*cfg.out));
  CHECK(j["total_dedup"] == 81);
  CHECK(j["counts"]["G1(3,1)"]["c_value"] == 6);
  fs::remove_all(dir);
}

TEST_CASE("exit codes")
{
  RunConfig cfg;
  std::ostringstream out, err;
  CHECK(run_count(cfg, out, err) == kUsage);
  cfg.a = Rational(3, 64);
  cfg.b = Rational(1, 4);
  CHECK(run_count(cfg, out, err) == kNonGeneric);
  cfg.b = Rational(3, 4);
  CHECK(run_count(cfg, out, err) == kNonGeneric);

  // A path below a regular file cannot be created.
  const auto dir = scratch("io");
  std::ofstream(dir / "file") << "x";
  cfg.b = kSampleB;
  cfg.a = kSampleA;
  cfg.out = dir / "file" / "count.json";
  CHECK(run_count(cfg, out, err) == kIoError);
  RunConfig bp;
  bp.n = 3;
  bp.cache_dir = dir / "file" / "cache";
  CHECK(run_bp(bp, out, err) == kIoError);
  RunConfig rd;
  rd.report = dir / "missing.json";
  CHECK(run_render(rd, out, err) == kIoError);
  rd.report = dir / "file";
  CHECK(run_render(rd, out, err) == kIoError);
  CHECK(run_render(RunConfig{}, out, err) == kUsage);

  RunConfig orc;
  orc.n = 4;
  orc.a = kSampleA;
  orc.b = kSampleB;
  orc.budget = 10;
  std::ostringstream o2, e2;
  CHECK(run_oracle(orc, o2, e2) == kIncomplete);
  CHECK(e2.str().find("incomplete") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("classify, render and warm-cache reruns")
{
  const auto dir = scratch("classify");
  RunConfig cfg;
  cfg.n = 3;
  cfg.cache_dir = dir / "cache";
  cfg.out = dir / "c3.json";
  cfg.columns = 80;
  std::ostringstream out, err;
  REQUIRE(run_classify(cfg, out, err) == kOk);
  CHECK(fs::exists(dir / "c3.csv"));
  CHECK(fs::exists(dir / "c3.svg"));
  CHECK(fs::exists(bp_cache_path(cfg.cache_dir, 3)));
  const std::string j1 = slurp(dir / "c3.json"), c1 = slurp(dir / "c3.csv"), s1 = slurp(dir / "c3.svg");

  REQUIRE(run_classify(cfg, out, err) == kOk);
  CHECK(slurp(dir / "c3.json") == j1);
  CHECK(slurp(dir / "c3.csv") == c1);
  CHECK(slurp(dir / "c3.svg") == s1);

  const auto r = report_from_json(json::parse(j1));
  CHECK(s1.rfind("<svg", 0) == 0);
  CHECK(s1.find("</svg>") != std::string::npos);
  std::size_t titles = 0, visible = 0;
  for (std::size_t p = s1.find("<title>"); p != std::string::npos; p = s1.find("<title>", p + 1)) ++titles;
  for (const auto& c : r.cells)
    if (c.sample.a < default_view(r)) ++visible;
  CHECK(titles == visible);
  for (long long t : r.distinct_totals()) CHECK(s1.find(">" + std::to_string(t) + "<") != std::string::npos);

  RunConfig rd;
  rd.report = dir / "c3.json";
  rd.svg = dir / "zoom.svg";
  rd.amax = Rational(1, 10);
  rd.columns = 80;
  REQUIRE(run_render(rd, out, err) == kOk);
  CHECK(slurp(dir / "zoom.svg") != s1);
  CHECK(default_view(r) <= r.box.a_hi);
  CHECK(default_view(r) > 0);
  fs::remove_all(dir);
}

TEST_CASE("binary: config file, precedence and argument errors")
{
  const auto dir = scratch("bin");
  const fs::path cfg = dir / "run.cfg";
  std::ofstream(cfg) << "n=2\na=1/50\nb=1/3\n";
  CHECK(shell("oracle --config " + cfg.string() + " --out " + (dir / "o.json").string(), dir / "log") == 0);
  CHECK(json::parse(slurp(dir / "o.json"))["count"] == 9);
  CHECK(json::parse(slurp(dir / "o.json"))["n"] == 2);
  // Flags override the file.
  CHECK(shell("oracle --config " + cfg.string() + " --n 1 --out " + (dir / "o1.json").string(), dir / "log") == 0);
  CHECK(json::parse(slurp(dir / "o1.json"))["count"] == 3);

  CHECK(shell("count --a 0.5 --b 1/4", dir / "log") == 1);
  CHECK(shell("count --a 1/2 --b 1/4 --mode exact", dir / "log") == 1);
  CHECK(shell("count --a 3/64 --b 1/4", dir / "log") == 2);
  CHECK(shell("count --a 1319/1048576 --b 363843/2097152 --mode paper", dir / "log") == 0);
  CHECK(slurp(dir / "log").find("total (closed formula) = 99  <- selected") != std::string::npos);
  CHECK(shell("", dir / "log") == 1);
  fs::remove_all(dir);
}

}
