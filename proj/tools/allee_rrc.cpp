#include "commands.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace allee;
using namespace allee::cli;

int main(int argc, char** argv)
{
  CLI::App app{"Real root classification for the symmetric Allee-effect patch model"};
  app.set_config("--config", "", "key=value file mirroring the flags (flags win)");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string a, b, amax = "auto", mode = "dedup", cache, outp, svg, report;
  app.add_option("--n", cfg.n, "number of patches")->check(CLI::PositiveNumber);
  app.add_option("--a", a, "coupling a as num/den");
  app.add_option("--b", b, "threshold b as num/den");
  app.add_option("--amax", amax, "upper end of the a-range (num/den or auto)");
  app.add_option("--mode", mode, "total assembly: dedup or paper")->check(CLI::IsMember({"dedup", "paper", "paper-theorem-3"}));
  app.add_option("--cache-dir", cache, "border polynomial cache directory");
  app.add_option("--out", outp, "output file (JSON)");
  app.add_option("--svg", svg, "SVG output file");
  app.add_option("--report", report, "classification report to render");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "oracle box budget");
  app.add_option("--columns", cfg.columns, "a-columns for curve tracing")->check(CLI::PositiveNumber);
  app.add_flag("--symmetry", cfg.symmetry, "oracle: search ordered boxes only");

  auto* bp = app.add_subcommand("bp", "compute and cache the border polynomial");
  auto* classify = app.add_subcommand("classify", "classify the parameter box; writes JSON, CSV and SVG");
  auto* count = app.add_subcommand("count", "count steady states at one (a, b)");
  auto* oracle = app.add_subcommand("oracle", "certified interval solve of the full system");
  auto* render = app.add_subcommand("render", "re-render the SVG of a report");
  for (auto* s : {bp, classify, count, oracle, render}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (!a.empty()) cfg.a = parse_rational(a);
    if (!b.empty()) cfg.b = parse_rational(b);
    if (amax != "auto") {
      cfg.amax = parse_rational(amax);
      if (*cfg.amax <= 0) throw std::invalid_argument("--amax must be positive");
    }
    cfg.mode = parse_formula_mode(mode);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (!cache.empty()) cfg.cache_dir = cache;
  if (!outp.empty()) cfg.out = outp;
  if (!svg.empty()) cfg.svg = svg;
  if (!report.empty()) cfg.report = report;

  if (*bp) return run_bp(cfg, std::cout, std::cerr);
  if (*classify) return run_classify(cfg, std::cout, std::cerr);
  if (*count) return run_count(cfg, std::cout, std::cerr);
  if (*oracle) return run_oracle(cfg, std::cout, std::cerr);
  return run_render(cfg, std::cout, std::cerr);
}
