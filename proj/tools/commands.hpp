#pragma once

#include "allee/counting.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace allee::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNonGeneric = 2, kIncomplete = 3, kIoError = 4 };

struct RunConfig {
  int n = 4;
  std::optional<Rational> a;
  std::optional<Rational> b;
  /// Empty means auto.
  std::optional<Rational> amax;
  FormulaMode mode = FormulaMode::dedup;
  std::filesystem::path cache_dir = "bp_cache";
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> svg;
  std::optional<std::filesystem::path> report;
  int jobs = 1;
  long budget = 2'000'000;
  bool symmetry = false;
  int columns = 600;
};

int run_bp(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_count(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_render(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace allee::cli
