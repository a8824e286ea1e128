#pragma once

#include "allee/borderpoly.hpp"
#include "allee/cad2d.hpp"
#include "allee/counting.hpp"
#include "allee/serialize.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace allee {

struct ClassifyOptions {
  /// Upper end of the a-range; amax_bound(bp) when empty.
  std::optional<Rational> amax;
  std::optional<std::filesystem::path> cache_dir;
  FormulaMode mode = FormulaMode::dedup;
  int jobs = 1;
};

struct CellReport {
  CellSample sample;
  std::vector<ReducedCount> counts;
  /// Assembled in the report's mode.
  long long total = 0;
};

struct ClassificationReport {
  int n = 0;
  int bp_version = kBorderPolyVersion;
  FormulaMode mode = FormulaMode::dedup;
  ParamBox box;
  BorderPoly bp;
  std::vector<CellReport> cells;

  std::vector<long long> distinct_totals() const;
  std::map<long long, int> cells_per_total() const;
};

/// Counts at one sample, keyed "G1(n1,n2)" / "G2(n1,n2,n3)".
std::string count_key(const ReducedCount& c);

ClassificationReport classify(int n, const ClassifyOptions& opt = {});

json to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const json& j);
/// cell_id,a,b,total followed by one off_diagonal column per partition.
std::string to_csv(const ClassificationReport& r);

}  // namespace allee
