#pragma once

#include "allee/multipoly.hpp"
#include "allee/serialize.hpp"

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace allee {

inline constexpr const char* kTagJacobian = "jacobian-locus";
inline constexpr const char* kTagBoundary = "boundary-x=0";
inline constexpr const char* kTagLeading = "leading-coeff";
inline constexpr const char* kTagTrivial = "trivial";

/// Bumped whenever the factor construction changes; part of the cache key.
inline constexpr int kBorderPolyVersion = 1;

struct BorderFactor {
  MultiPoly poly;
  int multiplicity = 1;
  std::set<std::string> provenance;
};

/// Border polynomial in (a, b) as a list of squarefree, primitive, pairwise
/// coprime factors.
struct BorderPoly {
  int n = 0;
  std::vector<BorderFactor> factors;

  MultiPoly product() const;
  /// True when some factor vanishes at (a, b).
  bool vanishes_at(const Rational& a, const Rational& b) const;
  /// Index of the factor containing p (up to a constant), if any.
  std::optional<std::size_t> find(const MultiPoly& p) const;
  std::vector<MultiPoly> polys() const;
};

/// Tagged raw factors, merged into a coprime factor list.
BorderPoly make_border_poly(int n, const std::vector<std::pair<MultiPoly, std::string>>& raw);

/// bp_G1 and bp_G2 results are memoised per process.
BorderPoly bp_G1(int n1, int n2);
BorderPoly bp_G2(int n1, int n2, int n3);
/// jobs > 1 computes the per-partition pieces concurrently.
BorderPoly bp_total(int n, int jobs = 1);

void clear_border_poly_memo();

/// bp_total with a disk cache at dir/bp_n{N}_v{V}.json.
BorderPoly bp_total_cached(int n, const std::filesystem::path& dir, int jobs = 1);
std::filesystem::path bp_cache_path(const std::filesystem::path& dir, int n);

/// {n, version, factors: [{poly, multiplicity, provenance}]}
json to_json(const BorderPoly& bp);
BorderPoly border_poly_from_json(const json& j);

/// Drops factors that certifiably have no zero in the open quadrant a > 0,
/// b > 0 (all coefficients of one sign).
BorderPoly prune_positive_quadrant(const BorderPoly& bp);

/// Degree-6 companions used by both the border polynomial and the counting
/// of G2 solutions with three distinct values. E1 and E2 are the Vieta
/// relations in y and z after w = 1 + b - y - z.
struct VietaSystem {
  MultiPoly e1;
  MultiPoly e2;
};
VietaSystem vieta_system(int n1, int n2, int n3);

/// Off-diagonal factor of the G1 elimination: Q(y) with
/// (a n2)^3 G12(y, z(y)) = c(y) Q(y), and Z(y) = a n2 z(y).
struct G1Elimination {
  MultiPoly q;
  MultiPoly z_num;
  MultiPoly z_den;
};
G1Elimination g1_elimination(int n1, int n2);

}  // namespace allee
