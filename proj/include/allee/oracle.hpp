#pragma once

#include "allee/interval.hpp"
#include "allee/rational.hpp"

#include "json.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace allee {

enum class BoxStatus { excluded, unique_root, unresolved };

struct CertifiedBox {
  std::vector<RatInterval> box;
  BoxStatus status = BoxStatus::unresolved;
  /// For unique-root boxes: the root has no negative coordinate.
  bool nonnegative = false;
  /// Number of solutions this box stands for (orbit size under symmetry
  /// reduction, 1 otherwise).
  int weight = 1;
};

struct OracleOptions {
  /// Search region; defaults to [-1/64, 2 + n a]^n.
  std::optional<std::vector<RatInterval>> region;
  long budget = 2'000'000;
  /// Search sorted boxes only and weight roots by their orbit size.
  bool symmetry = false;
  /// Fixed-point precision in bits.
  unsigned precision = 96;
  int jobs = 1;
  /// Also certify that the shell where some coordinate lies in [R, 2R]
  /// contains no steady state.
  bool outer_check = true;
};

struct OracleResult {
  int n = 0;
  /// Number of distinct nonnegative solutions (valid when complete).
  int count = 0;
  bool complete = false;
  /// Unique-root and unresolved boxes; excluded boxes are only counted.
  std::vector<CertifiedBox> boxes;
  long processed = 0;
  long excluded = 0;
  int negative_roots = 0;
  /// nullopt when the outer check was not run.
  std::optional<bool> outer_clear;
};

/// Square system f_i(x) = sum_j p_ij(x_j) with each p_ij a cubic in one
/// variable. Both the steady-state system and the negative control have
/// this shape.
class SeparableSystem {
 public:
  using Cubic = std::array<Rational, 4>;  // c0 + c1 x + c2 x^2 + c3 x^3

  explicit SeparableSystem(int n) : n_(n), p_(static_cast<std::size_t>(n * n)) {}
  int dim() const { return n_; }
  const Cubic& component(int i, int j) const { return p_[static_cast<std::size_t>(i * n_ + j)]; }
  Cubic& component(int i, int j) { return p_[static_cast<std::size_t>(i * n_ + j)]; }
  std::vector<Rational> eval(const std::vector<Rational>& x) const;

 private:
  int n_;
  std::vector<Cubic> p_;
};

/// f_i = x_i (1 - x_i)(x_i - b) - (n - 1) a x_i + a sum_{j != i} x_j.
SeparableSystem allee_oracle_system(int n, const Rational& a, const Rational& b);
/// x_i - (i + 1)/5: a system whose roots have n distinct coordinates.
SeparableSystem shifted_identity_system(int n);

OracleResult interval_solve(const SeparableSystem& sys, const std::vector<RatInterval>& region, const OracleOptions& opt);
OracleResult interval_solve_full(int n, const Rational& a, const Rational& b, const OracleOptions& opt = {});

struct ReductionCheck {
  bool holds = false;
  bool conclusive = false;
  /// Largest number of coordinate-value clusters over all roots.
  int max_clusters = 0;
  std::string detail;
};

/// Groups the coordinate enclosures of every nonnegative root into
/// overlap clusters after refinement; holds when no root needs more than
/// three clusters.
ReductionCheck verify_reduction(const SeparableSystem& sys, const OracleResult& res, const OracleOptions& opt = {});
ReductionCheck verify_reduction(int n, const Rational& a, const Rational& b, const OracleOptions& opt = {});

nlohmann::json to_json(const OracleResult& r);
std::string to_string(BoxStatus s);

}  // namespace allee
