#pragma once

#include "allee/borderpoly.hpp"
#include "allee/realroots.hpp"

#include <random>
#include <string>
#include <vector>

namespace allee {

/// Open parameter box (a_lo, a_hi) x (b_lo, b_hi).
struct ParamBox {
  Rational a_lo = 0;
  Rational a_hi = 1;
  Rational b_lo = 0;
  Rational b_hi = Rational(1, 2);
};

struct CellSample {
  Rational a;
  Rational b;
  std::size_t a_index = 0;
  std::size_t b_index = 0;
  std::string cell_id;
};

/// Open cylindrical decomposition of a box relative to a factor set.
struct OpenCad {
  ParamBox box;
  std::vector<MultiPoly> factors;
  /// Projection onto a (coprime, squarefree).
  std::vector<UniPoly> projection;
  /// Roots of the projection inside (a_lo, a_hi), sorted and disjoint.
  std::vector<IsolatedRoot> critical;
  std::vector<CellSample> cells;

  std::size_t a_cell_count() const { return critical.size() + 1; }
  /// Rational bounds strictly inside the a-interval of an a-cell.
  std::pair<Rational, Rational> a_bounds(std::size_t a_index) const;
  /// Separating rationals of the fiber over a: the b-gaps in order, as
  /// (lo, hi) pairs with rational endpoints strictly between fiber roots.
  std::vector<std::pair<Rational, Rational>> fiber_gaps(const Rational& a) const;
  /// A uniformly drawn rational point of the given cell.
  CellSample random_point(std::size_t cell, std::mt19937_64& rng) const;
};

/// max(1, Cauchy bound of the projection of bp onto a).
Rational amax_bound(const BorderPoly& bp);

/// One sample per open cell; jobs > 1 builds the stacks concurrently.
OpenCad sample_cells(const BorderPoly& bp, const ParamBox& box, int jobs = 1);
OpenCad sample_cells(const std::vector<MultiPoly>& factors, const ParamBox& box, int jobs = 1);

/// cell_id,a,b with rationals as num/den.
std::string cells_csv(const std::vector<CellSample>& cells);

}  // namespace allee
