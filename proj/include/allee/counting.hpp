#pragma once

#include "allee/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace allee {

struct NonGenericError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The elimination degenerated (identically zero resultant); the caller
/// should fall back to the interval oracle.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReducedCount {
  std::vector<int> mult;
  /// All positive solutions of the reduced system, coincident values included.
  int total_positive = 0;
  /// Solutions whose state values are pairwise distinct.
  int off_diagonal = 0;
  /// The convention of the worked example: off_diagonal for G1, and
  /// off_diagonal divided by the number of value permutations that fix the
  /// multiplicity tuple for G2.
  int c_value = 0;
};

enum class FormulaMode { dedup, closed_form };

struct TotalCount {
  int n = 0;
  std::vector<ReducedCount> counts;
  FormulaMode mode = FormulaMode::dedup;
  long long assembled_total = 0;
};

/// Positive solutions of G1(n1, n2) at (a, b). Requires a > 0, 0 < b < 1/2
/// and bp_G1 nonzero at (a, b); throws NonGenericError otherwise.
ReducedCount count_G1(const Rational& a, const Rational& b, int n, int n1, int n2);
ReducedCount count_G2(const Rational& a, const Rational& b, int n, int n1, int n2, int n3);

/// Counts for every partition of n into two and three parts.
std::vector<ReducedCount> count_all(const Rational& a, const Rational& b, int n);

/// Number of value permutations fixing the multiplicity tuple.
int stabilizer_size(const std::vector<int>& mult);

/// dedup: 3 + sum of off_diagonal times the number of distinct coordinate
/// placements. closed_form: 3 + sum c1 C(n, n1) + sum c2 C(n, n1) C(n - n1, n2)
/// with the c_value values. Throws std::invalid_argument when a partition
/// is missing.
TotalCount assemble_total(int n, const std::vector<ReducedCount>& counts, FormulaMode mode);

/// The n = 4 expression printed in the worked example:
/// c1(2,2) C(4,2) + c1(3,1) C(3,1) + c2(2,1,1) C(4,2) C(2,1) + 3.
std::optional<long long> example_expression(int n, const std::vector<ReducedCount>& counts);

/// Drops the per-process cache of eliminants.
void clear_counting_memo();

std::string to_string(FormulaMode m);
FormulaMode parse_formula_mode(const std::string& s);

}  // namespace allee
