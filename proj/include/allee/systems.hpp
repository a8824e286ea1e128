#pragma once

#include "allee/multipoly.hpp"

#include <array>
#include <vector>

namespace allee {

/// Polynomial in the state variables x_1..x_n with coefficients in Q[a, b].
struct StatePoly {
  struct Term {
    std::vector<std::uint16_t> exp;
    MultiPoly coeff;
  };
  int nvars = 0;
  std::vector<Term> terms;

  Rational eval(const std::vector<Rational>& x, const Rational& a, const Rational& b) const;
  /// Replace x_i by values[i].
  MultiPoly substitute(const std::vector<MultiPoly>& values) const;
  StatePoly derivative(int i) const;
};

/// f_i = x_i (1 - x_i)(x_i - b) - (n - 1) a x_i + a sum_{j != i} x_j.
struct FullSystem {
  int n = 0;
  std::vector<StatePoly> equations;
};

/// c(x) = x (1 - x)(x - b) as a polynomial in v and b.
MultiPoly allee_cubic(Var v);

FullSystem build_full(int n);

enum class ReducedKind { G1, G2 };

/// Reduced system obtained by setting the first n1 coordinates to y, the
/// next n2 to z (and the last n3 to w).
struct ReducedSystem {
  ReducedKind kind{};
  int n = 0;
  std::vector<int> mult;
  std::vector<MultiPoly> equations;

  std::vector<Var> state_vars() const;
};

/// Multiplicities must be positive and sum to n; two parts give G1, three
/// give G2. Throws std::invalid_argument otherwise.
ReducedSystem build_reduced(int n, const std::vector<int>& mult);

struct PartitionSet {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::array<int, 3>> triples;
};

/// All nonincreasing partitions of n into two and into three positive parts.
PartitionSet partitions(int n);

/// Determinant of the Jacobian with respect to the state variables.
MultiPoly jacobian(const ReducedSystem& sys);

}  // namespace allee
