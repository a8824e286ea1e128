#pragma once

#include "allee/interval.hpp"
#include "allee/unipoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace allee {

/// A real algebraic number: the unique root of a squarefree polynomial in
/// an interval. A degenerate interval marks an exact rational root.
struct IsolatedRoot {
  UniPoly poly;
  RatInterval interval;
  /// Signs of poly at lo and hi; both 0 for an exact root.
  int sign_lo = 0;
  int sign_hi = 0;

  bool exact() const { return interval.is_point(); }
  /// Midpoint rendered with the given number of decimals, plus the width.
  std::string describe(int digits = 12) const;
};

struct NotSquarefreeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Root search domain. A missing bound means unbounded on that side.
struct Domain {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool open_lo = false;
  bool open_hi = false;

  static Domain closed(const Rational& l, const Rational& h) { return {l, h, false, false}; }
  static Domain open(const Rational& l, const Rational& h) { return {l, h, true, true}; }
  static Domain positive() { return {Rational(0), std::nullopt, true, false}; }
  static Domain nonnegative() { return {Rational(0), std::nullopt, false, false}; }
  static Domain real() { return {}; }
};

/// Cauchy bound 1 + max |c_i / lc|: every complex root has modulus
/// strictly below it.
Rational cauchy_bound(const UniPoly& p);

/// Roots of a squarefree p inside a closed interval, in increasing order.
std::vector<IsolatedRoot> isolate(const UniPoly& p, const RatInterval& domain);
std::vector<IsolatedRoot> isolate(const UniPoly& p, const Domain& domain);

/// Roots of several polynomials with pairwise disjoint intervals, sorted.
/// The polynomials must be squarefree and pairwise coprime.
std::vector<IsolatedRoot> isolate_many(const std::vector<UniPoly>& polys, const Domain& domain);

IsolatedRoot refine(const IsolatedRoot& r, const Rational& width);
/// One bisection step; may turn the root exact.
IsolatedRoot bisect(const IsolatedRoot& r);

int sign_at(const UniPoly& q, const IsolatedRoot& r);
/// Sign of q at r together with r refined far enough to certify it.
int sign_at(const UniPoly& q, IsolatedRoot& r, bool keep_refinement);

/// Number of distinct real roots of p in the domain (any p, not necessarily
/// squarefree).
int count_in(const UniPoly& p, const Domain& domain);

/// Sturm-sequence count of distinct roots in the domain, for cross-checks.
int sturm_count(const UniPoly& p, const Domain& domain);

/// Upper bound on the number of roots of p in the open interval (lo, hi)
/// counted with multiplicity (Descartes' rule after a Moebius transform).
int descartes_bound(const UniPoly& p, const Rational& lo, const Rational& hi);

/// When enabled, isolate and count_in verify their result against Sturm
/// sequences and throw std::logic_error on disagreement.
void set_sturm_cross_check(bool on);
bool sturm_cross_check();

}  // namespace allee
