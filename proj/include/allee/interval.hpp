#pragma once

#include "allee/rational.hpp"

#include <stdexcept>

namespace allee {

/// Closed interval [lo, hi] with rational endpoints.
struct RatInterval {
  Rational lo;
  Rational hi;

  RatInterval() = default;
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h))
  {
    if (hi < lo) throw std::invalid_argument("RatInterval: lo > hi");
  }
  static RatInterval point(const Rational& x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_open(const Rational& x) const { return lo < x && x < hi; }
  bool disjoint(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }

  friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

}  // namespace allee
