#pragma once

#include "allee/multipoly.hpp"
#include "allee/parse.hpp"
#include "allee/unipoly.hpp"

#include <random>
#include <vector>

namespace testing {

using namespace allee;

inline const Rational kSampleA(1319, 1048576);
inline const Rational kSampleB(363843, 2097152);

inline std::mt19937_64& rng()
{
  static std::mt19937_64 r(20240917);
  return r;
}

inline int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational rand_rational(int num_range = 9, int den_max = 5)
{
  return make_rational(rand_int(-num_range, num_range), rand_int(1, den_max));
}

/// Rational strictly inside (lo, hi).
inline Rational rand_between(const Rational& lo, const Rational& hi)
{
  const int k = rand_int(1, 999);
  return Rational(lo + (hi - lo) * Rational(k, 1000));
}

/// Small random polynomial in the given variables.
inline MultiPoly rand_poly(const std::vector<Var>& vars, int terms = 4, int max_deg = 2)
{
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    Exponents e{};
    for (Var v : vars) e[index(v)] = static_cast<std::uint16_t>(rand_int(0, max_deg));
    p += MultiPoly::monomial(rand_rational(), e);
  }
  return p;
}

inline UniPoly rand_uni(int deg)
{
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.push_back(rand_rational());
  if (c.back() == 0) c.back() = 1;
  return UniPoly(c);
}

/// Determinant by Gaussian elimination over Q.
inline Rational det(std::vector<std::vector<Rational>> m)
{
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

/// Resultant as the determinant of the Sylvester matrix.
inline Rational sylvester_resultant(const UniPoly& f, const UniPoly& g)
{
  const int m = f.degree(), n = g.degree();
  const std::size_t N = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> s(N, std::vector<Rational>(N, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g.coeff(n - i);
  return det(s);
}

inline bool divides(const MultiPoly& d, const MultiPoly& p) { return p.divide(d).has_value(); }

inline MultiPoly P(const char* s) { return parse_poly(s); }

/// g1 from the fold analysis of G1(2,2).
inline MultiPoly g1_factor()
{
  return P("216*a^3 - 36*a^2*b^2 + 2*a*b^4 + 36*a^2*b - 4*a*b^3 - 36*a^2 + 6*a*b^2 - 1/4*b^4 - 4*a*b + 1/2*b^3 + 2*a - 1/4*b^2");
}

}  // namespace testing
