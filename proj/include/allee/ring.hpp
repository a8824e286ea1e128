#pragma once

#include "allee/multipoly.hpp"
#include "allee/rational.hpp"
#include "allee/unipoly.hpp"

#include <stdexcept>
#include <vector>

// Coefficient-ring adaptors and dense polynomials over an arbitrary exact
// integral domain C (Rational, UniPoly, MultiPoly). Dense<C> is indexed by
// degree in the main variable and kept free of trailing zeros.
namespace allee::ring {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const UniPoly& x) { return x.is_zero(); }
inline bool is_zero(const MultiPoly& x) { return x.is_zero(); }

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) { return a.exact_div(b); }
inline MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return a.exact_div(b); }

template <class C>
C one()
{
  if constexpr (std::is_same_v<C, UniPoly>)
    return UniPoly::constant(1);
  else
    return C(1);
}

template <class C>
C power(const C& x, unsigned e)
{
  C r = one<C>();
  C base = x;
  while (e) {
    if (e & 1) r = C(r * base);
    e >>= 1;
    if (e) base = C(base * base);
  }
  return r;
}

template <class C>
using Dense = std::vector<C>;

template <class C>
void trim(Dense<C>& p)
{
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class C>
int degree(const Dense<C>& p)
{
  return static_cast<int>(p.size()) - 1;
}

template <class C>
Dense<C> scale(Dense<C> p, const C& s)
{
  for (auto& x : p) x = C(x * s);
  trim(p);
  return p;
}

template <class C>
Dense<C> divide_coeffs(Dense<C> p, const C& s)
{
  for (auto& x : p) x = exact_div(x, s);
  return p;
}

template <class C>
Dense<C> derivative(const Dense<C>& p)
{
  Dense<C> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(C(p[i] * Rational(static_cast<long>(i))));
  trim(d);
  return d;
}

template <class C>
C eval_dense(const Dense<C>& p, const C& x)
{
  C acc{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = C(acc * x + *it);
  return acc;
}

/// Exact pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class C>
Dense<C> prem(Dense<C> a, const Dense<C>& b)
{
  if (b.empty()) throw std::domain_error("prem by the zero polynomial");
  const int db = degree(b);
  int steps = degree(a) - db + 1;
  if (steps <= 0) return a;
  const C& lb = b.back();
  while (!a.empty() && degree(a) >= db) {
    const C la = a.back();
    const std::size_t off = a.size() - 1 - static_cast<std::size_t>(db);
    for (auto& x : a) x = C(x * lb);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(db); ++i) a[off + i] = C(a[off + i] - la * b[i]);
    trim(a);
    --steps;
  }
  if (steps > 0 && !a.empty()) a = scale(std::move(a), power(lb, static_cast<unsigned>(steps)));
  return a;
}

}  // namespace allee::ring
