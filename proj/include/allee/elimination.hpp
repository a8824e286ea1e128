#pragma once

#include "allee/multipoly.hpp"
#include "allee/ring.hpp"
#include "allee/unipoly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace allee {

namespace elim {

/// Subresultant polynomial remainder sequence (Brown-Collins form). Members
/// after the two inputs are subresultants up to factors of the coefficient
/// ring; the resultant is the returned scalar.
template <class C>
struct Prs {
  std::vector<ring::Dense<C>> sequence;
  C resultant{};
};

template <class C>
Prs<C> subresultant_prs(ring::Dense<C> a, ring::Dense<C> b)
{
  using namespace ring;
  trim(a);
  trim(b);
  Prs<C> out;
  if (a.empty() || b.empty()) return out;
  int s = 1;
  if (degree(a) < degree(b)) {
    std::swap(a, b);
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -1;
  }
  out.sequence.push_back(a);
  out.sequence.push_back(b);
  if (degree(b) == 0) {
    out.resultant = power(b.back(), static_cast<unsigned>(degree(a)));
    if (s < 0) out.resultant = C(out.resultant * Rational(-1));
    return out;
  }
  C g = one<C>();
  C h = one<C>();
  while (true) {
    const int delta = degree(a) - degree(b);
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -s;
    Dense<C> r = prem(a, b);
    a = std::move(b);
    if (r.empty()) {
      out.resultant = C{};
      return out;
    }
    b = divide_coeffs(std::move(r), C(g * power(h, static_cast<unsigned>(delta))));
    out.sequence.push_back(b);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      h = exact_div(power(g, static_cast<unsigned>(delta)), power(h, static_cast<unsigned>(delta - 1)));
    }
    if (degree(b) <= 0) break;
  }
  const int da = degree(a);
  C res = exact_div(power(b.back(), static_cast<unsigned>(da)), power(h, static_cast<unsigned>(da - 1)));
  out.resultant = s < 0 ? C(res * Rational(-1)) : res;
  return out;
}

template <class C>
C resultant_dense(const ring::Dense<C>& a, const ring::Dense<C>& b)
{
  return subresultant_prs(a, b).resultant;
}

template <class C>
C discriminant_dense(const ring::Dense<C>& f)
{
  const int d = ring::degree(f);
  if (d < 1) throw std::invalid_argument("discriminant of a constant");
  C r = resultant_dense(f, ring::derivative(f));
  r = ring::exact_div(r, f.back());
  if ((d * (d - 1) / 2) % 2 == 1) r = C(r * Rational(-1));
  return r;
}

}  // namespace elim

/// Record of one elimination step, serialisable for debugging.
struct EliminationTrace {
  MultiPoly f;
  MultiPoly g;
  Var var{};
  /// Leading coefficients of the remainder sequence: the principal
  /// subresultant coefficients up to sign and ring factors.
  std::vector<MultiPoly> principal_coeffs;
  MultiPoly resultant;
};

/// Res_var(f, g). Throws std::invalid_argument when neither input involves var.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var var);
EliminationTrace eliminate(const MultiPoly& f, const MultiPoly& g, Var var);
/// Res_var(f, df/dvar) / lc_var(f) with the standard sign.
MultiPoly discriminant(const MultiPoly& f, Var var);

UniPoly resultant(const UniPoly& f, const UniPoly& g);
UniPoly discriminant_uni(const UniPoly& f);

/// Open-CAD projection of a bivariate factor set onto the remaining
/// variable: leading coefficients, discriminants and pairwise resultants
/// with respect to `var`, after pairwise-coprime refinement. Constants and
/// duplicates are dropped.
std::vector<UniPoly> cad_project(const std::vector<MultiPoly>& factors, Var var);

}  // namespace allee
