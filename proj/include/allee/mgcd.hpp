#pragma once

#include "allee/multipoly.hpp"
#include "allee/unipoly.hpp"

#include <vector>

namespace allee {

/// gcd over Q[vars], normalized (primitive integer coefficients, positive
/// leading coefficient). gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

/// gcd of the coefficients of f viewed as a polynomial in v.
MultiPoly content(const MultiPoly& f, Var v);

/// f / gcd(f, all partial derivatives), normalized. Throws on zero.
MultiPoly squarefree_part(const MultiPoly& f);

/// Pairwise-coprime refinement. Every basis element is squarefree and
/// non-constant; inputs[i] is, up to a constant and multiplicities, the
/// product of basis[j] for j in support[i].
template <class P>
struct CoprimeBasis {
  std::vector<P> basis;
  std::vector<std::vector<std::size_t>> support;
};

CoprimeBasis<MultiPoly> coprime_basis(const std::vector<MultiPoly>& inputs);
CoprimeBasis<UniPoly> coprime_basis(const std::vector<UniPoly>& inputs);

}  // namespace allee
