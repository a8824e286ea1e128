#include "allee/mgcd.hpp"

#include "allee/ring.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace allee {

namespace {

using ring::Dense;

MultiPoly dense_content(const Dense<MultiPoly>& p)
{
  MultiPoly c;
  for (const auto& x : p) {
    c = gcd(c, x);
    if (c.is_constant() && !c.is_zero()) return MultiPoly(1);
  }
  return c;
}

Dense<MultiPoly> primitive(Dense<MultiPoly> p)
{
  const MultiPoly c = dense_content(p);
  if (c.is_zero() || c.is_constant()) return p;
  return ring::divide_coeffs(std::move(p), c);
}

// True when the primitive parts are certainly coprime: some specialization
// of the coefficient variables keeps both leading coefficients and gives
// coprime univariate images.
bool specialization_says_coprime(const Dense<MultiPoly>& f, const Dense<MultiPoly>& g, const std::vector<Var>& coeff_vars)
{
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> dist(-97, 97);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::map<Var, Rational> pt;
    for (Var v : coeff_vars) pt[v] = Rational(dist(rng), 7 + attempt);
    auto image = [&](const Dense<MultiPoly>& p) {
      std::vector<Rational> c;
      c.reserve(p.size());
      for (const auto& x : p) c.push_back(x.eval(pt));
      return UniPoly(std::move(c));
    };
    UniPoly fi = image(f);
    UniPoly gi = image(g);
    if (fi.degree() != ring::degree(f) || gi.degree() != ring::degree(g)) continue;
    return gcd(fi, gi).is_constant();
  }
  return false;
}

}  // namespace

MultiPoly content(const MultiPoly& f, Var v) { return dense_content(f.to_dense(v)); }

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g)
{
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  if (f.is_constant() || g.is_constant()) return MultiPoly(1);

  const auto fv = f.vars();
  const auto gv = g.vars();
  std::vector<Var> all;
  std::set_union(fv.begin(), fv.end(), gv.begin(), gv.end(), std::back_inserter(all));
  if (all.size() == 1) return MultiPoly::from_uni(gcd(f.to_uni(all[0]), g.to_uni(all[0])), all[0]).normalized();

  // A variable occurring in only one argument can be removed via content.
  for (Var v : all) {
    const bool in_f = f.has_var(v);
    const bool in_g = g.has_var(v);
    if (in_f && !in_g) return gcd(content(f, v), g);
    if (in_g && !in_f) return gcd(f, content(g, v));
  }

  const Var main = all.back();
  std::vector<Var> rest(all.begin(), all.end() - 1);
  Dense<MultiPoly> pf = f.to_dense(main);
  Dense<MultiPoly> pg = g.to_dense(main);
  const MultiPoly cf = dense_content(pf);
  const MultiPoly cg = dense_content(pg);
  const MultiPoly d = gcd(cf, cg);
  pf = ring::divide_coeffs(std::move(pf), cf);
  pg = ring::divide_coeffs(std::move(pg), cg);

  if (specialization_says_coprime(pf, pg, rest)) return d.normalized();

  if (ring::degree(pf) < ring::degree(pg)) std::swap(pf, pg);
  while (true) {
    Dense<MultiPoly> r = ring::prem(pf, pg);
    if (r.empty()) break;
    if (ring::degree(r) == 0) {
      pg = {MultiPoly(1)};
      break;
    }
    pf = std::move(pg);
    pg = primitive(std::move(r));
  }
  return (d * MultiPoly::from_dense(primitive(std::move(pg)), main)).normalized();
}

MultiPoly squarefree_part(const MultiPoly& f)
{
  if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (f.is_constant()) return MultiPoly(1);
  MultiPoly g = f;
  for (Var v : f.vars()) {
    g = gcd(g, f.derivative(v));
    if (g.is_constant()) break;
  }
  return f.exact_div(g).normalized();
}

namespace {

struct MultiOps {
  static MultiPoly gcd_of(const MultiPoly& a, const MultiPoly& b) { return gcd(a, b); }
  static MultiPoly sqf(const MultiPoly& a) { return squarefree_part(a); }
  static bool is_const(const MultiPoly& a) { return a.is_constant(); }
  static MultiPoly div(const MultiPoly& a, const MultiPoly& b) { return a.exact_div(b).normalized(); }
  static bool same(const MultiPoly& a, const MultiPoly& b) { return a.normalized() == b.normalized(); }
};

struct UniOps {
  static UniPoly gcd_of(const UniPoly& a, const UniPoly& b) { return gcd(a, b); }
  static UniPoly sqf(const UniPoly& a) { return squarefree_part(a); }
  static bool is_const(const UniPoly& a) { return a.is_constant(); }
  static UniPoly div(const UniPoly& a, const UniPoly& b) { return a.exact_div(b).monic(); }
  static bool same(const UniPoly& a, const UniPoly& b) { return a.monic() == b.monic(); }
};

template <class P, class Ops>
CoprimeBasis<P> refine(const std::vector<P>& inputs)
{
  CoprimeBasis<P> out;
  out.support.resize(inputs.size());
  for (std::size_t idx = 0; idx < inputs.size(); ++idx) {
    if (inputs[idx].is_zero()) throw std::invalid_argument("coprime_basis: zero input");
    if (Ops::is_const(inputs[idx])) continue;
    P f = Ops::sqf(inputs[idx]);
    std::vector<std::size_t> supp;
    const std::size_t existing = out.basis.size();
    for (std::size_t i = 0; i < existing && !Ops::is_const(f); ++i) {
      P d = Ops::gcd_of(f, out.basis[i]);
      if (Ops::is_const(d)) continue;
      if (!Ops::same(d, out.basis[i])) {
        P rest = Ops::div(out.basis[i], d);
        out.basis[i] = d;
        out.basis.push_back(std::move(rest));
        const std::size_t k = out.basis.size() - 1;
        for (std::size_t j = 0; j < idx; ++j)
          if (std::find(out.support[j].begin(), out.support[j].end(), i) != out.support[j].end()) out.support[j].push_back(k);
      }
      supp.push_back(i);
      f = Ops::div(f, d);
    }
    if (!Ops::is_const(f)) {
      out.basis.push_back(std::move(f));
      supp.push_back(out.basis.size() - 1);
    }
    out.support[idx] = std::move(supp);
  }
  return out;
}

}  // namespace

CoprimeBasis<MultiPoly> coprime_basis(const std::vector<MultiPoly>& inputs) { return refine<MultiPoly, MultiOps>(inputs); }

CoprimeBasis<UniPoly> coprime_basis(const std::vector<UniPoly>& inputs) { return refine<UniPoly, UniOps>(inputs); }

}  // namespace allee
