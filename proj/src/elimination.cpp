#include "allee/elimination.hpp"

#include "allee/mgcd.hpp"

#include <algorithm>
#include <set>

namespace allee {

namespace {

using ring::Dense;

std::vector<Var> remaining_vars(const MultiPoly& f, const MultiPoly& g, Var var)
{
  std::set<Var> s;
  for (Var v : f.vars()) s.insert(v);
  for (Var v : g.vars()) s.insert(v);
  s.erase(var);
  return {s.begin(), s.end()};
}

MultiPoly resultant_impl(const MultiPoly& f, const MultiPoly& g, Var var)
{
  const auto rest = remaining_vars(f, g, var);
  const auto df = f.to_dense(var);
  const auto dg = g.to_dense(var);
  if (rest.empty()) {
    Dense<Rational> a, b;
    for (const auto& c : df) a.push_back(c.constant_value());
    for (const auto& c : dg) b.push_back(c.constant_value());
    return MultiPoly(elim::resultant_dense(a, b));
  }
  if (rest.size() == 1) {
    const Var u = rest.front();
    Dense<UniPoly> a, b;
    for (const auto& c : df) a.push_back(c.to_uni(u));
    for (const auto& c : dg) b.push_back(c.to_uni(u));
    return MultiPoly::from_uni(elim::resultant_dense(a, b), u);
  }
  return elim::resultant_dense(df, dg);
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var var)
{
  if (!f.has_var(var) && !g.has_var(var)) throw std::invalid_argument("resultant: neither input involves " + std::string(var_name(var)));
  if (f.is_zero() || g.is_zero()) return MultiPoly();
  return resultant_impl(f, g, var);
}

EliminationTrace eliminate(const MultiPoly& f, const MultiPoly& g, Var var)
{
  if (!f.has_var(var) && !g.has_var(var)) throw std::invalid_argument("eliminate: neither input involves " + std::string(var_name(var)));
  EliminationTrace t;
  t.f = f;
  t.g = g;
  t.var = var;
  auto prs = elim::subresultant_prs(f.to_dense(var), g.to_dense(var));
  for (std::size_t i = 2; i < prs.sequence.size(); ++i)
    if (!prs.sequence[i].empty()) t.principal_coeffs.push_back(prs.sequence[i].back());
  t.resultant = prs.resultant;
  return t;
}

MultiPoly discriminant(const MultiPoly& f, Var var)
{
  const int d = f.degree(var);
  if (d < 1) throw std::invalid_argument("discriminant: degree 0 in " + std::string(var_name(var)));
  const MultiPoly r = resultant(f, f.derivative(var), var);
  MultiPoly out = r.exact_div(f.to_dense(var).back());
  if ((d * (d - 1) / 2) % 2 == 1) out = -out;
  return out;
}

UniPoly resultant(const UniPoly& f, const UniPoly& g)
{
  if (f.is_zero() || g.is_zero()) return UniPoly();
  const Rational r = elim::resultant_dense(f.coeffs(), g.coeffs());
  return UniPoly::constant(r);
}

UniPoly discriminant_uni(const UniPoly& f)
{
  return UniPoly::constant(elim::discriminant_dense(f.coeffs()));
}

std::vector<UniPoly> cad_project(const std::vector<MultiPoly>& factors, Var var)
{
  if (factors.empty()) throw std::invalid_argument("cad_project: empty factor list");
  std::vector<MultiPoly> nonconst;
  for (const auto& f : factors)
    if (!f.is_constant()) nonconst.push_back(f);
  const auto cb = coprime_basis(nonconst);

  std::vector<MultiPoly> proj;
  std::vector<const MultiPoly*> with_var;
  for (const auto& p : cb.basis) {
    if (!p.has_var(var)) {
      proj.push_back(p);
      continue;
    }
    with_var.push_back(&p);
    proj.push_back(p.to_dense(var).back());
    if (p.degree(var) >= 2) proj.push_back(discriminant(p, var));
  }
  for (std::size_t i = 0; i < with_var.size(); ++i)
    for (std::size_t j = i + 1; j < with_var.size(); ++j) proj.push_back(resultant(*with_var[i], *with_var[j], var));

  std::vector<UniPoly> uni;
  for (const auto& p : proj) {
    if (p.is_zero()) throw std::invalid_argument("cad_project: projection vanishes identically");
    if (p.is_constant()) continue;
    const auto vs = p.vars();
    if (vs.size() != 1) throw std::invalid_argument("cad_project: factors must be bivariate");
    uni.push_back(p.to_uni(vs.front()));
  }
  return coprime_basis(uni).basis;
}

}  // namespace allee
