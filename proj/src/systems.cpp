#include "allee/systems.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace allee {

namespace {

MultiPoly v(Var x) { return MultiPoly::var(x); }

MultiPoly det(const std::vector<std::vector<MultiPoly>>& m)
{
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  MultiPoly out;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    const MultiPoly t = m[0][j] * det(minor);
    if (j % 2 == 0)
      out += t;
    else
      out -= t;
  }
  return out;
}

}  // namespace

Rational StatePoly::eval(const std::vector<Rational>& x, const Rational& a, const Rational& b) const
{
  if (static_cast<int>(x.size()) != nvars) throw std::invalid_argument("StatePoly::eval: wrong number of coordinates");
  const std::map<Var, Rational> ab{{Var::a, a}, {Var::b, b}};
  Rational acc = 0;
  for (const auto& t : terms) {
    Rational m = t.coeff.eval(ab);
    for (int i = 0; i < nvars; ++i)
      for (int e = 0; e < t.exp[i]; ++e) m *= x[i];
    acc += m;
  }
  return acc;
}

MultiPoly StatePoly::substitute(const std::vector<MultiPoly>& values) const
{
  if (static_cast<int>(values.size()) != nvars) throw std::invalid_argument("StatePoly::substitute: wrong number of values");
  MultiPoly acc;
  for (const auto& t : terms) {
    MultiPoly m = t.coeff;
    for (int i = 0; i < nvars; ++i)
      if (t.exp[i]) m = m * values[i].pow(t.exp[i]);
    acc += m;
  }
  return acc;
}

StatePoly StatePoly::derivative(int i) const
{
  StatePoly d;
  d.nvars = nvars;
  for (const auto& t : terms) {
    if (t.exp[i] == 0) continue;
    Term nt = t;
    nt.coeff *= Rational(t.exp[i]);
    --nt.exp[i];
    d.terms.push_back(std::move(nt));
  }
  return d;
}

MultiPoly allee_cubic(Var x) { return v(x) * (MultiPoly(1) - v(x)) * (v(x) - v(Var::b)); }

FullSystem build_full(int n)
{
  if (n < 1) throw std::invalid_argument("build_full: n must be positive");
  FullSystem sys;
  sys.n = n;
  const MultiPoly a = v(Var::a);
  const MultiPoly b = v(Var::b);
  for (int i = 0; i < n; ++i) {
    StatePoly f;
    f.nvars = n;
    auto term = [&](int var, std::uint16_t e, MultiPoly c) {
      std::vector<std::uint16_t> exp(static_cast<std::size_t>(n), 0);
      exp[static_cast<std::size_t>(var)] = e;
      f.terms.push_back({std::move(exp), std::move(c)});
    };
    // x(1 - x)(x - b) = -x^3 + (1 + b) x^2 - b x
    term(i, 3, MultiPoly(-1));
    term(i, 2, MultiPoly(1) + b);
    term(i, 1, -b - Rational(n - 1) * a);
    for (int j = 0; j < n; ++j)
      if (j != i) term(j, 1, a);
    sys.equations.push_back(std::move(f));
  }
  return sys;
}

std::vector<Var> ReducedSystem::state_vars() const
{
  if (kind == ReducedKind::G1) return {Var::y, Var::z};
  return {Var::y, Var::z, Var::w};
}

ReducedSystem build_reduced(int n, const std::vector<int>& mult)
{
  if (mult.size() != 2 && mult.size() != 3) throw std::invalid_argument("build_reduced: need two or three multiplicities");
  for (int m : mult)
    if (m <= 0) throw std::invalid_argument("build_reduced: multiplicities must be positive");
  if (std::accumulate(mult.begin(), mult.end(), 0) != n) throw std::invalid_argument("build_reduced: multiplicities must sum to n");

  const FullSystem full = build_full(n);
  const std::array<Var, 3> vals{Var::y, Var::z, Var::w};
  std::vector<MultiPoly> values;
  std::vector<int> first;
  for (std::size_t g = 0; g < mult.size(); ++g) {
    first.push_back(static_cast<int>(values.size()));
    for (int k = 0; k < mult[g]; ++k) values.push_back(v(vals[g]));
  }
  ReducedSystem sys;
  sys.kind = mult.size() == 2 ? ReducedKind::G1 : ReducedKind::G2;
  sys.n = n;
  sys.mult = mult;
  for (int i : first) sys.equations.push_back(full.equations[static_cast<std::size_t>(i)].substitute(values));
  return sys;
}

PartitionSet partitions(int n)
{
  PartitionSet ps;
  for (int n2 = 1; 2 * n2 <= n; ++n2) ps.pairs.emplace_back(n - n2, n2);
  for (int n1 = n; n1 >= 1; --n1)
    for (int n2 = std::min(n1, n - n1); n2 >= 1; --n2) {
      const int n3 = n - n1 - n2;
      if (n3 >= 1 && n3 <= n2) ps.triples.push_back({n1, n2, n3});
    }
  return ps;
}

MultiPoly jacobian(const ReducedSystem& sys)
{
  const auto vars = sys.state_vars();
  std::vector<std::vector<MultiPoly>> m;
  for (const auto& f : sys.equations) {
    std::vector<MultiPoly> row;
    for (Var x : vars) row.push_back(f.derivative(x));
    m.push_back(std::move(row));
  }
  return det(m);
}

}  // namespace allee
