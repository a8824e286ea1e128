#include "allee/cad2d.hpp"

#include "allee/elimination.hpp"
#include "allee/mgcd.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace allee {

namespace {

std::vector<UniPoly> fiber_polys(const std::vector<MultiPoly>& factors, const Rational& a)
{
  std::vector<UniPoly> out;
  for (const auto& f : factors) {
    if (!f.has_var(Var::b)) continue;
    const MultiPoly s = f.substitute(Var::a, a);
    if (s.is_zero()) throw std::logic_error("sample_cells: factor vanishes on a whole fiber");
    if (s.is_constant()) continue;
    out.push_back(s.to_uni(Var::b));
  }
  return coprime_basis(out).basis;
}

// Bisect until consecutive intervals (and the outer bounds) leave open gaps.
void separate(std::vector<IsolatedRoot>& roots, const Rational& lo, const Rational& hi)
{
  for (std::size_t i = 0; i < roots.size(); ++i) {
    while (!roots[i].exact() && !(lo < roots[i].interval.lo && roots[i].interval.hi < hi)) roots[i] = bisect(roots[i]);
    if (i == 0) continue;
    while (!(roots[i - 1].interval.hi < roots[i].interval.lo)) {
      if (!roots[i - 1].exact()) roots[i - 1] = bisect(roots[i - 1]);
      if (!roots[i].exact()) roots[i] = bisect(roots[i]);
    }
  }
}

Rational random_between(const Rational& lo, const Rational& hi, std::mt19937_64& rng)
{
  std::uniform_int_distribution<long> d(1, (1L << 20) - 1);
  Rational t(d(rng), 1L << 20);
  t.canonicalize();
  return Rational(lo + (hi - lo) * t);
}

}  // namespace

std::pair<Rational, Rational> OpenCad::a_bounds(std::size_t i) const
{
  const Rational lo = i == 0 ? box.a_lo : critical[i - 1].interval.hi;
  const Rational hi = i == critical.size() ? box.a_hi : critical[i].interval.lo;
  return {lo, hi};
}

std::vector<std::pair<Rational, Rational>> OpenCad::fiber_gaps(const Rational& a) const
{
  auto roots = isolate_many(fiber_polys(factors, a), Domain::open(box.b_lo, box.b_hi));
  separate(roots, box.b_lo, box.b_hi);
  std::vector<std::pair<Rational, Rational>> gaps;
  Rational lo = box.b_lo;
  for (const auto& r : roots) {
    gaps.emplace_back(lo, r.interval.lo);
    lo = r.interval.hi;
  }
  gaps.emplace_back(lo, box.b_hi);
  return gaps;
}

CellSample OpenCad::random_point(std::size_t cell, std::mt19937_64& rng) const
{
  const CellSample& c = cells.at(cell);
  const auto [lo, hi] = a_bounds(c.a_index);
  // The bounds may touch an isolating interval; stay strictly inside.
  const Rational a = random_between(lo, hi, rng);
  const auto gaps = fiber_gaps(a);
  if (c.b_index >= gaps.size()) throw std::logic_error("random_point: fiber changed shape inside a cell");
  const auto& g = gaps[c.b_index];
  CellSample s = c;
  s.a = a;
  s.b = random_between(g.first, g.second, rng);
  return s;
}

Rational amax_bound(const BorderPoly& bp)
{
  Rational A = 1;
  std::vector<MultiPoly> fs = bp.polys();
  if (fs.empty()) return A;
  for (const auto& p : cad_project(fs, Var::b)) A = std::max(A, cauchy_bound(p));
  return A;
}

OpenCad sample_cells(const BorderPoly& bp, const ParamBox& box, int jobs) { return sample_cells(bp.polys(), box, jobs); }

OpenCad sample_cells(const std::vector<MultiPoly>& factors, const ParamBox& box, int jobs)
{
  if (!(box.a_lo < box.a_hi) || !(box.b_lo < box.b_hi)) throw std::invalid_argument("sample_cells: empty box");
  OpenCad cad;
  cad.box = box;
  for (const auto& f : factors) {
    if (f.is_zero()) throw std::invalid_argument("sample_cells: zero factor");
    if (!f.is_constant()) cad.factors.push_back(f);
  }
  if (!cad.factors.empty()) {
    std::vector<MultiPoly> with_edges = cad.factors;
    with_edges.push_back(MultiPoly::var(Var::b) - MultiPoly(box.b_lo));
    with_edges.push_back(MultiPoly::var(Var::b) - MultiPoly(box.b_hi));
    cad.projection = cad_project(with_edges, Var::b);
  }
  cad.critical = isolate_many(cad.projection, Domain::open(box.a_lo, box.a_hi));
  separate(cad.critical, box.a_lo, box.a_hi);

  const std::size_t na = cad.a_cell_count();
  std::vector<Rational> a_samples(na);
  for (std::size_t i = 0; i < na; ++i) {
    const auto [lo, hi] = cad.a_bounds(i);
    a_samples[i] = simplest_between(lo, hi);
  }
  auto stack = [&](std::size_t i) {
    std::vector<CellSample> out;
    const auto gaps = cad.fiber_gaps(a_samples[i]);
    for (std::size_t j = 0; j < gaps.size(); ++j) {
      CellSample s;
      s.a = a_samples[i];
      s.b = simplest_between(gaps[j].first, gaps[j].second);
      s.a_index = i;
      s.b_index = j;
      s.cell_id = std::to_string(i) + ":" + std::to_string(j);
      out.push_back(std::move(s));
    }
    return out;
  };
  std::vector<std::vector<CellSample>> stacks(na);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < na; ++i) stacks[i] = stack(i);
  } else {
    for (std::size_t start = 0; start < na; start += static_cast<std::size_t>(jobs)) {
      const std::size_t end = std::min(na, start + static_cast<std::size_t>(jobs));
      std::vector<std::future<std::vector<CellSample>>> fut;
      for (std::size_t i = start; i < end; ++i) fut.push_back(std::async(std::launch::async, stack, i));
      for (std::size_t i = start; i < end; ++i) stacks[i] = fut[i - start].get();
    }
  }
  for (auto& s : stacks) cad.cells.insert(cad.cells.end(), s.begin(), s.end());
  return cad;
}

std::string cells_csv(const std::vector<CellSample>& cells)
{
  std::ostringstream out;
  out << "cell_id,a,b\n";
  for (const auto& c : cells) out << c.cell_id << "," << c.a.get_str() << "," << c.b.get_str() << "\n";
  return out.str();
}

}  // namespace allee
