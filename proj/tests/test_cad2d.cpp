#include "doctest.h"
#include "support.hpp"

#include "allee/cad2d.hpp"
#include "allee/counting.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

using namespace allee;
using namespace testing;

namespace {

ParamBox box_to(const Rational& amax)
{
  ParamBox b;
  b.a_hi = amax;
  return b;
}

bool nonzero_everywhere(const std::vector<MultiPoly>& fs, const Rational& a, const Rational& b)
{
  for (const auto& f : fs)
    if (f.eval({{Var::a, a}, {Var::b, b}}) == 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("cad2d") {

TEST_CASE("toy decompositions")
{
  const auto one = sample_cells(std::vector<MultiPoly>{P("b - 1/4")}, ParamBox{});
  REQUIRE(one.cells.size() == 2);
  CHECK(one.cells[0].b < Rational(1, 4));
  CHECK(one.cells[1].b > Rational(1, 4));
  CHECK(one.cells[0].cell_id == "0:0");
  CHECK(one.cells[1].cell_id == "0:1");

  const auto two = sample_cells(std::vector<MultiPoly>{P("a - 1/8"), P("b - 1/4")}, ParamBox{});
  CHECK(two.cells.size() == 4);
  CHECK(two.a_cell_count() == 2);

  // A parabola meeting the box: b = 4a splits the strip a < 1/8 only.
  const auto par = sample_cells(std::vector<MultiPoly>{P("b - 4*a")}, ParamBox{});
  CHECK(par.cells.size() == 3);

  // The circle (a-1/2)^2 + (b-1/4)^2 = 1/64 yields 1 + 2 + 1 + 2 + 1 cells
  // across its two vertical tangents.
  const auto circ = sample_cells(std::vector<MultiPoly>{P("(a - 1/2)^2 + (b - 1/4)^2 - 1/64")}, ParamBox{});
  CHECK(circ.a_cell_count() == 3);
  CHECK(circ.cells.size() == 5);
}

TEST_CASE("amax examples")
{
  BorderPoly g;
  g.factors.push_back({P("b^2 + 4*a - b"), 1, {kTagJacobian}});
  CHECK(amax_bound(g) == Rational(17, 16));
  BorderPoly big;
  big.factors.push_back({P("a - 7"), 1, {kTagJacobian}});
  big.factors.push_back({P("b - 1/3"), 1, {kTagJacobian}});
  CHECK(amax_bound(big) >= 7);
}

TEST_CASE("samples of the n = 4 decomposition")
{
  const BorderPoly bp = bp_total(4);
  const ParamBox box = box_to(amax_bound(bp));
  const OpenCad cad = sample_cells(bp, box);
  CHECK(cad.cells.size() >= 25);
  const auto fs = bp.polys();
  std::set<std::string> ids;
  for (std::size_t i = 0; i < cad.cells.size(); ++i) {
    const auto& c = cad.cells[i];
    CHECK(ids.insert(c.cell_id).second);
    CHECK((box.a_lo < c.a && c.a < box.a_hi));
    CHECK((box.b_lo < c.b && c.b < box.b_hi));
    CHECK(!bp.vanishes_at(c.a, c.b));
    CHECK(nonzero_everywhere(fs, c.a, c.b));
    if (i > 0) {
      const auto& p = cad.cells[i - 1];
      CHECK((p.a_index < c.a_index || (p.a_index == c.a_index && p.b_index + 1 == c.b_index && p.b < c.b)));
    }
    const auto [lo, hi] = cad.a_bounds(c.a_index);
    CHECK((lo < c.a && c.a < hi));
  }
  for (const auto& r : cad.critical) {
    bool is_root = false;
    for (const auto& p : cad.projection)
      if (count_in(p, Domain::closed(r.interval.lo, r.interval.hi)) > 0) is_root = true;
    CHECK(is_root);
  }
}

TEST_CASE("random points stay in their cell")
{
  const BorderPoly bp = bp_total(3);
  const OpenCad cad = sample_cells(bp, box_to(amax_bound(bp)));
  std::mt19937_64 r(11);
  const auto fs = bp.polys();
  for (std::size_t i = 0; i < cad.cells.size(); ++i) {
    for (int k = 0; k < 3; ++k) {
      const CellSample p = cad.random_point(i, r);
      CHECK(p.cell_id == cad.cells[i].cell_id);
      for (const auto& f : fs) {
        const Rational s0 = f.eval({{Var::a, cad.cells[i].a}, {Var::b, cad.cells[i].b}});
        const Rational s1 = f.eval({{Var::a, p.a}, {Var::b, p.b}});
        CHECK(sign(s0) == sign(s1));
      }
    }
  }
}

TEST_CASE("refinement by an extra line keeps counts inside original cells")
{
  const BorderPoly bp = bp_total(3);
  const ParamBox box = box_to(Rational(1, 8));
  const OpenCad base = sample_cells(bp, box);
  const auto total = [](const Rational& a, const Rational& b) { return assemble_total(3, count_all(a, b, 3), FormulaMode::dedup).assembled_total; };
  std::map<std::string, long long> known;
  for (const auto& c : base.cells) known[c.cell_id] = total(c.a, c.b);

  // Cell of the coarse decomposition holding (a, b), if it is not inside an
  // isolating interval.
  const auto locate = [&](const Rational& a, const Rational& b) -> std::optional<std::string> {
    for (std::size_t i = 0; i < base.a_cell_count(); ++i) {
      const auto [lo, hi] = base.a_bounds(i);
      if (!(lo < a && a < hi)) continue;
      const auto gaps = base.fiber_gaps(a);
      for (std::size_t j = 0; j < gaps.size(); ++j)
        if (gaps[j].first < b && b < gaps[j].second) return std::to_string(i) + ":" + std::to_string(j);
    }
    return std::nullopt;
  };

  int located = 0;
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<MultiPoly> ext = bp.polys();
    const Rational slope = rand_rational(), off = rand_between(Rational(0), Rational(1, 2));
    ext.push_back(MultiPoly::var(Var::b) - MultiPoly(slope) * MultiPoly::var(Var::a) - MultiPoly(off));
    const OpenCad fine = sample_cells(ext, box);
    CHECK(fine.cells.size() >= base.cells.size());
    for (const auto& c : fine.cells) {
      const auto id = locate(c.a, c.b);
      if (!id) continue;
      ++located;
      CHECK(total(c.a, c.b) == known.at(*id));
    }
  }
  CHECK(located > static_cast<int>(base.cells.size()));
}

TEST_CASE("CSV output")
{
  const auto cad = sample_cells(std::vector<MultiPoly>{P("b - 1/4")}, ParamBox{});
  const std::string csv = cells_csv(cad.cells);
  CHECK(csv.rfind("cell_id,a,b\n", 0) == 0);
  CHECK(csv.find("0:0,1/2,") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("errors")
{
  ParamBox empty;
  empty.a_hi = 0;
  CHECK_THROWS_AS(sample_cells(std::vector<MultiPoly>{P("b - 1/4")}, empty), std::invalid_argument);
  CHECK_THROWS_AS(sample_cells(std::vector<MultiPoly>{MultiPoly()}, ParamBox{}), std::invalid_argument);
  CHECK(sample_cells(std::vector<MultiPoly>{}, ParamBox{}).cells.size() == 1);
}

TEST_CASE("parallel sampling is deterministic")
{
  const BorderPoly bp = bp_total(4);
  const ParamBox box = box_to(Rational(1, 4));
  const OpenCad one = sample_cells(bp, box, 1);
  const OpenCad four = sample_cells(bp, box, 4);
  REQUIRE(one.cells.size() == four.cells.size());
  for (std::size_t i = 0; i < one.cells.size(); ++i) {
    CHECK(one.cells[i].a == four.cells[i].a);
    CHECK(one.cells[i].b == four.cells[i].b);
    CHECK(one.cells[i].cell_id == four.cells[i].cell_id);
  }
}

}
