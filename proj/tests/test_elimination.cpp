#include "doctest.h"
#include "support.hpp"

#include "allee/borderpoly.hpp"
#include "allee/elimination.hpp"
#include "allee/mgcd.hpp"
#include "allee/realroots.hpp"
#include "allee/serialize.hpp"
#include "allee/systems.hpp"

using namespace allee;
using namespace testing;

namespace {

bool equal_up_to_sign(const MultiPoly& p, const MultiPoly& q) { return p == q || p == -q; }

UniPoly specialize(const MultiPoly& p, const std::map<Var, MultiPoly::Binding>& pt, Var v)
{
  return p.substitute(pt).to_uni(v);
}

}  // namespace

TEST_SUITE("elimination") {

TEST_CASE("resultant examples")
{
  CHECK(equal_up_to_sign(resultant(P("y - a"), P("y - b"), Var::y), P("a - b")));
  CHECK(equal_up_to_sign(resultant(P("y^2 - a"), P("y - b"), Var::y), P("b^2 - a")));
  CHECK_THROWS_AS(resultant(P("a"), P("b"), Var::y), std::invalid_argument);
}

TEST_CASE("resultant of G1(2,2) at the sample point")
{
  const ReducedSystem g = build_reduced(4, {2, 2});
  const std::map<Var, MultiPoly::Binding> pt{{Var::a, kSampleA}, {Var::b, kSampleB}};
  const MultiPoly g11 = g.equations[0].substitute(pt), g12 = g.equations[1].substitute(pt);
  const UniPoly r = squarefree_part(resultant(g11, g12, Var::z).to_uni(Var::y));
  // G11 is linear in z with coefficient 2a.
  const MultiPoly z_of_y = (g11 - g11.to_dense(Var::z)[1] * MultiPoly::var(Var::z)) * (Rational(-1) / g11.to_dense(Var::z)[1].constant_value());
  int positive = 0, offdiag = 0;
  for (auto root : isolate(r, Domain::positive())) {
    const UniPoly zy = z_of_y.to_uni(Var::y);
    if (sign_at(zy, root, true) <= 0) continue;
    ++positive;
    if (sign_at(zy - UniPoly({Rational(0), Rational(1)}), root, true) != 0) ++offdiag;
  }
  CHECK(positive == 8);
  CHECK(offdiag == 6);
}

TEST_CASE("discriminant examples")
{
  CHECK(discriminant(P("y^2 + a*y + b"), Var::y) == P("a^2 - 4*b"));
  CHECK(!discriminant(allee_cubic(Var::y), Var::y).substitute(Var::b, Rational(1, 2)).is_zero());
  CHECK_THROWS_AS(discriminant(P("a + b"), Var::y), std::invalid_argument);

  // disc_z(g(z) - S) in S (S carried by w) marks where g(z) = S changes its
  // number of real solutions.
  const MultiPoly g = P("-z*(1-z)*(z-b) + 2*a*z - w");
  const std::map<Var, MultiPoly::Binding> ab{{Var::a, Rational(1, 100)}, {Var::b, Rational(1, 4)}};
  const MultiPoly gs = g.substitute(ab);
  const UniPoly d = squarefree_part(discriminant(gs, Var::z).to_uni(Var::w));
  const auto folds = isolate(d, Domain::real());
  REQUIRE(folds.size() == 2);
  auto real_count = [&](const Rational& S) { return count_in(gs.substitute(Var::w, S).to_uni(Var::z), Domain::real()); };
  const Rational below = folds[0].interval.lo - 1, between = simplest_between(folds[0].interval.hi, folds[1].interval.lo),
                 above = folds[1].interval.hi + 1;
  CHECK(real_count(below) == 1);
  CHECK(real_count(between) == 3);
  CHECK(real_count(above) == 1);
}

TEST_CASE("cad_project examples")
{
  const auto p = cad_project({P("b^2 + 4*a - b")}, Var::b);
  REQUIRE(p.size() == 1);
  CHECK(p[0].monic() == UniPoly({Rational(-1, 16), Rational(1)}));
  CHECK(cad_project({P("b - 1/2")}, Var::b).empty());
  CHECK_THROWS_AS(cad_project({}, Var::b), std::invalid_argument);

  const auto full = cad_project(bp_total(4).polys(), Var::b);
  CHECK(!full.empty());
  for (const auto& q : full) CHECK(!q.is_constant());
}

TEST_CASE("resultant symmetry and multiplicativity")
{
  const std::vector<Var> vs{Var::y, Var::a};
  for (int i = 0; i < 100; ++i) {
    const MultiPoly f = rand_poly(vs, 3, 2) + MultiPoly::var(Var::y);
    const MultiPoly g = rand_poly(vs, 3, 2) + MultiPoly::var(Var::y, 2);
    const MultiPoly h = rand_poly(vs, 3, 1) + MultiPoly::var(Var::y);
    if (!f.has_var(Var::y) || !g.has_var(Var::y) || !h.has_var(Var::y)) continue;
    CHECK(equal_up_to_sign(resultant(f, g, Var::y), resultant(g, f, Var::y)));
    CHECK(resultant(f, g * h, Var::y) == resultant(f, g, Var::y) * resultant(f, h, Var::y));
  }
}

TEST_CASE("specialization commutes with the resultant (Sylvester oracle)")
{
  const std::vector<Var> vs{Var::y, Var::a, Var::b};
  int checked = 0;
  while (checked < 200) {
    const MultiPoly f = rand_poly(vs, 4, 3), g = rand_poly(vs, 4, 2);
    if (!f.has_var(Var::y) || !g.has_var(Var::y)) continue;
    const std::map<Var, MultiPoly::Binding> pt{{Var::a, rand_rational()}, {Var::b, rand_rational()}};
    const UniPoly fs = specialize(f, pt, Var::y), gs = specialize(g, pt, Var::y);
    if (fs.degree() != f.degree(Var::y) || gs.degree() != g.degree(Var::y)) continue;
    const MultiPoly r = resultant(f, g, Var::y);
    const Rational lhs = r.substitute(pt).constant_value();
    CHECK(lhs == sylvester_resultant(fs, gs));
    CHECK(lhs == resultant(fs, gs).coeff(0));
    ++checked;
  }
}

TEST_CASE("discriminant vanishes exactly when the specialization is not squarefree")
{
  for (int i = 0; i < 200; ++i) {
    const Rational r1 = rand_rational(), r2 = rand_rational();
    const Rational r3 = rand_int(0, 2) == 0 ? r1 : rand_rational();
    // Cubic in y with a free parameter a, specialised at a = r3.
    const MultiPoly f = P("y - a") * MultiPoly::from_uni(UniPoly::from_roots({r1, r2}), Var::y);
    const MultiPoly d = discriminant(f, Var::y).substitute(Var::a, r3);
    const UniPoly fs = f.substitute(Var::a, r3).to_uni(Var::y);
    bool threw = false;
    try {
      isolate(fs, Domain::real());
    } catch (const NotSquarefreeError&) {
      threw = true;
    }
    CHECK((d.constant_value() == 0) == threw);
  }
}

TEST_CASE("elimination trace")
{
  const auto t = eliminate(P("y^3 - a*y + b"), P("y^2 - b"), Var::y);
  CHECK(!t.resultant.has_var(Var::y));
  CHECK(equal_up_to_sign(t.resultant, resultant(P("y^3 - a*y + b"), P("y^2 - b"), Var::y)));
  const json j = to_json(t);
  CHECK(j.contains("resultant"));
  CHECK(j.contains("principal_coeffs"));
  CHECK(resultant(P("(y - a)*(y + 1)"), P("(y - a)*(y - 2)"), Var::y).is_zero());
}

}
