#include "doctest.h"
#include "support.hpp"

#include "allee/elimination.hpp"
#include "allee/mgcd.hpp"
#include "allee/oracle.hpp"
#include "allee/realroots.hpp"
#include "allee/serialize.hpp"
#include "allee/systems.hpp"

using namespace allee;
using namespace testing;

namespace {

bool reduced(const Rational& q) { return q.get_den() > 0 && gcd(q.get_num(), q.get_den()) == 1; }

bool all_reduced(const MultiPoly& p)
{
  for (const auto& t : p.terms())
    if (!reduced(t.coeff) || t.coeff == 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("polycore") {

TEST_CASE("rationals stay reduced and decimals are rejected")
{
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(reduced(make_rational(6, -4)));
  CHECK(parse_rational("363843/2097152") == kSampleB);
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("0.25"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
}

TEST_CASE("add, sub, mul examples")
{
  CHECK(P("y + b") + P("y - b") == P("2*y"));
  CHECK(P("y - z") * P("y + z") == P("y^2 - z^2"));

  // g(z) = -z(1-z)(z-b) + n a z with n = 2, built as a chain ...
  const MultiPoly z = MultiPoly::var(Var::z);
  const MultiPoly chain = -(z * (MultiPoly(1) - z) * (z - MultiPoly::var(Var::b))) + Rational(2) * MultiPoly::var(Var::a) * z;
  // ... and term by term.
  auto e = [](int dz, int da, int db) {
    Exponents x{};
    x[index(Var::z)] = static_cast<std::uint16_t>(dz);
    x[index(Var::a)] = static_cast<std::uint16_t>(da);
    x[index(Var::b)] = static_cast<std::uint16_t>(db);
    return x;
  };
  const MultiPoly direct = MultiPoly::from_terms({{e(3, 0, 0), Rational(1)},
                                                  {e(2, 0, 0), Rational(-1)},
                                                  {e(2, 0, 1), Rational(-1)},
                                                  {e(1, 1, 0), Rational(2)},
                                                  {e(1, 0, 1), Rational(1)}});
  CHECK(chain == direct);
  CHECK(chain == P("z^3 - (1+b)*z^2 + (2*a + b)*z"));
  // -z^3 + (1+b) z^2 + (2a - b) z is the expansion of +z(1-z)(z-b) + 2az.
  CHECK(allee_cubic(Var::z) + Rational(2) * MultiPoly::var(Var::a) * z == P("-z^3 + (1+b)*z^2 + (2*a - b)*z"));
}

TEST_CASE("derivative examples")
{
  CHECK(P("b^2 + 4*a - b").derivative(Var::a) == MultiPoly(4));
  CHECK(MultiPoly(Rational(7, 3)).derivative(Var::a).is_zero());
  CHECK(g1_factor().derivative(Var::a) == P("2*(324*a^2 - 36*a*b^2 + 36*a*b - 36*a + b^4 - 2*b^3 + 3*b^2 - 2*b + 1)"));
}

TEST_CASE("derivative: linearity and product rule")
{
  for (int i = 0; i < 200; ++i) {
    const MultiPoly p = rand_poly({Var::y, Var::a, Var::b}), q = rand_poly({Var::y, Var::a, Var::b});
    const Rational s = rand_rational();
    CHECK((p + s * q).derivative(Var::y) == p.derivative(Var::y) + s * q.derivative(Var::y));
    CHECK((p * q).derivative(Var::a) == p.derivative(Var::a) * q + p * q.derivative(Var::a));
  }
}

TEST_CASE("substitute examples")
{
  CHECK(P("b - 1/2").substitute(Var::b, Rational(1, 2)).is_zero());
  const MultiPoly g2 = P("b^2 + 4*a - b").substitute(Var::b, Rational(1, 2));
  CHECK(g2 == P("4*a - 1/4"));
  const auto roots = isolate(g2.to_uni(Var::a), Domain::real());
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].exact());
  CHECK(roots[0].interval.lo == Rational(1, 16));

  const MultiPoly g11 = build_reduced(4, {2, 2}).equations[0];
  const MultiPoly specialised = g11.substitute({{Var::a, kSampleA}, {Var::b, kSampleB}});
  CHECK(specialised.vars() == std::vector<Var>{Var::y, Var::z});
  for (int i = 0; i < 3; ++i) {
    const Rational y = rand_rational(), z = rand_rational();
    const Rational a = kSampleA, b = kSampleB;
    const Rational direct = y * (1 - y) * (y - b) - 4 * a * y + a * (2 * y + 2 * z);
    CHECK(specialised.eval({{Var::y, y}, {Var::z, z}}) == direct);
  }
}

TEST_CASE("substitution is a homomorphism")
{
  const std::vector<Var> vs{Var::y, Var::z, Var::a, Var::b};
  for (int i = 0; i < 300; ++i) {
    const MultiPoly p = rand_poly(vs), q = rand_poly(vs);
    const MultiPoly image = rand_poly({Var::a, Var::b}, 3, 1);
    const std::map<Var, MultiPoly::Binding> bind{{Var::y, rand_rational()}, {Var::z, image}};
    CHECK((p * q).substitute(bind) == p.substitute(bind) * q.substitute(bind));
    CHECK((p + q).substitute(bind) == p.substitute(bind) + q.substitute(bind));
  }
}

TEST_CASE("ring axioms on random triples")
{
  const std::vector<Var> vs{Var::y, Var::z, Var::w, Var::a, Var::b};
  for (int i = 0; i < 1000; ++i) {
    const MultiPoly p = rand_poly(vs), q = rand_poly(vs), r = rand_poly(vs);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
    CHECK(all_reduced(p * q - r));
  }
}

TEST_CASE("gcd_and_squarefree")
{
  const UniPoly p = UniPoly::from_roots({1, 1, 2});
  CHECK(squarefree_part(p) == UniPoly::from_roots({1, 2}));
  const auto sf = gcd_and_squarefree(p);
  UniPoly prod = UniPoly::constant(1);
  for (std::size_t i = 0; i < sf.factors.size(); ++i)
    for (std::size_t k = 0; k <= i; ++k) prod *= sf.factors[i];
  CHECK(prod == p.monic());

  const UniPoly s = UniPoly({Rational(-2), Rational(0), Rational(3)});
  CHECK(squarefree_part(s) == s.monic());
  CHECK_THROWS_AS(squarefree_part(UniPoly()), std::invalid_argument);
  CHECK_THROWS_AS(squarefree_part(MultiPoly()), std::invalid_argument);
  CHECK(squarefree_part(P("(a - b)^2*(a + 1)")) == P("(a - b)*(a + 1)").normalized());
}

TEST_CASE("gcd(p, p') shares no root with the squarefree part")
{
  for (int i = 0; i < 100; ++i) {
    UniPoly p = rand_uni(rand_int(1, 3));
    const UniPoly f = rand_uni(1);
    p *= f * f;
    const UniPoly g = gcd(p, p.derivative());
    const UniPoly sq = squarefree_part(p);
    CHECK(!g.is_constant());
    CHECK(resultant(sq.exact_div(gcd(sq, g)), g).coeff(0) != 0);
    // sq divides p and has only simple roots.
    CHECK(gcd(sq, sq.derivative()).is_constant());
    CHECK(p.divmod(sq).second.is_zero());
  }
}

TEST_CASE("squarefree y-resultant of G1(2,2) at the sample point matches the oracle")
{
  const ReducedSystem g = build_reduced(4, {2, 2});
  const std::map<Var, MultiPoly::Binding> pt{{Var::a, kSampleA}, {Var::b, kSampleB}};
  const MultiPoly r = resultant(g.equations[0].substitute(pt), g.equations[1].substitute(pt), Var::z);
  const UniPoly sq = squarefree_part(r.to_uni(Var::y));
  const int real_roots = count_in(sq, Domain::real());

  // G1 is itself separable: c(y) - 2a y + 2a z and c(z) - 2a z + 2a y.
  SeparableSystem sys(2);
  const Rational a = kSampleA, b = kSampleB;
  const SeparableSystem::Cubic self{Rational(0), Rational(-b - 2 * a), Rational(1 + b), Rational(-1)};
  const SeparableSystem::Cubic cross{Rational(0), Rational(2 * a), Rational(0), Rational(0)};
  sys.component(0, 0) = self;
  sys.component(0, 1) = cross;
  sys.component(1, 1) = self;
  sys.component(1, 0) = cross;
  const Rational R = cauchy_bound(sq) + 1;
  OracleOptions opt;
  const auto res = interval_solve(sys, {RatInterval(-R, R), RatInterval(-R, R)}, opt);
  REQUIRE(res.complete);
  int roots = 0;
  for (const auto& bx : res.boxes) roots += bx.status == BoxStatus::unique_root;
  CHECK(real_roots == roots);
  CHECK(real_roots >= 8);
}

TEST_CASE("JSON round trip")
{
  for (int i = 0; i < 100; ++i) {
    const MultiPoly p = rand_poly({Var::y, Var::z, Var::w, Var::a, Var::b, Var::n1});
    const json j = to_json(p);
    CHECK(multipoly_from_json(json::parse(j.dump())) == p);
  }
  const json j = to_json(P("3/4*a^2*b - b"));
  CHECK(j.at("vars").is_array());
  CHECK(j.at("terms").at(0).at("num") == "3");
  CHECK(j.at("terms").at(0).at("den") == "4");
}

TEST_CASE("parser round trip")
{
  for (int i = 0; i < 100; ++i) {
    const MultiPoly p = rand_poly({Var::y, Var::a, Var::b});
    CHECK(parse_poly(p.to_string()) == p);
  }
  CHECK_THROWS(parse_poly("a / b"));
  CHECK_THROWS(parse_poly("a +"));
}

}
