#include "doctest.h"
#include "support.hpp"

#include "allee/borderpoly.hpp"
#include "allee/realroots.hpp"
#include "allee/systems.hpp"

#include <algorithm>

using namespace allee;
using namespace testing;

namespace {

struct SturmGuard {
  SturmGuard() { set_sturm_cross_check(true); }
  ~SturmGuard() { set_sturm_cross_check(false); }
};

UniPoly uni(const char* s, Var v = Var::y) { return P(s).to_uni(v); }

// Positive roots y of Q (with c(y) != 0) where the back-substituted z is
// positive, as in the G1 count.
int g1_positive_offdiag(int n1, int n2, std::vector<IsolatedRoot>* kept = nullptr)
{
  const auto e = g1_elimination(n1, n2);
  const std::map<Var, MultiPoly::Binding> pt{{Var::a, kSampleA}, {Var::b, kSampleB}};
  const UniPoly q = squarefree_part(e.q.substitute(pt).to_uni(Var::y));
  const UniPoly zn = e.z_num.substitute(pt).to_uni(Var::y);
  const UniPoly c = allee_cubic(Var::y).substitute(pt).to_uni(Var::y);
  int count = 0;
  for (auto r : isolate(q, Domain::positive())) {
    if (sign_at(c, r) == 0) continue;
    if (sign_at(zn, r, true) > 0) {
      ++count;
      if (kept) kept->push_back(r);
    }
  }
  return count;
}

}  // namespace

TEST_SUITE("realroots") {

TEST_CASE("isolate examples")
{
  const UniPoly s2 = uni("y^2 - 2");
  const auto r = isolate(s2, Domain::open(0, 2));
  REQUIRE(r.size() == 1);
  const auto t = refine(r[0], Rational(1, 1000000));
  CHECK(t.interval.width() <= Rational(1, 1000000));
  CHECK(t.interval.lo * t.interval.lo < 2);
  CHECK(t.interval.hi * t.interval.hi > 2);

  const auto three = isolate(UniPoly::from_roots({1, Rational(1, 3), -5}), Domain::open(0, 2));
  REQUIRE(three.size() == 2);
  CHECK(three[0].exact());
  CHECK(three[0].interval.lo == Rational(1, 3));
  CHECK(three[1].exact());
  CHECK(three[1].interval.lo == 1);

  const auto q = isolate(squarefree_part(uni("4*a - 1/4", Var::a)), Domain::open(0, 1));
  REQUIRE(q.size() == 1);
  CHECK(q[0].exact());
  CHECK(q[0].interval.lo == Rational(1, 16));

  CHECK_THROWS_AS(isolate(UniPoly::from_roots({1, 1, 2}), Domain::real()), NotSquarefreeError);
}

TEST_CASE("refine examples")
{
  const auto r = isolate(uni("y^2 - 2"), Domain::positive()).at(0);
  const Rational eps = Rational(1, 1000000) * Rational(1, 1000000);
  const auto t = refine(r, eps);
  CHECK(t.interval.width() <= eps);
  CHECK(t.interval.lo * t.interval.lo < 2);
  CHECK(t.interval.hi * t.interval.hi > 2);

  // Negative leading coefficient: endpoint signs refer to the polynomial itself.
  const auto neg = isolate(uni("2 - 3*y^2"), Domain::positive()).at(0);
  CHECK(neg.sign_lo == uni("2 - 3*y^2").sign_at(neg.interval.lo));
  const auto nr = refine(neg, eps);
  CHECK(3 * nr.interval.lo * nr.interval.lo < 2);
  CHECK(3 * nr.interval.hi * nr.interval.hi > 2);

  const auto ex = isolate(UniPoly::from_roots({Rational(2, 7)}), Domain::real()).at(0);
  CHECK(refine(ex, eps).interval == ex.interval);

  // The fold factor at b = 1/2 has its root strictly below 1/16.
  const UniPoly g1 = squarefree_part(g1_factor().substitute(Var::b, Rational(1, 2)).to_uni(Var::a));
  const auto roots = isolate(g1, Domain::open(0, 1));
  REQUIRE(roots.size() == 1);
  auto g = roots[0];
  while (!g.exact() && g.interval.hi >= Rational(1, 16)) g = bisect(g);
  CHECK(g.interval.hi < Rational(1, 16));
  CHECK(g.interval.contains(Rational(1, 24)));
}

TEST_CASE("sign_at examples")
{
  const auto r = isolate(uni("y^2 - 2"), Domain::positive()).at(0);
  CHECK(sign_at(uni("y - 3"), r) == -1);
  CHECK(sign_at(uni("y^2 - 2"), r) == 0);
  CHECK(sign_at(uni("2*y^2 - 4"), r) == 0);
  CHECK(sign_at(uni("y - 141421/100000"), r) == 1);

  std::vector<IsolatedRoot> kept;
  CHECK(g1_positive_offdiag(2, 2, &kept) == 6);
  CHECK(kept.size() == 6);
}

TEST_CASE("count_in examples")
{
  CHECK(count_in(uni("y^3 - y"), Domain::open(0, 1000)) == 1);
  CHECK(count_in(uni("y^3 - y"), Domain::positive()) == 1);
  CHECK(count_in(allee_cubic(Var::y).substitute(Var::b, Rational(1, 4)).to_uni(Var::y), Domain::nonnegative()) == 3);
  CHECK(count_in(UniPoly::from_roots({1, 1, 3}), Domain::real()) == 2);

  // (3,1): the full elimination polynomial c(y) Q(y) has degree 9.
  const auto e = g1_elimination(3, 1);
  const MultiPoly full = allee_cubic(Var::y) * e.q;
  CHECK(full.degree(Var::y) == 9);
  CHECK(g1_positive_offdiag(3, 1) == 6);
}

TEST_CASE("completeness on random products of rational linear factors")
{
  SturmGuard guard;
  for (int i = 0; i < 500; ++i) {
    std::vector<Rational> roots;
    const int k = rand_int(1, 7);
    while (static_cast<int>(roots.size()) < k) {
      const Rational x = rand_rational(40, 12);
      if (std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    const UniPoly p = UniPoly::from_roots(roots) * rand_rational(5, 3);
    if (p.is_zero()) continue;
    const auto iso = isolate(p, Domain::real());
    REQUIRE(iso.size() == roots.size());
    for (std::size_t j = 0; j < roots.size(); ++j) {
      CHECK(iso[j].interval.contains(roots[j]));
      if (j) CHECK(iso[j - 1].interval.hi < iso[j].interval.lo);
    }
    CHECK(count_in(p, Domain::real()) == k);
  }
}

TEST_CASE("disjointness and sign changes on random polynomials")
{
  SturmGuard guard;
  for (int i = 0; i < 300; ++i) {
    const UniPoly p = squarefree_part(rand_uni(rand_int(1, 9)));
    const auto iso = isolate(p, Domain::real());
    for (std::size_t j = 0; j < iso.size(); ++j) {
      const auto& r = iso[j];
      if (r.exact()) {
        CHECK(p.eval(r.interval.lo) == 0);
      } else {
        CHECK(p.sign_at(r.interval.lo) * p.sign_at(r.interval.hi) < 0);
        CHECK(r.sign_lo == p.sign_at(r.interval.lo));
      }
      if (j) CHECK(iso[j - 1].interval.hi < iso[j].interval.lo);
    }
    CHECK(static_cast<int>(iso.size()) == sturm_count(p, Domain::real()));
    const Rational lo = rand_rational(), hi = lo + rand_int(1, 5);
    CHECK(count_in(p, Domain::open(lo, hi)) == sturm_count(p, Domain::open(lo, hi)));
    CHECK(count_in(p, Domain::closed(lo, hi)) == sturm_count(p, Domain::closed(lo, hi)));
  }
}

TEST_CASE("sign_at is invariant under refinement")
{
  for (int i = 0; i < 200; ++i) {
    const UniPoly p = squarefree_part(rand_uni(rand_int(2, 6)));
    const UniPoly q = rand_uni(rand_int(0, 4));
    for (const auto& r : isolate(p, Domain::real())) {
      const int s = sign_at(q, r);
      CHECK(sign_at(q, refine(r, Rational(1, 1 << 20))) == s);
      CHECK(sign_at(q, bisect(r)) == s);
    }
  }
}

TEST_CASE("descartes bound and cauchy bound")
{
  for (int i = 0; i < 200; ++i) {
    const UniPoly p = rand_uni(rand_int(1, 8));
    const Rational B = cauchy_bound(p);
    CHECK(count_in(p, Domain::closed(-B, B)) == count_in(p, Domain::real()));
    CHECK(count_in(p, Domain::open(0, 1)) <= descartes_bound(p, 0, 1));
  }
}

}
