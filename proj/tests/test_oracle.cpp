#include "doctest.h"
#include "support.hpp"

#include "allee/oracle.hpp"
#include "allee/elimination.hpp"
#include "allee/realroots.hpp"

using namespace allee;
using namespace testing;

TEST_SUITE("oracle") {

TEST_CASE("single patch has three states")
{
  const auto r = interval_solve_full(1, Rational(1, 3), Rational(1, 4));
  CHECK(r.complete);
  CHECK(r.count == 3);
}

TEST_CASE("strong coupling leaves only the synchronous states")
{
  const auto r = interval_solve_full(3, Rational(10), Rational(1, 4));
  CHECK(r.complete);
  CHECK(r.count == 3);
}

TEST_CASE("worked-example point with and without symmetry reduction")
{
  OracleOptions opt;
  const auto plain = interval_solve_full(4, kSampleA, kSampleB, opt);
  CHECK(plain.complete);
  CHECK(plain.count == 81);
  CHECK(plain.outer_clear == true);
  opt.symmetry = true;
  const auto sym = interval_solve_full(4, kSampleA, kSampleB, opt);
  CHECK(sym.complete);
  CHECK(sym.count == 81);
}

TEST_CASE("reduction to three values")
{
  for (int n = 2; n <= 4; ++n) {
    const auto v = verify_reduction(n, kSampleA, kSampleB);
    CHECK(v.conclusive);
    CHECK(v.holds);
    CHECK(v.max_clusters <= 3);
  }
  // Negative control: x_i = (i + 1)/5 has n distinct coordinate values.
  const auto sys = shifted_identity_system(4);
  const std::vector<RatInterval> region(4, RatInterval(Rational(-1, 3), Rational(9, 2)));
  const auto res = interval_solve(sys, region, {});
  REQUIRE(res.complete);
  const auto v = verify_reduction(sys, res);
  CHECK(v.conclusive);
  CHECK(!v.holds);
  CHECK(v.max_clusters == 4);
}

TEST_CASE("boxes enclose the exact two-patch states")
{
  const Rational a(1, 50), b(1, 3);
  const auto r = interval_solve_full(2, a, b);
  REQUIRE(r.complete);
  CHECK(r.count == 9);
  // Synchronous states (s, s) with s in {0, b, 1}.
  for (const Rational& s : {Rational(0), b, Rational(1)}) {
    int hits = 0;
    for (const auto& bx : r.boxes)
      if (bx.status == BoxStatus::unique_root && bx.box[0].contains(s) && bx.box[1].contains(s)) ++hits;
    CHECK(hits == 1);
  }
  // Every certified box contains a sign change of the one-variable eliminant.
  const MultiPoly f = P("y*(1-y)*(y-1/3) - 1/50*y + 1/50*z");
  const MultiPoly g = P("z*(1-z)*(z-1/3) - 1/50*z + 1/50*y");
  const UniPoly ry = squarefree_part(resultant(f, g, Var::y).to_uni(Var::z));
  int roots = 0;
  for (const auto& bx : r.boxes)
    if (bx.status == BoxStatus::unique_root && bx.nonnegative) {
      CHECK(count_in(ry, Domain::closed(bx.box[1].lo, bx.box[1].hi)) >= 1);
      ++roots;
    }
  CHECK(roots == 9);
}

TEST_CASE("budget exhaustion is reported")
{
  OracleOptions opt;
  opt.budget = 20;
  const auto r = interval_solve_full(4, kSampleA, kSampleB, opt);
  CHECK(!r.complete);
  CHECK(r.processed <= 20 + 16);
}

TEST_CASE("JSON form")
{
  const auto r = interval_solve_full(2, Rational(1, 50), Rational(1, 3));
  const nlohmann::json j = to_json(r);
  for (const char* k : {"n", "count", "complete", "processed", "excluded", "negative_roots", "boxes", "outer_clear"}) CHECK_MESSAGE(j.contains(k), k);
  CHECK(j["count"] == 9);
  CHECK(j["boxes"][0].contains("status"));
  CHECK(to_string(BoxStatus::unique_root) == "unique-root");
}

TEST_CASE("region dimension mismatch")
{
  CHECK_THROWS_AS(interval_solve(allee_oracle_system(2, Rational(1), Rational(1, 4)), {RatInterval(Rational(0), Rational(1))}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(allee_oracle_system(0, Rational(1), Rational(1, 4)), std::invalid_argument);
}

}
