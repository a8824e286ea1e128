#include "allee/counting.hpp"

#include "allee/borderpoly.hpp"
#include "allee/elimination.hpp"
#include "allee/realroots.hpp"
#include "allee/systems.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace allee {

namespace {

std::mutex g_mutex;
std::map<std::pair<int, int>, G1Elimination> g_g1;

G1Elimination g1_cached(int n1, int n2)
{
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_g1.find({n1, n2});
    if (it != g_g1.end()) return it->second;
  }
  G1Elimination el = g1_elimination(n1, n2);
  std::lock_guard<std::mutex> lock(g_mutex);
  g_g1.emplace(std::make_pair(n1, n2), el);
  return el;
}

void check_parameters(const Rational& a, const Rational& b)
{
  if (sign(a) <= 0 || sign(b) <= 0 || b >= Rational(1, 2)) throw NonGenericError("parameters outside a > 0, 0 < b < 1/2");
}

UniPoly specialize(const MultiPoly& p, const Rational& a, const Rational& b, Var x)
{
  const MultiPoly s = p.substitute({{Var::a, a}, {Var::b, b}});
  if (s.is_constant()) return UniPoly::constant(s.constant_value());
  return s.to_uni(x);
}

std::string point_text(const Rational& a, const Rational& b) { return "(" + a.get_str() + ", " + b.get_str() + ")"; }

}  // namespace

ReducedCount count_G1(const Rational& a, const Rational& b, int n, int n1, int n2)
{
  if (n1 < 1 || n2 < 1 || n1 + n2 != n) throw std::invalid_argument("count_G1: invalid multiplicities");
  check_parameters(a, b);
  if (bp_G1(std::max(n1, n2), std::min(n1, n2)).vanishes_at(a, b)) throw NonGenericError("count_G1: border polynomial vanishes at " + point_text(a, b));
  const G1Elimination el = g1_cached(n1, n2);
  const UniPoly q = specialize(el.q, a, b, Var::y);
  if (q.is_zero()) throw DegenerateError("count_G1: eliminant vanishes identically");
  const UniPoly znum = specialize(el.z_num, a, b, Var::y);
  const UniPoly cy = specialize(allee_cubic(Var::y), a, b, Var::y);

  ReducedCount rc;
  rc.mult = {n1, n2};
  if (!q.is_constant()) {
    for (auto& r : isolate(squarefree_part(q), Domain::positive())) {
      if (sign_at(cy, r) == 0) continue;
      if (sign_at(znum, r) > 0) ++rc.off_diagonal;
    }
  }
  // y = z in {b, 1}
  rc.total_positive = rc.off_diagonal + 2;
  rc.c_value = rc.off_diagonal;
  return rc;
}

namespace {

int vieta_off_diagonal(const Rational& a, const Rational& b, int n1, int n2, int n3)
{
  const VietaSystem vs = vieta_system(n1, n2, n3);
  const std::map<Var, MultiPoly::Binding> ab{{Var::a, a}, {Var::b, b}};
  const MultiPoly e1 = vs.e1.substitute(ab);
  const MultiPoly e2 = vs.e2.substitute(ab);
  auto uni = [](const MultiPoly& p) { return p.is_constant() ? UniPoly::constant(p.constant_value()) : p.to_uni(Var::y); };
  const UniPoly ry = uni(resultant(e1, e2, Var::z));
  if (ry.is_zero()) throw DegenerateError("count_G2: resultant vanishes identically");
  if (ry.is_constant()) return 0;

  const auto d1 = e1.to_dense(Var::z);
  const auto d2 = e2.to_dense(Var::z);
  // Degree-one subresultant lc(E2) E1 - lc(E1) E2 = s11 z + s10.
  const MultiPoly s1 = d2.back() * e1 - d1.back() * e2;
  const auto ds = s1.to_dense(Var::z);
  const UniPoly s10 = ds.empty() ? UniPoly() : uni(ds[0]);
  const UniPoly s11 = ds.size() > 1 ? uni(ds[1]) : UniPoly();
  const UniPoly y{Rational(0), Rational(1)};
  const UniPoly sum = UniPoly::constant(1 + b) - y;  // y + z + w - y
  const UniPoly e1_const = d1.empty() ? UniPoly() : uni(d1[0]);
  const UniPoly e1_diag = uni(e1.substitute(Var::z, MultiPoly::var(Var::y)));

  int count = 0;
  for (auto& r : isolate(squarefree_part(ry), Domain::positive())) {
    const int t11 = sign_at(s11, r, true);
    if (t11 != 0) {
      const int t10 = sign_at(s10, r, true);
      const bool z_pos = -t10 * t11 > 0;
      const bool w_pos = sign_at(sum * s11 + s10, r, true) * t11 > 0;
      const bool yz = sign_at(y * s11 + s10, r, true) != 0;
      const bool yw = sign_at((sum - y) * s11 + s10, r, true) != 0;
      const bool zw = sign_at(sum * s11 + Rational(2) * s10, r, true) != 0;
      if (z_pos && w_pos && yz && yw && zw) ++count;
    } else {
      // E1(y, .) divides E2(y, .): both roots of -z^2 + sum z + c are
      // solutions, as (y, z1, z2) and (y, z2, z1).
      const bool real_distinct = sign_at(sum * sum + Rational(4) * e1_const, r, true) > 0;
      const bool both_pos = sign_at(-e1_const, r, true) > 0 && sign_at(sum, r, true) > 0;
      const bool y_distinct = sign_at(e1_diag, r, true) != 0;
      if (real_distinct && both_pos && y_distinct) count += 2;
    }
  }
  return count;
}

}  // namespace

int stabilizer_size(const std::vector<int>& mult)
{
  std::map<int, int> groups;
  for (int m : mult) ++groups[m];
  int s = 1;
  for (const auto& [m, k] : groups)
    for (int i = 2; i <= k; ++i) s *= i;
  return s;
}

ReducedCount count_G2(const Rational& a, const Rational& b, int n, int n1, int n2, int n3)
{
  if (n1 < 1 || n2 < 1 || n3 < 1 || n1 + n2 + n3 != n) throw std::invalid_argument("count_G2: invalid multiplicities");
  check_parameters(a, b);
  std::array<int, 3> s{n1, n2, n3};
  std::sort(s.begin(), s.end(), std::greater<>());
  if (bp_G2(s[0], s[1], s[2]).vanishes_at(a, b)) throw NonGenericError("count_G2: border polynomial vanishes at " + point_text(a, b));
  ReducedCount rc;
  rc.mult = {n1, n2, n3};
  rc.off_diagonal = vieta_off_diagonal(a, b, n1, n2, n3);
  // Two equal values: the G1 systems of the merged multiplicities.
  int merged = 0;
  merged += count_G1(a, b, n, n1 + n2, n3).off_diagonal;
  merged += count_G1(a, b, n, n1 + n3, n2).off_diagonal;
  merged += count_G1(a, b, n, n2 + n3, n1).off_diagonal;
  rc.total_positive = 2 + merged + rc.off_diagonal;
  rc.c_value = rc.off_diagonal / stabilizer_size(rc.mult);
  return rc;
}

std::vector<ReducedCount> count_all(const Rational& a, const Rational& b, int n)
{
  const PartitionSet ps = partitions(n);
  std::vector<ReducedCount> out;
  for (auto [n1, n2] : ps.pairs) out.push_back(count_G1(a, b, n, n1, n2));
  for (auto t : ps.triples) out.push_back(count_G2(a, b, n, t[0], t[1], t[2]));
  return out;
}

namespace {

const ReducedCount* find_count(const std::vector<ReducedCount>& counts, const std::vector<int>& mult)
{
  for (const auto& c : counts)
    if (c.mult == mult) return &c;
  return nullptr;
}

long long to_ll(const Integer& z) { return z.get_si(); }

}  // namespace

TotalCount assemble_total(int n, const std::vector<ReducedCount>& counts, FormulaMode mode)
{
  const PartitionSet ps = partitions(n);
  TotalCount tc;
  tc.n = n;
  tc.mode = mode;
  long long total = 3;
  auto need = [&](const std::vector<int>& m) {
    const ReducedCount* c = find_count(counts, m);
    if (!c) {
      std::string s;
      for (int x : m) s += (s.empty() ? "" : ",") + std::to_string(x);
      throw std::invalid_argument("assemble_total: missing partition (" + s + ")");
    }
    tc.counts.push_back(*c);
    return c;
  };
  for (auto [n1, n2] : ps.pairs) {
    const ReducedCount* c = need({n1, n2});
    const long long placements = to_ll(binomial(static_cast<unsigned>(n), static_cast<unsigned>(n1)));
    if (mode == FormulaMode::closed_form)
      total += c->c_value * placements;
    else
      total += c->off_diagonal * placements / (n1 == n2 ? 2 : 1);
  }
  for (auto t : ps.triples) {
    const ReducedCount* c = need({t[0], t[1], t[2]});
    const long long placements =
        to_ll(binomial(static_cast<unsigned>(n), static_cast<unsigned>(t[0])) * binomial(static_cast<unsigned>(n - t[0]), static_cast<unsigned>(t[1])));
    if (mode == FormulaMode::closed_form)
      total += c->c_value * placements;
    else
      total += c->off_diagonal * placements / stabilizer_size({t[0], t[1], t[2]});
  }
  tc.assembled_total = total;
  return tc;
}

std::optional<long long> example_expression(int n, const std::vector<ReducedCount>& counts)
{
  if (n != 4) return std::nullopt;
  const ReducedCount* c22 = find_count(counts, {2, 2});
  const ReducedCount* c31 = find_count(counts, {3, 1});
  const ReducedCount* c211 = find_count(counts, {2, 1, 1});
  if (!c22 || !c31 || !c211) return std::nullopt;
  return c22->c_value * 6LL + c31->c_value * 3LL + c211->c_value * 6LL * 2LL + 3;
}

void clear_counting_memo()
{
  std::lock_guard<std::mutex> lock(g_mutex);
  g_g1.clear();
}

std::string to_string(FormulaMode m) { return m == FormulaMode::closed_form ? "paper" : "dedup"; }

FormulaMode parse_formula_mode(const std::string& s)
{
  if (s == "paper" || s == "paper-theorem-3") return FormulaMode::closed_form;
  if (s == "dedup") return FormulaMode::dedup;
  throw std::invalid_argument("unknown formula mode: " + s);
}

}  // namespace allee
