#include "allee/realroots.hpp"

#include <algorithm>
#include <atomic>

namespace allee {

namespace {

using zpoly::ZPoly;

std::atomic<bool> g_cross_check{false};

ZPoly to_z(const UniPoly& p) { return p.primitive_integer(); }

void strip_low_zeros(ZPoly& p)
{
  std::size_t k = 0;
  while (k + 1 < p.size() && p[k] == 0) ++k;
  if (k) p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
}

int sign_of(const ZPoly& q, const Rational& x) { return zpoly::sign_at(q, x.get_num(), x.get_den()); }

// Variations of (x+1)^d p(1/(x+1)): bounds the roots of p in (0, 1).
int unit_variations(const ZPoly& p)
{
  ZPoly t(p.rbegin(), p.rend());
  zpoly::trim(t);
  zpoly::taylor_shift_one(t);
  return zpoly::sign_variations(t);
}

// 2^d p(x/2)
ZPoly halve(const ZPoly& p)
{
  ZPoly out = p;
  const std::size_t d = p.size() - 1;
  for (std::size_t i = 0; i < p.size(); ++i) out[i] <<= static_cast<mp_bitcnt_t>(d - i);
  zpoly::make_primitive(out);
  return out;
}

void check_squarefree(const UniPoly& p)
{
  if (p.is_zero()) throw std::invalid_argument("isolate: zero polynomial");
  if (p.degree() >= 1 && gcd(p, p.derivative()).degree() > 0) throw NotSquarefreeError("isolate: polynomial is not squarefree");
}

IsolatedRoot exact_root(const UniPoly& p, const Rational& x) { return {p, RatInterval::point(x), 0, 0}; }

struct Node {
  ZPoly poly;
  Integer c;
  unsigned k;
};

std::vector<IsolatedRoot> isolate_closed(const UniPoly& p, const Rational& L, const Rational& H)
{
  std::vector<IsolatedRoot> out;
  if (p.is_constant()) return out;
  const ZPoly q = to_z(p);
  // q is normalised to a positive leading coefficient; stored signs refer to p.
  const int orient = sign(p.lc());
  const int sL = sign_of(q, L);
  if (L == H) {
    if (sL == 0) out.push_back(exact_root(p, L));
    return out;
  }
  const int sH = sign_of(q, H);
  if (sL == 0) out.push_back(exact_root(p, L));
  if (sH == 0) out.push_back(exact_root(p, H));

  if (p.degree() == 1) {
    const Rational x = -p.coeff(0) / p.lc();
    if (L < x && x < H) out.push_back(exact_root(p, x));
    return out;
  }

  const Rational width = H - L;
  auto point = [&](const Integer& c, unsigned k) {
    Rational t(c, Integer(1) << static_cast<mp_bitcnt_t>(k));
    t.canonicalize();
    return Rational(L + width * t);
  };

  ZPoly base = to_z(p.shift(L).scale(width));
  strip_low_zeros(base);
  std::vector<Node> stack;
  stack.push_back({std::move(base), Integer(0), 0});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.poly.size() <= 1) continue;
    const int v = unit_variations(node.poly);
    if (v == 0) continue;
    if (v == 1) {
      const Rational lo = point(node.c, node.k);
      const Rational hi = point(node.c + 1, node.k);
      const int slo = sign_of(q, lo);
      const int shi = sign_of(q, hi);
      if (slo != 0 && shi != 0) {
        const Rational cand = simplest_between(lo, hi);
        if (sign_of(q, cand) == 0)
          out.push_back(exact_root(p, cand));
        else
          out.push_back({p, RatInterval(lo, hi), slo * orient, shi * orient});
        continue;
      }
    }
    ZPoly left = halve(node.poly);
    ZPoly right = left;
    zpoly::taylor_shift_one(right);
    if (right[0] == 0) {
      out.push_back(exact_root(p, point(2 * node.c + 1, node.k + 1)));
      strip_low_zeros(right);
    }
    stack.push_back({std::move(right), 2 * node.c + 1, node.k + 1});
    stack.push_back({std::move(left), 2 * node.c, node.k + 1});
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.interval.lo < b.interval.lo; });
  return out;
}

std::pair<Rational, Rational> finite_bounds(const UniPoly& p, const Domain& d)
{
  const Rational B = p.is_constant() ? Rational(1) : cauchy_bound(p);
  Rational L = d.lo ? *d.lo : Rational(-B);
  Rational H = d.hi ? *d.hi : B;
  if (d.lo && !d.hi && H <= L) H = L + 1;
  if (d.hi && !d.lo && L >= H) L = H - 1;
  if (H < L) throw std::invalid_argument("domain: lo > hi");
  return {L, H};
}

std::vector<IsolatedRoot> filter_open(std::vector<IsolatedRoot> roots, const Domain& d)
{
  std::vector<IsolatedRoot> out;
  for (auto& r : roots) {
    if (r.exact()) {
      if (d.open_lo && d.lo && r.interval.lo == *d.lo) continue;
      if (d.open_hi && d.hi && r.interval.lo == *d.hi) continue;
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Sturm sequence with each member scaled by a positive constant.
std::vector<ZPoly> sturm_sequence(const UniPoly& p)
{
  auto positive_scaled = [](const UniPoly& u) {
    ZPoly z = u.primitive_integer();
    if (sign(u.lc()) < 0)
      for (auto& c : z) c = -c;
    return z;
  };
  std::vector<ZPoly> seq;
  UniPoly a = p;
  UniPoly b = p.derivative();
  seq.push_back(positive_scaled(a));
  while (!b.is_zero()) {
    seq.push_back(positive_scaled(b));
    UniPoly r = -a.divmod(b).second;
    a = UniPoly::from_integer(seq.back());
    b = r.is_zero() ? r : UniPoly::from_integer(positive_scaled(r));
  }
  return seq;
}

int variations_at(const std::vector<ZPoly>& seq, const Rational& x)
{
  int v = 0, last = 0;
  for (const auto& s : seq) {
    const int sg = sign_of(s, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

}  // namespace

std::string IsolatedRoot::describe(int digits) const
{
  if (exact()) return interval.lo.get_str();
  return to_decimal(interval.mid(), digits) + " +/- " + to_decimal(interval.width() / 2, digits);
}

Rational cauchy_bound(const UniPoly& p)
{
  if (p.is_zero()) throw std::invalid_argument("cauchy_bound: zero polynomial");
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.lc())));
  return 1 + m;
}

int descartes_bound(const UniPoly& p, const Rational& lo, const Rational& hi)
{
  if (p.is_zero()) throw std::invalid_argument("descartes_bound: zero polynomial");
  if (!(lo < hi)) return 0;
  ZPoly z = to_z(p.shift(lo).scale(hi - lo));
  strip_low_zeros(z);
  if (z.size() <= 1) return 0;
  return unit_variations(z);
}

namespace {

// Sort and bisect until consecutive intervals are strictly separated.
void make_disjoint(std::vector<IsolatedRoot>& all)
{
  auto by_lo = [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.interval.lo < b.interval.lo; };
  std::sort(all.begin(), all.end(), by_lo);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      auto& x = all[i];
      auto& y = all[i + 1];
      if (x.interval.hi < y.interval.lo) continue;
      if (x.exact() && y.exact()) throw std::invalid_argument("isolate: polynomials share a root");
      if (!x.exact() && (y.exact() || x.interval.width() >= y.interval.width()))
        x = bisect(x);
      else
        y = bisect(y);
      changed = true;
    }
    if (changed) std::sort(all.begin(), all.end(), by_lo);
  }
}

}  // namespace

std::vector<IsolatedRoot> isolate(const UniPoly& p, const RatInterval& domain)
{
  check_squarefree(p);
  auto roots = isolate_closed(p, domain.lo, domain.hi);
  make_disjoint(roots);
  if (g_cross_check.load(std::memory_order_relaxed)) {
    const int s = sturm_count(p, Domain::closed(domain.lo, domain.hi));
    if (s != static_cast<int>(roots.size())) throw std::logic_error("isolate: Sturm cross-check failed");
  }
  return roots;
}

std::vector<IsolatedRoot> isolate(const UniPoly& p, const Domain& domain)
{
  check_squarefree(p);
  const auto [L, H] = finite_bounds(p, domain);
  auto roots = filter_open(isolate_closed(p, L, H), domain);
  make_disjoint(roots);
  if (g_cross_check.load(std::memory_order_relaxed)) {
    const int s = sturm_count(p, domain);
    if (s != static_cast<int>(roots.size())) throw std::logic_error("isolate: Sturm cross-check failed");
  }
  return roots;
}

std::vector<IsolatedRoot> isolate_many(const std::vector<UniPoly>& polys, const Domain& domain)
{
  std::vector<IsolatedRoot> all;
  for (const auto& p : polys) {
    if (p.is_constant()) continue;
    auto r = isolate(p, domain);
    all.insert(all.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  make_disjoint(all);
  return all;
}

IsolatedRoot bisect(const IsolatedRoot& r)
{
  if (r.exact()) return r;
  const Rational m = r.interval.mid();
  const int s = r.poly.sign_at(m);
  if (s == 0) return exact_root(r.poly, m);
  IsolatedRoot out = r;
  if (s == r.sign_lo) {
    out.interval = RatInterval(m, r.interval.hi);
    out.sign_lo = s;
  } else {
    out.interval = RatInterval(r.interval.lo, m);
    out.sign_hi = s;
  }
  return out;
}

IsolatedRoot refine(const IsolatedRoot& r, const Rational& width)
{
  IsolatedRoot out = r;
  while (!out.exact() && out.interval.width() > width) out = bisect(out);
  return out;
}

int sign_at(const UniPoly& q, IsolatedRoot& r, bool keep_refinement)
{
  if (r.exact()) return q.sign_at(r.interval.lo);
  if (q.is_constant()) return q.is_zero() ? 0 : sign(q.lc());
  const UniPoly g = gcd(q, r.poly);
  if (g.degree() >= 1 && g.sign_at(r.interval.lo) != g.sign_at(r.interval.hi)) return 0;
  IsolatedRoot work = r;
  int result;
  while (true) {
    if (work.exact()) {
      result = q.sign_at(work.interval.lo);
      break;
    }
    if (descartes_bound(q, work.interval.lo, work.interval.hi) == 0) {
      result = q.sign_at(work.interval.mid());
      break;
    }
    work = bisect(work);
  }
  if (keep_refinement) r = work;
  return result;
}

int sign_at(const UniPoly& q, const IsolatedRoot& r)
{
  IsolatedRoot copy = r;
  return sign_at(q, copy, false);
}

int count_in(const UniPoly& p, const Domain& domain)
{
  if (p.is_zero()) throw std::invalid_argument("count_in: zero polynomial");
  if (p.is_constant()) return 0;
  const UniPoly s = squarefree_part(p);
  const auto [L, H] = finite_bounds(s, domain);
  const int n = static_cast<int>(filter_open(isolate_closed(s, L, H), domain).size());
  if (g_cross_check.load(std::memory_order_relaxed) && sturm_count(s, domain) != n) throw std::logic_error("count_in: Sturm cross-check failed");
  return n;
}

int sturm_count(const UniPoly& p, const Domain& domain)
{
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (p.is_constant()) return 0;
  const UniPoly s = squarefree_part(p);
  const auto [L0, H0] = finite_bounds(s, domain);
  const auto seq = sturm_sequence(s);
  int endpoint_roots = 0;
  // Move root endpoints slightly inward so the open count is well defined.
  auto nudge = [&](Rational x, int dir, bool closed) {
    if (s.sign_at(x) != 0) return x;
    if (closed) ++endpoint_roots;
    Rational eps = (H0 - L0) / 2;
    while (true) {
      const Rational y = x + dir * eps;
      const Rational a = dir > 0 ? x : y;
      const Rational b = dir > 0 ? y : x;
      if (s.sign_at(y) != 0 && descartes_bound(s, a, b) == 0) return y;
      eps /= 2;
    }
  };
  if (L0 == H0) return s.sign_at(L0) == 0 && !domain.open_lo && !domain.open_hi ? 1 : 0;
  const Rational L = nudge(L0, +1, !domain.open_lo);
  const Rational H = nudge(H0, -1, !domain.open_hi);
  return variations_at(seq, L) - variations_at(seq, H) + endpoint_roots;
}

void set_sturm_cross_check(bool on) { g_cross_check.store(on); }
bool sturm_cross_check() { return g_cross_check.load(); }

}  // namespace allee
