#include "allee/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace allee {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree)
{
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots)
{
  UniPoly p = constant(1);
  for (const auto& r : roots) p *= UniPoly({-r, Rational(1)});
  return p;
}

void UniPoly::trim()
{
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UniPoly::lc() const
{
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational UniPoly::coeff(int i) const
{
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::eval(const Rational& x) const
{
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const
{
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::shift(const Rational& t) const
{
  std::vector<Rational> r = c_;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) r[j - 1] += t * r[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::scale(const Rational& s) const
{
  std::vector<Rational> r = c_;
  Rational p = 1;
  for (auto& x : r) {
    x *= p;
    p *= s;
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const
{
  if (is_zero()) return {};
  return *this * (1 / lc());
}

UniPoly UniPoly::operator-() const
{
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o)
{
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s)
{
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const
{
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<Rational> r = c_;
  const int dd = d.degree();
  if (degree() < dd) return {UniPoly(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - dd) + 1);
  const Rational inv = 1 / d.lc();
  for (int k = degree(); k >= dd; --k) {
    const Rational t = r[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - dd)] = t;
    if (t == 0) continue;
    for (int i = 0; i <= dd; ++i) r[static_cast<std::size_t>(k - dd + i)] -= t * d.c_[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const
{
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("UniPoly::exact_div: nonzero remainder");
  return q;
}

std::vector<Integer> UniPoly::primitive_integer() const
{
  Integer l = 1;
  for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  zpoly::ZPoly z(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) z[i] = c_[i].get_num() * (l / c_[i].get_den());
  zpoly::make_primitive(z);
  return z;
}

UniPoly UniPoly::from_integer(const std::vector<Integer>& c)
{
  std::vector<Rational> r(c.begin(), c.end());
  return UniPoly(std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const
{
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& x = c_[static_cast<std::size_t>(k)];
    if (x == 0) continue;
    Rational m = abs(x);
    os << (x < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (k == 0 || m != 1) os << allee::to_string(m) << (k ? "*" : "");
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// integer polynomials

namespace zpoly {

void trim(ZPoly& p)
{
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const ZPoly& p)
{
  Integer g = 0;
  for (const auto& x : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p)
{
  trim(p);
  if (p.empty()) return;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

int sign_at(const ZPoly& p, const Integer& num, const Integer& den)
{
  // Homogenised Horner: sum c_i num^i den^(d-i).
  if (p.empty()) return 0;
  Integer acc = p.back();
  Integer dpow = den;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    acc *= num;
    acc += p[i] * dpow;
    dpow *= den;
  }
  return sgn(acc);
}

void taylor_shift_one(ZPoly& p)
{
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) p[j - 1] += p[j];
}

int sign_variations(const ZPoly& p)
{
  int v = 0;
  int last = 0;
  for (const auto& x : p) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

namespace {

using u64 = unsigned long;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 powmod(u64 a, u64 e, u64 m)
{
  u64 r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<u64> reduce(const ZPoly& p, u64 m)
{
  std::vector<u64> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = mpz_fdiv_ui(p[i].get_mpz_t(), m);
  return r;
}

void trim_mod(std::vector<u64>& p)
{
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

int modular_gcd_degree(const ZPoly& p, const ZPoly& q, unsigned long prime)
{
  auto a = reduce(p, prime);
  auto b = reduce(q, prime);
  if (a.size() != p.size() || b.size() != q.size()) return -1;
  if ((!a.empty() && a.back() == 0) || (!b.empty() && b.back() == 0)) return -1;
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    // a mod b
    const u64 inv = powmod(b.back(), prime - 2, prime);
    while (a.size() >= b.size() && !a.empty()) {
      const u64 t = mulmod(a.back(), inv, prime);
      const std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = (a[off + i] + prime - mulmod(t, b[i], prime)) % prime;
      trim_mod(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace zpoly

namespace {

using zpoly::ZPoly;

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over Z.
ZPoly prem(ZPoly a, const ZPoly& b)
{
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const std::size_t off = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[off + i] -= la * b[i];
    zpoly::trim(a);
  }
  return a;
}

ZPoly primitive_gcd(ZPoly a, ZPoly b)
{
  zpoly::make_primitive(a);
  zpoly::make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = prem(a, b);
    zpoly::make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

constexpr unsigned long kPrimes[] = {4611686018427387847UL, 4611686018427387817UL, 4611686018427387787UL};

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return UniPoly::constant(1);
  ZPoly za = a.primitive_integer();
  ZPoly zb = b.primitive_integer();
  for (unsigned long p : kPrimes) {
    const int d = zpoly::modular_gcd_degree(za, zb, p);
    if (d == 0) return UniPoly::constant(1);
    if (d > 0) break;
  }
  return UniPoly::from_integer(primitive_gcd(std::move(za), std::move(zb))).monic();
}

SquarefreeResult gcd_and_squarefree(const UniPoly& p)
{
  if (p.is_zero()) throw std::invalid_argument("gcd_and_squarefree: zero polynomial");
  SquarefreeResult res;
  if (p.is_constant()) {
    res.part = UniPoly::constant(1);
    return res;
  }
  // Yun's algorithm.
  const UniPoly f = p.monic();
  const UniPoly df = f.derivative();
  UniPoly a = gcd(f, df);
  UniPoly b = f.exact_div(a);
  UniPoly c = df.exact_div(a);
  UniPoly d = c - b.derivative();
  res.part = b;
  while (!b.is_constant()) {
    UniPoly g = gcd(b, d);
    res.factors.push_back(g);
    b = b.exact_div(g);
    c = d.exact_div(g);
    d = c - b.derivative();
  }
  while (!res.factors.empty() && res.factors.back().is_constant()) res.factors.pop_back();
  return res;
}

UniPoly squarefree_part(const UniPoly& p) { return gcd_and_squarefree(p).part; }

}  // namespace allee
