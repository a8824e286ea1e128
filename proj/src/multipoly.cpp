#include "allee/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace allee {

namespace {

constexpr std::array<std::string_view, kNumVars> kNames{"y", "z", "w", "a", "b", "n1", "n2", "n3"};

int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

std::string_view var_name(Var v) { return kNames[index(v)]; }

Var parse_var(std::string_view name)
{
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (kNames[i] == name) return kAllVars[i];
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

bool deglex_greater(const Exponents& a, const Exponents& b)
{
  const int ta = total(a);
  const int tb = total(b);
  if (ta != tb) return ta > tb;
  return a > b;
}

MultiPoly::MultiPoly(const Rational& c)
{
  if (c != 0) terms_.push_back({Exponents{}, c});
}

MultiPoly MultiPoly::var(Var v, unsigned power)
{
  Exponents e{};
  e[index(v)] = static_cast<std::uint16_t>(power);
  return monomial(Rational(1), e);
}

MultiPoly MultiPoly::monomial(const Rational& c, const Exponents& e)
{
  MultiPoly p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms)
{
  MultiPoly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

MultiPoly MultiPoly::from_uni(const UniPoly& u, Var v)
{
  std::vector<Term> t;
  for (int k = 0; k <= u.degree(); ++k) {
    if (u.coeff(k) == 0) continue;
    Exponents e{};
    e[index(v)] = static_cast<std::uint16_t>(k);
    t.push_back({e, u.coeff(k)});
  }
  return from_terms(std::move(t));
}

MultiPoly MultiPoly::from_dense(const std::vector<MultiPoly>& coeffs, Var v)
{
  std::vector<Term> t;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& term : coeffs[k].terms_) {
      Term s = term;
      s.exp[index(v)] = static_cast<std::uint16_t>(s.exp[index(v)] + k);
      t.push_back(std::move(s));
    }
  return from_terms(std::move(t));
}

void MultiPoly::canonicalize()
{
  std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return deglex_greater(x.exp, y.exp); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coeff == 0; }), out.end());
  terms_ = std::move(out);
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && total(terms_[0].exp) == 0); }

Rational MultiPoly::constant_value() const
{
  if (!is_constant()) throw std::domain_error("MultiPoly::constant_value on a non-constant polynomial");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

const MultiPoly::Term& MultiPoly::leading_term() const
{
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

int MultiPoly::degree(Var v) const
{
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.exp[index(v)]);
  return d;
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : total(terms_.front().exp); }

std::vector<Var> MultiPoly::vars() const
{
  std::array<bool, kNumVars> seen{};
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kNumVars; ++i) seen[i] = seen[i] || t.exp[i] > 0;
  std::vector<Var> out;
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (seen[i]) out.push_back(kAllVars[i]);
  return out;
}

MultiPoly MultiPoly::operator-() const
{
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge two sorted term lists, combining with sign.
std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a, const std::vector<MultiPoly::Term>& b, bool subtract)
{
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && deglex_greater(a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || deglex_greater(b[j].exp, a[i].exp)) {
      out.push_back({b[j].exp, subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
  if (a.is_zero() || b.is_zero()) return {};
  std::map<Exponents, Rational> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Exponents e;
      for (std::size_t k = 0; k < kNumVars; ++k) e[k] = static_cast<std::uint16_t>(s.exp[k] + t.exp[k]);
      acc[e] += s.coeff * t.coeff;
    }
  std::vector<MultiPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) terms.push_back({e, std::move(c)});
  MultiPoly r;
  r.terms_ = std::move(terms);
  std::sort(r.terms_.begin(), r.terms_.end(), [](const MultiPoly::Term& x, const MultiPoly::Term& y) { return deglex_greater(x.exp, y.exp); });
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& s)
{
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
  MultiPoly r(1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::derivative(Var v) const
{
  std::vector<Term> t;
  for (const auto& term : terms_) {
    const auto k = term.exp[index(v)];
    if (k == 0) continue;
    Term d = term;
    d.exp[index(v)] = static_cast<std::uint16_t>(k - 1);
    d.coeff *= k;
    t.push_back(std::move(d));
  }
  return from_terms(std::move(t));
}

MultiPoly MultiPoly::substitute(const std::map<Var, Binding>& bindings) const
{
  // Powers of every bound value are cached per variable.
  std::array<std::vector<MultiPoly>, kNumVars> powers;
  std::array<bool, kNumVars> bound{};
  for (const auto& [v, b] : bindings) {
    bound[index(v)] = true;
    powers[index(v)].push_back(MultiPoly(1));
  }
  auto power_of = [&](std::size_t vi, unsigned k) -> const MultiPoly& {
    auto& cache = powers[vi];
    const auto& b = bindings.at(kAllVars[vi]);
    const MultiPoly base = std::holds_alternative<Rational>(b) ? MultiPoly(std::get<Rational>(b)) : std::get<MultiPoly>(b);
    while (cache.size() <= k) cache.push_back(cache.back() * base);
    return cache[k];
  };
  MultiPoly result;
  for (const auto& term : terms_) {
    Exponents rest = term.exp;
    MultiPoly factor(term.coeff);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (!bound[i] || term.exp[i] == 0) continue;
      rest[i] = 0;
      factor = factor * power_of(i, term.exp[i]);
    }
    result += factor * monomial(Rational(1), rest);
  }
  return result;
}

MultiPoly MultiPoly::substitute(Var v, const Rational& value) const { return substitute({{v, Binding(value)}}); }

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const { return substitute({{v, Binding(value)}}); }

Rational MultiPoly::eval(const std::map<Var, Rational>& point) const
{
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational m = t.coeff;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (t.exp[i] == 0) continue;
      auto it = point.find(kAllVars[i]);
      if (it == point.end()) throw std::invalid_argument("MultiPoly::eval: unbound variable " + std::string(kNames[i]));
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), t.exp[i]);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), t.exp[i]);
      m *= p;
    }
    acc += m;
  }
  return acc;
}

std::vector<MultiPoly> MultiPoly::to_dense(Var v) const
{
  const int d = degree(v);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(d, 0)) + 1);
  if (d < 0) return {};
  for (const auto& t : terms_) {
    Term s = t;
    const auto k = s.exp[index(v)];
    s.exp[index(v)] = 0;
    buckets[k].push_back(std::move(s));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

UniPoly MultiPoly::to_uni(Var v) const
{
  std::vector<Rational> c(static_cast<std::size_t>(std::max(degree(v), 0)) + 1);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (i != index(v) && t.exp[i] != 0)
        throw std::invalid_argument("MultiPoly::to_uni: polynomial involves " + std::string(kNames[i]));
    c[t.exp[index(v)]] = t.coeff;
  }
  return UniPoly(std::move(c));
}

std::optional<MultiPoly> MultiPoly::divide(const MultiPoly& d) const
{
  if (d.is_zero()) throw std::domain_error("MultiPoly division by zero");
  if (d.is_constant()) return *this * (1 / d.constant_value());
  MultiPoly rem = *this;
  std::vector<Term> quotient;
  const Term& lt = d.leading_term();
  const Rational inv = 1 / lt.coeff;
  while (!rem.is_zero()) {
    const Term& r = rem.leading_term();
    Exponents e;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (r.exp[i] < lt.exp[i]) return std::nullopt;
      e[i] = static_cast<std::uint16_t>(r.exp[i] - lt.exp[i]);
    }
    Term q{e, r.coeff * inv};
    MultiPoly qt = monomial(q.coeff, q.exp);
    quotient.push_back(std::move(q));
    rem -= qt * d;
  }
  return from_terms(std::move(quotient));
}

MultiPoly MultiPoly::exact_div(const MultiPoly& d) const
{
  auto q = divide(d);
  if (!q) throw std::domain_error("MultiPoly::exact_div: not divisible");
  return *std::move(q);
}

MultiPoly MultiPoly::normalized() const
{
  if (is_zero()) return {};
  Integer l = 1;
  Integer g = 0;
  for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  for (const auto& t : terms_) {
    Integer n = t.coeff.get_num() * (l / t.coeff.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational s = make_rational(l, g);
  if (lc() < 0) s = -s;
  return *this * s;
}

std::string MultiPoly::to_string() const
{
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational m = abs(t.coeff);
    os << (t.coeff < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const bool unit_monomial = total(t.exp) == 0;
    bool need_star = false;
    if (unit_monomial || m != 1) {
      os << allee::to_string(m);
      need_star = true;
    }
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (t.exp[i] == 0) continue;
      if (need_star) os << "*";
      os << kNames[i];
      if (t.exp[i] > 1) os << "^" << t.exp[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace allee
