#include "allee/rational.hpp"

#include <stdexcept>

namespace allee {

Rational make_rational(const Integer& num, const Integer& den)
{
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text)
{
  auto digits_only = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_only(num, true) || !digits_only(den, false))
    throw std::invalid_argument("expected a rational of the form num/den, got '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  return make_rational(Integer(n), Integer(std::string(den)));
}

std::string to_string(const Rational& q)
{
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& q) { return sgn(q); }

Integer floor(const Rational& q)
{
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q)
{
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {

// Simplest rational in (lo, hi) with 0 <= lo < hi; hi_inf marks hi = +inf.
Rational simplest_nonneg(const Rational& lo, const Rational& hi, bool hi_inf)
{
  Integer fl = floor(lo);
  Integer next = fl + 1;
  if (hi_inf || Rational(next) < hi) return Rational(next);
  // lo and hi share the integer part fl (hi may equal fl + 1).
  Rational lo_frac = lo - fl;
  Rational hi_frac = hi - fl;
  // x = fl + 1/t with t in (1/hi_frac, 1/lo_frac)
  Rational t_lo = 1 / hi_frac;
  if (lo_frac == 0) return fl + 1 / simplest_nonneg(t_lo, Rational(0), true);
  return fl + 1 / simplest_nonneg(t_lo, 1 / lo_frac, false);
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi)
{
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) return -simplest_nonneg(-hi, -lo, false);
  return simplest_nonneg(lo, hi, false);
}

Rational round_down(const Rational& q, unsigned bits)
{
  if (q.get_den() == 1) return q;
  Integer scaled;
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return make_rational(scaled, den);
}

Rational round_up(const Rational& q, unsigned bits)
{
  if (q.get_den() == 1) return q;
  Integer scaled;
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return make_rational(scaled, den);
}

std::string to_decimal(const Rational& q, int digits)
{
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer num = abs(q.get_num()) * scale;
  Integer whole;
  mpz_tdiv_q(whole.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  std::string s = whole.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (q < 0 ? "-" : "") + s;
}

double to_double(const Rational& q) { return q.get_d(); }

Integer binomial(unsigned n, unsigned k)
{
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned n)
{
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace allee
