#pragma once

#include "allee/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace allee {

/// Dense univariate polynomial with rational coefficients, indexed by degree.
/// The coefficient vector never carries trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  /// Monic product of (x - r) over the given roots.
  static UniPoly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& lc() const;
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return sign(eval(x)); }
  UniPoly derivative() const;
  /// p(x + t)
  UniPoly shift(const Rational& t) const;
  /// p(s * x)
  UniPoly scale(const Rational& s) const;
  UniPoly monic() const;
  UniPoly operator-() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division over Q.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  /// Exact division; throws std::domain_error on a nonzero remainder.
  UniPoly exact_div(const UniPoly& d) const;

  /// Primitive integer multiple with positive leading coefficient.
  std::vector<Integer> primitive_integer() const;
  static UniPoly from_integer(const std::vector<Integer>& c);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd over Q; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct SquarefreeResult {
  /// Yun decomposition: factors[i] is the product of the irreducible factors
  /// of multiplicity i + 1 (monic, possibly constant 1).
  std::vector<UniPoly> factors;
  /// Monic squarefree part: same roots as the input, all simple.
  UniPoly part;
};

/// Throws std::invalid_argument on the zero polynomial.
SquarefreeResult gcd_and_squarefree(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);

/// Integer polynomial helpers shared with root isolation.
namespace zpoly {
using ZPoly = std::vector<Integer>;
void trim(ZPoly& p);
Integer content(const ZPoly& p);
void make_primitive(ZPoly& p);
/// Sign of p(num/den) without forming the rational value.
int sign_at(const ZPoly& p, const Integer& num, const Integer& den);
/// p(x + 1) in place.
void taylor_shift_one(ZPoly& p);
/// Number of sign changes in the coefficient sequence, zeros skipped.
int sign_variations(const ZPoly& p);
/// Degree of gcd(p, q) modulo a word-sized prime, or -1 if the prime is bad
/// for this pair (divides a leading coefficient).
int modular_gcd_degree(const ZPoly& p, const ZPoly& q, unsigned long prime);
}  // namespace zpoly

}  // namespace allee
