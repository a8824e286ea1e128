#pragma once

#include "allee/rational.hpp"
#include "allee/unipoly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace allee {

/// Canonical variable order. State variables precede parameters, so
/// elimination always removes y, z, w before a, b.
enum class Var : std::uint8_t { y, z, w, a, b, n1, n2, n3 };

inline constexpr std::size_t kNumVars = 8;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::y, Var::z, Var::w, Var::a, Var::b, Var::n1, Var::n2, Var::n3};

std::string_view var_name(Var v);
Var parse_var(std::string_view name);
inline std::size_t index(Var v) { return static_cast<std::size_t>(v); }

using Exponents = std::array<std::uint16_t, kNumVars>;

/// Sparse multivariate polynomial over Q. Terms are kept sorted in
/// descending graded-lexicographic order with no zero coefficients, so
/// structural equality is polynomial equality.
class MultiPoly {
 public:
  struct Term {
    Exponents exp{};
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT
  static MultiPoly var(Var v, unsigned power = 1);
  static MultiPoly monomial(const Rational& c, const Exponents& e);
  static MultiPoly from_terms(std::vector<Term> terms);
  static MultiPoly from_uni(const UniPoly& p, Var v);
  static MultiPoly from_dense(const std::vector<MultiPoly>& coeffs, Var v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const;
  const Rational& lc() const { return leading_term().coeff; }

  int degree(Var v) const;
  int total_degree() const;
  bool has_var(Var v) const { return degree(v) > 0; }
  /// Variables that occur, in canonical order.
  std::vector<Var> vars() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(Var v) const;

  using Binding = std::variant<Rational, MultiPoly>;
  /// Simultaneous substitution (the evaluation homomorphism).
  MultiPoly substitute(const std::map<Var, Binding>& bindings) const;
  MultiPoly substitute(Var v, const Rational& value) const;
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  /// Full evaluation; every occurring variable must be bound.
  Rational eval(const std::map<Var, Rational>& point) const;

  /// Coefficients with respect to v: result[k] is the coefficient of v^k.
  std::vector<MultiPoly> to_dense(Var v) const;
  /// Requires that no variable other than v occurs.
  UniPoly to_uni(Var v) const;

  /// Quotient if d divides *this exactly, std::nullopt otherwise.
  std::optional<MultiPoly> divide(const MultiPoly& d) const;
  MultiPoly exact_div(const MultiPoly& d) const;

  /// Primitive integer multiple with positive leading coefficient; 0 stays 0.
  MultiPoly normalized() const;

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

/// Graded-lex comparison: true when a comes strictly before b (a > b).
bool deglex_greater(const Exponents& a, const Exponents& b);

}  // namespace allee
