#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bunkbed {

using Rational = mpq_class;

/// "num/den" in lowest terms, always with an explicit denominator.
std::string to_string(const Rational& r);
/// Accepts "num/den", "num", or a finite decimal such as "0.875".
Rational parse_rational(std::string_view text);

/// Marks whether the indeterminate is the retention probability p or q = 1 - p.
enum class Variable { P, Q };

std::string_view to_string(Variable v);

/// Dense univariate polynomial with exact rational coefficients. The
/// coefficient list never has trailing zeros; the zero polynomial is empty.
class RationalPoly {
 public:
  explicit RationalPoly(Variable var = Variable::P) : var_(var) {}
  RationalPoly(Variable var, std::vector<Rational> coefficients);

  static RationalPoly constant(Variable var, const Rational& c);
  /// c * x^k
  static RationalPoly monomial(Variable var, std::size_t k, const Rational& c = 1);
  /// 1 - x
  static RationalPoly complement(Variable var);

  Variable variable() const { return var_; }
  const std::vector<Rational>& coefficients() const { return coef_; }

  bool is_zero() const { return coef_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coef_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  long valuation() const;

  Rational coeff(std::size_t k) const { return k < coef_.size() ? coef_[k] : Rational(0); }
  Rational eval(const Rational& x) const;

  /// Substitutes x <- 1 - x and flips the variable tag.
  RationalPoly reparam() const;
  RationalPoly pow(unsigned exponent) const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& c);

  RationalPoly operator-() const;

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }

  /// Same tag and same coefficients.
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.var_ == b.var_ && a.coef_ == b.coef_;
  }

  /// Human-readable form, e.g. "p + p^3 - p^4".
  std::string pretty() const;

 private:
  void normalize();
  void require_same_variable(const RationalPoly& other) const;

  Variable var_;
  std::vector<Rational> coef_;
};

enum class PolyOp { Add, Sub, Mul };
RationalPoly poly_arith(const RationalPoly& a, const RationalPoly& b, PolyOp op);

/// Sum over k of counts[k] * x^k * (1 - x)^(total - k); counts.size() <= total + 1.
RationalPoly binomial_form(Variable var, const std::vector<mpz_class>& counts, std::size_t total);

/// {"var": "p"|"q", "coeffs": ["num/den", ...]}
nlohmann::json to_json(const RationalPoly& a);
RationalPoly poly_from_json(const nlohmann::json& j);

}  // namespace bunkbed
