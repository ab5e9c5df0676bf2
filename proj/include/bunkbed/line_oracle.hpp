#pragma once

#include <cstddef>
#include <string>

#include "bunkbed/poly.hpp"
#include "bunkbed/report.hpp"

namespace bunkbed {

/// Connection probabilities on the bunkbed of the path 0 - 1 - ... - n, as
/// polynomials in q = 1 - p:
///   a = P((0,0) <-> (n,0))          b = P((0,0) <-> (n,1))
///   c = P((0,0) <-> (n,0) <-> (n,1))
///   tilde_a, tilde_b: connected to exactly the one named endpoint
///   d = tilde_a + tilde_b
struct LineQuantities {
  std::size_t n = 0;
  RationalPoly a{Variable::Q}, b{Variable::Q}, c{Variable::Q}, d{Variable::Q};
  RationalPoly tilde_a{Variable::Q}, tilde_b{Variable::Q};
};

/// Runs the one-step recursions for tilde_a, tilde_b and (c, d); a and b are
/// rebuilt from a + b = 2c + d and the closed-form gap.
LineQuantities line_polys(std::size_t n);

/// q^(n+1) (1-q)^n
RationalPoly line_gap(std::size_t n);

/// a - b == q^(n+1) (1-q)^n, exactly.
bool gap_check(std::size_t n);
bool gap_check(const LineQuantities& line);

struct SeriesCoefficients {
  Rational a[6], c[6], d[6];
};
/// Low-order coefficients of the expansions around q = 0 (valid up to q^n).
SeriesCoefficients expected_series(std::size_t n);

/// Compares coefficients k <= min(5, n) of a, b, c, d with the expected
/// expansions. PASS for n >= 5, PARTIAL below when all checked ones agree.
VerificationReport series_check(std::size_t n);

struct GaussianLimit {
  std::size_t n = 0;
  Rational lambda;
  Rational q;               // rational approximation of lambda / sqrt(n)
  std::string value;        // a_n(q), 40 significant digits
  double value_double = 0;
  std::string target;       // exp(-lambda^2)
  double error = 0;         // |a_n(q) - exp(-lambda^2)|
  std::string gap;          // q^(n+1) (1-q)^n at q
  double gap_log10 = 0;
};

/// Best rational approximation of sqrt(x) with denominator <= max_den, by
/// continued fractions of a high-precision root.
Rational rational_sqrt(const Rational& x, const mpz_class& max_den);

/// Evaluates a_n at a rational approximation (denominator <= 10^40) of
/// lambda / sqrt(n); throws std::invalid_argument unless that is in (0, 1).
GaussianLimit gaussian_limit(std::size_t n, const Rational& lambda);
GaussianLimit gaussian_limit(const LineQuantities& line, const Rational& lambda);

}  // namespace bunkbed
