#include "bunkbed/line_oracle.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace bunkbed {

namespace {

RationalPoly qpoly(std::vector<Rational> coef) { return RationalPoly(Variable::Q, std::move(coef)); }

// RAII wrapper for a 256-bit MPFR value.
class Real {
 public:
  Real() { mpfr_init2(x_, 256); }
  ~Real() { mpfr_clear(x_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }

  std::string str(int digits = 40) const {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, x_);
    return buf;
  }

 private:
  mpfr_t x_;
};

}  // namespace

LineQuantities line_polys(std::size_t n) {
  const auto q = qpoly({0, 1});
  const auto one_minus_q = qpoly({1, -1});
  const auto step_tilde = q * one_minus_q;                  // q(1-q)
  const auto feed_tilde = q * q * one_minus_q;              // q^2(1-q)
  const auto cc = qpoly({1, 2}) * one_minus_q * one_minus_q;  // (1+2q)(1-q)^2
  const auto cd = one_minus_q * one_minus_q;                  // (1-q)^2
  const auto dc = Rational(2) * feed_tilde;                   // 2q^2(1-q)
  const auto dd = step_tilde;                                 // q(1-q)

  LineQuantities out;
  out.n = n;
  out.tilde_a = q;
  out.tilde_b = qpoly({});
  out.c = one_minus_q;
  out.d = q;
  for (std::size_t k = 1; k <= n; ++k) {
    auto ta = step_tilde * out.tilde_a + feed_tilde * out.c;
    auto tb = step_tilde * out.tilde_b + feed_tilde * out.c;
    auto c = cc * out.c + cd * out.d;
    auto d = dc * out.c + dd * out.d;
    out.tilde_a = std::move(ta);
    out.tilde_b = std::move(tb);
    out.c = std::move(c);
    out.d = std::move(d);
  }
  const auto sum = Rational(2) * out.c + out.d;
  const auto gap = line_gap(n);
  out.a = (sum + gap) * Rational(1, 2);
  out.b = (sum - gap) * Rational(1, 2);
  return out;
}

RationalPoly line_gap(std::size_t n) {
  return RationalPoly::monomial(Variable::Q, n + 1) * qpoly({1, -1}).pow(static_cast<unsigned>(n));
}

bool gap_check(const LineQuantities& line) { return line.a - line.b == line_gap(line.n); }

bool gap_check(std::size_t n) { return gap_check(line_polys(n)); }

SeriesCoefficients expected_series(std::size_t n) {
  const mpz_class m(static_cast<unsigned long>(n));
  SeriesCoefficients s;
  for (int k = 0; k < 6; ++k) s.a[k] = s.c[k] = s.d[k] = 0;
  s.c[0] = 1;
  s.c[2] = -(m + 3);
  s.c[3] = -2 * (m - 1);
  s.c[4] = Rational(m * m + 9 * m + 16, 2);
  s.c[5] = 2 * (m * m + 3 * m - 10);
  s.d[2] = 2;
  s.d[4] = -2 * (m + 3);
  s.d[5] = -4 * (m - 2);
  s.a[0] = 1;
  s.a[2] = -(m + 2);
  s.a[3] = -2 * (m - 1);
  s.a[4] = Rational(m * m + 7 * m + 10, 2);
  s.a[5] = 2 * (m * m + 2 * m - 8);
  for (auto* row : {s.a, s.c, s.d})
    for (int k = 0; k < 6; ++k) row[k].canonicalize();
  return s;
}

VerificationReport series_check(std::size_t n) {
  VerificationReport report;
  report.check = "series";
  report.set_inputs({{"n", n}});
  const auto line = line_polys(n);
  const auto expected = expected_series(n);
  const std::size_t top = std::min<std::size_t>(5, n);
  nlohmann::json table = nlohmann::json::array();
  bool all_match = true;
  for (std::size_t k = 0; k <= top; ++k) {
    const bool ok = line.a.coeff(k) == expected.a[k] && line.b.coeff(k) == expected.a[k] &&
                    line.c.coeff(k) == expected.c[k] && line.d.coeff(k) == expected.d[k];
    all_match = all_match && ok;
    table.push_back({{"k", k},
                     {"A", to_string(line.a.coeff(k))},
                     {"B", to_string(line.b.coeff(k))},
                     {"C", to_string(line.c.coeff(k))},
                     {"D", to_string(line.d.coeff(k))},
                     {"expected_AB", to_string(expected.a[k])},
                     {"expected_C", to_string(expected.c[k])},
                     {"expected_D", to_string(expected.d[k])},
                     {"match", ok}});
  }
  report.quantities["coefficients"] = table;
  report.quantities["checked_through"] = top;
  if (!all_match) report.require("coefficients", Verdict::Fail);
  else report.require("coefficients", n >= 5 ? Verdict::Pass : Verdict::Partial);
  return report;
}

Rational rational_sqrt(const Rational& x, const mpz_class& max_den) {
  if (x < 0) throw std::invalid_argument("square root of a negative rational");
  // sqrt(a/b) = sqrt(a b) / b, with 384 extra fractional bits.
  constexpr mp_bitcnt_t kBits = 384;
  mpz_class radicand = x.get_num() * x.get_den();
  radicand <<= 2 * kBits;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  mpz_class num = root;
  mpz_class den = x.get_den();
  den <<= kBits;

  // Convergents h/k of num/den; stop before k exceeds max_den.
  mpz_class h_prev = 1, h = 0, k_prev = 0, k = 1;
  mpz_class a = num, b = den;
  Rational best(0);
  while (b != 0) {
    const mpz_class term = a / b;
    const mpz_class h_next = term * h_prev + h;
    const mpz_class k_next = term * k_prev + k;
    if (k_next > max_den) break;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    best = Rational(h_prev, k_prev);
    const mpz_class r = a % b;
    a = b;
    b = r;
  }
  best.canonicalize();
  return best;
}

GaussianLimit gaussian_limit(const LineQuantities& line, const Rational& lambda) {
  const std::size_t n = line.n;
  if (n < 1) throw std::invalid_argument("gaussian limit needs n >= 1");
  if (lambda <= 0) throw std::invalid_argument("gaussian limit needs lambda > 0");
  const Rational square = lambda * lambda / Rational(static_cast<unsigned long>(n));
  if (square >= 1) throw std::invalid_argument("lambda / sqrt(n) must lie in (0, 1)");
  mpz_class max_den;
  mpz_ui_pow_ui(max_den.get_mpz_t(), 10, 40);

  GaussianLimit out;
  out.n = n;
  out.lambda = lambda;
  out.q = rational_sqrt(square, max_den);
  if (out.q <= 0 || out.q >= 1) throw std::invalid_argument("lambda / sqrt(n) must lie in (0, 1)");

  Real value, target, diff, gap;
  mpfr_set_q(value.get(), line.a.eval(out.q).get_mpq_t(), MPFR_RNDN);
  const Rational neg_square = -(lambda * lambda);
  mpfr_set_q(target.get(), neg_square.get_mpq_t(), MPFR_RNDN);
  mpfr_exp(target.get(), target.get(), MPFR_RNDN);
  mpfr_sub(diff.get(), value.get(), target.get(), MPFR_RNDN);
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
  mpfr_set_q(gap.get(), line_gap(n).eval(out.q).get_mpq_t(), MPFR_RNDN);

  out.value = value.str();
  out.value_double = mpfr_get_d(value.get(), MPFR_RNDN);
  out.target = target.str();
  out.error = mpfr_get_d(diff.get(), MPFR_RNDN);
  out.gap = gap.str(20);
  mpfr_log10(gap.get(), gap.get(), MPFR_RNDN);
  out.gap_log10 = mpfr_get_d(gap.get(), MPFR_RNDN);
  return out;
}

GaussianLimit gaussian_limit(std::size_t n, const Rational& lambda) {
  if (n < 1) throw std::invalid_argument("gaussian limit needs n >= 1");
  return gaussian_limit(line_polys(n), lambda);
}

}  // namespace bunkbed
