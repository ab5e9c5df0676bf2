#include "bunkbed/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bunkbed {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t scale = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits.find_first_not_of("-0123456789") != std::string::npos)
      throw std::invalid_argument("malformed rational '" + s + "'");
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    r = Rational(num, den);
  } else {
    if (s.find_first_not_of("-/0123456789") != std::string::npos || r.set_str(s, 10) != 0)
      throw std::invalid_argument("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string_view to_string(Variable v) { return v == Variable::P ? "p" : "q"; }

RationalPoly::RationalPoly(Variable var, std::vector<Rational> coefficients)
    : var_(var), coef_(std::move(coefficients)) {
  for (auto& c : coef_) c.canonicalize();
  normalize();
}

RationalPoly RationalPoly::constant(Variable var, const Rational& c) { return RationalPoly(var, {c}); }

RationalPoly RationalPoly::monomial(Variable var, std::size_t k, const Rational& c) {
  std::vector<Rational> coef(k + 1, Rational(0));
  coef[k] = c;
  return RationalPoly(var, std::move(coef));
}

RationalPoly RationalPoly::complement(Variable var) { return RationalPoly(var, {1, -1}); }

long RationalPoly::valuation() const {
  for (std::size_t k = 0; k < coef_.size(); ++k)
    if (coef_[k] != 0) return static_cast<long>(k);
  return -1;
}

Rational RationalPoly::eval(const Rational& x) const {
  if (coef_.empty()) return 0;
  // Integer Horner on the cleared numerator: sum c_k L a^k b^(d-k) / (L b^d).
  mpz_class lcm = 1;
  for (const auto& c : coef_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  auto scaled = [&](const Rational& c) -> mpz_class { return c.get_num() * (lcm / c.get_den()); };
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  mpz_class acc = scaled(coef_.back());
  mpz_class pw = 1;
  for (std::size_t k = coef_.size() - 1; k-- > 0;) {
    pw *= b;
    acc = acc * a + scaled(coef_[k]) * pw;
  }
  Rational out(acc, lcm * pw);
  out.canonicalize();
  return out;
}

RationalPoly RationalPoly::reparam() const {
  const Variable flipped = var_ == Variable::P ? Variable::Q : Variable::P;
  // Horner in (1 - x).
  std::vector<Rational> acc;
  for (std::size_t k = coef_.size(); k-- > 0;) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i];
      next[i + 1] -= acc[i];
    }
    next[0] += coef_[k];
    acc = std::move(next);
  }
  return RationalPoly(flipped, std::move(acc));
}

RationalPoly RationalPoly::pow(unsigned exponent) const {
  RationalPoly result = constant(var_, 1);
  RationalPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

void RationalPoly::normalize() {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

void RationalPoly::require_same_variable(const RationalPoly& other) const {
  if (var_ != other.var_)
    throw std::invalid_argument("polynomial variables differ (" + std::string(to_string(var_)) + " vs " +
                                std::string(to_string(other.var_)) + ")");
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  require_same_variable(rhs);
  if (coef_.size() < rhs.coef_.size()) coef_.resize(rhs.coef_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coef_.size(); ++k) coef_[k] += rhs.coef_[k];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  require_same_variable(rhs);
  if (coef_.size() < rhs.coef_.size()) coef_.resize(rhs.coef_.size(), Rational(0));
  for (std::size_t k = 0; k < rhs.coef_.size(); ++k) coef_[k] -= rhs.coef_[k];
  normalize();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  a.require_same_variable(b);
  if (a.is_zero() || b.is_zero()) return RationalPoly(a.var_);
  std::vector<Rational> out(a.coef_.size() + b.coef_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coef_.size(); ++j) out[i + j] += a.coef_[i] * b.coef_[j];
  }
  return RationalPoly(a.var_, std::move(out));
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) { return *this = *this * rhs; }

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  for (auto& x : coef_) x *= c;
  normalize();
  return *this;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out = *this;
  for (auto& x : out.coef_) x = -x;
  return out;
}

std::string RationalPoly::pretty() const {
  if (coef_.empty()) return "0";
  const std::string x(to_string(var_));
  std::string out;
  for (std::size_t k = 0; k < coef_.size(); ++k) {
    const Rational& c = coef_[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (k == 0 || mag != 1) out += mag.get_str() + (k ? "*" : "");
    if (k >= 1) out += x;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

RationalPoly poly_arith(const RationalPoly& a, const RationalPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

RationalPoly binomial_form(Variable var, const std::vector<mpz_class>& counts, std::size_t total) {
  if (counts.size() > total + 1) throw std::invalid_argument("more count slots than exponents");
  // binom[j] = C(total - k, j), rebuilt per k.
  std::vector<Rational> out(total + 1, Rational(0));
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    const std::size_t rest = total - k;
    mpz_class binom = 1;
    for (std::size_t j = 0; j <= rest; ++j) {
      const mpz_class term = counts[k] * binom;
      if (j % 2) out[k + j] -= term;
      else out[k + j] += term;
      binom = binom * (rest - j) / (j + 1);
    }
  }
  return RationalPoly(var, std::move(out));
}

nlohmann::json to_json(const RationalPoly& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : a.coefficients()) coeffs.push_back(to_string(c));
  return {{"var", std::string(to_string(a.variable()))}, {"coeffs", coeffs}};
}

RationalPoly poly_from_json(const nlohmann::json& j) {
  const std::string var = j.at("var").get<std::string>();
  if (var != "p" && var != "q") throw std::invalid_argument("unknown polynomial variable '" + var + "'");
  std::vector<Rational> coef;
  for (const auto& c : j.at("coeffs")) coef.push_back(parse_rational(c.get<std::string>()));
  return RationalPoly(var == "p" ? Variable::P : Variable::Q, std::move(coef));
}

}  // namespace bunkbed
