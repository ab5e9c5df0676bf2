#include <gtest/gtest.h>

#include <cmath>

#include "bunkbed/bunkbed_exact.hpp"
#include "bunkbed/line_oracle.hpp"
#include "support/oracles.hpp"

namespace bunkbed {
namespace {

RationalPoly Q(std::vector<Rational> c) { return RationalPoly(Variable::Q, std::move(c)); }
RationalPoly q_pow(std::size_t k) { return RationalPoly::monomial(Variable::Q, k); }
RationalPoly one_minus_q() { return RationalPoly::complement(Variable::Q); }

// All six path quantities from one brute-force pass over the 3n + 1 edges of
// L_n x K2, as P-polynomials.
struct BrutePath {
  RationalPoly a, b, c, tilde_a, tilde_b;
};

BrutePath brute_path(std::size_t n) {
  const Multigraph g = testing::path_graph(n);
  const std::size_t nv = g.num_vertices();
  std::vector<testing::PlainEdge> edges = testing::horizontal_edges(g);
  for (std::size_t v = 0; v < nv; ++v) edges.push_back({v, nv + v});
  std::vector<std::vector<std::uint64_t>> counts(5, std::vector<std::uint64_t>(edges.size() + 1, 0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<testing::PlainEdge> open;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1) open.push_back(edges[i]);
    const auto seen = testing::reach(2 * nv, open, 0);
    const bool low = seen[n], high = seen[nv + n];
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    counts[0][k] += low;
    counts[1][k] += high;
    counts[2][k] += low && high;
    counts[3][k] += low && !high;
    counts[4][k] += high && !low;
  }
  auto poly = [&](int i) { return testing::poly_from_count_brute(counts[static_cast<std::size_t>(i)], edges.size()); };
  return {poly(0), poly(1), poly(2), poly(3), poly(4)};
}

TEST(LinePolys, BaseCase) {
  const LineQuantities l = line_polys(0);
  EXPECT_EQ(l.a, Q({1}));
  EXPECT_EQ(l.b, one_minus_q());
  EXPECT_EQ(l.c, one_minus_q());
  EXPECT_EQ(l.d, q_pow(1));
  EXPECT_EQ(l.a - l.b, q_pow(1));
}

TEST(LinePolys, FirstStep) {
  const LineQuantities l = line_polys(1);
  EXPECT_EQ(l.a - l.b, q_pow(2) * one_minus_q());
  EXPECT_EQ(l.a, RationalPoly(Variable::P, {0, 1, 0, 1, -1}).reparam());
}

TEST(LinePolys, AgreesWithBruteForceOnPaths) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const LineQuantities l = line_polys(n);
    const BrutePath b = brute_path(n);
    ASSERT_EQ(l.a, b.a.reparam()) << n;
    ASSERT_EQ(l.b, b.b.reparam()) << n;
    ASSERT_EQ(l.c, b.c.reparam()) << n;
    ASSERT_EQ(l.tilde_a, b.tilde_a.reparam()) << n;
    ASSERT_EQ(l.tilde_b, b.tilde_b.reparam()) << n;
    ASSERT_EQ(l.d, (b.tilde_a + b.tilde_b).reparam()) << n;
  }
}

TEST(LinePolys, AgreesWithEnumerationEngine) {
  for (std::size_t n = 0; n <= 6; ++n) {
    const LineQuantities l = line_polys(n);
    const ConnectionPolys e = connection_polys(testing::path_graph(n), 0, n);
    ASSERT_EQ(l.a, e.same_level.reparam()) << n;
    ASSERT_EQ(l.b, e.cross_level.reparam()) << n;
    ASSERT_EQ(l.a - l.b, e.difference().reparam()) << n;
  }
}

TEST(GapCheck, Values) {
  for (std::size_t n = 0; n <= 12; ++n) ASSERT_TRUE(gap_check(n)) << n;
  EXPECT_EQ(line_gap(0), q_pow(1));
  EXPECT_EQ(line_gap(3), q_pow(4) * one_minus_q().pow(3));
  // expanded q^4 (1 - q)^3
  EXPECT_EQ(line_gap(3), Q({0, 0, 0, 0, 1, -3, 3, -1}));
}

TEST(LinePolys, IdentitiesAndTelescoping) {
  RationalPoly previous_gap = line_polys(0).tilde_a - line_polys(0).tilde_b;
  const RationalPoly step = q_pow(1) * one_minus_q();
  for (std::size_t n = 0; n <= 64; ++n) {
    const LineQuantities l = line_polys(n);
    ASSERT_EQ(l.a + l.b, Rational(2) * l.c + l.d) << n;
    ASSERT_EQ(l.a, l.tilde_a + l.c) << n;
    ASSERT_EQ(l.b, l.tilde_b + l.c) << n;
    ASSERT_EQ(l.d, l.tilde_a + l.tilde_b) << n;
    if (n > 0) {
      const RationalPoly gap = l.tilde_a - l.tilde_b;
      ASSERT_EQ(gap, step * previous_gap) << n;
      previous_gap = gap;
    }
  }
}

TEST(LinePolys, ValuesInUnitInterval) {
  for (std::size_t n = 0; n <= 12; ++n) {
    const LineQuantities l = line_polys(n);
    for (int k = 0; k <= 16; ++k) {
      const Rational q(k, 16);
      for (const RationalPoly* x : {&l.a, &l.b, &l.c, &l.d, &l.tilde_a, &l.tilde_b}) {
        const Rational y = x->eval(q);
        ASSERT_GE(y, 0);
        ASSERT_LE(y, 1);
      }
    }
  }
}

TEST(SeriesCheck, SmallNExamples) {
  const LineQuantities l = line_polys(5);
  EXPECT_EQ(l.a.coeff(2), -7);
  EXPECT_EQ(l.a.coeff(3), -8);
  EXPECT_EQ(l.a.coeff(4), 35);
  EXPECT_EQ(l.a.coeff(5), 54);
  EXPECT_EQ(l.c.coeff(2), -8);
  EXPECT_EQ(l.c.coeff(4), 43);
  EXPECT_EQ(l.d.coeff(2), 2);
  EXPECT_EQ(l.d.coeff(4), -16);
  for (std::size_t n : {5u, 8u, 12u, 20u}) EXPECT_EQ(series_check(n).verdict, Verdict::Pass) << n;
  for (std::size_t n : {0u, 1u, 2u, 4u}) EXPECT_EQ(series_check(n).verdict, Verdict::Partial) << n;
}

TEST(RationalSqrt, Convergents) {
  const Rational r = rational_sqrt(Rational(1, 50), mpz_class(1000));
  // 1/sqrt(50) = [0; 7, 14, 14, ...]; the convergents are 1/7, 14/99, 197/1393.
  EXPECT_EQ(r, Rational(14, 99));
  EXPECT_EQ(rational_sqrt(Rational(1, 50), mpz_class(1393)), Rational(197, 1393));
  EXPECT_EQ(rational_sqrt(Rational(9, 16), mpz_class("10000000000000000000000000000000000000000")), Rational(3, 4));
}

TEST(GaussianLimit, Evaluation) {
  const GaussianLimit g = gaussian_limit(50, 1);
  EXPECT_EQ(g.target.substr(0, 10), "0.36787944");
  // 51 log10(q) + 50 log10(1 - q) at q = 1/sqrt(50)
  const double q = 1.0 / std::sqrt(50.0);
  const double gap_log10 = 51 * std::log10(q) + 50 * std::log10(1 - q);
  EXPECT_NEAR(gap_log10, -46.6347, 1e-4);
  EXPECT_NEAR(g.gap_log10, gap_log10, 1e-9);
  EXPECT_LE(g.q.get_den(), mpz_class("10000000000000000000000000000000000000000"));
  EXPECT_NEAR(g.q.get_d(), 1.0 / std::sqrt(50.0), 1e-15);
  // a_n(q) is computed exactly before rounding, so it agrees with the double Horner value.
  EXPECT_NEAR(g.value_double, line_polys(50).a.eval(g.q).get_d(), 1e-12);
  EXPECT_THROW(gaussian_limit(1, 1), std::invalid_argument);
  EXPECT_THROW(gaussian_limit(4, 0), std::invalid_argument);
}

}  // namespace
}  // namespace bunkbed
