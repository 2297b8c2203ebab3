#include <doctest.h>

#include <algorithm>
#include <random>

#include "nullsl2/error.hpp"
#include "nullsl2/exact.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace nullsl2;

TEST_SUITE("exact") {
  TEST_CASE("gaussian rational arithmetic matches the oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const CRational a = support::small_rational(rng);
      const CRational b = support::small_rational(rng, false);
      const oracle::Q qa = oracle::from_crational(a);
      const oracle::Q qb = oracle::from_crational(b);
      CHECK(oracle::from_crational(a + b) == qa + qb);
      CHECK(oracle::from_crational(a - b) == qa - qb);
      CHECK(oracle::from_crational(a * b) == qa * qb);
      CHECK(oracle::from_crational(a / b) == qa / qb);
    }
  }

  TEST_CASE("double conversion is exact for dyadic values") {
    const CRational c(cplx(0.375, -1.25));
    CHECK(c == CRational(mpq_class(3, 8), mpq_class(-5, 4)));
    CHECK(c.to_cplx() == cplx(0.375, -1.25));
  }

  TEST_CASE("parse_part") {
    CHECK(CRational::parse_part("-4/3") == mpq_class(-4, 3));
    CHECK(CRational::parse_part("6/4") == mpq_class(3, 2));
    CHECK(CRational::parse_part("7") == 7);
    CHECK_THROWS_AS(CRational::parse_part("1/0"), Error);
    CHECK_THROWS_AS(CRational::parse_part("abc"), Error);
  }

  TEST_CASE("division by exact zero") { CHECK_THROWS_AS(CRational(1) / CRational(), Error); }

  TEST_CASE("divmod reconstructs the dividend") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      const Poly a = support::random_poly(rng, 6);
      const Poly b = support::random_poly(rng, 3);
      const auto [q, r] = Poly::divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < std::max(b.degree(), 0));
    }
    CHECK_THROWS_AS(Poly::divmod(Poly(CRational(1)), Poly()), Error);
  }

  TEST_CASE("gcd recovers a planted common factor") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
      const Poly c = support::random_poly(rng, 3).monic();
      const Poly a = support::random_poly(rng, 3) * c;
      const Poly b = support::random_poly(rng, 3) * c;
      const Poly g = Poly::gcd(a, b);
      CHECK(g.lead() == CRational(1));
      CHECK(Poly::divmod(g, c).second.is_zero());
      CHECK(Poly::divmod(a, g).second.is_zero());
      CHECK(Poly::divmod(b, g).second.is_zero());
    }
  }

  TEST_CASE("gcd of coprime linear factors is one") {
    const Poly a = Poly::linear(CRational(1)) * Poly::linear(CRational(2));
    const Poly b = Poly::linear(CRational(3)) * Poly::linear(CRational(0, 1));
    CHECK(Poly::gcd(a, b) == Poly(CRational(1)));
    CHECK(Poly::gcd(Poly(), Poly()).is_zero());
    CHECK(Poly::gcd(Poly::monomial(CRational(5), 3), Poly::monomial(CRational(2), 2)) ==
          Poly::monomial(CRational(1), 2));
  }

  TEST_CASE("square-free decomposition") {
    const Poly a = Poly::linear(CRational(1));
    const Poly b = Poly::linear(CRational(mpq_class(1, 2), mpq_class(1)));
    const Poly p = (a * pow(b, 3)).scaled(CRational(7));
    const auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == a);
    CHECK(parts[1] == Poly(CRational(1)));
    CHECK(parts[2] == b);
  }

  TEST_CASE("roots with multiplicity") {
    const Poly p = pow(Poly::linear(CRational(2)), 2) * Poly::linear(CRational(0, -1));
    auto roots = roots_with_multiplicity(p);
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0].first - cplx(0, -1)) < 1e-12);
    CHECK(roots[0].second == 1);
    CHECK(std::abs(roots[1].first - cplx(2, 0)) < 1e-12);
    CHECK(roots[1].second == 2);
  }

  TEST_CASE("shift and evaluation") {
    std::mt19937_64 rng(14);
    const Poly p = support::random_poly(rng, 5);
    const CRational a = support::small_rational(rng);
    const CRational z = support::small_rational(rng);
    CHECK(p.shift(a).eval(z) == p.eval(z + a));
    oracle::LP lp;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      lp = lp + oracle::LP::mono(oracle::from_crational(p[k]), static_cast<int>(k));
    }
    CHECK(oracle::from_crational(p.derivative().eval(z)) == lp.d().eval(oracle::from_crational(z)));
  }

  TEST_CASE("solve_exact") {
    std::vector<std::vector<CRational>> a = {{1, 2}, {3, 4}};
    std::vector<CRational> x;
    REQUIRE(solve_exact(a, {5, 6}, x));
    CHECK(x[0] == CRational(-4));
    CHECK(x[1] == CRational(mpq_class(9, 2)));
    CHECK_FALSE(solve_exact({{1, 1}, {2, 2}}, {1, 3}, x));
  }
}
