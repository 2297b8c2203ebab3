#include <doctest.h>

#include <random>

#include "nullsl2/error.hpp"
#include "nullsl2/sl2curve.hpp"
#include "nullsl2/spinor.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace nullsl2;
using oracle::LP;

namespace {

MeroFunction z() { return MeroFunction::z(); }
const MeroFunction kI = CRational::i();
const oracle::Q kQi(0, 1);
const oracle::Q kHalf(mpq_class(1, 2));

}  // namespace

TEST_SUITE("spinor") {
  TEST_CASE("from_spinor examples") {
    const DirectionField a = from_spinor({MeroFunction(2), MeroFunction(0)});
    CHECK(oracle::same(a[0], LP::mono(1, 0)));
    CHECK(oracle::same(a[1], LP::mono(oracle::Q(0, -1), 0)));
    CHECK(is_exact_zero(a[2]));

    const DirectionField b = from_spinor({MeroFunction(1), z()});
    CHECK(oracle::same(b[0], LP::mono(kHalf, 0) - LP::mono(kHalf, 2)));
    CHECK(oracle::same(b[1], LP::mono(oracle::Q(0, mpq_class(-1, 2)), 0) + LP::mono(oracle::Q(0, mpq_class(-1, 2)), 2)));
    CHECK(oracle::same(b[2], LP::mono(1, 1)));
    CHECK(is_exact_zero(sum_of_squares(b)));

    const DirectionField c = from_spinor({z(), z()});
    CHECK(is_exact_zero(c[0]));
    CHECK(oracle::same(c[1], LP::mono(oracle::Q(0, -1), 1)));

    CHECK_THROWS_AS(from_spinor({MeroFunction(0), z()}), Error);
  }

  TEST_CASE("extract_spinor examples") {
    const SpinorData s = extract_spinor({MeroFunction(1), -kI, MeroFunction(0)});
    CHECK(oracle::same(s.eta, LP::mono(2, 0)));
    CHECK(is_exact_zero(s.f3));
    const SpinorData t = extract_spinor(from_spinor({MeroFunction(1), z()}));
    CHECK(oracle::same(t.eta, LP::mono(1, 0)));
    CHECK(oracle::same(t.f3, LP::mono(1, 1)));
    try {
      (void)extract_spinor({MeroFunction(1), kI, MeroFunction(0)});
      FAIL("expected DegenerateEta");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateEta);
    }
    const SpinorData alt = extract_spinor({MeroFunction(1), kI, MeroFunction(0)}, SpinorChart::alternate);
    CHECK(oracle::same(alt.eta, LP::mono(2, 0)));
    const DirectionField back = from_spinor(alt);
    CHECK(oracle::same(back[1], LP::mono(kQi, 0)));
  }

  TEST_CASE("random spinors are null and round trip") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      const SpinorData s{support::random_rational(rng), support::random_rational(rng)};
      const DirectionField f = from_spinor(s);
      CHECK(is_exact_zero(sum_of_squares(f)));
      const SpinorData back = extract_spinor(f);
      CHECK(is_exact_zero(back.eta - s.eta));
      CHECK(is_exact_zero(back.f3 - s.f3));
    }
  }

  TEST_CASE("floating spinors are null to coefficient precision") {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<cplx> eta{{1.0 + 0.5 * u(rng), 0.5 * u(rng)}};
      std::vector<cplx> f3;
      for (int k = 1; k < 24; ++k) eta.push_back(std::pow(0.5, k) * cplx(u(rng), u(rng)));
      for (int k = 0; k < 24; ++k) f3.push_back(std::pow(0.5, k) * cplx(u(rng), u(rng)));
      const SpinorData s{MeroFunction::laurent(-1, eta), MeroFunction::laurent(0, f3)};
      CHECK(zero_residual(sum_of_squares(from_spinor(s))) < 1e-12);
    }
  }

  TEST_CASE("spinor validity") {
    CHECK(spinor_is_valid({MeroFunction(1), z()}));
    // eta = z and f3^2 / eta = z share the zero at 0.
    CHECK_FALSE(spinor_is_valid({z(), z()}));
    const std::vector<cplx> declared{0.0};
    CHECK(spinor_is_valid({z(), z()}, declared));
    CHECK_FALSE(spinor_is_valid({MeroFunction(0), z()}));
  }

  TEST_CASE("check_null_c3 examples") {
    const C3Report a = check_null_c3({{z(), kI * z(), MeroFunction(0)}, {}});
    CHECK(a.null);
    CHECK(a.immersion);
    CHECK(a.flat);
    CHECK_FALSE(check_null_c3({{z(), z(), z()}, {}}).null);

    const MeroFunction z3 = z() * z() * z();
    const C3NullCurve X{{z() * CRational(mpq_class(1, 2)) - z3 * CRational(mpq_class(2, 3)),
                         kI * (z() * CRational(mpq_class(1, 2)) + z3 * CRational(mpq_class(2, 3))), z() * z()},
                        {}};
    const C3Report r = check_null_c3(X);
    CHECK(r.null);
    CHECK_FALSE(r.flat);
    CHECK(r.null_residual == 0.0);
  }

  TEST_CASE("flatness matches rank-one coefficient data") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 50; ++trial) {
      // X' = h * v for a fixed vector v is flat; adding an independent
      // direction with a different scalar factor is not.
      const MeroFunction h = support::random_rational(rng, 2);
      const CRational v[3] = {support::small_rational(rng, false), support::small_rational(rng, false),
                              support::small_rational(rng, false)};
      const std::array<MeroFunction, 3> d{h * v[0], h * v[1], h * v[2]};
      CHECK(direction_is_constant(d));
      const std::array<MeroFunction, 3> e{d[0] + z(), d[1], d[2]};
      CHECK_FALSE(direction_is_constant(e));
    }
  }

  TEST_CASE("integrate_null examples") {
    const C3NullCurve X = integrate_null({MeroFunction(1), -kI, MeroFunction(0)}, 0.0, {0.0, 0.0, 0.0});
    CHECK(oracle::same(X.X[0], LP::mono(1, 1)));
    CHECK(oracle::same(X.X[1], LP::mono(oracle::Q(0, -1), 1)));
    CHECK(is_exact_zero(X.X[2]));

    const C3NullCurve Y = integrate_null(from_spinor({MeroFunction(1), z()}), 0.0, {0.0, 0.0, 0.0});
    const oracle::Q sixth(mpq_class(1, 6));
    CHECK(oracle::same(Y.X[0], LP::mono(kHalf, 1) - LP::mono(sixth, 3)));
    CHECK(oracle::same(Y.X[1], LP::mono(oracle::Q(0, mpq_class(-1, 2)), 1) + LP::mono(oracle::Q(0, mpq_class(-1, 6)), 3)));
    CHECK(oracle::same(Y.X[2], LP::mono(kHalf, 2)));

    try {
      (void)integrate_null({1 / z(), MeroFunction(0), MeroFunction(0)}, 1.0, {0.0, 0.0, 0.0});
      FAIL("expected NonExactField");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonExactField);
      CHECK(std::string(e.what()).find("6.28") != std::string::npos);
    }
    const auto ob = exactness_obstructions({1 / z(), MeroFunction(0), MeroFunction(0)});
    REQUIRE(ob.size() == 1);
    CHECK(std::abs(ob[0].period - cplx(0.0, 2.0 * M_PI)) < 1e-14);
  }

  TEST_CASE("integration inverts differentiation") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 50; ++trial) {
      DirectionField f;
      for (auto& c : f) c = differentiate(support::random_rational(rng, 2));
      const cplx base = 0.125;
      bool regular = true;
      for (auto& c : f) {
        for (const auto& [p, m] : poles(c)) regular = regular && std::abs(p - base) > 1e-6;
      }
      if (!regular) continue;
      const C3NullCurve X = integrate_null(f, base, {1.0, 2.0, 3.0});
      for (int k = 0; k < 3; ++k) CHECK(is_exact_zero(differentiate(X.X[k]) - f[k]));
      CHECK(std::abs(evaluate(X.X[1], base) - 2.0) < 1e-12);
    }
  }
}
