#include <doctest.h>

#include <cmath>
#include <random>

#include "nullsl2/error.hpp"
#include "nullsl2/periods.hpp"
#include "period_fixtures.hpp"

using namespace nullsl2;

namespace {

using support::kTwoPiI;
using support::partial_fractions;
using support::PeriodFixture;
using support::square;

MeroFunction z() { return MeroFunction::z(); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

SprayFamily toy_spray() {
  return {{1 + MeroFunction(CRational(mpq_class(3, 10))) / z(), MeroFunction(1)}, {1 / z()}};
}

}  // namespace

TEST_SUITE("periods") {
  TEST_CASE("period examples") {
    const Cycle unit = Cycle::circle(0.0, 1.0);
    CHECK(std::abs(period(1 / z(), unit) - kTwoPiI) < 1e-12);
    CHECK(std::abs(period(1 / z(), Cycle::circle(0.0, 1.0, -1)) + kTwoPiI) < 1e-12);
    const CRational zeta(mpq_class(1, 4), mpq_class(-3, 8));
    CHECK(std::abs(period(z() / (z() + zeta), unit) + kTwoPiI * zeta.to_cplx()) < 1e-12);
    CHECK(kind_of([&] { (void)period(1 / (z() - 1), unit); }) == ErrorKind::PoleOnContour);
    CHECK(winding_number(unit, 0.5) == 1);
    CHECK(winding_number(unit, 1.5) == 0);
    CHECK(winding_number(square(-1), 0.0) == -1);
  }

  TEST_CASE("gauss-legendre rule") {
    const auto [x, w] = gauss_legendre(16);
    double sum = 0.0;
    double moment = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      sum += w[k];
      moment += w[k] * std::pow(x[k], 30);
    }
    CHECK(std::abs(sum - 2.0) < 1e-14);
    CHECK(std::abs(moment - 2.0 / 31.0) < 1e-14);
  }

  TEST_CASE("quadrature agrees with the residue oracle on rational fixtures") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
      const PeriodFixture fx = partial_fractions(rng);
      for (const Cycle& c : {Cycle::circle(0.0, 1.0), square()}) {
        const PeriodValue v = period_detail(fx.f, c);
        CHECK(std::abs(v.quadrature - fx.expected) < 1e-8);
        REQUIRE(v.residue_sum.has_value());
        CHECK(std::abs(*v.residue_sum - fx.expected) < 1e-8);
      }
    }
  }

  TEST_CASE("homotopy invariance") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 20; ++trial) {
      const PeriodFixture fx = partial_fractions(rng);
      const cplx a = period(fx.f, Cycle::circle(0.0, 1.0));
      const cplx b = period(fx.f, Cycle::circle(cplx(0.1, -0.05), 1.3));
      const cplx c = period(fx.f, square());
      CHECK(std::abs(a - b) < 1e-8);
      CHECK(std::abs(a - c) < 1e-8);
    }
  }

  TEST_CASE("derivatives have zero periods") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
      const PeriodFixture fx = partial_fractions(rng);
      CHECK(std::abs(period(differentiate(fx.f), Cycle::circle(0.0, 1.0))) < 1e-10);
    }
  }

  TEST_CASE("period_map examples") {
    const std::vector<Cycle> unit{Cycle::circle(0.0, 1.0)};
    const PeriodReport a = period_map(from_spinor({MeroFunction(2), MeroFunction(0)}), unit);
    CHECK(a.max_norm < 1e-12);
    const PeriodReport b = period_map({1 / z(), MeroFunction(0), MeroFunction(0)}, unit);
    CHECK(std::abs(b.periods[0][0] - kTwoPiI) < 1e-12);
    CHECK(std::abs(b.periods[0][1]) < 1e-12);
    const CRational zeta(mpq_class(1, 5), mpq_class(1, 10));
    const PeriodReport c = period_map(from_spinor({1 + MeroFunction(zeta) / z(), MeroFunction(1)}), unit);
    CHECK(std::abs(c.periods[0][0] - kTwoPiI * zeta.to_cplx()) < 1e-10);
    CHECK(std::abs(c.periods[0][1]) < 1e-10);
    CHECK(std::abs(c.periods[0][2]) < 1e-12);
  }

  TEST_CASE("spray_apply") {
    const SprayFamily s = toy_spray();
    const SpinorData base = spray_apply(s, {0.0});
    CHECK(is_exact_zero(base.eta - s.base.eta));
    CHECK(is_exact_zero(base.f3 - s.base.f3));
    const SprayFamily c{s.base, {MeroFunction(1)}};
    const SpinorData flipped = spray_apply(c, {cplx(0.0, M_PI)});
    CHECK(zero_residual(flipped.eta + s.base.eta) < 1e-15);
    std::mt19937_64 rng(74);
    for (int trial = 0; trial < 100; ++trial) {
      const SpinorData p = spray_apply(s, {0.25 * support::random_point(rng, 1.0)});
      CHECK(zero_residual(sum_of_squares(from_spinor(p))) < 1e-10);
    }
  }

  TEST_CASE("spray periods follow the residue calculus") {
    // For eta = (1 + a/z) exp(zeta/z) and f3 = 1 the f1 period over the unit
    // circle is 2 pi i (a + zeta) and the f2 period vanishes.
    const SprayFamily s = toy_spray();
    for (cplx zeta : {cplx(0.0), cplx(-0.1, 0.05), cplx(0.2, -0.1)}) {
      const PeriodReport r = spray_periods(s, {zeta}, {Cycle::circle(0.0, 1.0)});
      CHECK(std::abs(r.periods[0][0] - kTwoPiI * (0.3 + zeta)) < 1e-10);
      CHECK(std::abs(r.periods[0][1]) < 1e-10);
    }
  }

  TEST_CASE("period_solve on the toy problem") {
    const SolveResult r = period_solve(toy_spray(), {Cycle::circle(0.0, 1.0)});
    CHECK(r.status == SolveStatus::converged);
    CHECK(r.residual < 1e-10);
    CHECK(r.iterations <= 20);
    CHECK(std::abs(r.zeta0[0] + 0.3) < 1e-9);
    CHECK(std::abs(r.history[0] - 2.0 * M_PI * 0.3) < 1e-10);
  }

  TEST_CASE("period_solve converges quadratically on a nonlinear spray") {
    const SprayFamily s{{1 + MeroFunction(CRational(mpq_class(3, 10))) / z(), 1 + z()}, {1 / z(), 1 / (z() * z())}};
    const SolveResult r = period_solve(s, {Cycle::circle(0.0, 1.0)});
    CHECK(r.residual < 1e-10);
    CHECK(std::abs(r.zeta0[0] + 0.3) < 1e-9);
    CHECK(std::abs(r.zeta0[1] - 0.0405) < 1e-9);
    for (std::size_t k = 0; k + 1 < r.history.size(); ++k) {
      if (r.history[k] < 1.0 && r.history[k + 1] > 1e-13) CHECK(r.history[k + 1] <= 10.0 * r.history[k] * r.history[k]);
    }
  }

  TEST_CASE("period_solve edge cases") {
    const SprayFamily exact{{2 + z(), 1 + z()}, {1 / z()}};
    const SolveResult e = period_solve(exact, {Cycle::circle(0.0, 1.0)});
    CHECK(e.iterations == 1);
    CHECK(std::abs(e.zeta0[0]) == 0.0);

    const SprayFamily orth{{1 / z(), MeroFunction(0)}, {z()}};
    CHECK(kind_of([&] { (void)period_solve(orth, {Cycle::circle(0.0, 1.0)}); }) == ErrorKind::SingularJacobian);

    SolveOptions few;
    few.max_iter = 1;
    const SolveResult m = period_solve(toy_spray(), {Cycle::circle(0.0, 1.0)}, few);
    CHECK(m.status == SolveStatus::max_iter_exceeded);
    CHECK(m.residual < m.history[0]);

    const SprayFamily bad_f3{{MeroFunction(1), 1 / z()}, {1 / z()}};
    CHECK(kind_of([&] { (void)period_solve(bad_f3, {Cycle::circle(0.0, 1.0)}); }) ==
          ErrorKind::HypothesisViolation);
  }
}
