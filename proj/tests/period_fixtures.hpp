#ifndef NULLSL2_TESTS_PERIOD_FIXTURES_HPP
#define NULLSL2_TESTS_PERIOD_FIXTURES_HPP

#include <cmath>
#include <random>

#include "nullsl2/periods.hpp"
#include "support.hpp"

namespace support {

inline const nullsl2::cplx kTwoPiI(0.0, 2.0 * M_PI);

/// A rational function assembled from partial fractions, together with the
/// integral its residues predict over the unit circle and the square with
/// corners +-1 +-i (both enclose the same poles here).
struct PeriodFixture {
  nullsl2::MeroFunction f;
  nullsl2::cplx expected;
};

inline PeriodFixture partial_fractions(std::mt19937_64& rng) {
  using namespace nullsl2;
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> order(1, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PeriodFixture fx{MeroFunction(0), 0.0};
  const int n = count(rng);
  for (int j = 0; j < n; ++j) {
    const bool inside = unit(rng) < 0.6;
    const double r = inside ? 0.25 * unit(rng) : 3.0 + unit(rng);
    const double t = 2.0 * M_PI * unit(rng);
    // Dyadic rounding keeps the pole exactly representable.
    const cplx p(std::ldexp(std::round(std::ldexp(r * std::cos(t), 10)), -10),
                 std::ldexp(std::round(std::ldexp(r * std::sin(t), 10)), -10));
    const CRational a = small_rational(rng, false);
    const int m = order(rng);
    fx.f = fx.f + MeroFunction::monomial(a, -m, CRational(p));
    if (inside && m == 1) fx.expected += kTwoPiI * a.to_cplx();
  }
  fx.f = fx.f + MeroFunction::polynomial(random_poly(rng, 3));
  return fx;
}

/// The square with corners +-1 +-i. Edge midpoints are vertices as well: a
/// 16-point rule per unit segment resolves poles of order three at distance
/// 0.75 from the contour to well below 1e-8.
inline nullsl2::Cycle square(int orientation = 1) {
  using nullsl2::cplx;
  return nullsl2::Cycle::polyline({cplx(-1, -1), cplx(0, -1), cplx(1, -1), cplx(1, 0), cplx(1, 1), cplx(0, 1),
                                   cplx(-1, 1), cplx(-1, 0)},
                                  orientation);
}

}  // namespace support

#endif  // NULLSL2_TESTS_PERIOD_FIXTURES_HPP
