#ifndef NULLSL2_TESTS_SUPPORT_HPP
#define NULLSL2_TESTS_SUPPORT_HPP

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "nullsl2/mero.hpp"
#include "nullsl2/sl2curve.hpp"
#include "nullsl2/spinor.hpp"

namespace support {

using nullsl2::cplx;
using nullsl2::CRational;
using nullsl2::MeroFunction;
using nullsl2::Poly;

inline std::string fixture(const std::string& name) { return std::string(NULLSL2_FIXTURES) + "/" + name; }

inline CRational small_rational(std::mt19937_64& rng, bool allow_zero = true) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (;;) {
    const CRational c(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
    if (allow_zero || !c.is_zero()) return c;
  }
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int d = deg(rng);
  std::vector<CRational> c;
  for (int k = 0; k < d; ++k) c.push_back(small_rational(rng));
  c.push_back(small_rational(rng, false));
  return Poly(c);
}

/// Random nonzero rational function with numerator and denominator of degree
/// at most max_degree.
inline MeroFunction random_rational(std::mt19937_64& rng, int max_degree = 3) {
  return MeroFunction::rational(random_poly(rng, max_degree), random_poly(rng, max_degree));
}

inline cplx random_point(std::mt19937_64& rng, double radius = 2.0) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return {u(rng), u(rng)};
}

inline double max_abs(const nullsl2::Mat2& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace support

#endif  // NULLSL2_TESTS_SUPPORT_HPP
