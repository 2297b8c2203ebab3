#include "nullsl2/spaceforms.hpp"

#include <cmath>
#include <sstream>

namespace nullsl2 {

namespace {

const Mat2& signature_j() {
  static const Mat2 j = (Mat2() << 1.0, 0.0, 0.0, -1.0).finished();
  return j;
}

void require_unimodular(const Mat2& a, double tol) {
  const cplx d = a.determinant();
  if (std::abs(d - 1.0) >= tol) {
    std::ostringstream msg;
    msg << "det = " << d;
    throw Error(ErrorKind::NotUnimodular, msg.str());
  }
}

cplx normal_cplx(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

}  // namespace

double minkowski_square(const MinkowskiPoint& p) {
  return -p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
}

Mat2 to_her(const MinkowskiPoint& p) {
  Mat2 h;
  h << cplx(p[0] + p[3]), cplx(p[1], p[2]), cplx(p[1], -p[2]), cplx(p[0] - p[3]);
  return h;
}

MinkowskiPoint to_l4(const Mat2& h, double tol) {
  const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    std::ostringstream msg;
    msg << "matrix differs from its conjugate transpose by " << dev;
    throw Error(ErrorKind::NotHermitian, msg.str());
  }
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const cplx b = 0.5 * (h(0, 1) + std::conj(h(1, 0)));
  return {{0.5 * (a + d), b.real(), b.imag(), 0.5 * (a - d)}};
}

H3Point project_h3(const Mat2& a, double tol) {
  require_unimodular(a, tol);
  return {to_l4(a * a.adjoint(), tol * std::max(1.0, a.squaredNorm()))};
}

S31Point project_s31(const Mat2& a, double tol) {
  require_unimodular(a, tol);
  return {to_l4(a * signature_j() * a.adjoint(), tol * std::max(1.0, a.squaredNorm()))};
}

bool membership(const Mat2& a, Group g, double tol) {
  if (std::abs(a.determinant() - 1.0) > tol) return false;
  if (g == Group::SU2) return (a * a.adjoint() - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
  return (a * signature_j() * a.adjoint() - signature_j()).cwiseAbs().maxCoeff() <= tol;
}

std::array<double, 3> poincare_ball(const H3Point& p) {
  const double s = 1.0 + p[0];
  return {p[1] / s, p[2] / s, p[3] / s};
}

H3Point from_poincare_ball(const std::array<double, 3>& b) {
  const double r2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
  const double s = 1.0 - r2;
  return {{{(1.0 + r2) / s, 2.0 * b[0] / s, 2.0 * b[1] / s, 2.0 * b[2] / s}}};
}

Mat2 random_unimodular(std::mt19937_64& rng) {
  for (;;) {
    Mat2 a;
    a << normal_cplx(rng), normal_cplx(rng), normal_cplx(rng), normal_cplx(rng);
    const cplx d = a.determinant();
    if (std::abs(d) < 1e-6) continue;
    return a / std::sqrt(d);
  }
}

Mat2 random_su2(std::mt19937_64& rng) {
  cplx a = normal_cplx(rng);
  cplx b = normal_cplx(rng);
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  Mat2 u;
  u << a, -std::conj(b), b, std::conj(a);
  return u;
}

Mat2 random_su11(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r(0.0, 2.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  const double t = r(rng);
  const cplx a = std::polar(std::cosh(t), phase(rng));
  const cplx b = std::polar(std::sinh(t), phase(rng));
  Mat2 v;
  v << a, b, std::conj(b), std::conj(a);
  return v;
}

}  // namespace nullsl2
