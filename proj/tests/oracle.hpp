#ifndef NULLSL2_TESTS_ORACLE_HPP
#define NULLSL2_TESTS_ORACLE_HPP

// Test-side exact oracle. It shares nothing with the library's Poly or
// MeroFunction code: Gaussian rationals are bare mpq pairs, Laurent
// polynomials are sparse maps, and library results are compared by exact
// evaluation of their raw coefficient vectors at rational sample points.

#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "nullsl2/mero.hpp"

namespace oracle {

struct Q {
  mpq_class re{0};
  mpq_class im{0};

  Q() = default;
  Q(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  Q(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  friend Q operator+(const Q& a, const Q& b) { return {a.re + b.re, a.im + b.im}; }
  friend Q operator-(const Q& a, const Q& b) { return {a.re - b.re, a.im - b.im}; }
  friend Q operator*(const Q& a, const Q& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend Q operator/(const Q& a, const Q& b) {
    const mpq_class n = b.re * b.re + b.im * b.im;
    if (sgn(n) == 0) throw std::domain_error("oracle division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const Q& a, const Q& b) { return a.re == b.re && a.im == b.im; }
};

inline Q from_crational(const nullsl2::CRational& c) { return {c.re(), c.im()}; }

/// Sparse Laurent polynomial sum_k c[k] z^k.
struct LP {
  std::map<int, Q> c;

  static LP mono(const Q& a, int k) {
    LP p;
    if (!a.zero()) p.c[k] = a;
    return p;
  }
  void clean() {
    for (auto it = c.begin(); it != c.end();) it = it->second.zero() ? c.erase(it) : std::next(it);
  }
  bool zero() const { return c.empty(); }
  int ord() const {
    if (c.empty()) throw std::domain_error("ord of zero");
    return c.begin()->first;
  }
  Q coeff(int k) const {
    const auto it = c.find(k);
    return it == c.end() ? Q() : it->second;
  }
  friend LP operator+(LP a, const LP& b) {
    for (const auto& [k, v] : b.c) a.c[k] = a.c[k] + v;
    a.clean();
    return a;
  }
  friend LP operator-(LP a, const LP& b) {
    for (const auto& [k, v] : b.c) a.c[k] = a.c[k] - v;
    a.clean();
    return a;
  }
  friend LP operator*(const LP& a, const LP& b) {
    LP r;
    for (const auto& [i, x] : a.c) {
      for (const auto& [j, y] : b.c) r.c[i + j] = r.c[i + j] + x * y;
    }
    r.clean();
    return r;
  }
  /// Division by a single-term Laurent polynomial only.
  friend LP operator/(const LP& a, const LP& b) {
    if (b.c.size() != 1) throw std::domain_error("oracle divides by monomials only");
    const auto& [k, v] = *b.c.begin();
    LP r;
    for (const auto& [i, x] : a.c) r.c[i - k] = x / v;
    return r;
  }
  LP operator-() const { return LP() - *this; }
  LP d() const {
    LP r;
    for (const auto& [k, v] : c) {
      if (k != 0) r.c[k - 1] = v * Q(k);
    }
    return r;
  }
  Q eval(const Q& z) const {
    Q acc;
    for (const auto& [k, v] : c) {
      Q p(1);
      const Q base = k >= 0 ? z : Q(1) / z;
      for (int i = 0; i < std::abs(k); ++i) p = p * base;
      acc = acc + v * p;
    }
    return acc;
  }
};

inline Q eval_coeffs(const std::vector<nullsl2::CRational>& coeffs, const Q& z) {
  Q acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + from_crational(*it);
  return acc;
}

/// Exact identity f == g for a rational f, certified by evaluation at more
/// points than the degree of num - g * den after clearing powers of z.
inline bool same(const nullsl2::MeroFunction& f, const LP& g) {
  if (!f.is_rational()) throw std::domain_error("oracle compares rational functions only");
  const auto& num = f.rational_form().num.coeffs();
  const auto& den = f.rational_form().den.coeffs();
  const int span = g.zero() ? 0 : g.c.rbegin()->first - g.c.begin()->first;
  const int points = static_cast<int>(num.size() + den.size()) + span + 2;
  for (int k = 1; k <= points; ++k) {
    const Q z(mpq_class(k + 2, 3), mpq_class(1, k + 1));
    if (!(eval_coeffs(num, z) == g.eval(z) * eval_coeffs(den, z))) return false;
  }
  return true;
}

/// The end model written out from its closed formulas.
inline std::array<LP, 4> end_model(int m) {
  if (m == 1) {
    return {LP::mono(1, -2), LP::mono(Q(mpq_class(-4, 3)), 1), LP::mono(1, -1), LP::mono(Q(mpq_class(-1, 3)), 2)};
  }
  const long s = static_cast<long>(m + 1) * (m + 1);
  return {LP::mono(1, -1), LP::mono(Q(mpq_class(-1, m + 2)), m + 1), LP::mono(Q(mpq_class(-1, m)), -(m + 1)),
          LP::mono(Q(mpq_class(s, s - 1)), 1)};
}

inline std::array<std::array<LP, 4>, 3> rotations(const std::array<LP, 4>& F) {
  return {{{F[1], -F[0], F[3], -F[2]}, {F[2], F[3], -F[0], -F[1]}, {F[3], -F[2], -F[1], F[0]}}};
}

/// Lemma quantities straight from their definitions (monomial slots only
/// where a division is needed).
struct Pack {
  LP det, det_prime, G, g, omega, Q, mc[4];
  int k, l;
};

inline Pack pack(const std::array<LP, 4>& F) {
  Pack p;
  const LP d1 = F[0].d(), d2 = F[1].d(), d3 = F[2].d(), d4 = F[3].d();
  p.det = F[0] * F[3] - F[1] * F[2];
  p.det_prime = d1 * d4 - d2 * d3;
  p.G = d1 / d3;
  p.g = -(d2 / d1);
  p.omega = F[0] * d3 - F[2] * d1;
  p.Q = p.omega * p.g.d();
  p.mc[0] = d1 * F[3] - d2 * F[2];
  p.mc[1] = d2 * F[0] - d1 * F[1];
  p.mc[2] = d3 * F[3] - d4 * F[2];
  p.mc[3] = d4 * F[0] - d3 * F[1];
  p.k = F[0].ord();
  p.l = (F[2] / F[0]).d().ord();
  return p;
}

}  // namespace oracle

#endif  // NULLSL2_TESTS_ORACLE_HPP
