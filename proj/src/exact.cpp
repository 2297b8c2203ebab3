#include "nullsl2/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

#include "nullsl2/error.hpp"

namespace nullsl2 {

mpq_class CRational::parse_part(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw Error(ErrorKind::ParseError, "not a rational literal: '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

CRational& CRational::operator+=(const CRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CRational& CRational::operator-=(const CRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CRational& CRational::operator*=(const CRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CRational& CRational::operator/=(const CRational& o) {
  const mpq_class n = o.norm2();
  if (sgn(n) == 0) throw Error(ErrorKind::DivisionByZeroFunction, "division by exact zero");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const CRational& q) {
  std::string s = q.re().get_str();
  if (sgn(q.im()) != 0) s += (sgn(q.im()) > 0 ? "+" : "") + q.im().get_str() + "i";
  return s;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<CRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const CRational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::linear(const CRational& root) { return Poly({-root, CRational(1)}); }

Poly Poly::monomial(const CRational& c, int n) {
  std::vector<CRational> v(static_cast<std::size_t>(n) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::low_order() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[k].is_zero()) ++k;
  return k;
}

CRational Poly::eval(const CRational& z) const {
  CRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

cplx Poly::eval(cplx z) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_cplx();
  return acc;
}

std::vector<cplx> Poly::to_cplx() const {
  std::vector<cplx> out;
  out.reserve(c_.size());
  for (const auto& q : c_) out.push_back(q.to_cplx());
  return out;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<CRational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * CRational(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::shift(const CRational& a) const {
  if (a.is_zero() || c_.size() <= 1) return *this;
  // Repeated synthetic division (Taylor shift), O(n^2).
  std::vector<CRational> v = c_;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) v[j - 1] += a * v[j];
  }
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  const CRational inv = CRational(1) / c_.back();
  return scaled(inv);
}

Poly Poly::scaled(const CRational& s) const {
  std::vector<CRational> v = c_;
  for (auto& q : v) q *= s;
  return Poly(std::move(v));
}

Poly Poly::divided_by_z_power(int k) const {
  if (k <= 0) return *this;
  return Poly(std::vector<CRational>(c_.begin() + std::min<std::size_t>(k, c_.size()), c_.end()));
}

Poly Poly::operator-() const { return scaled(CRational(-1)); }

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<CRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<CRational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroFunction, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<CRational> r = a.c_;
  std::vector<CRational> q(a.c_.size() - b.c_.size() + 1);
  const CRational inv_lead = CRational(1) / b.c_.back();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    const std::size_t top = static_cast<std::size_t>(k) + b.c_.size() - 1;
    if (r[top].is_zero()) continue;
    const CRational f = r[top] * inv_lead;
    q[static_cast<std::size_t>(k)] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[static_cast<std::size_t>(k) + j] -= f * b.c_[j];
  }
  r.resize(b.c_.size() - 1);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

namespace {

// Primes p = 1 mod 4 with a square root of -1, so Z[i] maps onto F_p.
struct ModPrime {
  std::uint64_t p;
  std::uint64_t sqrt_m1;
};
constexpr ModPrime kPrimes[] = {{2147483629, 629208553}, {2147483549, 895500278}, {2147483497, 415680079}};

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

bool rational_mod(const mpq_class& q, std::uint64_t p, std::uint64_t& out) {
  const std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (d == 0) return false;
  out = mpz_fdiv_ui(q.get_num_mpz_t(), p) * powmod(d, p - 2, p) % p;
  return true;
}

bool poly_mod(const Poly& a, const ModPrime& m, std::vector<std::uint64_t>& out) {
  out.clear();
  for (const CRational& c : a.coeffs()) {
    std::uint64_t re = 0;
    std::uint64_t im = 0;
    if (!rational_mod(c.re(), m.p, re) || !rational_mod(c.im(), m.p, im)) return false;
    out.push_back((re + m.sqrt_m1 * im) % m.p);
  }
  return true;
}

void trim_mod(std::vector<std::uint64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const std::uint64_t f = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - f) * b[i]) % p;
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

bool is_monomial(const Poly& a) { return !a.is_zero() && a.low_order() == a.degree(); }

/// True when gcd(a, b) is certainly 1: the degree of the gcd can only grow
/// under reduction mod p as long as the leading coefficients survive.
bool coprime_mod_p(const Poly& a, const Poly& b) {
  std::vector<std::uint64_t> am, bm;
  for (const ModPrime& m : kPrimes) {
    if (!poly_mod(a, m, am) || !poly_mod(b, m, bm)) continue;
    if (am.back() == 0 || bm.back() == 0) continue;
    return gcd_degree_mod(am, bm, m.p) == 0;
  }
  return false;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (!a.is_zero() && !b.is_zero()) {
    const int ka = a.low_order();
    const int kb = b.low_order();
    const Poly zk = Poly::monomial(CRational(1), std::min(ka, kb));
    if (is_monomial(a) || is_monomial(b)) return zk;
    if (coprime_mod_p(a.divided_by_z_power(ka), b.divided_by_z_power(kb))) return zk;
  }
  Poly r0 = a.monic();
  Poly r1 = b.monic();
  while (!r1.is_zero()) {
    Poly r = divmod(r0, r1).second;
    r0 = std::move(r1);
    r1 = r.monic();
  }
  return r0;
}

Poly pow(const Poly& p, unsigned n) {
  Poly result(CRational(1));
  Poly base = p;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
  std::vector<Poly> factors;
  if (p.degree() < 1) return factors;
  const Poly f = p.monic();
  const Poly fp = f.derivative();
  const Poly a0 = Poly::gcd(f, fp);
  Poly b = Poly::divmod(f, a0).first;
  Poly c = Poly::divmod(fp, a0).first.scaled(CRational(1) / b.lead());
  b = b.monic();
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly a = Poly::gcd(b, d);
    factors.push_back(a);
    b = Poly::divmod(b, a).first.monic();
    c = Poly::divmod(d, a).first;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

std::vector<cplx> numeric_roots(const Poly& squarefree) {
  const int n = squarefree.degree();
  if (n < 1) return {};
  const std::vector<cplx> c = squarefree.monic().to_cplx();
  std::vector<cplx> roots;
  if (n == 1) {
    roots.push_back(-c[0]);
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    const auto& ev = solver.eigenvalues();
    for (int i = 0; i < n; ++i) roots.push_back(ev(i));
  }
  const Poly dp = squarefree.derivative();
  for (auto& r : roots) {
    for (int it = 0; it < 8; ++it) {
      const cplx fp = dp.eval(r);
      if (std::abs(fp) == 0.0) break;
      const cplx step = squarefree.eval(r) / fp;
      r -= step;
      if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(r))) break;
    }
  }
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

std::vector<std::pair<cplx, int>> roots_with_multiplicity(const Poly& p) {
  std::vector<std::pair<cplx, int>> out;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (cplx r : numeric_roots(factors[i])) out.emplace_back(r, static_cast<int>(i) + 1);
  }
  return out;
}

bool solve_exact(std::vector<std::vector<CRational>> a, std::vector<CRational> b,
                 std::vector<CRational>& x) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const CRational inv = CRational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const CRational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return false;
  }
  x.assign(cols, CRational{});
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return true;
}

}  // namespace nullsl2
