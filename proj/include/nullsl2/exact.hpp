#ifndef NULLSL2_EXACT_HPP
#define NULLSL2_EXACT_HPP

// Exact arithmetic over the Gaussian rationals Q(i) and polynomials with
// coefficients there. Every double is a dyadic rational, so values coming
// from JSON or from the floating pipeline convert without rounding.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nullsl2 {

using cplx = std::complex<double>;

class CRational {
 public:
  CRational() = default;
  CRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  CRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  explicit CRational(cplx z) : re_(z.real()), im_(z.imag()) {}

  static CRational i() { return {0, 1}; }
  /// Parses "p/q" or an integer.
  static mpq_class parse_part(const std::string& text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  cplx to_cplx() const { return {re_.get_d(), im_.get_d()}; }
  CRational conj() const { return {re_, -im_}; }
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  CRational operator-() const { return {-re_, -im_}; }
  CRational& operator+=(const CRational& o);
  CRational& operator-=(const CRational& o);
  CRational& operator*=(const CRational& o);
  CRational& operator/=(const CRational& o);

  friend CRational operator+(CRational a, const CRational& b) { return a += b; }
  friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
  friend CRational operator*(CRational a, const CRational& b) { return a *= b; }
  friend CRational operator/(CRational a, const CRational& b) { return a /= b; }
  friend bool operator==(const CRational& a, const CRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Dense polynomial, coefficients stored low degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<CRational> coeffs);
  Poly(const CRational& c);  // NOLINT(google-explicit-constructor)

  /// (z - root)
  static Poly linear(const CRational& root);
  /// c * z^n
  static Poly monomial(const CRational& c, int n);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<CRational>& coeffs() const { return c_; }
  const CRational& operator[](std::size_t k) const { return c_[k]; }
  CRational lead() const { return c_.empty() ? CRational{} : c_.back(); }
  /// Number of vanishing low-order coefficients (order of the zero at 0).
  int low_order() const;

  CRational eval(const CRational& z) const;
  cplx eval(cplx z) const;
  std::vector<cplx> to_cplx() const;

  Poly derivative() const;
  /// p(z + a)
  Poly shift(const CRational& a) const;
  Poly monic() const;
  Poly scaled(const CRational& s) const;
  /// Drops the factor z^k (k <= low_order()).
  Poly divided_by_z_power(int k) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<CRational> c_;
};

Poly pow(const Poly& p, unsigned n);

/// Yun square-free decomposition of a nonconstant polynomial: returns factors
/// (a_1, ..., a_k), monic and pairwise coprime, with p = lead * prod a_i^i.
std::vector<Poly> squarefree_decomposition(const Poly& p);

/// Numerical roots of a square-free polynomial (companion eigenvalues, then
/// Newton polishing on the double coefficients).
std::vector<cplx> numeric_roots(const Poly& squarefree);

/// Roots with multiplicities.
std::vector<std::pair<cplx, int>> roots_with_multiplicity(const Poly& p);

/// Solves A x = b exactly by Gaussian elimination; returns false when the
/// system is inconsistent. Free variables are set to zero.
bool solve_exact(std::vector<std::vector<CRational>> a, std::vector<CRational> b,
                 std::vector<CRational>& x);

std::string to_string(const CRational& q);

}  // namespace nullsl2

#endif  // NULLSL2_EXACT_HPP
