#ifndef NULLSL2_MERO_HPP
#define NULLSL2_MERO_HPP

// Meromorphic functions of one complex variable on planar domains.
//
// A MeroFunction is either an exact rational function P/Q with Gaussian
// rational coefficients, or a truncated Laurent window around a base point
//
//     f(z) = sum_{k = min_exp}^{trunc - 1} c_k (z - base)^k + O((z - base)^trunc)
//
// with double coefficients. Rational values are kept in lowest terms with a
// monic denominator, so identity checks such as det F == 1 are exact.

#include <complex>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "nullsl2/exact.hpp"

namespace nullsl2 {

inline constexpr int kDefaultTruncation = 24;
inline constexpr double kZeroTol = 1e-10;

enum class DomainKind { plane, disk, punctured_disk, annulus };

struct Domain {
  DomainKind kind = DomainKind::plane;
  double r_inner = 0.0;
  double r_outer = 0.0;
};

struct RationalForm {
  Poly num;
  Poly den;
};

struct LaurentWindow {
  int min_exp = 0;
  std::vector<cplx> coeffs;

  int trunc() const { return min_exp + static_cast<int>(coeffs.size()); }
  /// Coefficient of (z - base)^k; zero below min_exp. k must be < trunc().
  cplx coeff(int k) const;
};

class MeroFunction {
 public:
  /// The zero function.
  MeroFunction();
  MeroFunction(const CRational& c);  // NOLINT(google-explicit-constructor)
  MeroFunction(long c) : MeroFunction(CRational(c)) {}  // NOLINT(google-explicit-constructor)

  static MeroFunction constant(cplx c) { return MeroFunction(CRational(c)); }
  static MeroFunction rational(Poly num, Poly den, cplx base_point = 0.0);
  static MeroFunction polynomial(Poly p) { return rational(std::move(p), Poly(CRational(1))); }
  /// c * (z - center)^exponent
  static MeroFunction monomial(const CRational& c, int exponent, const CRational& center = {});
  /// The coordinate function z.
  static MeroFunction z() { return monomial(CRational(1), 1); }
  static MeroFunction laurent(int min_exp, std::vector<cplx> coeffs, cplx base_point = 0.0);

  bool is_rational() const;
  const RationalForm& rational_form() const;
  const LaurentWindow& window() const;
  cplx base_point() const;
  const Domain& domain() const;
  MeroFunction with_domain(Domain d) const;
  MeroFunction with_base_point(cplx b) const;

  /// Cached double coefficients of the rational form (num, den).
  const std::vector<cplx>& num_cplx() const;
  const std::vector<cplx>& den_cplx() const;

 private:
  struct Rep;
  explicit MeroFunction(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;

  friend MeroFunction make_window(LaurentWindow w, cplx base, Domain d);
};

enum class ArithOp { add, sub, mul, div };

MeroFunction arith(ArithOp op, const MeroFunction& f, const MeroFunction& g);
MeroFunction operator+(const MeroFunction& f, const MeroFunction& g);
MeroFunction operator-(const MeroFunction& f, const MeroFunction& g);
MeroFunction operator*(const MeroFunction& f, const MeroFunction& g);
MeroFunction operator/(const MeroFunction& f, const MeroFunction& g);
MeroFunction operator-(const MeroFunction& f);
MeroFunction pow(const MeroFunction& f, int n);

MeroFunction differentiate(const MeroFunction& f);

/// Order of f at p: negative for poles, positive for zeros. Exact for
/// rational f; for windows p must be the base point and coefficients with
/// modulus <= tol are treated as zero.
int ord(const MeroFunction& f, cplx p, double tol = kZeroTol);

/// Coefficient of (z - p)^-1.
cplx residue(const MeroFunction& f, cplx p);

cplx evaluate(const MeroFunction& f, cplx z);

/// Exact Laurent coefficients of a rational f at p for exponents in [lo, hi).
std::vector<CRational> exact_laurent(const MeroFunction& f, cplx p, int lo, int hi);

/// Laurent window of f at p holding nterms coefficients from ord_p(f) on.
LaurentWindow expand(const MeroFunction& f, cplx p, int nterms = kDefaultTruncation);
MeroFunction to_laurent(const MeroFunction& f, cplx p, int nterms = kDefaultTruncation);

/// 0 for an exactly vanishing rational function, otherwise a coefficient
/// size: max|num| / max|den| for rationals, max|c_k| for windows.
double zero_residual(const MeroFunction& f);
bool is_exact_zero(const MeroFunction& f);
inline bool is_zero(const MeroFunction& f, double tol = kZeroTol) { return zero_residual(f) <= tol; }

struct PoleResidue {
  cplx point;
  int multiplicity;
  cplx residue;
};

/// Roots of the denominator (rational f only), with multiplicities.
std::vector<std::pair<cplx, int>> poles(const MeroFunction& f);
/// Roots of the numerator (rational f only), with multiplicities.
std::vector<std::pair<cplx, int>> zeros(const MeroFunction& f);
/// All poles of a rational f together with numerically computed residues.
std::vector<PoleResidue> residues(const MeroFunction& f);

/// Exact antiderivative when one exists within the representation (no
/// residues), otherwise nullopt.
std::optional<MeroFunction> antiderivative(const MeroFunction& f, double tol = kZeroTol);

}  // namespace nullsl2

#endif  // NULLSL2_MERO_HPP
