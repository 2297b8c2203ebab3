#ifndef NULLSL2_SL2CURVE_HPP
#define NULLSL2_SL2CURVE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nullsl2/error.hpp"
#include "nullsl2/mero.hpp"
#include "nullsl2/spinor.hpp"

namespace nullsl2 {

using Mat2 = Eigen::Matrix2cd;
using C3Point = std::array<cplx, 3>;

/// Meromorphic map into SL2(C), slots (F1, F2, F3, F4) = (z11, z12, z21, z22).
struct SL2NullCurve {
  std::array<MeroFunction, 4> F;
  std::vector<cplx> poles;     // E_infinity plus declared poles
  std::vector<cplx> singular;  // E_sing: recorded, excluded from immersion checks

  const MeroFunction& operator[](int slot) const { return F[static_cast<std::size_t>(slot - 1)]; }
};

struct EndModelSpec {
  int multiplicity = 1;
  cplx center = 0.0;
};

struct Sl2Report {
  bool unimodular = false;
  bool null = false;
  bool immersion = false;
  bool nonflat = false;
  double det_residual = 0.0;   // of F1 F4 - F2 F3 - 1
  double null_residual = 0.0;  // of det F'
};

enum class ShearKind { row1_plus_row2, row2_plus_row1, col1_plus_col2, col2_plus_col1 };

/// T(z1, z2, z3) = (1/z3) [[1, z1 + i z2], [z1 - i z2, z1^2 + z2^2 + z3^2]].
Mat2 tee(const C3Point& x);
/// T^-1(A) = (1/(2 a11)) (a21 + a12, i (a21 - a12), 2).
C3Point tee_inv(const Mat2& a);

SL2NullCurve tee_curve(const C3NullCurve& X);
C3NullCurve tee_inv_curve(const SL2NullCurve& F);

MeroFunction det(const SL2NullCurve& F);
SL2NullCurve derivative(const SL2NullCurve& F);
Sl2Report check_null_sl2(const SL2NullCurve& F, double tol = kZeroTol);

SL2NullCurve shear(const SL2NullCurve& F, cplx lambda, ShearKind kind);
Mat2 shear(const Mat2& a, cplx lambda, ShearKind kind);

SL2NullCurve end_model(const EndModelSpec& spec);
SL2NullCurve identity_curve();

/// (F2, -F1; F4, -F3), (F3, F4; -F1, -F2), (F4, -F3; -F2, F1).
std::array<SL2NullCurve, 3> aux_rotations(const SL2NullCurve& F);

/// The curve among F and its aux rotations whose F1 carries the minimal slot
/// order at p.
SL2NullCurve normalize_min_slot(const SL2NullCurve& F, cplx p);

Mat2 evaluate(const SL2NullCurve& F, cplx z);

/// Slot-wise max modulus.
double sup_norm(const Mat2& a);

std::vector<cplx> circle_samples(cplx center, double radius, int n);

struct PushNormResult {
  cplx lambda;
  SL2NullCurve curve;
  double margin;  // min over samples of max over free slots, minus delta
  int draws;
};

class SearchFailed : public Error {
 public:
  SearchFailed(cplx best_lambda, double best_margin, const std::string& what)
      : Error(ErrorKind::SearchFailed, what), best_lambda_(best_lambda), best_margin_(best_margin) {}
  cplx best_lambda() const { return best_lambda_; }
  double best_margin() const { return best_margin_; }

 private:
  cplx best_lambda_;
  double best_margin_;
};

inline constexpr int kPushNormBudget = 64;

/// Finds lambda so that the shear keeping row (fixed_slot's row) fixed has
/// max |F_j| > delta over the other three slots at every sample.
PushNormResult push_norm(const SL2NullCurve& F, int fixed_slot, double delta, std::span<const cplx> samples,
                         std::uint64_t seed = 0x5eed, int budget = kPushNormBudget);

double min_sup_norm_on_circle(const SL2NullCurve& F, double radius, int samples = 256, cplx center = 0.0);

}  // namespace nullsl2

#endif  // NULLSL2_SL2CURVE_HPP
