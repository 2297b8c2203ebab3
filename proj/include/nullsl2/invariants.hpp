#ifndef NULLSL2_INVARIANTS_HPP
#define NULLSL2_INVARIANTS_HPP

#include <array>
#include <optional>
#include <vector>

#include "nullsl2/sl2curve.hpp"

namespace nullsl2 {

/// G = F1'/F3', checked against F2'/F4'.
MeroFunction hyperbolic_gauss(const SL2NullCurve& F, double tol = kZeroTol);
/// g = -F2'/F1', checked against -F4'/F3'.
MeroFunction secondary_gauss(const SL2NullCurve& F, double tol = kZeroTol);
/// omega/dz = F1 F3' - F3 F1'.
MeroFunction omega(const SL2NullCurve& F);

/// Q/dz^2 as omega * g'.
MeroFunction hopf_from_omega(const SL2NullCurve& F, double tol = kZeroTol);
/// Q/dz^2 as F1''/F1 - (F1'/F1) (F3'' F1 - F3 F1'') / (F3' F1 - F3 F1').
MeroFunction hopf_from_f1_f3(const SL2NullCurve& F);
/// Both paths, compared; throws HopfMismatch when they differ.
MeroFunction hopf(const SL2NullCurve& F, double tol = kZeroTol);

/// Slots of F' F^-1, with F^-1 taken as the adjugate.
std::array<MeroFunction, 4> maurer_cartan(const SL2NullCurve& F);

/// Coefficient of (z - p)^k in f.
cplx laurent_coeff(const MeroFunction& f, cplx p, int k);

/// The integers of the multiplicity identities, read off F as given.
struct LemmaQuantities {
  int k = 0;          // ord_p F1
  int l = 0;          // ord_p (F3/F1)'
  int ord_omega = 0;
  int ord_hopf = 0;
  cplx q_hat_minus2 = 0.0;
};

LemmaQuantities lemma_quantities(const SL2NullCurve& F, cplx p, double tol = kZeroTol);

struct MultiplicityFormulas {
  int by_l = 0;                             // |l + 1|
  std::optional<int> by_ord_difference;     // |ord F3 - ord F1| when the orders differ
  std::optional<int> by_omega_hopf;         // sqrt((ord omega + 1)^2 + 4 q_hat_-2)
};

/// Evaluated on F after moving its minimal-order slot to F1.
MultiplicityFormulas multiplicity_formulas(const SL2NullCurve& F, cplx p, double tol = kZeroTol);

int end_multiplicity(const SL2NullCurve& F, cplx p, double tol = kZeroTol);

struct EndReport {
  cplx center = 0.0;
  int k = 0;
  int l = 0;
  int ord_omega = 0;
  cplx q_hat_minus2 = 0.0;
  int multiplicity = 0;
  bool regular = false;
  bool finite_total_curvature = false;
  bool smooth_candidate = false;
  int min_maurer_cartan_ord = 0;
  std::vector<cplx> hopf_head;  // Laurent coefficients of Q for exponents -2..2
};

EndReport classify_end(const SL2NullCurve& F, cplx p, double tol = kZeroTol);

/// (1 + |g|^2)^2 |omega/dz|^2 at z.
double induced_metric_factor(const SL2NullCurve& F, cplx z);

}  // namespace nullsl2

#endif  // NULLSL2_INVARIANTS_HPP
