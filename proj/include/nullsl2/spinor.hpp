#ifndef NULLSL2_SPINOR_HPP
#define NULLSL2_SPINOR_HPP

#include <array>
#include <span>
#include <vector>

#include "nullsl2/mero.hpp"

namespace nullsl2 {

/// Which chart of the null quadric the spinor lives on: eta = f1 + i f2
/// (primary) or eta = f1 - i f2 (alternate).
enum class SpinorChart { primary, alternate };

struct SpinorData {
  MeroFunction eta;
  MeroFunction f3;
  SpinorChart chart = SpinorChart::primary;
};

/// Direction field f = (f1, f2, f3) of a curve in C^3, taken against dz.
using DirectionField = std::array<MeroFunction, 3>;

struct C3NullCurve {
  std::array<MeroFunction, 3> X;
  std::vector<cplx> poles;
};

struct C3Report {
  bool null = false;
  bool immersion = false;
  bool flat = false;
  double null_residual = 0.0;
};

/// f1 = (eta - f3^2/eta)/2, f2 = -i (eta + f3^2/eta)/2 (sign of f2 flips on
/// the alternate chart). The result is null by construction.
DirectionField from_spinor(const SpinorData& s);

SpinorData extract_spinor(const DirectionField& f, SpinorChart chart = SpinorChart::primary,
                          double tol = kZeroTol);

/// Checks eta != 0 and that eta and f3^2/eta share no zero off the declared
/// points (rational data only; windows are checked at their base point).
bool spinor_is_valid(const SpinorData& s, std::span<const cplx> declared = {});

MeroFunction sum_of_squares(std::span<const MeroFunction> v);

C3Report check_null_c3(const C3NullCurve& X, double tol = kZeroTol);

struct PeriodObstruction {
  int component;  // 0-based
  cplx pole;
  cplx period;    // 2 pi i * residue
};

/// Residue obstructions to integrating f dz on the punctured plane.
std::vector<PeriodObstruction> exactness_obstructions(const DirectionField& f, double tol = kZeroTol);

/// X with X' = f and X(base) = value. Throws NonExactField when some
/// component has a nonzero period.
C3NullCurve integrate_null(const DirectionField& f, cplx base, const std::array<cplx, 3>& value);

// Shared predicates on vector-valued meromorphic maps.

/// True when the projective class of v is constant (v has constant
/// direction). The zero vector counts as constant.
bool direction_is_constant(std::span<const MeroFunction> v, double tol = kZeroTol);

/// True when v has no common zero outside the excluded points and v is not
/// identically zero.
bool no_common_zero(std::span<const MeroFunction> v, std::span<const cplx> excluded, double tol = kZeroTol);

/// Points where some component has a pole (rational components) or the base
/// point of a window component with a principal part.
std::vector<cplx> pole_points(std::span<const MeroFunction> v);

/// Appends the points of extra not already in set (within 1e-9).
void merge_points(std::vector<cplx>& set, std::span<const cplx> extra);

}  // namespace nullsl2

#endif  // NULLSL2_SPINOR_HPP
