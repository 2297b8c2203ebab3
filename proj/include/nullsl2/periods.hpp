#ifndef NULLSL2_PERIODS_HPP
#define NULLSL2_PERIODS_HPP

#include <array>
#include <limits>
#include <optional>
#include <vector>

#include "nullsl2/spinor.hpp"

namespace nullsl2 {

enum class CycleKind { circle, polyline };

struct Cycle {
  CycleKind kind = CycleKind::circle;
  cplx center = 0.0;
  double radius = 1.0;
  std::vector<cplx> points;  // polyline vertices; closed automatically
  int orientation = 1;
  int nodes = 512;  // circle: trapezoid nodes; polyline: Gauss-Legendre nodes per segment

  static Cycle circle(cplx center, double radius, int orientation = 1, int nodes = 512);
  static Cycle polyline(std::vector<cplx> points, int orientation = 1, int nodes = 16);
};

/// Nodes and weights with  integral of f dz  ~  sum_k w_k f(z_k).
struct Quadrature {
  std::vector<cplx> points;
  std::vector<cplx> weights;
};

Quadrature quadrature(const Cycle& c);

/// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Winding number of the cycle around p; throws PoleOnContour when p lies on it.
int winding_number(const Cycle& c, cplx p);

struct PeriodValue {
  cplx quadrature;
  std::optional<cplx> residue_sum;  // 2 pi i * sum of winding * residue (rational f)
};

inline constexpr double kCrossCheckTol = 1e-8;

/// Quadrature plus the residue cross-check; throws PoleOnContour,
/// CrossCheckFailed.
PeriodValue period_detail(const MeroFunction& f, const Cycle& c, double cross_check_tol = kCrossCheckTol);
cplx period(const MeroFunction& f, const Cycle& c);

struct PeriodReport {
  std::vector<std::array<cplx, 3>> periods;  // one triple per cycle
  double max_norm = 0.0;                      // max modulus over all entries
};

PeriodReport period_map(const DirectionField& f, const std::vector<Cycle>& cycles);

enum class SprayMode { eta_only };

/// eta_zeta = eta * exp(sum zeta_i h_i), f3 fixed.
struct SprayFamily {
  SpinorData base;
  std::vector<MeroFunction> basis;
  SprayMode mode = SprayMode::eta_only;
};

/// Rational form of the spray point: the exponential is replaced by its
/// Taylor polynomial of the given order, except that a constant exponent is
/// exponentiated exactly.
SpinorData spray_apply(const SprayFamily& s, const std::vector<cplx>& zeta, int order = kDefaultTruncation);

/// Periods of from_spinor(spray point) with the exponential evaluated
/// pointwise at the quadrature nodes.
PeriodReport spray_periods(const SprayFamily& s, const std::vector<cplx>& zeta, const std::vector<Cycle>& cycles);

struct SolveOptions {
  double tol = 1e-10;
  int max_iter = 20;
  double fd_step = 1e-6;
  double cond_limit = 1e12;
  double sigma_floor = 1e-7;
  int max_halvings = 8;
  double max_step = std::numeric_limits<double>::infinity();
};

enum class SolveStatus { converged, max_iter_exceeded };

struct SolveResult {
  std::vector<cplx> zeta0;
  PeriodReport report;
  double residual = 0.0;  // max modulus of the f1, f2 periods
  int iterations = 0;
  std::vector<double> history;  // residual at the start of each iteration
  SolveStatus status = SolveStatus::converged;
};

/// Damped Gauss-Newton on the f1, f2 periods. Throws SingularJacobian;
/// reports max_iter_exceeded through the status with the best iterate.
SolveResult period_solve(const SprayFamily& s, const std::vector<Cycle>& cycles, const SolveOptions& opt = {});

}  // namespace nullsl2

#endif  // NULLSL2_PERIODS_HPP
