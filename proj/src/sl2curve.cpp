#include "nullsl2/sl2curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "nullsl2/kernels.hpp"

namespace nullsl2 {

namespace {

const CRational kTwo(2);

std::vector<cplx> zero_points(const MeroFunction& f) {
  std::vector<cplx> out;
  if (f.is_rational()) {
    for (const auto& [p, m] : zeros(f)) {
      (void)m;
      out.push_back(p);
    }
  } else if (ord(f, f.base_point()) > 0) {
    out.push_back(f.base_point());
  }
  return out;
}

SL2NullCurve with_slots(const SL2NullCurve& src, MeroFunction f1, MeroFunction f2, MeroFunction f3,
                        MeroFunction f4) {
  SL2NullCurve out;
  out.F = {std::move(f1), std::move(f2), std::move(f3), std::move(f4)};
  out.poles = src.poles;
  out.singular = src.singular;
  return out;
}

bool vanishes(const MeroFunction& f) { return f.is_rational() ? is_exact_zero(f) : is_zero(f); }

}  // namespace

Mat2 tee(const C3Point& x) {
  const auto [z1, z2, z3] = x;
  if (z3 == cplx(0.0)) throw Error(ErrorKind::ThirdCoordinateZero, "tee needs x3 != 0");
  const cplx i(0.0, 1.0);
  Mat2 a;
  a << 1.0, z1 + i * z2, z1 - i * z2, z1 * z1 + z2 * z2 + z3 * z3;
  return a / z3;
}

C3Point tee_inv(const Mat2& a) {
  if (a(0, 0) == cplx(0.0)) throw Error(ErrorKind::FirstEntryZero, "tee_inv needs a11 != 0");
  const cplx i(0.0, 1.0);
  const cplx s = 1.0 / (2.0 * a(0, 0));
  return {s * (a(1, 0) + a(0, 1)), s * i * (a(1, 0) - a(0, 1)), s * 2.0};
}

SL2NullCurve tee_curve(const C3NullCurve& X) {
  const auto& [x1, x2, x3] = X.X;
  if (vanishes(x3)) throw Error(ErrorKind::ThirdCoordinateZero, "X3 vanishes identically");
  const MeroFunction i = CRational::i();
  const MeroFunction inv = MeroFunction(1) / x3;
  SL2NullCurve F;
  F.F = {inv, (x1 + i * x2) * inv, (x1 - i * x2) * inv, (x1 * x1 + x2 * x2 + x3 * x3) * inv};
  F.poles = X.poles;
  merge_points(F.poles, zero_points(x3));
  return F;
}

C3NullCurve tee_inv_curve(const SL2NullCurve& F) {
  if (vanishes(F[1])) throw Error(ErrorKind::FirstEntryZero, "F1 vanishes identically");
  const MeroFunction i = CRational::i();
  const MeroFunction s = MeroFunction(1) / (kTwo * F[1]);
  C3NullCurve X;
  X.X = {(F[3] + F[2]) * s, i * (F[3] - F[2]) * s, kTwo * s};
  X.poles = F.poles;
  merge_points(X.poles, zero_points(F[1]));
  return X;
}

MeroFunction det(const SL2NullCurve& F) { return F[1] * F[4] - F[2] * F[3]; }

SL2NullCurve derivative(const SL2NullCurve& F) {
  return with_slots(F, differentiate(F[1]), differentiate(F[2]), differentiate(F[3]), differentiate(F[4]));
}

Sl2Report check_null_sl2(const SL2NullCurve& F, double tol) {
  Sl2Report r;
  r.det_residual = zero_residual(det(F) - MeroFunction(1));
  r.unimodular = r.det_residual <= tol;
  const SL2NullCurve d = derivative(F);
  r.null_residual = zero_residual(det(d));
  r.null = r.null_residual <= tol;
  std::vector<cplx> excluded = F.poles;
  merge_points(excluded, F.singular);
  r.immersion = no_common_zero(d.F, excluded, tol);
  r.nonflat = !direction_is_constant(d.F, tol);
  return r;
}

SL2NullCurve shear(const SL2NullCurve& F, cplx lambda, ShearKind kind) {
  const MeroFunction l = CRational(lambda);
  switch (kind) {
    case ShearKind::row1_plus_row2:
      return with_slots(F, F[1] + l * F[3], F[2] + l * F[4], F[3], F[4]);
    case ShearKind::row2_plus_row1:
      return with_slots(F, F[1], F[2], F[3] + l * F[1], F[4] + l * F[2]);
    case ShearKind::col1_plus_col2:
      return with_slots(F, F[1] + l * F[2], F[2], F[3] + l * F[4], F[4]);
    case ShearKind::col2_plus_col1:
      return with_slots(F, F[1], F[2] + l * F[1], F[3], F[4] + l * F[3]);
  }
  return F;
}

Mat2 shear(const Mat2& a, cplx lambda, ShearKind kind) {
  Mat2 b = a;
  switch (kind) {
    case ShearKind::row1_plus_row2: b.row(0) += lambda * a.row(1); break;
    case ShearKind::row2_plus_row1: b.row(1) += lambda * a.row(0); break;
    case ShearKind::col1_plus_col2: b.col(0) += lambda * a.col(1); break;
    case ShearKind::col2_plus_col1: b.col(1) += lambda * a.col(0); break;
  }
  return b;
}

SL2NullCurve end_model(const EndModelSpec& spec) {
  const int m = spec.multiplicity;
  if (m <= 0) {
    throw Error(ErrorKind::InvalidMultiplicity, "multiplicity must be >= 1, got " + std::to_string(m));
  }
  const CRational p(spec.center);
  SL2NullCurve F;
  if (m == 1) {
    F.F = {MeroFunction::monomial(1, -2, p), MeroFunction::monomial(CRational(mpq_class(-4, 3)), 1, p),
           MeroFunction::monomial(1, -1, p), MeroFunction::monomial(CRational(mpq_class(-1, 3)), 2, p)};
  } else {
    const long s = static_cast<long>(m + 1) * (m + 1);
    F.F = {MeroFunction::monomial(1, -1, p), MeroFunction::monomial(CRational(mpq_class(-1, m + 2)), m + 1, p),
           MeroFunction::monomial(CRational(mpq_class(-1, m)), -(m + 1), p),
           MeroFunction::monomial(CRational(mpq_class(s, s - 1)), 1, p)};
  }
  F.poles = {spec.center};
  return F;
}

SL2NullCurve identity_curve() {
  SL2NullCurve F;
  F.F = {MeroFunction(1), MeroFunction(), MeroFunction(), MeroFunction(1)};
  return F;
}

std::array<SL2NullCurve, 3> aux_rotations(const SL2NullCurve& F) {
  return {with_slots(F, F[2], -F[1], F[4], -F[3]), with_slots(F, F[3], F[4], -F[1], -F[2]),
          with_slots(F, F[4], -F[3], -F[2], F[1])};
}

SL2NullCurve normalize_min_slot(const SL2NullCurve& F, cplx p) {
  int best = 0;
  int best_ord = std::numeric_limits<int>::max();
  for (int k = 0; k < 4; ++k) {
    const MeroFunction& f = F.F[static_cast<std::size_t>(k)];
    if (vanishes(f)) continue;
    const int o = ord(f, p);
    if (o < best_ord) {
      best_ord = o;
      best = k;
    }
  }
  if (best == 0) return F;
  return aux_rotations(F)[static_cast<std::size_t>(best - 1)];
}

Mat2 evaluate(const SL2NullCurve& F, cplx z) {
  Mat2 a;
  a << evaluate(F[1], z), evaluate(F[2], z), evaluate(F[3], z), evaluate(F[4], z);
  return a;
}

double sup_norm(const Mat2& a) { return a.cwiseAbs().maxCoeff(); }

std::vector<cplx> circle_samples(cplx center, double radius, int n) {
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(center + std::polar(radius, 2.0 * M_PI * k / n));
  return out;
}

PushNormResult push_norm(const SL2NullCurve& F, int fixed_slot, double delta, std::span<const cplx> samples,
                         std::uint64_t seed, int budget) {
  if (fixed_slot < 1 || fixed_slot > 4) throw Error(ErrorKind::InvalidArgument, "fixed_slot must be 1..4");
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
  if (samples.empty()) throw Error(ErrorKind::InvalidArgument, "push_norm needs at least one sample");

  // The row holding fixed_slot stays; the other row receives lambda times it.
  const int fixed_row = fixed_slot <= 2 ? 0 : 1;
  const int other_row = 1 - fixed_row;
  const int fixed_col = (fixed_slot - 1) % 2;
  const ShearKind kind = fixed_row == 0 ? ShearKind::row2_plus_row1 : ShearKind::row1_plus_row2;
  const std::vector<Mat2> values = kernels::evaluate_curve(F, samples);

  auto margin_of = [&](cplx lambda) {
    double m = std::numeric_limits<double>::infinity();
    for (const Mat2& a : values) {
      double best = std::abs(a(fixed_row, 1 - fixed_col));
      for (int c = 0; c < 2; ++c) best = std::max(best, std::abs(a(other_row, c) + lambda * a(fixed_row, c)));
      m = std::min(m, best - delta);
    }
    return m;
  };

  // |a_other + lambda a_fixed| >= |lambda| |a_fixed| - |a_other|, so any
  // |lambda| above rho is enough wherever the fixed row does not vanish.
  double rho = 0.0;
  for (const Mat2& a : values) {
    if (std::abs(a(fixed_row, 1 - fixed_col)) > delta) continue;
    double need = std::numeric_limits<double>::infinity();
    for (int c = 0; c < 2; ++c) {
      const double af = std::abs(a(fixed_row, c));
      if (af > 0.0) need = std::min(need, (delta + std::abs(a(other_row, c))) / af);
    }
    rho = std::max(rho, need);
  }
  if (!std::isfinite(rho)) rho = 1.0 + delta;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> stretch(1.05, 2.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  cplx best_lambda = 0.0;
  double best_margin = -std::numeric_limits<double>::infinity();
  for (int draw = 1; draw <= budget; ++draw) {
    const double scale = std::ldexp(1.0, (draw - 1) / 8);
    const cplx lambda = std::polar(rho * stretch(rng) * scale, phase(rng));
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) continue;
    const double m = margin_of(lambda);
    if (m > best_margin) {
      best_margin = m;
      best_lambda = lambda;
    }
    if (m > 0.0) return {lambda, shear(F, lambda, kind), m, draw};
  }
  std::ostringstream msg;
  msg << "no lambda in " << budget << " draws; best margin " << best_margin;
  throw SearchFailed(best_lambda, best_margin, msg.str());
}

double min_sup_norm_on_circle(const SL2NullCurve& F, double radius, int samples, cplx center) {
  if (!(radius > 0.0) || samples <= 0) throw Error(ErrorKind::InvalidArgument, "need radius > 0 and samples > 0");
  std::vector<cplx> pts = F.poles;
  merge_points(pts, pole_points(F.F));
  for (cplx p : pts) {
    if (std::abs(std::abs(p - center) - radius) <= 1e-9) {
      std::ostringstream msg;
      msg << "pole " << p << " lies on the circle of radius " << radius;
      throw Error(ErrorKind::PoleOnContour, msg.str());
    }
  }
  const std::vector<cplx> z = circle_samples(center, radius, samples);
  try {
    return kernels::min_sup_norm(F, z);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EvaluationAtPole) throw Error(ErrorKind::PoleOnContour, e.what());
    throw;
  }
}

}  // namespace nullsl2
