#include "nullsl2/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace nullsl2 {

namespace {

bool vanishes(const MeroFunction& f, double tol) { return f.is_rational() ? is_exact_zero(f) : is_zero(f, tol); }

bool same_function(const MeroFunction& a, const MeroFunction& b, double tol) {
  const double scale = std::max(1.0, std::max(zero_residual(a), zero_residual(b)));
  return zero_residual(a - b) <= tol * scale;
}

/// a/b checked against c/d by cross multiplication.
MeroFunction checked_quotient(const MeroFunction& a, const MeroFunction& b, const MeroFunction& c,
                              const MeroFunction& d, double tol, const char* name) {
  const bool b_ok = !vanishes(b, tol);
  const bool d_ok = !vanishes(d, tol);
  if (!b_ok && !d_ok) throw Error(ErrorKind::DegenerateDenominator, std::string(name) + ": both denominators vanish");
  if (!same_function(a * d, c * b, tol)) {
    throw Error(ErrorKind::GaussMapMismatch, std::string(name) + ": the two defining quotients differ");
  }
  return b_ok ? a / b : c / d;
}

int min_slot_ord(std::span<const MeroFunction> slots, cplx p, double tol) {
  int m = std::numeric_limits<int>::max();
  for (const auto& f : slots) {
    if (!vanishes(f, tol)) m = std::min(m, ord(f, p, tol));
  }
  return m;
}

}  // namespace

MeroFunction hyperbolic_gauss(const SL2NullCurve& F, double tol) {
  const SL2NullCurve d = derivative(F);
  return checked_quotient(d[1], d[3], d[2], d[4], tol, "hyperbolic Gauss map");
}

MeroFunction secondary_gauss(const SL2NullCurve& F, double tol) {
  const SL2NullCurve d = derivative(F);
  return -checked_quotient(d[2], d[1], d[4], d[3], tol, "secondary Gauss map");
}

MeroFunction omega(const SL2NullCurve& F) { return F[1] * differentiate(F[3]) - F[3] * differentiate(F[1]); }

MeroFunction hopf_from_omega(const SL2NullCurve& F, double tol) {
  return omega(F) * differentiate(secondary_gauss(F, tol));
}

MeroFunction hopf_from_f1_f3(const SL2NullCurve& F) {
  const MeroFunction d1 = differentiate(F[1]);
  const MeroFunction dd1 = differentiate(d1);
  const MeroFunction d3 = differentiate(F[3]);
  const MeroFunction dd3 = differentiate(d3);
  return dd1 / F[1] - (d1 / F[1]) * (dd3 * F[1] - F[3] * dd1) / (d3 * F[1] - F[3] * d1);
}

MeroFunction hopf(const SL2NullCurve& F, double tol) {
  const MeroFunction a = hopf_from_omega(F, tol);
  // The second path divides by F1 and by omega.
  if (vanishes(F[1], tol) || vanishes(omega(F), tol)) return a;
  const MeroFunction b = hopf_from_f1_f3(F);
  if (!same_function(a, b, tol)) {
    std::ostringstream msg;
    msg << "omega dg and the F1/F3 formula differ by " << zero_residual(a - b);
    throw Error(ErrorKind::HopfMismatch, msg.str());
  }
  return a;
}

std::array<MeroFunction, 4> maurer_cartan(const SL2NullCurve& F) {
  const SL2NullCurve d = derivative(F);
  return {d[1] * F[4] - d[2] * F[3], d[2] * F[1] - d[1] * F[2], d[3] * F[4] - d[4] * F[3],
          d[4] * F[1] - d[3] * F[2]};
}

cplx laurent_coeff(const MeroFunction& f, cplx p, int k) {
  if (f.is_rational()) return exact_laurent(f, p, k, k + 1).front().to_cplx();
  if (std::abs(f.base_point() - p) > 1e-12) {
    throw Error(ErrorKind::ExpansionPointMismatch, "Laurent window is not centred at the requested point");
  }
  if (k >= f.window().trunc()) throw Error(ErrorKind::TruncationTooShort, "coefficient beyond the window");
  return f.window().coeff(k);
}

LemmaQuantities lemma_quantities(const SL2NullCurve& F, cplx p, double tol) {
  if (vanishes(F[1], tol)) throw Error(ErrorKind::InvalidArgument, "F1 vanishes identically");
  const MeroFunction Q = hopf(F, tol);
  if (vanishes(Q, tol)) throw Error(ErrorKind::UmbilicInput, "Hopf differential vanishes identically");
  LemmaQuantities q;
  q.k = ord(F[1], p, tol);
  q.l = ord(differentiate(F[3] / F[1]), p, tol);
  q.ord_omega = ord(omega(F), p, tol);
  q.ord_hopf = ord(Q, p, tol);
  q.q_hat_minus2 = laurent_coeff(Q, p, -2);
  return q;
}

MultiplicityFormulas multiplicity_formulas(const SL2NullCurve& F, cplx p, double tol) {
  const SL2NullCurve N = normalize_min_slot(F, p);
  const LemmaQuantities q = lemma_quantities(N, p, tol);
  MultiplicityFormulas out;
  out.by_l = std::abs(q.l + 1);

  // |ord F3 - ord F1| only carries the multiplicity when the two orders
  // differ; a row shear can equalise them. Try the rotations in turn.
  SL2NullCurve candidates[4] = {N, {}, {}, {}};
  const auto rot = aux_rotations(N);
  std::copy(rot.begin(), rot.end(), candidates + 1);
  for (const SL2NullCurve& C : candidates) {
    if (vanishes(C[1], tol) || vanishes(C[3], tol)) continue;
    const int d = ord(C[3], p, tol) - ord(C[1], p, tol);
    if (d != 0) {
      out.by_ord_difference = std::abs(d);
      break;
    }
  }

  const double re = (q.ord_omega + 1.0) * (q.ord_omega + 1.0) + 4.0 * q.q_hat_minus2.real();
  if (std::abs(q.q_hat_minus2.imag()) <= 1e-8 && re >= -1e-8) {
    const double s = std::sqrt(std::max(0.0, re));
    if (std::abs(s - std::round(s)) <= 1e-6) out.by_omega_hopf = static_cast<int>(std::lround(s));
  }
  return out;
}

int end_multiplicity(const SL2NullCurve& F, cplx p, double tol) {
  if (min_slot_ord(F.F, p, tol) >= 0) throw Error(ErrorKind::NotAnEnd, "no effective pole at the given point");
  const MultiplicityFormulas m = multiplicity_formulas(F, p, tol);
  const bool ok = (!m.by_ord_difference || *m.by_ord_difference == m.by_l) && m.by_omega_hopf &&
                  *m.by_omega_hopf == m.by_l;
  if (!ok) {
    std::ostringstream msg;
    msg << "multiplicity formulas disagree: |l+1| = " << m.by_l;
    if (m.by_ord_difference) msg << ", |ord F3 - ord F1| = " << *m.by_ord_difference;
    msg << ", omega/Hopf formula " << (m.by_omega_hopf ? std::to_string(*m.by_omega_hopf) : "not an integer");
    throw Error(ErrorKind::HypothesisViolation, msg.str());
  }
  return m.by_l;
}

EndReport classify_end(const SL2NullCurve& F, cplx p, double tol) {
  if (min_slot_ord(F.F, p, tol) >= 0) throw Error(ErrorKind::NotAnEnd, "no effective pole at the given point");
  const MeroFunction g = secondary_gauss(F, tol);
  if (!vanishes(g, tol) && ord(g, p, tol) < 0) {
    throw Error(ErrorKind::HypothesisViolation, "secondary Gauss map has a pole at the end");
  }
  EndReport r;
  r.center = p;
  r.multiplicity = end_multiplicity(F, p, tol);
  const SL2NullCurve N = normalize_min_slot(F, p);
  const LemmaQuantities q = lemma_quantities(N, p, tol);
  r.k = q.k;
  r.l = q.l;
  r.ord_omega = q.ord_omega;
  r.q_hat_minus2 = q.q_hat_minus2;
  r.regular = true;
  r.finite_total_curvature = true;
  r.min_maurer_cartan_ord = min_slot_ord(maurer_cartan(N), p, tol);
  r.smooth_candidate = r.multiplicity == 1 && r.min_maurer_cartan_ord == -2;
  const MeroFunction Q = hopf(N, tol);
  for (int e = -2; e <= 2; ++e) r.hopf_head.push_back(laurent_coeff(Q, p, e));
  return r;
}

double induced_metric_factor(const SL2NullCurve& F, cplx z) {
  const double g2 = std::norm(evaluate(secondary_gauss(F), z));
  const double w = std::abs(evaluate(omega(F), z));
  return (1.0 + g2) * (1.0 + g2) * w * w;
}

}  // namespace nullsl2
