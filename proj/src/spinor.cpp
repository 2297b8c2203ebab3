#include "nullsl2/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nullsl2/error.hpp"

namespace nullsl2 {

namespace {

const CRational kHalf{mpq_class(1, 2)};

bool near_any(cplx p, std::span<const cplx> set, double tol = 1e-9) {
  return std::any_of(set.begin(), set.end(), [&](cplx q) { return std::abs(p - q) <= tol; });
}

bool all_rational(std::span<const MeroFunction> v) {
  return std::all_of(v.begin(), v.end(), [](const MeroFunction& f) { return f.is_rational(); });
}

cplx common_base(std::span<const MeroFunction> v) {
  for (const auto& f : v) {
    if (!f.is_rational()) return f.base_point();
  }
  return 0.0;
}

std::vector<LaurentWindow> windows_at(std::span<const MeroFunction> v, cplx base) {
  int trunc = kDefaultTruncation;
  for (const auto& f : v) {
    if (!f.is_rational()) trunc = std::min(trunc, f.window().trunc());
  }
  std::vector<LaurentWindow> out;
  for (const auto& f : v) {
    if (!f.is_rational()) {
      out.push_back(f.window());
    } else if (is_exact_zero(f)) {
      out.push_back(LaurentWindow{trunc, {}});
    } else {
      const int o = ord(f, base);
      out.push_back(expand(f, base, std::max(1, trunc - o)));
    }
  }
  return out;
}

std::string cplx_str(cplx z) {
  std::ostringstream os;
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

}  // namespace

DirectionField from_spinor(const SpinorData& s) {
  if (is_exact_zero(s.eta) || (!s.eta.is_rational() && is_zero(s.eta))) {
    throw Error(ErrorKind::EtaIdenticallyZero, "spinor eta vanishes identically");
  }
  const MeroFunction q = s.f3 * s.f3 / s.eta;
  const MeroFunction i = CRational::i();
  MeroFunction f1 = (s.eta - q) * kHalf;
  MeroFunction f2 = -i * (s.eta + q) * kHalf;
  if (s.chart == SpinorChart::alternate) f2 = -f2;
  return {f1, f2, s.f3};
}

SpinorData extract_spinor(const DirectionField& f, SpinorChart chart, double tol) {
  const MeroFunction i = CRational::i();
  const MeroFunction eta = chart == SpinorChart::primary ? f[0] + i * f[1] : f[0] - i * f[1];
  if (is_zero(eta, tol)) {
    throw Error(ErrorKind::DegenerateEta, chart == SpinorChart::primary
                                              ? "f1 + i f2 vanishes identically; try the alternate chart"
                                              : "f1 - i f2 vanishes identically");
  }
  return {eta, f[2], chart};
}

bool spinor_is_valid(const SpinorData& s, std::span<const cplx> declared) {
  if (is_zero(s.eta)) return false;
  if (!s.eta.is_rational() || !s.f3.is_rational()) {
    const cplx b = common_base(std::array{s.eta, s.f3});
    if (near_any(b, declared)) return true;
    if (ord(s.eta, b) <= 0) return true;
    const MeroFunction q = s.f3 * s.f3 / s.eta;
    return !is_zero(q) && ord(q, b) <= 0;
  }
  const MeroFunction q = s.f3 * s.f3 / s.eta;
  const std::array pair{s.eta, q};
  return no_common_zero(pair, declared);
}

MeroFunction sum_of_squares(std::span<const MeroFunction> v) {
  MeroFunction acc;
  for (const auto& f : v) acc = acc + f * f;
  return acc;
}

bool direction_is_constant(std::span<const MeroFunction> v, double tol) {
  if (all_rational(v)) {
    std::vector<MeroFunction> d;
    for (const auto& f : v) d.push_back(differentiate(f));
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (!is_zero(v[i] * d[j] - v[j] * d[i], tol)) return false;
      }
    }
    return true;
  }
  const cplx base = common_base(v);
  const auto w = windows_at(v, base);
  int lo = w[0].min_exp;
  int hi = w[0].trunc();
  for (const auto& x : w) {
    lo = std::min(lo, x.min_exp);
    hi = std::min(hi, x.trunc());
  }
  // Rows are the vector coefficients of (z - base)^k.
  std::vector<cplx> lead;
  for (int k = lo; k < hi; ++k) {
    std::vector<cplx> row;
    double norm = 0.0;
    for (const auto& x : w) {
      row.push_back(x.coeff(k));
      norm = std::max(norm, std::abs(row.back()));
    }
    if (lead.empty()) {
      if (norm > tol) lead = row;
      continue;
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      for (std::size_t j = i + 1; j < row.size(); ++j) {
        if (std::abs(lead[i] * row[j] - lead[j] * row[i]) > tol) return false;
      }
    }
  }
  return true;
}

bool no_common_zero(std::span<const MeroFunction> v, std::span<const cplx> excluded, double tol) {
  if (all_rational(v)) {
    Poly g;
    bool any = false;
    for (const auto& f : v) {
      if (is_exact_zero(f)) continue;
      any = true;
      g = g.is_zero() ? f.rational_form().num.monic() : Poly::gcd(g, f.rational_form().num);
    }
    if (!any) return false;
    if (g.degree() < 1) return true;
    for (const auto& [root, mult] : roots_with_multiplicity(g)) {
      (void)mult;
      if (!near_any(root, excluded)) return false;
    }
    return true;
  }
  const cplx base = common_base(v);
  if (near_any(base, excluded)) return true;
  for (const auto& x : windows_at(v, base)) {
    for (std::size_t k = 0; k < x.coeffs.size(); ++k) {
      if (std::abs(x.coeffs[k]) > tol) {
        if (x.min_exp + static_cast<int>(k) <= 0) return true;
        break;
      }
    }
  }
  return false;
}

std::vector<cplx> pole_points(std::span<const MeroFunction> v) {
  std::vector<cplx> out;
  for (const auto& f : v) {
    if (f.is_rational()) {
      std::vector<cplx> pts;
      for (const auto& [p, m] : poles(f)) {
        (void)m;
        pts.push_back(p);
      }
      merge_points(out, pts);
    } else if (!f.window().coeffs.empty() && f.window().min_exp < 0) {
      const cplx b = f.base_point();
      merge_points(out, std::span<const cplx>(&b, 1));
    }
  }
  return out;
}

void merge_points(std::vector<cplx>& set, std::span<const cplx> extra) {
  for (cplx p : extra) {
    if (!near_any(p, set)) set.push_back(p);
  }
}

C3Report check_null_c3(const C3NullCurve& X, double tol) {
  std::array<MeroFunction, 3> d;
  for (int k = 0; k < 3; ++k) d[static_cast<std::size_t>(k)] = differentiate(X.X[static_cast<std::size_t>(k)]);
  C3Report r;
  r.null_residual = zero_residual(sum_of_squares(d));
  r.null = r.null_residual <= tol;
  r.immersion = no_common_zero(d, X.poles, tol);
  r.flat = direction_is_constant(d, tol);
  return r;
}

std::vector<PeriodObstruction> exactness_obstructions(const DirectionField& f, double tol) {
  std::vector<PeriodObstruction> out;
  const cplx two_pi_i(0.0, 2.0 * M_PI);
  for (int k = 0; k < 3; ++k) {
    const MeroFunction& g = f[static_cast<std::size_t>(k)];
    if (g.is_rational()) {
      if (g.rational_form().den.degree() < 1) continue;
      for (const auto& pr : residues(g)) {
        if (std::abs(pr.residue) > tol) out.push_back({k, pr.point, two_pi_i * pr.residue});
      }
    } else {
      const LaurentWindow& w = g.window();
      if (w.min_exp <= -1 && w.trunc() > -1 && std::abs(w.coeff(-1)) > tol) {
        out.push_back({k, g.base_point(), two_pi_i * w.coeff(-1)});
      }
    }
  }
  return out;
}

C3NullCurve integrate_null(const DirectionField& f, cplx base, const std::array<cplx, 3>& value) {
  C3NullCurve X;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto a = antiderivative(f[k]);
    if (!a) {
      std::ostringstream msg;
      msg << "component f" << (k + 1) << " is not exact";
      for (const auto& ob : exactness_obstructions(f)) {
        if (static_cast<std::size_t>(ob.component) != k) continue;
        msg << "; circle around " << cplx_str(ob.pole) << " has period " << cplx_str(ob.period);
      }
      throw Error(ErrorKind::NonExactField, msg.str());
    }
    MeroFunction shift;
    if (a->is_rational()) {
      const RationalForm& r = a->rational_form();
      const CRational at(base);
      const CRational den = r.den.eval(at);
      if (den.is_zero()) throw Error(ErrorKind::EvaluationAtPole, "base point is a pole of the antiderivative");
      shift = CRational(value[k]) - r.num.eval(at) / den;
    } else {
      shift = MeroFunction::constant(value[k] - evaluate(*a, base));
    }
    X.X[k] = *a + shift;
  }
  X.poles = pole_points(X.X);
  return X;
}

}  // namespace nullsl2
