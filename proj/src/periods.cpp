#include "nullsl2/periods.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "nullsl2/error.hpp"
#include "nullsl2/kernels.hpp"

namespace nullsl2 {

namespace {

const cplx kI(0.0, 1.0);
const cplx kTwoPiI(0.0, 2.0 * M_PI);

std::vector<cplx> closed_vertices(const Cycle& c) {
  std::vector<cplx> v = c.points;
  if (!v.empty() && std::abs(v.front() - v.back()) > 0.0) v.push_back(v.front());
  return v;
}

double segment_distance(cplx p, cplx a, cplx b) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

[[noreturn]] void pole_on_contour(cplx p) {
  std::ostringstream msg;
  msg << "singular point " << p << " lies on the cycle";
  throw Error(ErrorKind::PoleOnContour, msg.str());
}

template <class Fn>
auto on_contour(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EvaluationAtPole) throw Error(ErrorKind::PoleOnContour, e.what());
    throw;
  }
}

/// Rejects cycles through a pole or zero of a rational function.
void check_points_off_cycle(const MeroFunction& f, const Cycle& c, bool zeros_too) {
  if (!f.is_rational()) return;
  for (const auto& [p, m] : poles(f)) {
    (void)m;
    winding_number(c, p);
  }
  if (!zeros_too || is_exact_zero(f)) return;
  for (const auto& [p, m] : zeros(f)) {
    (void)m;
    winding_number(c, p);
  }
}

/// Values of the spray data at the quadrature nodes of every cycle.
struct SprayNodes {
  std::vector<Quadrature> quad;
  std::vector<std::vector<cplx>> eta, f3;
  std::vector<std::vector<std::vector<cplx>>> h;  // [cycle][basis][node]
  double f2_sign = 1.0;
};

SprayNodes prepare(const SprayFamily& s, const std::vector<Cycle>& cycles) {
  SprayNodes n;
  n.f2_sign = s.base.chart == SpinorChart::alternate ? -1.0 : 1.0;
  for (const Cycle& c : cycles) {
    check_points_off_cycle(s.base.eta, c, true);
    check_points_off_cycle(s.base.f3, c, false);
    for (const auto& h : s.basis) check_points_off_cycle(h, c, false);
    n.quad.push_back(quadrature(c));
    const auto& pts = n.quad.back().points;
    on_contour([&] {
      n.eta.push_back(kernels::evaluate_function(s.base.eta, pts));
      n.f3.push_back(kernels::evaluate_function(s.base.f3, pts));
      std::vector<std::vector<cplx>> hv;
      for (const auto& h : s.basis) hv.push_back(kernels::evaluate_function(h, pts));
      n.h.push_back(std::move(hv));
      return 0;
    });
  }
  return n;
}

std::array<cplx, 3> cycle_periods(const SprayNodes& n, std::size_t c, const std::vector<cplx>& zeta) {
  std::array<cplx, 3> acc{};
  const Quadrature& q = n.quad[c];
  for (std::size_t k = 0; k < q.points.size(); ++k) {
    cplx e = 0.0;
    for (std::size_t i = 0; i < zeta.size(); ++i) e += zeta[i] * n.h[c][i][k];
    const cplx eta = n.eta[c][k] * std::exp(e);
    if (eta == cplx(0.0) || !std::isfinite(std::abs(eta))) pole_on_contour(q.points[k]);
    const cplx f3 = n.f3[c][k];
    const cplx qv = f3 * f3 / eta;
    acc[0] += q.weights[k] * 0.5 * (eta - qv);
    acc[1] += q.weights[k] * (-0.5 * n.f2_sign) * kI * (eta + qv);
    acc[2] += q.weights[k] * f3;
  }
  return acc;
}

PeriodReport report_from(std::vector<std::array<cplx, 3>> periods) {
  PeriodReport r;
  r.periods = std::move(periods);
  for (const auto& t : r.periods) {
    for (cplx v : t) r.max_norm = std::max(r.max_norm, std::abs(v));
  }
  return r;
}

PeriodReport periods_at(const SprayNodes& n, const std::vector<cplx>& zeta) {
  std::vector<std::array<cplx, 3>> out;
  for (std::size_t c = 0; c < n.quad.size(); ++c) out.push_back(cycle_periods(n, c, zeta));
  return report_from(std::move(out));
}

/// f1 and f2 periods, cycle by cycle.
Eigen::VectorXcd residual_vector(const SprayNodes& n, const std::vector<cplx>& zeta) {
  Eigen::VectorXcd r(static_cast<Eigen::Index>(2 * n.quad.size()));
  for (std::size_t c = 0; c < n.quad.size(); ++c) {
    const auto t = cycle_periods(n, c, zeta);
    r(static_cast<Eigen::Index>(2 * c)) = t[0];
    r(static_cast<Eigen::Index>(2 * c + 1)) = t[1];
  }
  return r;
}

/// Sum of the residues of a rational f at all its finite poles.
cplx finite_residue_total(const MeroFunction& f) {
  const RationalForm& r = f.rational_form();
  const Poly rem = Poly::divmod(r.num, r.den).second;
  if (rem.is_zero() || rem.degree() != r.den.degree() - 1) return 0.0;
  return (rem.lead() / r.den.lead()).to_cplx();
}

double sup(const Eigen::VectorXcd& r) { return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff(); }

}  // namespace

Cycle Cycle::circle(cplx center, double radius, int orientation, int nodes) {
  Cycle c;
  c.kind = CycleKind::circle;
  c.center = center;
  c.radius = radius;
  c.orientation = orientation;
  c.nodes = nodes;
  return c;
}

Cycle Cycle::polyline(std::vector<cplx> points, int orientation, int nodes) {
  Cycle c;
  c.kind = CycleKind::polyline;
  c.points = std::move(points);
  c.orientation = orientation;
  c.nodes = nodes;
  return c;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Gauss-Legendre needs at least one node");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    x[static_cast<std::size_t>(k)] = es.eigenvalues()(k);
    const double v = es.eigenvectors()(0, k);
    w[static_cast<std::size_t>(k)] = 2.0 * v * v;
  }
  return {x, w};
}

Quadrature quadrature(const Cycle& c) {
  if (c.orientation != 1 && c.orientation != -1) throw Error(ErrorKind::InvalidArgument, "orientation must be +1 or -1");
  if (c.nodes < 1) throw Error(ErrorKind::InvalidArgument, "quadrature needs at least one node");
  Quadrature q;
  const double o = c.orientation;
  if (c.kind == CycleKind::circle) {
    if (!(c.radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "circle radius must be positive");
    const double dt = 2.0 * M_PI / c.nodes;
    for (int k = 0; k < c.nodes; ++k) {
      const cplx u = std::polar(c.radius, k * dt);
      q.points.push_back(c.center + u);
      q.weights.push_back(o * kI * u * dt);
    }
    return q;
  }
  const auto v = closed_vertices(c);
  if (v.size() < 3) throw Error(ErrorKind::InvalidArgument, "polyline needs at least three vertices");
  const auto [x, w] = gauss_legendre(c.nodes);
  for (std::size_t s = 0; s + 1 < v.size(); ++s) {
    const cplx mid = 0.5 * (v[s] + v[s + 1]);
    const cplx half = 0.5 * (v[s + 1] - v[s]);
    for (std::size_t j = 0; j < x.size(); ++j) {
      q.points.push_back(mid + half * x[j]);
      q.weights.push_back(o * half * w[j]);
    }
  }
  return q;
}

int winding_number(const Cycle& c, cplx p) {
  constexpr double kOnContour = 1e-9;
  if (c.kind == CycleKind::circle) {
    const double d = std::abs(p - c.center);
    if (std::abs(d - c.radius) <= kOnContour * std::max(1.0, c.radius)) pole_on_contour(p);
    return d < c.radius ? c.orientation : 0;
  }
  const auto v = closed_vertices(c);
  double turn = 0.0;
  for (std::size_t s = 0; s + 1 < v.size(); ++s) {
    if (segment_distance(p, v[s], v[s + 1]) <= kOnContour) pole_on_contour(p);
    turn += std::arg((v[s + 1] - p) / (v[s] - p));
  }
  return c.orientation * static_cast<int>(std::lround(turn / (2.0 * M_PI)));
}

PeriodValue period_detail(const MeroFunction& f, const Cycle& c, double cross_check_tol) {
  PeriodValue out;
  if (f.is_rational()) {
    std::vector<int> winds;
    for (const auto& [p, m] : poles(f)) {
      (void)m;
      winds.push_back(winding_number(c, p));
    }
    const bool uniform = std::all_of(winds.begin(), winds.end(), [&](int w) { return w == winds.front(); });
    if (winds.empty()) {
      out.residue_sum = 0.0;
    } else if (uniform) {
      // Every pole is wound the same number of times: the residues add up to
      // minus the residue at infinity, which is exact and avoids resolving
      // clustered poles one by one.
      out.residue_sum = kTwoPiI * static_cast<double>(winds.front()) * finite_residue_total(f);
    } else {
      cplx sum = 0.0;
      for (const auto& pr : residues(f)) sum += static_cast<double>(winding_number(c, pr.point)) * pr.residue;
      out.residue_sum = kTwoPiI * sum;
    }
  }
  const Quadrature q = quadrature(c);
  out.quadrature = on_contour([&] { return kernels::weighted_sum(f, q.points, q.weights); });
  if (out.residue_sum && std::abs(out.quadrature - *out.residue_sum) >= cross_check_tol) {
    std::ostringstream msg;
    msg << "quadrature " << out.quadrature << " vs residues " << *out.residue_sum;
    throw Error(ErrorKind::CrossCheckFailed, msg.str());
  }
  return out;
}

cplx period(const MeroFunction& f, const Cycle& c) { return period_detail(f, c).quadrature; }

PeriodReport period_map(const DirectionField& f, const std::vector<Cycle>& cycles) {
  std::vector<std::array<cplx, 3>> out;
  for (const Cycle& c : cycles) out.push_back({period(f[0], c), period(f[1], c), period(f[2], c)});
  return report_from(std::move(out));
}

SpinorData spray_apply(const SprayFamily& s, const std::vector<cplx>& zeta, int order) {
  if (zeta.size() != s.basis.size()) throw Error(ErrorKind::InvalidArgument, "zeta length differs from basis size");
  for (cplx z : zeta) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw Error(ErrorKind::InvalidArgument, "zeta must be finite");
  }
  MeroFunction e;
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    if (zeta[i] != cplx(0.0)) e = e + CRational(zeta[i]) * s.basis[i];
  }
  SpinorData out = s.base;
  if (is_exact_zero(e)) return out;
  if (e.is_rational() && e.rational_form().num.degree() <= 0 && e.rational_form().den.degree() == 0) {
    out.eta = s.base.eta * CRational(std::exp(evaluate(e, 0.0)));
    return out;
  }
  // Horner form of sum_{n <= order} e^n / n!.
  MeroFunction t(1);
  for (int n = order; n >= 1; --n) t = MeroFunction(1) + e * t * CRational(mpq_class(1, n));
  out.eta = s.base.eta * t;
  return out;
}

PeriodReport spray_periods(const SprayFamily& s, const std::vector<cplx>& zeta, const std::vector<Cycle>& cycles) {
  if (zeta.size() != s.basis.size()) throw Error(ErrorKind::InvalidArgument, "zeta length differs from basis size");
  return periods_at(prepare(s, cycles), zeta);
}

SolveResult period_solve(const SprayFamily& s, const std::vector<Cycle>& cycles, const SolveOptions& opt) {
  if (cycles.empty()) throw Error(ErrorKind::InvalidArgument, "period_solve needs at least one cycle");
  const SprayNodes nodes = prepare(s, cycles);
  const std::size_t m = s.basis.size();
  std::vector<cplx> zeta(m, 0.0);

  const PeriodReport base = periods_at(nodes, zeta);
  for (const auto& t : base.periods) {
    if (std::abs(t[2]) >= opt.tol) {
      std::ostringstream msg;
      msg << "f3 has period " << t[2] << "; the spray leaves f3 unchanged";
      throw Error(ErrorKind::HypothesisViolation, msg.str());
    }
  }

  SolveResult res;
  Eigen::VectorXcd r = residual_vector(nodes, zeta);
  std::vector<cplx> best = zeta;
  double best_norm = sup(r);
  for (int iter = 1; iter <= opt.max_iter; ++iter) {
    const double norm = sup(r);
    res.history.push_back(norm);
    res.iterations = iter;
    if (norm < opt.tol) break;
    if (m == 0) throw Error(ErrorKind::SingularJacobian, "empty multiplier basis");

    const auto rows = r.size();
    Eigen::MatrixXcd jac(rows, static_cast<Eigen::Index>(m));
    kernels::for_each_index(m, kernels::Exec::parallel, [&](std::size_t j) {
      std::vector<cplx> zp = zeta, zm = zeta;
      zp[j] += opt.fd_step;
      zm[j] -= opt.fd_step;
      jac.col(static_cast<Eigen::Index>(j)) = (residual_vector(nodes, zp) - residual_vector(nodes, zm)) / (2.0 * opt.fd_step);
    });

    // Rows that already vanish and do not move with zeta carry no information.
    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double row_norm = jac.row(i).cwiseAbs().maxCoeff();
      if (std::abs(r(i)) >= opt.tol || row_norm > opt.sigma_floor) active.push_back(i);
    }
    Eigen::MatrixXcd ja(static_cast<Eigen::Index>(active.size()), static_cast<Eigen::Index>(m));
    Eigen::VectorXcd ra(static_cast<Eigen::Index>(active.size()));
    for (std::size_t a = 0; a < active.size(); ++a) {
      ja.row(static_cast<Eigen::Index>(a)) = jac.row(active[a]);
      ra(static_cast<Eigen::Index>(a)) = r(active[a]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ja, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    const double smin = sv.size() ? sv(sv.size() - 1) : 0.0;
    if (smax <= opt.sigma_floor || smin <= opt.sigma_floor || smax / smin > opt.cond_limit) {
      std::ostringstream msg;
      msg << "period Jacobian is singular at iteration " << iter << " (singular values " << smax << " .. " << smin
          << ")";
      throw Error(ErrorKind::SingularJacobian, msg.str());
    }
    Eigen::VectorXcd step = svd.solve(-ra);
    const double len = step.norm();
    if (len > opt.max_step) step *= opt.max_step / len;

    double t = 1.0;
    std::vector<cplx> trial(m);
    Eigen::VectorXcd rt;
    for (int h = 0; h <= opt.max_halvings; ++h) {
      for (std::size_t j = 0; j < m; ++j) trial[j] = zeta[j] + t * step(static_cast<Eigen::Index>(j));
      rt = residual_vector(nodes, trial);
      if (sup(rt) < norm) break;
      t *= 0.5;
    }
    zeta = trial;
    r = rt;
    if (sup(r) < best_norm) {
      best_norm = sup(r);
      best = zeta;
    }
    if (iter == opt.max_iter && sup(r) >= opt.tol) res.status = SolveStatus::max_iter_exceeded;
  }
  if (res.status == SolveStatus::max_iter_exceeded) zeta = best;
  res.zeta0 = zeta;
  res.report = periods_at(nodes, zeta);
  res.residual = sup(residual_vector(nodes, zeta));
  return res;
}

}  // namespace nullsl2
