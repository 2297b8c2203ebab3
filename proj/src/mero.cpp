#include "nullsl2/mero.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "nullsl2/error.hpp"

namespace nullsl2 {

struct MeroFunction::Rep {
  std::variant<RationalForm, LaurentWindow> data;
  cplx base = 0.0;
  Domain domain;
  std::vector<cplx> num_d;
  std::vector<cplx> den_d;
};

namespace {

void strip_exact_zeros(LaurentWindow& w) {
  std::size_t k = 0;
  while (k < w.coeffs.size() && w.coeffs[k] == cplx(0.0)) ++k;
  if (k > 0) {
    w.coeffs.erase(w.coeffs.begin(), w.coeffs.begin() + static_cast<std::ptrdiff_t>(k));
    w.min_exp += static_cast<int>(k);
  }
}

std::string point_str(cplx p) {
  std::ostringstream os;
  os << "(" << p.real() << "," << p.imag() << ")";
  return os.str();
}

RationalForm normalize(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZeroFunction, "zero denominator polynomial");
  if (num.is_zero()) return {Poly{}, Poly(CRational(1))};
  if (den.degree() > 0 && num.degree() > 0) {
    const Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
      num = Poly::divmod(num, g).first;
      den = Poly::divmod(den, g).first;
    }
  }
  const CRational inv = CRational(1) / den.lead();
  return {num.scaled(inv), den.scaled(inv)};
}

LaurentWindow series_divide(const LaurentWindow& a, LaurentWindow b, double tol) {
  // Leading divisor coefficients below tol cannot be certified nonzero.
  std::size_t k = 0;
  while (k < b.coeffs.size() && std::abs(b.coeffs[k]) <= tol) ++k;
  b.coeffs.erase(b.coeffs.begin(), b.coeffs.begin() + static_cast<std::ptrdiff_t>(k));
  b.min_exp += static_cast<int>(k);
  if (b.coeffs.empty()) {
    throw Error(ErrorKind::TruncationTooShort, "divisor window has no certified nonzero coefficient");
  }
  LaurentWindow q;
  q.min_exp = a.min_exp - b.min_exp;
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  q.coeffs.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx s = a.coeffs[j];
    for (std::size_t i = 1; i <= j; ++i) s -= b.coeffs[i] * q.coeffs[j - i];
    q.coeffs[j] = s / b.coeffs[0];
  }
  strip_exact_zeros(q);
  return q;
}

}  // namespace

cplx LaurentWindow::coeff(int k) const {
  if (k < min_exp) return 0.0;
  const auto idx = static_cast<std::size_t>(k - min_exp);
  return idx < coeffs.size() ? coeffs[idx] : cplx(0.0);
}

MeroFunction make_window(LaurentWindow w, cplx base, Domain d) {
  strip_exact_zeros(w);
  auto rep = std::make_shared<MeroFunction::Rep>();
  rep->data = std::move(w);
  rep->base = base;
  rep->domain = d;
  return MeroFunction(std::move(rep));
}

namespace {

MeroFunction make_rational(RationalForm r, cplx base, Domain d) {
  return MeroFunction::rational(std::move(r.num), std::move(r.den), base).with_domain(d);
}

}  // namespace

MeroFunction::MeroFunction() : MeroFunction(CRational{}) {}

MeroFunction::MeroFunction(const CRational& c) {
  auto rep = std::make_shared<Rep>();
  rep->data = RationalForm{Poly(c), Poly(CRational(1))};
  rep->num_d = std::get<RationalForm>(rep->data).num.to_cplx();
  rep->den_d = {1.0};
  rep_ = std::move(rep);
}

MeroFunction MeroFunction::rational(Poly num, Poly den, cplx base_point) {
  auto rep = std::make_shared<Rep>();
  RationalForm r = normalize(std::move(num), std::move(den));
  rep->num_d = r.num.to_cplx();
  rep->den_d = r.den.to_cplx();
  rep->data = std::move(r);
  rep->base = base_point;
  return MeroFunction(std::move(rep));
}

MeroFunction MeroFunction::monomial(const CRational& c, int exponent, const CRational& center) {
  const Poly lin = Poly::linear(center);
  if (exponent >= 0) return polynomial(pow(lin, static_cast<unsigned>(exponent)).scaled(c));
  return rational(Poly(c), pow(lin, static_cast<unsigned>(-exponent)), center.to_cplx());
}

MeroFunction MeroFunction::laurent(int min_exp, std::vector<cplx> coeffs, cplx base_point) {
  return make_window(LaurentWindow{min_exp, std::move(coeffs)}, base_point, Domain{});
}

bool MeroFunction::is_rational() const { return std::holds_alternative<RationalForm>(rep_->data); }

const RationalForm& MeroFunction::rational_form() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "function is a Laurent window, not rational");
  return std::get<RationalForm>(rep_->data);
}

const LaurentWindow& MeroFunction::window() const {
  if (is_rational()) throw Error(ErrorKind::InvalidArgument, "function is rational, not a Laurent window");
  return std::get<LaurentWindow>(rep_->data);
}

cplx MeroFunction::base_point() const { return rep_->base; }
const Domain& MeroFunction::domain() const { return rep_->domain; }

MeroFunction MeroFunction::with_domain(Domain d) const {
  auto rep = std::make_shared<Rep>(*rep_);
  rep->domain = d;
  return MeroFunction(std::move(rep));
}

MeroFunction MeroFunction::with_base_point(cplx b) const {
  if (!is_rational() && b != rep_->base) return to_laurent(*this, b);
  auto rep = std::make_shared<Rep>(*rep_);
  rep->base = b;
  return MeroFunction(std::move(rep));
}

const std::vector<cplx>& MeroFunction::num_cplx() const { return rep_->num_d; }
const std::vector<cplx>& MeroFunction::den_cplx() const { return rep_->den_d; }

// ---------------------------------------------------------------- expansion

std::vector<CRational> exact_laurent(const MeroFunction& f, cplx p, int lo, int hi) {
  const RationalForm& r = f.rational_form();
  std::vector<CRational> out(static_cast<std::size_t>(std::max(0, hi - lo)));
  if (r.num.is_zero() || hi <= lo) return out;
  const CRational at(p);
  Poly n = r.num.shift(at);
  Poly d = r.den.shift(at);
  const int a = n.low_order();
  const int b = d.low_order();
  n = n.divided_by_z_power(a);
  d = d.divided_by_z_power(b);
  const int order = a - b;
  const int count = hi - order;
  if (count <= 0) return out;
  std::vector<CRational> s(static_cast<std::size_t>(count));
  const CRational inv = CRational(1) / d[0];
  for (int j = 0; j < count; ++j) {
    CRational acc = j <= n.degree() ? n[static_cast<std::size_t>(j)] : CRational{};
    for (int i = 1; i <= std::min(j, d.degree()); ++i) {
      acc -= d[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j - i)];
    }
    s[static_cast<std::size_t>(j)] = acc * inv;
  }
  for (int k = std::max(lo, order); k < hi; ++k) {
    out[static_cast<std::size_t>(k - lo)] = s[static_cast<std::size_t>(k - order)];
  }
  return out;
}

LaurentWindow expand(const MeroFunction& f, cplx p, int nterms) {
  if (!f.is_rational()) {
    if (p != f.base_point()) {
      throw Error(ErrorKind::ExpansionPointMismatch,
                  "window centred at " + point_str(f.base_point()) + " asked at " + point_str(p));
    }
    return f.window();
  }
  if (is_exact_zero(f)) return LaurentWindow{nterms, {}};
  const int o = ord(f, p);
  const auto exact = exact_laurent(f, p, o, o + nterms);
  LaurentWindow w{o, {}};
  w.coeffs.reserve(exact.size());
  for (const auto& q : exact) w.coeffs.push_back(q.to_cplx());
  return w;
}

MeroFunction to_laurent(const MeroFunction& f, cplx p, int nterms) {
  return make_window(expand(f, p, nterms), p, f.domain());
}

namespace {

/// Window of a rational f at base, long enough not to limit the precision of
/// an operation with the window other.
LaurentWindow window_like(const MeroFunction& f, cplx base, const LaurentWindow& other) {
  if (is_exact_zero(f)) return LaurentWindow{other.trunc() + 2, {}};
  const int o = ord(f, base);
  const int n = std::max(static_cast<int>(other.coeffs.size()), other.trunc() - o) + 2;
  return expand(f, base, std::max(1, n));
}

LaurentWindow window_binary(ArithOp op, const LaurentWindow& a, const LaurentWindow& b) {
  LaurentWindow r;
  switch (op) {
    case ArithOp::add:
    case ArithOp::sub: {
      const int m = std::min(a.min_exp, b.min_exp);
      const int t = std::min(a.trunc(), b.trunc());
      if (t <= m) return LaurentWindow{t, {}};
      r.min_exp = m;
      for (int k = m; k < t; ++k) {
        r.coeffs.push_back(op == ArithOp::add ? a.coeff(k) + b.coeff(k) : a.coeff(k) - b.coeff(k));
      }
      break;
    }
    case ArithOp::mul: {
      const int m = a.min_exp + b.min_exp;
      const int t = std::min(a.trunc() + b.min_exp, b.trunc() + a.min_exp);
      r.min_exp = m;
      for (int k = m; k < t; ++k) {
        cplx s = 0.0;
        for (int i = a.min_exp; i < a.trunc(); ++i) {
          const int j = k - i;
          if (j < b.min_exp) break;
          if (j < b.trunc()) s += a.coeff(i) * b.coeff(j);
        }
        r.coeffs.push_back(s);
      }
      if (r.coeffs.empty()) r.min_exp = t;
      break;
    }
    case ArithOp::div:
      if (a.coeffs.empty()) {
        LaurentWindow bb = b;
        std::size_t k = 0;
        while (k < bb.coeffs.size() && std::abs(bb.coeffs[k]) <= kZeroTol) ++k;
        if (k == bb.coeffs.size()) {
          throw Error(ErrorKind::TruncationTooShort, "divisor window has no certified nonzero coefficient");
        }
        return LaurentWindow{a.min_exp - (b.min_exp + static_cast<int>(k)), {}};
      }
      r = series_divide(a, b, kZeroTol);
      break;
  }
  strip_exact_zeros(r);
  return r;
}

}  // namespace

MeroFunction arith(ArithOp op, const MeroFunction& f, const MeroFunction& g) {
  if (f.is_rational() && g.is_rational()) {
    const RationalForm& a = f.rational_form();
    const RationalForm& b = g.rational_form();
    switch (op) {
      case ArithOp::add:
      case ArithOp::sub: {
        const Poly bn = op == ArithOp::add ? b.num : -b.num;
        if (a.den == b.den) return make_rational({a.num + bn, a.den}, f.base_point(), f.domain());
        return make_rational({a.num * b.den + bn * a.den, a.den * b.den}, f.base_point(), f.domain());
      }
      case ArithOp::mul:
        return make_rational({a.num * b.num, a.den * b.den}, f.base_point(), f.domain());
      case ArithOp::div:
        if (b.num.is_zero()) throw Error(ErrorKind::DivisionByZeroFunction, "divisor is identically zero");
        return make_rational({a.num * b.den, a.den * b.num}, f.base_point(), f.domain());
    }
  }
  if (op == ArithOp::div && g.is_rational() && is_exact_zero(g)) {
    throw Error(ErrorKind::DivisionByZeroFunction, "divisor is identically zero");
  }
  const cplx base = f.is_rational() ? g.base_point() : f.base_point();
  if (!f.is_rational() && !g.is_rational() && f.base_point() != g.base_point()) {
    throw Error(ErrorKind::ExpansionPointMismatch, "windows have different base points");
  }
  const Domain dom = f.domain();
  const LaurentWindow a = f.is_rational() ? window_like(f, base, g.window()) : f.window();
  const LaurentWindow b = g.is_rational() ? window_like(g, base, f.window()) : g.window();
  return make_window(window_binary(op, a, b), base, dom);
}

MeroFunction operator+(const MeroFunction& f, const MeroFunction& g) { return arith(ArithOp::add, f, g); }
MeroFunction operator-(const MeroFunction& f, const MeroFunction& g) { return arith(ArithOp::sub, f, g); }
MeroFunction operator*(const MeroFunction& f, const MeroFunction& g) { return arith(ArithOp::mul, f, g); }
MeroFunction operator/(const MeroFunction& f, const MeroFunction& g) { return arith(ArithOp::div, f, g); }
MeroFunction operator-(const MeroFunction& f) { return arith(ArithOp::mul, f, MeroFunction(-1)); }

MeroFunction pow(const MeroFunction& f, int n) {
  MeroFunction result(1);
  MeroFunction base = n >= 0 ? f : MeroFunction(1) / f;
  unsigned e = static_cast<unsigned>(n >= 0 ? n : -n);
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MeroFunction differentiate(const MeroFunction& f) {
  if (f.is_rational()) {
    const RationalForm& r = f.rational_form();
    if (r.den.degree() == 0) {
      return make_rational({r.num.derivative(), r.den}, f.base_point(), f.domain());
    }
    return make_rational({r.num.derivative() * r.den - r.num * r.den.derivative(), r.den * r.den},
                         f.base_point(), f.domain());
  }
  const LaurentWindow& w = f.window();
  LaurentWindow d{w.min_exp - 1, {}};
  for (int k = w.min_exp; k < w.trunc(); ++k) d.coeffs.push_back(static_cast<double>(k) * w.coeff(k));
  return make_window(std::move(d), f.base_point(), f.domain());
}

int ord(const MeroFunction& f, cplx p, double tol) {
  if (f.is_rational()) {
    const RationalForm& r = f.rational_form();
    if (r.num.is_zero()) throw Error(ErrorKind::IdenticallyZero, "ord of the zero function");
    const CRational at(p);
    return r.num.shift(at).low_order() - r.den.shift(at).low_order();
  }
  if (p != f.base_point()) {
    throw Error(ErrorKind::ExpansionPointMismatch,
                "window centred at " + point_str(f.base_point()) + " asked at " + point_str(p));
  }
  const LaurentWindow& w = f.window();
  for (std::size_t k = 0; k < w.coeffs.size(); ++k) {
    if (std::abs(w.coeffs[k]) > tol) return w.min_exp + static_cast<int>(k);
  }
  throw Error(ErrorKind::TruncationTooShort,
              "no certified nonzero coefficient below order " + std::to_string(w.trunc()));
}

cplx residue(const MeroFunction& f, cplx p) {
  if (f.is_rational()) return exact_laurent(f, p, -1, 0)[0].to_cplx();
  if (p != f.base_point()) {
    throw Error(ErrorKind::ExpansionPointMismatch, "residue away from the window's base point");
  }
  const LaurentWindow& w = f.window();
  if (w.trunc() <= -1) throw Error(ErrorKind::TruncationTooShort, "window stops before the z^-1 term");
  return w.coeff(-1);
}

cplx evaluate(const MeroFunction& f, cplx z) {
  if (f.is_rational()) {
    const auto& n = f.num_cplx();
    const auto& d = f.den_cplx();
    cplx dv = 0.0;
    double scale = 0.0;
    const double az = std::abs(z);
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
      dv = dv * z + *it;
      scale = scale * az + std::abs(*it);
    }
    if (std::abs(dv) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
      throw Error(ErrorKind::EvaluationAtPole, "pole at " + point_str(z));
    }
    cplx nv = 0.0;
    for (auto it = n.rbegin(); it != n.rend(); ++it) nv = nv * z + *it;
    return nv / dv;
  }
  const LaurentWindow& w = f.window();
  const cplx u = z - f.base_point();
  if (w.coeffs.empty()) return 0.0;
  if (u == cplx(0.0)) {
    if (w.min_exp < 0) throw Error(ErrorKind::EvaluationAtPole, "pole at " + point_str(z));
    return w.min_exp == 0 ? w.coeffs[0] : cplx(0.0);
  }
  // Horner in u for the regular part, in 1/u for the principal part.
  cplx pos = 0.0;
  for (int k = w.trunc() - 1; k >= std::max(0, w.min_exp); --k) pos = pos * u + w.coeff(k);
  if (w.min_exp > 0) pos *= std::pow(u, w.min_exp);
  cplx neg = 0.0;
  const cplx inv = 1.0 / u;
  for (int k = w.min_exp; k <= -1; ++k) neg = (neg + (k < w.trunc() ? w.coeff(k) : cplx(0.0))) * inv;
  return pos + neg;
}

double zero_residual(const MeroFunction& f) {
  if (f.is_rational()) {
    const RationalForm& r = f.rational_form();
    if (r.num.is_zero()) return 0.0;
    double nmax = 0.0;
    double dmax = 0.0;
    for (cplx c : f.num_cplx()) nmax = std::max(nmax, std::abs(c));
    for (cplx c : f.den_cplx()) dmax = std::max(dmax, std::abs(c));
    return std::max(nmax / dmax, std::numeric_limits<double>::denorm_min());
  }
  double m = 0.0;
  for (cplx c : f.window().coeffs) m = std::max(m, std::abs(c));
  return m;
}

bool is_exact_zero(const MeroFunction& f) {
  if (f.is_rational()) return f.rational_form().num.is_zero();
  for (cplx c : f.window().coeffs) {
    if (c != cplx(0.0)) return false;
  }
  return true;
}

std::vector<std::pair<cplx, int>> poles(const MeroFunction& f) {
  return roots_with_multiplicity(f.rational_form().den);
}

std::vector<std::pair<cplx, int>> zeros(const MeroFunction& f) {
  const RationalForm& r = f.rational_form();
  if (r.num.is_zero()) throw Error(ErrorKind::IdenticallyZero, "zeros of the zero function");
  return roots_with_multiplicity(r.num);
}

namespace {

/// R in the exact decomposition num/den = (P/Q)' + R/A + S, where A is the
/// square-free part of den and Q = den/A. R/A carries every residue of
/// num/den and has only simple poles.
Poly hermite_remainder(const Poly& num, const Poly& den, const Poly& a) {
  const Poly q = Poly::divmod(den, a).first;
  const auto [t, rest] = Poly::divmod(q.derivative() * a, q);
  (void)rest;  // q divides q' a exactly
  const int nq = q.degree();
  const int na = a.degree();
  const int ns = std::max(num.degree() - den.degree() + 1, 0);
  const int n = nq + na + ns;
  std::vector<std::vector<CRational>> m(static_cast<std::size_t>(n), std::vector<CRational>(static_cast<std::size_t>(n)));
  const auto put = [&](int col, const Poly& p) {
    for (int k = 0; k <= p.degree(); ++k) m[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] = p[static_cast<std::size_t>(k)];
  };
  int col = 0;
  for (int j = 0; j < nq; ++j) {
    const Poly zj = Poly::monomial(CRational(1), j);
    put(col++, zj.derivative() * a - zj * t);
  }
  for (int j = 0; j < na; ++j) put(col++, Poly::monomial(CRational(1), j) * q);
  for (int j = 0; j < ns; ++j) put(col++, Poly::monomial(CRational(1), j) * den);
  std::vector<CRational> rhs(static_cast<std::size_t>(n));
  for (int k = 0; k <= num.degree(); ++k) rhs[static_cast<std::size_t>(k)] = num[static_cast<std::size_t>(k)];
  std::vector<CRational> x;
  if (!solve_exact(m, rhs, x)) throw Error(ErrorKind::InvalidArgument, "partial fraction system is inconsistent");
  return Poly(std::vector<CRational>(x.begin() + nq, x.begin() + nq + na));
}

}  // namespace

std::vector<PoleResidue> residues(const MeroFunction& f) {
  const RationalForm& r = f.rational_form();
  std::vector<PoleResidue> out;
  if (r.den.degree() < 1) return out;
  const auto factors = squarefree_decomposition(r.den);
  Poly a(CRational(1));
  for (const auto& fac : factors) a = a * fac;
  // With only simple poles den is its own square-free part and R = num.
  const Poly rem = factors.size() == 1 ? r.num : hermite_remainder(r.num, r.den, a);
  const Poly da = a.derivative();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    for (cplx p : numeric_roots(factors[i])) out.push_back({p, static_cast<int>(i) + 1, rem.eval(p) / da.eval(p)});
  }
  return out;
}

std::optional<MeroFunction> antiderivative(const MeroFunction& f, double tol) {
  if (!f.is_rational()) {
    const LaurentWindow& w = f.window();
    if (w.min_exp <= -1) {
      if (w.trunc() <= -1) throw Error(ErrorKind::TruncationTooShort, "window stops before the z^-1 term");
      if (std::abs(w.coeff(-1)) > tol) return std::nullopt;
    }
    LaurentWindow a{w.min_exp + 1, {}};
    for (int k = w.min_exp; k < w.trunc(); ++k) {
      a.coeffs.push_back(k == -1 ? cplx(0.0) : w.coeff(k) / static_cast<double>(k + 1));
    }
    return make_window(std::move(a), f.base_point(), f.domain());
  }
  const RationalForm& r = f.rational_form();
  if (r.num.is_zero()) return f;
  const Poly& q = r.den;
  const Poly d = q.degree() > 0 ? Poly::gcd(q, q.derivative()) : Poly(CRational(1));
  const int deg_n = std::max(d.degree() - 1, d.degree() + r.num.degree() - q.degree() + 1);
  if (deg_n < 0) return std::nullopt;
  // (N' D - N D') Q = P D^2, linear in the coefficients of N.
  const Poly rhs = r.num * d * d;
  const Poly dd = d.derivative();
  std::vector<Poly> columns;
  int rows = rhs.degree() + 1;
  for (int j = 0; j <= deg_n; ++j) {
    const Poly zj = Poly::monomial(CRational(1), j);
    const Poly col = (zj.derivative() * d - zj * dd) * q;
    rows = std::max(rows, col.degree() + 1);
    columns.push_back(col);
  }
  std::vector<std::vector<CRational>> a(static_cast<std::size_t>(rows),
                                        std::vector<CRational>(columns.size()));
  std::vector<CRational> b(static_cast<std::size_t>(rows));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (int i = 0; i <= columns[j].degree(); ++i) a[static_cast<std::size_t>(i)][j] = columns[j][static_cast<std::size_t>(i)];
  }
  for (int i = 0; i <= rhs.degree(); ++i) b[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(i)];
  std::vector<CRational> x;
  if (!solve_exact(std::move(a), std::move(b), x)) return std::nullopt;
  return MeroFunction::rational(Poly(std::move(x)), d, f.base_point()).with_domain(f.domain());
}

}  // namespace nullsl2
