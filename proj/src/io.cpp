#include "nullsl2/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "nullsl2/error.hpp"

namespace nullsl2::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json part_to_json(const mpq_class& q) {
  const double d = q.get_d();
  if (std::isfinite(d) && mpq_class(d) == q) {
    if (q.get_den() == 1 && std::abs(d) < 9e15) return static_cast<long long>(d);
    return d;
  }
  return q.get_str();
}

mpq_class part_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(std::to_string(j.get<long long>()));
  if (j.is_number()) {
    const double d = j.get<double>();
    if (!std::isfinite(d)) parse_error("non-finite coefficient");
    return mpq_class(d);
  }
  if (j.is_string()) {
    try {
      return CRational::parse_part(j.get<std::string>());
    } catch (const std::exception&) {
      parse_error("bad rational \"" + j.get<std::string>() + "\"");
    }
  }
  parse_error("coefficient part must be a number or a \"p/q\" string");
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) parse_error("polynomial must be an array of [re, im] pairs");
  std::vector<CRational> c;
  for (const auto& e : j) c.push_back(crational_from_json(e));
  return Poly(std::move(c));
}

json poly_to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

std::array<MeroFunction, 3> triple(const json& j, const char* a, const char* b, const char* c) {
  return {mero_from_json(field(j, a)), mero_from_json(field(j, b)), mero_from_json(field(j, c))};
}

std::vector<cplx> optional_points(const json& j, const char* key) {
  return j.contains(key) ? points_from_json(j.at(key)) : std::vector<cplx>{};
}

}  // namespace

json to_json(const CRational& c) { return json::array({part_to_json(c.re()), part_to_json(c.im())}); }

CRational crational_from_json(const json& j) {
  if (j.is_number() || j.is_string()) return CRational(part_from_json(j));
  if (!j.is_array() || j.size() != 2) parse_error("complex value must be [re, im]");
  return CRational(part_from_json(j[0]), part_from_json(j[1]));
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) { return crational_from_json(j).to_cplx(); }

json points_to_json(std::span<const cplx> pts) {
  json a = json::array();
  for (cplx p : pts) a.push_back(to_json(p));
  return a;
}

std::vector<cplx> points_from_json(const json& j) {
  if (!j.is_array()) parse_error("point list must be an array");
  std::vector<cplx> out;
  for (const auto& e : j) out.push_back(cplx_from_json(e));
  return out;
}

json to_json(const MeroFunction& f) {
  json j;
  if (f.is_rational()) {
    const RationalForm& r = f.rational_form();
    j["rational"] = {{"num", poly_to_json(r.num)}, {"den", poly_to_json(r.den)}};
    if (f.base_point() != cplx(0.0)) j["rational"]["center"] = to_json(f.base_point());
    return j;
  }
  const LaurentWindow& w = f.window();
  json c = json::array();
  for (cplx v : w.coeffs) c.push_back(to_json(v));
  j["laurent"] = {{"min_exp", w.min_exp}, {"coeffs", c}, {"trunc", w.trunc()}};
  if (f.base_point() != cplx(0.0)) j["laurent"]["center"] = to_json(f.base_point());
  return j;
}

MeroFunction mero_from_json(const json& j) {
  if (j.is_number() || j.is_string() || (j.is_array() && j.size() == 2 && !j[0].is_array())) {
    return MeroFunction(crational_from_json(j));
  }
  if (j.is_object() && j.contains("rational")) {
    const json& r = j.at("rational");
    const Poly num = poly_from_json(field(r, "num"));
    const Poly den = r.contains("den") ? poly_from_json(r.at("den")) : Poly(CRational(1));
    if (den.is_zero()) parse_error("rational denominator is zero");
    const cplx center = r.contains("center") ? cplx_from_json(r.at("center")) : cplx(0.0);
    return MeroFunction::rational(num, den, center);
  }
  if (j.is_object() && j.contains("laurent")) {
    const json& l = j.at("laurent");
    const json& mj = field(l, "min_exp");
    if (!mj.is_number_integer()) parse_error("min_exp must be an integer");
    const int min_exp = mj.get<int>();
    const json& cj = field(l, "coeffs");
    if (!cj.is_array()) parse_error("coeffs must be an array");
    std::vector<cplx> coeffs;
    for (const auto& e : cj) coeffs.push_back(cplx_from_json(e));
    if (l.contains("trunc")) {
      const int trunc = l.at("trunc").get<int>();
      if (trunc < min_exp + static_cast<int>(coeffs.size())) parse_error("trunc is below the stored coefficients");
      coeffs.resize(static_cast<std::size_t>(trunc - min_exp), 0.0);
    }
    const cplx center = l.contains("center") ? cplx_from_json(l.at("center")) : cplx(0.0);
    return MeroFunction::laurent(min_exp, std::move(coeffs), center);
  }
  parse_error("function must be {\"rational\": ...} or {\"laurent\": ...}");
}

json to_json(const SpinorData& s) {
  json j{{"eta", to_json(s.eta)}, {"f3", to_json(s.f3)}};
  if (s.chart == SpinorChart::alternate) j["chart"] = "alternate";
  return j;
}

SpinorData spinor_from_json(const json& j) {
  SpinorData s{mero_from_json(field(j, "eta")), mero_from_json(field(j, "f3")), SpinorChart::primary};
  if (j.contains("chart")) {
    const auto c = j.at("chart").get<std::string>();
    if (c == "alternate") {
      s.chart = SpinorChart::alternate;
    } else if (c != "primary") {
      parse_error("chart must be \"primary\" or \"alternate\"");
    }
  }
  return s;
}

json to_json(const C3NullCurve& X) {
  return {{"X1", to_json(X.X[0])}, {"X2", to_json(X.X[1])}, {"X3", to_json(X.X[2])}, {"poles", points_to_json(X.poles)}};
}

C3NullCurve c3_from_json(const json& j) {
  C3NullCurve X;
  X.X = triple(j, "X1", "X2", "X3");
  X.poles = optional_points(j, "poles");
  return X;
}

json to_json(const SL2NullCurve& F) {
  return {{"F1", to_json(F[1])},
          {"F2", to_json(F[2])},
          {"F3", to_json(F[3])},
          {"F4", to_json(F[4])},
          {"poles", points_to_json(F.poles)},
          {"singular", points_to_json(F.singular)}};
}

SL2NullCurve sl2_from_json(const json& j) {
  SL2NullCurve F;
  F.F = {mero_from_json(field(j, "F1")), mero_from_json(field(j, "F2")), mero_from_json(field(j, "F3")),
         mero_from_json(field(j, "F4"))};
  F.poles = optional_points(j, "poles");
  F.singular = optional_points(j, "singular");
  return F;
}

json to_json(const Sl2Report& r) {
  return {{"unimodular", r.unimodular}, {"null", r.null},           {"immersion", r.immersion},
          {"nonflat", r.nonflat},       {"det_residual", r.det_residual}, {"null_residual", r.null_residual}};
}

json to_json(const C3Report& r) {
  return {{"null", r.null}, {"immersion", r.immersion}, {"flat", r.flat}, {"null_residual", r.null_residual}};
}

json to_json(const EndReport& r) {
  return {{"center", to_json(r.center)},
          {"k", r.k},
          {"l", r.l},
          {"ord_omega", r.ord_omega},
          {"q_hat_minus2", to_json(r.q_hat_minus2)},
          {"multiplicity", r.multiplicity},
          {"regular", r.regular},
          {"finite_total_curvature", r.finite_total_curvature},
          {"smooth_candidate", r.smooth_candidate},
          {"min_maurer_cartan_ord", r.min_maurer_cartan_ord},
          {"hopf_head", {{"min_exp", -2}, {"coeffs", points_to_json(r.hopf_head)}}}};
}

json to_json(const Cycle& c) {
  json j;
  if (c.kind == CycleKind::circle) {
    j = {{"kind", "circle"}, {"center", to_json(c.center)}, {"radius", c.radius}};
  } else {
    j = {{"kind", "polyline"}, {"points", points_to_json(c.points)}};
  }
  j["orientation"] = c.orientation;
  j["nodes"] = c.nodes;
  return j;
}

Cycle cycle_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  const int orientation = j.value("orientation", 1);
  if (kind == "circle") {
    const double r = field(j, "radius").get<double>();
    if (!(r > 0.0)) parse_error("circle radius must be positive");
    return Cycle::circle(j.contains("center") ? cplx_from_json(j.at("center")) : cplx(0.0), r, orientation,
                         j.value("nodes", 512));
  }
  if (kind == "polyline") return Cycle::polyline(points_from_json(field(j, "points")), orientation, j.value("nodes", 16));
  parse_error("cycle kind must be \"circle\" or \"polyline\"");
}

std::vector<Cycle> cycles_from_json(const json& j) {
  const json& a = j.is_object() ? field(j, "cycles") : j;
  if (!a.is_array()) parse_error("cycles must be an array");
  std::vector<Cycle> out;
  for (const auto& e : a) out.push_back(cycle_from_json(e));
  return out;
}

json to_json(const SprayFamily& s) {
  json basis = json::array();
  for (const auto& h : s.basis) basis.push_back(to_json(h));
  return {{"base", to_json(s.base)}, {"basis", basis}, {"mode", "eta_only"}};
}

SprayFamily spray_from_json(const json& j) {
  SprayFamily s;
  s.base = spinor_from_json(field(j, "base"));
  const json& b = field(j, "basis");
  if (!b.is_array()) parse_error("basis must be an array");
  for (const auto& e : b) s.basis.push_back(mero_from_json(e));
  if (j.contains("mode") && j.at("mode") != "eta_only") parse_error("only mode \"eta_only\" is supported");
  return s;
}

json to_json(const PeriodReport& r) {
  json cycles = json::array();
  for (const auto& t : r.periods) cycles.push_back(json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}));
  return {{"periods", cycles}, {"max_norm", r.max_norm}};
}

std::string to_csv(const PeriodReport& r) {
  std::ostringstream os;
  os << "cycle,re1,im1,re2,im2,re3,im3\n";
  char buf[64];
  for (std::size_t c = 0; c < r.periods.size(); ++c) {
    os << c;
    for (cplx v : r.periods[c]) {
      std::snprintf(buf, sizeof buf, ",%.17g,%.17g", v.real(), v.imag());
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace nullsl2::io
