#include "nullsl2/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>

#include "nullsl2/invariants.hpp"
#include "nullsl2/io.hpp"
#include "nullsl2/periods.hpp"
#include "nullsl2/spaceforms.hpp"

namespace nullsl2::cli {

namespace {

using io::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const std::string& input(const RunConfig& cfg, std::size_t k) {
  if (cfg.inputs.size() <= k) throw Error(ErrorKind::InvalidArgument, cfg.command + ": missing input file");
  return cfg.inputs[k];
}

std::string target_name(Target t) { return t == Target::h3 ? "h3" : "s31"; }

Target parse_target(const std::string& s) {
  if (s == "h3") return Target::h3;
  if (s == "s31") return Target::s31;
  throw Error(ErrorKind::InvalidArgument, "target must be h3 or s31");
}

json grid_json(const Grid& g) {
  return {{"radial", g.radial},
          {"angular", g.angular},
          {"r_inner", g.r_inner},
          {"r_outer", g.r_outer},
          {"center", io::to_json(g.center)}};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<cplx> all_poles(const SL2NullCurve& F) {
  std::vector<cplx> p = F.poles;
  merge_points(p, pole_points(F.F));
  return p;
}

}  // namespace

void load_config(const std::string& path, RunConfig& cfg) {
  const json j = io::read_json_file(path);
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "config must be a JSON object");
  try {
    if (j.contains("truncation_order")) cfg.truncation_order = j.at("truncation_order").get<int>();
    if (j.contains("tol")) cfg.tol = j.at("tol").get<double>();
    if (j.contains("max_iter")) cfg.max_iter = j.at("max_iter").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("target")) cfg.target = parse_target(j.at("target").get<std::string>());
    if (j.contains("point")) cfg.point = io::cplx_from_json(j.at("point"));
    if (j.contains("center")) cfg.center = io::cplx_from_json(j.at("center"));
    if (j.contains("grid")) {
      const json& g = j.at("grid");
      cfg.grid.radial = g.value("radial", cfg.grid.radial);
      cfg.grid.angular = g.value("angular", cfg.grid.angular);
      cfg.grid.r_inner = g.value("r_inner", cfg.grid.r_inner);
      cfg.grid.r_outer = g.value("r_outer", cfg.grid.r_outer);
      if (g.contains("center")) cfg.grid.center = io::cplx_from_json(g.at("center"));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void apply_environment(RunConfig& cfg) {
  if (const char* s = std::getenv("NULLSL2_SEED"); s != nullptr && *s != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 0);
    if (end == nullptr || *end != '\0') throw Error(ErrorKind::InvalidArgument, "NULLSL2_SEED is not an integer");
    cfg.seed = v;
  }
}

void check_config(const RunConfig& cfg) {
  const Grid& g = cfg.grid;
  if (!(g.r_inner > 0.0) || !(g.r_outer > g.r_inner)) {
    throw Error(ErrorKind::InvalidArgument, "grid radii must satisfy 0 < r_inner < r_outer");
  }
  if (g.radial < 2 || g.angular < 3) throw Error(ErrorKind::InvalidArgument, "grid needs radial >= 2 and angular >= 3");
  if (cfg.truncation_order < 1) throw Error(ErrorKind::InvalidArgument, "truncation order must be positive");
  if (!(cfg.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (cfg.max_iter < 1) throw Error(ErrorKind::InvalidArgument, "max_iter must be positive");
}

Grid parse_grid(const std::string& text, Grid base) {
  int r = 0;
  int a = 0;
  char x = 0;
  std::istringstream is(text);
  if (!(is >> r >> x >> a) || (x != 'x' && x != 'X') || !is.eof()) {
    throw Error(ErrorKind::InvalidArgument, "grid must look like 32x64");
  }
  base.radial = r;
  base.angular = a;
  return base;
}

cplx parse_complex(const std::string& text) {
  std::istringstream is(text);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw Error(ErrorKind::InvalidArgument, "not a complex number: " + text);
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw Error(ErrorKind::InvalidArgument, "not a complex number: " + text);
  }
  if (!is.eof() && !(is >> std::ws).eof()) throw Error(ErrorKind::InvalidArgument, "not a complex number: " + text);
  return {re, im};
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidMultiplicity:
      return 2;
    default:
      return 1;
  }
}

Outcome cmd_validate(const RunConfig& cfg) {
  const json j = io::read_json_file(input(cfg, 0));
  Outcome out;
  json r;
  if (j.is_object() && j.contains("F1")) {
    const SL2NullCurve F = io::sl2_from_json(j);
    const Sl2Report rep = check_null_sl2(F, cfg.tol);
    r = {{"kind", "sl2"}};
    r.update(io::to_json(rep));
    r["pole_set"] = io::points_to_json(all_poles(F));
    out.exit_code = rep.unimodular && rep.null && rep.immersion ? 0 : 1;
  } else if (j.is_object() && j.contains("X1")) {
    const C3NullCurve X = io::c3_from_json(j);
    const C3Report rep = check_null_c3(X, cfg.tol);
    std::vector<cplx> poles = X.poles;
    merge_points(poles, pole_points(X.X));
    r = {{"kind", "c3"}};
    r.update(io::to_json(rep));
    r["pole_set"] = io::points_to_json(poles);
    out.exit_code = rep.null && rep.immersion ? 0 : 1;
  } else {
    throw Error(ErrorKind::ParseError, "expected an SL2 curve (F1..F4) or a C3 curve (X1..X3)");
  }
  r["valid"] = out.exit_code == 0;
  out.report = dump(r);
  return out;
}

Outcome cmd_classify(const RunConfig& cfg) {
  const SL2NullCurve F = io::sl2_from_json(io::read_json_file(input(cfg, 0)));
  Outcome out;
  out.report = dump(io::to_json(classify_end(F, cfg.point, cfg.tol)));
  return out;
}

std::vector<cplx> grid_points(const Grid& g) {
  std::vector<cplx> pts;
  pts.reserve(static_cast<std::size_t>(g.radial) * static_cast<std::size_t>(g.angular));
  const double ratio = g.r_outer / g.r_inner;
  for (int i = 0; i < g.radial; ++i) {
    const double r = g.r_inner * std::pow(ratio, static_cast<double>(i) / (g.radial - 1));
    for (int k = 0; k < g.angular; ++k) pts.push_back(g.center + std::polar(r, 2.0 * M_PI * k / g.angular));
  }
  return pts;
}

Mesh build_mesh(const SL2NullCurve& F, const Grid& g, Target target, kernels::Exec exec) {
  for (cplx p : all_poles(F)) {
    const double d = std::abs(p - g.center);
    if (d >= g.r_inner - 1e-12 && d <= g.r_outer + 1e-12) {
      std::ostringstream msg;
      msg << "pole " << p << " lies in the sampled annulus";
      throw Error(ErrorKind::PoleOnGrid, msg.str());
    }
  }
  const std::vector<cplx> pts = grid_points(g);
  Mesh m;
  m.vertices.resize(pts.size());
  m.metric.assign(pts.size(), 0.0);
  if (target == Target::s31) m.x0.resize(pts.size());

  // g and omega are built once; a curve without a secondary Gauss map (for
  // instance a constant one) gets a zero metric.
  std::optional<MeroFunction> gauss;
  MeroFunction w = omega(F);
  try {
    gauss = secondary_gauss(F);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateDenominator) throw;
  }

  try {
    kernels::for_each_index(pts.size(), exec, [&](std::size_t i) {
      const Mat2 a = evaluate(F, pts[i]);
      if (target == Target::h3) {
        m.vertices[i] = poincare_ball(project_h3(a));
      } else {
        const S31Point x = project_s31(a);
        m.vertices[i] = {x[1], x[2], x[3]};
        m.x0[i] = x[0];
      }
      if (gauss) {
        const double g2 = std::norm(evaluate(*gauss, pts[i]));
        const double wv = std::abs(evaluate(w, pts[i]));
        m.metric[i] = (1.0 + g2) * (1.0 + g2) * wv * wv;
      }
    });
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EvaluationAtPole) throw Error(ErrorKind::PoleOnGrid, e.what());
    throw;
  }

  const int R = g.radial;
  const int A = g.angular;
  for (int i = 0; i + 1 < R; ++i) {
    for (int k = 0; k < A; ++k) {
      const int a = i * A + k;
      const int b = i * A + (k + 1) % A;
      const int c = (i + 1) * A + (k + 1) % A;
      const int d = (i + 1) * A + k;
      m.faces.push_back({a, b, c});
      m.faces.push_back({a, c, d});
    }
  }
  m.degenerate = true;
  for (const auto& v : m.vertices) {
    for (int c = 0; c < 3; ++c) {
      if (std::abs(v[static_cast<std::size_t>(c)] - m.vertices.front()[static_cast<std::size_t>(c)]) > 1e-12) {
        m.degenerate = false;
      }
    }
  }
  return m;
}

std::string to_obj(const Mesh& m, const Grid& g, Target target) {
  std::ostringstream os;
  os << "# nullsl2 mesh\n";
  os << "# target " << target_name(target) << "\n";
  // Shortest round-trip form keeps the header readable.
  const auto s = [](double x) { return io::json(x).dump(); };
  os << "# grid " << g.radial << "x" << g.angular << " r " << s(g.r_inner) << " " << s(g.r_outer) << " center "
     << s(g.center.real()) << " " << s(g.center.imag()) << "\n";
  for (const auto& v : m.vertices) os << "v " << fmt(v[0]) << " " << fmt(v[1]) << " " << fmt(v[2]) << "\n";
  for (const auto& f : m.faces) os << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
  return os.str();
}

Outcome cmd_mesh(const RunConfig& cfg) {
  const SL2NullCurve F = io::sl2_from_json(io::read_json_file(input(cfg, 0)));
  const Mesh m = build_mesh(F, cfg.grid, cfg.target);
  const std::filesystem::path obj = std::filesystem::path(cfg.output.empty() ? "mesh.obj" : cfg.output);
  std::filesystem::path side = obj;
  side.replace_extension(".metric.json");

  json sj = {{"target", target_name(cfg.target)}, {"grid", grid_json(cfg.grid)}, {"metric_factor", m.metric}};
  if (cfg.target == Target::s31) sj["x0"] = m.x0;
  io::write_text_file(obj.string(), to_obj(m, cfg.grid, cfg.target));
  io::write_text_file(side.string(), dump(sj));

  Outcome out;
  if (m.degenerate) out.warnings.push_back("degenerate mesh: all vertices coincide");
  out.report = dump({{"obj", obj.filename().string()},
                     {"sidecar", side.filename().string()},
                     {"target", target_name(cfg.target)},
                     {"vertices", m.vertices.size()},
                     {"faces", m.faces.size()},
                     {"degenerate", m.degenerate}});
  return out;
}

Outcome cmd_solve(const RunConfig& cfg) {
  const SprayFamily s = io::spray_from_json(io::read_json_file(input(cfg, 0)));
  const std::vector<Cycle> cycles = io::cycles_from_json(io::read_json_file(input(cfg, 1)));
  SolveOptions opt;
  opt.tol = cfg.tol;
  opt.max_iter = cfg.max_iter;
  const SolveResult res = period_solve(s, cycles, opt);
  Outcome out;
  out.exit_code = res.residual < cfg.tol ? 0 : 1;
  out.report = dump({{"zeta0", io::points_to_json(res.zeta0)},
                     {"residual", res.residual},
                     {"iterations", res.iterations},
                     {"status", res.status == SolveStatus::converged ? "converged" : "MaxIterExceeded"},
                     {"history", res.history},
                     {"report", io::to_json(res.report)}});
  if (!cfg.csv_out.empty()) io::write_text_file(cfg.csv_out, io::to_csv(res.report));
  if (!cfg.spinor_out.empty()) {
    io::write_text_file(cfg.spinor_out, dump(io::to_json(spray_apply(s, res.zeta0, cfg.truncation_order))));
  }
  return out;
}

Outcome cmd_endmodel(const RunConfig& cfg) {
  Outcome out;
  out.report = dump(io::to_json(end_model({cfg.multiplicity, cfg.center})));
  return out;
}

Outcome run(const RunConfig& cfg) {
  Outcome out;
  try {
    check_config(cfg);
    if (cfg.command == "validate") {
      out = cmd_validate(cfg);
    } else if (cfg.command == "classify") {
      out = cmd_classify(cfg);
    } else if (cfg.command == "mesh") {
      return cmd_mesh(cfg);
    } else if (cfg.command == "solve") {
      out = cmd_solve(cfg);
    } else if (cfg.command == "endmodel") {
      out = cmd_endmodel(cfg);
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown command '" + cfg.command + "'");
    }
  } catch (const Error& e) {
    out.exit_code = exit_code_for(e.kind());
    out.error = true;
    const std::string kind(kind_name(e.kind()));
    std::string message = e.what();
    if (message.rfind(kind + ": ", 0) == 0) message.erase(0, kind.size() + 2);
    out.report = dump({{"error", kind}, {"message", message}});
    return out;
  }
  if (!cfg.output.empty()) {
    io::write_text_file(cfg.output, out.report);
  }
  return out;
}

}  // namespace nullsl2::cli
