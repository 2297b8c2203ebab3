#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nullsl2/cli.hpp"

namespace cli = nullsl2::cli;

int main(int argc, char** argv) {
  CLI::App app{"Null curves in SL2(C) and C^3: validation, end classification, meshes, period solving"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string grid_text;
  std::string point_text = "0";
  std::string center_text = "0";
  std::string target_text = "h3";
  double tol = 0.0;
  int trunc = 0;
  cli::RunConfig cfg;

  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--tol", tol, "Zero tolerance (default 1e-10)");
  app.add_option("--trunc", trunc, "Truncation order (default 24)");
  app.add_option("--grid", grid_text, "Sampling grid RxA (default 32x64)");
  app.add_option("--out", cfg.output, "Output path");

  auto* validate = app.add_subcommand("validate", "Check unimodularity, nullity and immersion of a curve");
  validate->add_option("curve", cfg.inputs, "Curve JSON")->required();

  auto* classify = app.add_subcommand("classify", "Classify the end of a curve at a point");
  classify->add_option("curve", cfg.inputs, "Curve JSON")->required();
  auto* point_opt = classify->add_option("--point", point_text, "End point re[,im] (default 0)");

  auto* mesh = app.add_subcommand("mesh", "Sample a curve on an annulus and write an OBJ mesh");
  mesh->add_option("curve", cfg.inputs, "Curve JSON")->required();
  auto* target_opt = mesh->add_option("--target", target_text, "h3 or s31 (default h3)");

  auto* solve = app.add_subcommand("solve", "Kill the periods of a spray by Newton's method");
  solve->add_option("files", cfg.inputs, "Spray JSON and cycles JSON")->required()->expected(2);
  solve->add_option("--csv", cfg.csv_out, "Write the period report as CSV");
  solve->add_option("--spinor-out", cfg.spinor_out, "Write the corrected spinor data");

  auto* endmodel = app.add_subcommand("endmodel", "Write the model end of a given multiplicity");
  endmodel->add_option("m", cfg.multiplicity, "Multiplicity")->required();
  auto* center_opt = endmodel->add_option("--center", center_text, "Centre re[,im] (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!config_path.empty()) cli::load_config(config_path, cfg);
    nullsl2::cli::apply_environment(cfg);
    if (tol > 0.0) cfg.tol = tol;
    if (trunc > 0) cfg.truncation_order = trunc;
    if (!grid_text.empty()) cfg.grid = cli::parse_grid(grid_text, cfg.grid);
    if (point_opt->count() > 0) cfg.point = cli::parse_complex(point_text);
    if (target_opt->count() > 0) cfg.target = target_text == "s31" ? cli::Target::s31 : cli::Target::h3;
    if (target_opt->count() > 0 && target_text != "h3" && target_text != "s31") {
      throw nullsl2::Error(nullsl2::ErrorKind::InvalidArgument, "target must be h3 or s31");
    }
    if (center_opt->count() > 0) cfg.center = cli::parse_complex(center_text);
  } catch (const nullsl2::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code_for(e.kind());
  }

  const cli::Outcome out = cli::run(cfg);
  for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
  if (out.error) {
    std::cerr << out.report;
  } else if (cfg.output.empty() || cfg.command == "mesh") {
    std::cout << out.report;
  }
  return out.exit_code;
}
