#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "clothoid/analysis.hpp"
#include "clothoid/error.hpp"
#include "clothoid/io.hpp"
#include "clothoid/render.hpp"
#include "clothoid/service.hpp"
#include "demo_input.hpp"

namespace {

using namespace clothoid;

constexpr int kExitValidation = 1;
constexpr int kExitBoundFailure = 2;

struct SubdivideArgs {
  std::string input;
  std::string scheme = "lr3";
  double omega = -1.0 / 18.0;
  int levels = 5;
  int newton_steps = 0;
  int quad_panels = 1;
  int quad_nodes = 3;
  std::string out = "json";
  std::string output;
  bool no_normals = false;
  bool no_comb = false;
  double comb_scale = 0.0;
};

struct VerifyArgs {
  int resolution = 129;
  int samples = 100000;
  bool json = false;
};

struct ServeArgs {
  int port = 8080;
  std::string bind = "127.0.0.1";
  std::string static_dir = "ui/dist";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ValidationError, "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_subdivide(const SubdivideArgs& args, const CLI::App& cmd) {
  const InputDocument doc =
      parse_input(args.input.empty() ? std::string(kDemoInput) : read_file(args.input));
  const SchemeDefaults defaults = doc.scheme.value_or(SchemeDefaults{});
  auto given = [&](const char* flag) { return cmd.count(flag) > 0; };

  SchemeSpec scheme = parse_scheme_name(
      given("--scheme") ? args.scheme : defaults.scheme.value_or(args.scheme));
  if (scheme.kind == SchemeKind::FourPoint) {
    scheme.omega = given("--omega") ? args.omega : defaults.omega.value_or(args.omega);
  }
  scheme.fit.newton_steps =
      given("--newton-steps") ? args.newton_steps : defaults.newton_steps.value_or(args.newton_steps);
  scheme.fit.quad = {args.quad_nodes, args.quad_panels};
  const int levels = given("--levels") ? args.levels : defaults.levels.value_or(args.levels);

  const RunReport report = run_subdivision(doc, scheme, levels, true);

  std::string payload;
  if (args.out == "json") {
    payload = serialize_report(report) + "\n";
  } else if (args.out == "csv") {
    if (!report.curvature) {
      throw Error(ErrorCode::ValidationError, "final level has fewer than 3 couples; no curvature");
    }
    payload = curvature_csv(*report.curvature);
  } else {
    SvgOptions svg;
    svg.show_normals = !args.no_normals;
    svg.show_comb = !args.no_comb;
    svg.comb_scale = args.comb_scale;
    payload = render_svg(report, svg);
  }

  if (args.output.empty() || args.output == "-") {
    std::cout << payload;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw Error(ErrorCode::ValidationError, "cannot write '" + args.output + "'");
    out << payload;
  }
  return 0;
}

int run_verify(const VerifyArgs& args) {
  const QuadratureConfig quad = QuadratureConfig::high_accuracy();
  const SweepReport plain = defect_sweep(args.resolution, quad, 0);
  const SweepReport one = defect_sweep(args.resolution, quad, 1);
  const SweepReport two = defect_sweep(args.resolution, quad, 2);
  const ContractionReport contraction = contraction_sweep(args.samples, FitOptions{});

  struct Check {
    const char* name;
    double value;
    double bound;
    bool strict;
  };
  const Check checks[] = {
      {"max 800|delta|", plain.max_scaled_defect, 1.02, false},
      {"max 800|delta|/(|b0+b1|(b0^2+b1^2))", plain.max_ratio_defect, 1.02, false},
      {"max |delta| after 1 Newton step", one.max_abs_defect, 1e-7, true},
      {"max |delta| after 2 Newton steps", two.max_abs_defect, 1e-12, true},
      {"max r over B*", contraction.max_r, 0.80 + 0.01, false},
      {"max rho over B*", contraction.max_rho, 0.95 + 0.01, false},
  };

  bool ok = true;
  if (args.json) {
    nlohmann::json j;
    auto sweep = [](const SweepReport& r) {
      return nlohmann::json{{"grid_resolution", r.grid_resolution},
                            {"max_abs_defect", r.max_abs_defect},
                            {"max_scaled_defect", r.max_scaled_defect},
                            {"max_ratio_defect", r.max_ratio_defect},
                            {"argmax_location", {r.argmax_location.first, r.argmax_location.second}}};
    };
    j["defect_sweep"] = sweep(plain);
    j["defect_sweep_newton1"] = sweep(one);
    j["defect_sweep_newton2"] = sweep(two);
    j["contraction"] = {{"max_r", contraction.max_r},
                        {"max_rho", contraction.max_rho},
                        {"samples", contraction.samples}};
    for (const auto& c : checks) {
      const bool pass = c.strict ? c.value < c.bound : c.value <= c.bound;
      ok = ok && pass;
      j["checks"].push_back({{"name", c.name}, {"value", c.value}, {"bound", c.bound}, {"pass", pass}});
    }
    j["pass"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("defect sweep: resolution %d, quadrature %d panels x %d nodes\n",
                plain.grid_resolution, quad.panels, quad.nodes);
    std::printf("  argmax |delta| at (%.6f, %.6f)\n", plain.argmax_location.first,
                plain.argmax_location.second);
    std::printf("contraction sweep: %d samples, argmax r at (%.4f, %.4f), argmax rho at (%.4f, %.4f)\n",
                contraction.samples, contraction.argmax_r.first, contraction.argmax_r.second,
                contraction.argmax_rho.first, contraction.argmax_rho.second);
    for (const auto& c : checks) {
      const bool pass = c.strict ? c.value < c.bound : c.value <= c.bound;
      ok = ok && pass;
      std::printf("  [%s] %-40s = %.6e (bound %s %.3g)\n", pass ? "PASS" : "FAIL", c.name, c.value,
                  c.strict ? "<" : "<=", c.bound);
    }
  }
  return ok ? 0 : kExitBoundFailure;
}

int run_serve(const ServeArgs& args) {
  ServiceConfig cfg;
  cfg.bind_address = args.bind;
  cfg.port = args.port;
  if (!args.static_dir.empty()) cfg.static_dir = args.static_dir;
  Service service(cfg);
  const int port = service.bind();
  if (port <= 0) {
    std::cerr << "cannot bind " << args.bind << ':' << args.port << "\n";
    return kExitValidation;
  }
  std::cerr << "serving on http://" << args.bind << ':' << port << "\n";
  return service.run() ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clothoid-average geometric Hermite subdivision"};
  app.set_version_flag("--version", std::string(clothoid::kVersion));
  app.require_subcommand(1);

  SubdivideArgs sub;
  auto* subdivide = app.add_subcommand("subdivide", "Refine a Hermite polygon");
  subdivide->add_option("input", sub.input, "Input JSON (default: built-in octagon demo)");
  subdivide->add_option("--scheme", sub.scheme, "lr1..lr8 or fourpoint");
  subdivide->add_option("--omega", sub.omega, "Four-point tension in [-1/4, 0)");
  subdivide->add_option("--levels", sub.levels, "Refinement rounds");
  subdivide->add_option("--newton-steps", sub.newton_steps, "Newton polish steps per fit (0..8)");
  subdivide->add_option("--quad-panels", sub.quad_panels, "Quadrature panels");
  subdivide->add_option("--quad-nodes", sub.quad_nodes, "Gauss-Legendre nodes per panel (2..10)");
  subdivide->add_option("--out", sub.out, "Output format")
      ->check(CLI::IsMember({"svg", "json", "csv"}));
  subdivide->add_option("--output,-o", sub.output, "Output path (default stdout)");
  subdivide->add_flag("--no-normals", sub.no_normals, "SVG: hide initial normals");
  subdivide->add_flag("--no-comb", sub.no_comb, "SVG: hide curvature comb");
  subdivide->add_option("--comb-scale", sub.comb_scale, "SVG: comb length per unit curvature");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check the defect and contraction bounds");
  verify->add_option("--resolution", ver.resolution, "Defect grid resolution");
  verify->add_option("--samples", ver.samples, "Contraction samples over the disk");
  verify->add_flag("--json", ver.json, "Print reports as JSON");

  ServeArgs srv;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service for the editor");
  serve->add_option("--port", srv.port, "TCP port");
  serve->add_option("--bind", srv.bind, "Bind address");
  serve->add_option("--static-dir", srv.static_dir, "Editor bundle directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*subdivide) return run_subdivide(sub, *subdivide);
    if (*verify) return run_verify(ver);
    if (*serve) return run_serve(srv);
  } catch (const clothoid::Error& e) {
    std::cerr << "error [" << clothoid::to_string(e.code()) << "]";
    if (e.index()) std::cerr << " at index " << *e.index();
    std::cerr << ": " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
