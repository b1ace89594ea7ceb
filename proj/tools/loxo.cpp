// Command-line front end: chart projections, loxodrome tracing, field dumps,
// the Gaussian family along an auto-parallel path, and the verification
// suite.  Emits CSV or JSON plot data; plotting itself stays out of process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 total evaluation failure (every requested row failed).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loxo/loxo.hpp"
#include "loxo/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using loxo::Chart;
using loxo::Point2;
using std::numbers::pi;
using std::numbers::sqrt2;

using Cell = std::variant<double, std::string>;
using Row = std::vector<Cell>;

struct Table {
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

// Usage error tied to a named flag, surfaced in the error record.
struct usage_error : std::invalid_argument {
  usage_error(std::string field_, const std::string& message)
      : std::invalid_argument(message), field(std::move(field_)) {}
  std::string field;
};

double canon(double v) { return v == 0.0 ? 0.0 : v; }  // drop negative zero

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", canon(v));
  return buf;
}

void emit_table(const Table& table, bool as_json) {
  if (as_json) {
    Json arr = Json::array();
    for (const auto& row : table.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (std::holds_alternative<double>(row[i])) {
          obj[table.columns[i]] = canon(std::get<double>(row[i]));
        } else {
          obj[table.columns[i]] = std::get<std::string>(row[i]);
        }
      }
      arr.push_back(std::move(obj));
    }
    std::cout << arr.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    std::cout << (i ? "," : "") << table.columns[i];
  }
  std::cout << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) std::cout << ",";
      if (std::holds_alternative<double>(row[i])) {
        std::cout << format_double(std::get<double>(row[i]));
      } else {
        std::cout << std::get<std::string>(row[i]);
      }
    }
    std::cout << "\n";
  }
}

void emit_record(int code, const std::string& field,
                 const std::string& message) {
  const Json rec = {{"code", code}, {"field", field}, {"message", message}};
  std::cerr << rec.dump() << "\n";
}

Chart parse_chart(const std::string& name) {
  if (name == "sphere") return Chart::SphereGeographic;
  if (name == "mercator") return Chart::MercatorPlane;
  if (name == "pseudosphere") return Chart::Pseudosphere;
  if (name == "flattened") return Chart::FlattenedPlane;
  if (name == "gauss-normalized") return Chart::GaussNormalized;
  throw usage_error("chart", "unknown chart '" + name + "'");
}

double parse_double(const std::string& text, const char* field,
                    const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw usage_error(field, std::string("cannot parse ") + what + " '" +
                                 text + "'");
  }
  if (used != text.size()) {
    throw usage_error(field, std::string("trailing characters in ") + what +
                                 " '" + text + "'");
  }
  return v;
}

std::pair<double, double> parse_point(const std::string& text,
                                      const char* field = "point") {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw usage_error(field, "point must be 'a,b', got '" + text + "'");
  }
  return {parse_double(text.substr(0, comma), field, "coordinate"),
          parse_double(text.substr(comma + 1), field, "coordinate")};
}

// "t0:t1:n" -> n samples spaced evenly over [t0, t1] (n = 0 is an empty
// grid, n = 1 is just t0).
std::vector<double> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw usage_error("grid", "grid must be 't0:t1:n', got '" + text + "'");
  }
  const double t0 = parse_double(text.substr(0, c1), "grid", "grid start");
  const double t1 =
      parse_double(text.substr(c1 + 1, c2 - c1 - 1), "grid", "grid end");
  const double nd = parse_double(text.substr(c2 + 1), "grid", "grid count");
  if (!(nd >= 0) || nd != std::floor(nd) || nd > 10'000'000) {
    throw usage_error("grid", "grid count must be a small nonnegative "
                              "integer");
  }
  const auto n = static_cast<std::size_t>(nd);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(n == 1 ? t0
                         : t0 + (t1 - t0) * static_cast<double>(k) /
                                    static_cast<double>(n - 1));
  }
  return out;
}

std::vector<double> uniform_grid(double t_end, double dt) {
  if (!(dt > 0) || !(t_end >= 0)) {
    throw usage_error("dt", "requires dt > 0 and t-end >= 0");
  }
  std::vector<double> out;
  const auto n = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out.push_back(double(k) * dt);
  return out;
}

double default_radius(Chart chart) {
  return (chart == Chart::Pseudosphere || chart == Chart::FlattenedPlane)
             ? sqrt2
             : 1.0;
}

// ------------------------------------------------------------------ project

struct ProjectArgs {
  std::string chart = "sphere";
  std::string to;
  bool invert = false;
  std::vector<std::string> points;
  double radius = 0;
  bool radius_set = false;
  double phi0 = 0;
  bool json = false;
};

int cmd_project(const ProjectArgs& args) {
  Chart source = parse_chart(args.chart);
  Chart target;
  if (args.to.empty()) {
    switch (source) {
      case Chart::SphereGeographic: target = Chart::MercatorPlane; break;
      case Chart::MercatorPlane: target = Chart::SphereGeographic; break;
      case Chart::Pseudosphere: target = Chart::FlattenedPlane; break;
      case Chart::FlattenedPlane: target = Chart::Pseudosphere; break;
      default:
        throw usage_error("chart", "no default projection for this chart");
    }
  } else {
    target = parse_chart(args.to);
  }
  if (args.invert) std::swap(source, target);
  const double radius =
      args.radius_set ? args.radius : default_radius(source);

  Table table;
  const auto names = loxo::coordinate_names(target);
  table.columns = {names.first, names.second};
  for (const auto& text : args.points) {
    const auto [a, b] = parse_point(text);
    const Point2<double> p{source, {a, b}};
    const auto q = loxo::project_point(p, target, radius, args.phi0);
    table.rows.push_back({q.a(), q.b()});
  }
  emit_table(table, args.json);
  return 0;
}

// ---------------------------------------------------------------- loxodrome

struct LoxodromeArgs {
  std::string chart = "sphere";
  double course = 0;
  double radius = 0;
  bool radius_set = false;
  double phi0 = 0;
  double t_end = 1.0;
  double dt = 0.01;
  std::string grid;
  std::string to;
  bool json = false;
};

int cmd_loxodrome(const LoxodromeArgs& args) {
  const Chart chart = parse_chart(args.chart);
  if (chart != Chart::SphereGeographic && chart != Chart::Pseudosphere) {
    throw usage_error("chart", "loxodrome chart must be sphere or "
                               "pseudosphere");
  }
  const double radius = args.radius_set ? args.radius : default_radius(chart);
  const loxo::CourseAngle<double> course(args.course);
  const std::vector<double> grid = args.grid.empty()
                                       ? uniform_grid(args.t_end, args.dt)
                                       : parse_grid(args.grid);

  loxo::Curve2<double> curve;
  if (!grid.empty()) {
    curve = (chart == Chart::SphereGeographic)
                ? loxo::loxodrome_sphere_curve(course, args.phi0, radius, grid)
                : loxo::loxodrome_pseudosphere_curve(course, args.phi0, radius,
                                                     grid);
  } else {
    curve.chart = chart;
  }

  Table table;
  table.columns = {"t", "a", "b"};
  std::optional<loxo::Curve2<double>> projected;
  if (!args.to.empty()) {
    projected =
        loxo::project_curve(curve, parse_chart(args.to), radius, args.phi0);
    table.columns.push_back("pa");
    table.columns.push_back("pb");
  }
  for (std::size_t k = 0; k < curve.size(); ++k) {
    Row row{curve.t[k], curve.points[k].a(), curve.points[k].b()};
    if (projected) {
      row.push_back(projected->points[k].a());
      row.push_back(projected->points[k].b());
    }
    table.rows.push_back(std::move(row));
  }
  emit_table(table, args.json);
  return 0;
}

// ------------------------------------------------------------------- fields

struct FieldsArgs {
  std::string chart = "sphere";
  std::vector<std::string> points;
  std::string grid;  // "a0,b0:a1,b1:n"
  double radius = 0;
  bool radius_set = false;
  double step = 1e-4;
  bool json = false;
};

std::vector<std::pair<double, double>> fields_points(const FieldsArgs& args) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& text : args.points) pts.push_back(parse_point(text));
  if (!args.grid.empty()) {
    // Two endpoints joined by a linear grid of n points.
    const auto c1 = args.grid.find(':');
    const auto c2 = args.grid.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw usage_error(
          "grid", "fields grid must be 'a0,b0:a1,b1:n', got '" + args.grid +
                      "'");
    }
    const auto [a0, b0] = parse_point(args.grid.substr(0, c1), "grid");
    const auto [a1, b1] =
        parse_point(args.grid.substr(c1 + 1, c2 - c1 - 1), "grid");
    const double nd =
        parse_double(args.grid.substr(c2 + 1), "grid", "grid count");
    if (!(nd >= 0) || nd != std::floor(nd) || nd > 1'000'000) {
      throw usage_error("grid", "grid count must be a small nonnegative "
                                "integer");
    }
    const auto n = static_cast<std::size_t>(nd);
    for (std::size_t k = 0; k < n; ++k) {
      const double s =
          n == 1 ? 0.0
                 : static_cast<double>(k) / static_cast<double>(n - 1);
      pts.emplace_back(a0 + (a1 - a0) * s, b0 + (b1 - b0) * s);
    }
  }
  return pts;
}

int cmd_fields(const FieldsArgs& args) {
  const Chart chart = parse_chart(args.chart);
  if (chart != Chart::SphereGeographic && chart != Chart::Pseudosphere) {
    throw usage_error("chart", "fields chart must be sphere or pseudosphere");
  }
  const double radius = args.radius_set ? args.radius : default_radius(chart);
  const auto vielbein = (chart == Chart::SphereGeographic)
                            ? loxo::sphere_vielbein(radius)
                            : loxo::pseudosphere_vielbein(radius);
  const auto conn = loxo::weizenbock_connection(vielbein);
  const auto tor = loxo::torsion(conn);

  const auto pts = fields_points(args);

  Table table;
  table.columns = {"a",    "b",    "G000", "G001", "G010",  "G011",
                   "G100", "G101", "G110", "G111", "T001",  "T101",
                   "R0001", "R0101", "R1001", "R1101", "curv_max",
                   "curv_flag"};
  std::size_t failed = 0;
  for (const auto& [a, b] : pts) {
    const Point2<double> p{chart, {a, b}};
    Row row{a, b};
    try {
      const auto gamma = conn.gamma(p);
      const auto t = tor.coeffs(p);
      for (int rho = 0; rho < 2; ++rho) {
        for (int mu = 0; mu < 2; ++mu) {
          for (int nu = 0; nu < 2; ++nu) row.push_back(gamma[rho](mu, nu));
        }
      }
      row.push_back(t[0](0, 1));
      row.push_back(t[1](0, 1));
    } catch (const std::domain_error& e) {
      ++failed;
      emit_record(2, "point", e.what());
      continue;
    }
    try {
      const auto riem = loxo::riemann_curvature(conn, p, args.step);
      for (int rho = 0; rho < 2; ++rho) {
        for (int sigma = 0; sigma < 2; ++sigma) {
          row.push_back(riem[rho][sigma](0, 1));
        }
      }
      const double worst = loxo::max_abs(riem);
      row.push_back(worst);
      row.push_back(std::string(worst < 1e-6 ? "ZERO" : "NONZERO"));
    } catch (const std::domain_error& e) {
      // Connection values exist but the curvature stencil left the chart.
      for (int k = 0; k < 5; ++k) row.push_back(std::string("nan"));
      row.push_back(std::string("EDGE"));
      emit_record(0, "point", e.what());
    }
    table.rows.push_back(std::move(row));
  }
  emit_table(table, args.json);
  if (!pts.empty() && failed == pts.size()) return 3;
  return 0;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  bool json = false;
  bool core_only = false;
  std::string only;
  std::vector<std::string> tol;
};

int cmd_verify(const VerifyArgs& args, const char* argv0) {
  loxo::verify::ToleranceScales scales;
  for (const auto& spec : args.tol) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
      throw usage_error("tol", "--tol expects slug=scale, got '" + spec +
                                   "'");
    }
    const double scale =
        parse_double(spec.substr(eq + 1), "tol", "tolerance scale");
    if (!(scale > 0)) {
      throw usage_error("tol", "tolerance scale must be positive");
    }
    scales[spec.substr(0, eq)] = scale;
  }

  auto results = loxo::verify::run_core_criteria(scales);
  if (!args.core_only) {
    std::string self = argv0;
    std::error_code ec;
    const auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
    if (!ec) self = exe.string();
    results.push_back(loxo::verify::run_cli_determinism(self));
  }
  results = loxo::verify::filter_by_slug(std::move(results), args.only);

  if (args.json) {
    std::cout << loxo::verify::report_json(results);
  } else {
    std::cout << loxo::verify::report_text(results, /*detail=*/true);
  }
  return loxo::verify::all_pass(results) ? 0 : 1;
}

// -------------------------------------------------------------------- gauss

struct GaussArgs {
  double course = pi / 4;
  double sigma_min = 1.0;
  double mu_max = pi;
  double t_end = 1.0;
  double dt = 0.01;
  std::string grid;
  bool json = false;
};

int cmd_gauss(const GaussArgs& args) {
  const loxo::CourseAngle<double> course(args.course);
  loxo::NormalizationBox<double> box;
  box.sigma_min = args.sigma_min;
  box.mu_max_abs = args.mu_max;
  if (!(box.sigma_min > 0) || !(box.mu_max_abs > 0)) {
    throw usage_error("sigma-min", "sigma-min and mu-max must be positive");
  }
  const std::vector<double> grid = args.grid.empty()
                                       ? uniform_grid(args.t_end, args.dt)
                                       : parse_grid(args.grid);

  const auto trace = loxo::gauss_family_along_loxodrome(course, box, grid);

  Table table;
  table.columns = {"t",   "mu",          "sigma", "mu_tilde", "sigma_tilde",
                   "phi", "u",           "x_tilde", "y_tilde"};
  for (std::size_t k = 0; k < trace.params.size(); ++k) {
    const auto& gp = trace.params[k];
    const auto pn = loxo::normalize(gp, box);
    const auto ps = loxo::to_pseudosphere(pn);
    const auto flat = loxo::to_flattened(pn);
    table.rows.push_back({trace.t[k], gp.mu, gp.sigma, pn.a(), pn.b(), ps.a(),
                          ps.b(), flat.a(), flat.b()});
  }
  emit_table(table, args.json);
  if (trace.exited_region) {
    emit_record(0, "t",
                "path left the admitted region |mu| <= mu_max; output "
                "truncated at " +
                    std::to_string(trace.params.size()) + " rows");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Mercator and pseudosphere charts, torsionful Weizenboeck "
      "connections, loxodromes as auto-parallel curves, and the Gaussian "
      "family on the conformally flattened plane."};
  app.require_subcommand(1);

  std::string config_default;
  if (const char* env = std::getenv("LOXO_CONFIG")) config_default = env;
  app.set_config("--config", config_default,
                 "Configuration file (key = value; [section] per command)");

  ProjectArgs project;
  auto* project_cmd =
      app.add_subcommand("project", "Map points between charts");
  project_cmd->add_option("--chart", project.chart,
                          "Source chart (sphere|mercator|pseudosphere|"
                          "flattened)");
  project_cmd->add_option("--to", project.to, "Target chart");
  project_cmd->add_flag("--invert", project.invert,
                        "Swap source and target charts");
  project_cmd->add_option("--point", project.points, "Point 'a,b'")
      ->required()
      ->take_all();
  auto* project_r = project_cmd->add_option("--R", project.radius,
                                            "Radius / pseudoradius");
  project_cmd->add_option("--phi0", project.phi0, "Central meridian");
  project_cmd->add_flag("--json", project.json, "JSON output");
  project_cmd->add_flag("--csv", "CSV output (default)");

  LoxodromeArgs loxodrome;
  auto* loxodrome_cmd = app.add_subcommand(
      "loxodrome", "Sample a loxodrome, optionally with its projection");
  loxodrome_cmd->add_option("--chart", loxodrome.chart,
                            "Chart (sphere|pseudosphere)");
  loxodrome_cmd->add_option("--course", loxodrome.course, "Course angle")
      ->required();
  auto* loxodrome_r =
      loxodrome_cmd->add_option("--R", loxodrome.radius,
                                "Radius / pseudoradius");
  loxodrome_cmd->add_option("--phi0", loxodrome.phi0, "Central meridian");
  loxodrome_cmd->add_option("--t-end", loxodrome.t_end, "Parameter end");
  loxodrome_cmd->add_option("--dt", loxodrome.dt, "Parameter step");
  loxodrome_cmd->add_option("--grid", loxodrome.grid, "Grid 't0:t1:n'");
  loxodrome_cmd->add_option("--to", loxodrome.to,
                            "Also emit the projected image (mercator|"
                            "flattened)");
  loxodrome_cmd->add_flag("--json", loxodrome.json, "JSON output");
  loxodrome_cmd->add_flag("--csv", "CSV output (default)");

  FieldsArgs fields;
  auto* fields_cmd = app.add_subcommand(
      "fields",
      "Dump connection, torsion, and curvature components at points");
  fields_cmd->add_option("--chart", fields.chart,
                         "Chart (sphere|pseudosphere)");
  fields_cmd->add_option("--point", fields.points, "Point 'a,b'")->take_all();
  fields_cmd->add_option("--grid", fields.grid, "Grid 'a0,b0:a1,b1:n'");
  auto* fields_r =
      fields_cmd->add_option("--R", fields.radius, "Radius / pseudoradius");
  fields_cmd->add_option("--step", fields.step, "Curvature stencil step");
  fields_cmd->add_flag("--json", fields.json, "JSON output");
  fields_cmd->add_flag("--csv", "CSV output (default)");

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_flag("--json", verify.json, "Machine-readable report");
  verify_cmd->add_option("--only", verify.only,
                         "Keep criteria whose slug contains this text");
  verify_cmd->add_flag("--core-only", verify.core_only,
                       "Skip the CLI determinism criterion (used by that "
                       "criterion's child runs)");
  verify_cmd->add_option("--tol", verify.tol,
                         "Scale a criterion's tolerances: slug=scale")
      ->take_all();

  GaussArgs gauss;
  auto* gauss_cmd = app.add_subcommand(
      "gauss", "Gaussian family along a pseudosphere loxodrome");
  gauss_cmd->add_option("--course", gauss.course, "Course angle");
  gauss_cmd->add_option("--sigma-min", gauss.sigma_min,
                        "Normalization scale for sigma");
  gauss_cmd->add_option("--mu-max", gauss.mu_max,
                        "Normalization bound for |mu|");
  gauss_cmd->add_option("--t-end", gauss.t_end, "Parameter end");
  gauss_cmd->add_option("--dt", gauss.dt, "Parameter step");
  gauss_cmd->add_option("--grid", gauss.grid, "Grid 't0:t1:n'");
  gauss_cmd->add_flag("--json", gauss.json, "JSON output");
  gauss_cmd->add_flag("--csv", "CSV output (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_record(2, "args", e.what());
    return 2;
  }

  project.radius_set = project_r->count() > 0;
  loxodrome.radius_set = loxodrome_r->count() > 0;
  fields.radius_set = fields_r->count() > 0;

  try {
    if (project_cmd->parsed()) return cmd_project(project);
    if (loxodrome_cmd->parsed()) return cmd_loxodrome(loxodrome);
    if (fields_cmd->parsed()) return cmd_fields(fields);
    if (verify_cmd->parsed()) return cmd_verify(verify, argv[0]);
    if (gauss_cmd->parsed()) return cmd_gauss(gauss);
  } catch (const usage_error& e) {
    emit_record(2, e.field, e.what());
    return 2;
  } catch (const loxo::unsupported_projection& e) {
    emit_record(2, "to", e.what());
    return 2;
  } catch (const loxo::numeric_error& e) {
    emit_record(2, "numeric", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    emit_record(2, "domain", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    emit_record(2, "args", e.what());
    return 2;
  }
  return 0;
}
