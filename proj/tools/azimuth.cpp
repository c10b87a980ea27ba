// Command-line front end: uncertainty reports, family sweeps, crossing
// searches, and closed-form vs quadrature cross-checks.
//
// Exit codes: 0 success, 1 check failed, 2 usage or parse error,
// 3 invalid state, 4 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "azimuth/bounds.hpp"
#include "azimuth/family.hpp"
#include "azimuth/format.hpp"
#include "azimuth/moments.hpp"
#include "azimuth/quadrature.hpp"
#include "azimuth/state_io.hpp"

namespace {

constexpr const char* kUnitsHeader =
    "# angular momentum in units of hbar; angles in radians";

const char* bool_text(bool value) { return value ? "true" : "false"; }

void print_field(const char* name, double value) {
  std::cout << name << " " << azimuth::format_significant(value) << "\n";
}

int cmd_report(const std::string& state_file) {
  const azimuth::StateDocument document =
      azimuth::load_state_document(state_file);
  const azimuth::AnyState state = azimuth::make_state(document);
  const azimuth::UncertaintyReport report = std::visit(
      [](const auto& s) { return azimuth::report(s); }, state);

  std::cout << kUnitsHeader << "\n";
  std::cout << "kind "
            << (document.kind == azimuth::StateKind::landau ? "landau"
                                                            : "angular")
            << "\n";
  print_field("delta_phi", report.delta_phi);
  print_field("delta_lz", report.delta_lz);
  print_field("product", report.product);
  print_field("bound_exact", report.bound_exact);
  print_field("bound_general", report.bound_general);
  print_field("bound_tight", report.bound_tight);
  print_field("bound_naive", report.bound_naive);
  print_field("bound_strange", report.bound_strange);
  print_field("pi_delta_lz", report.pi_delta_lz);
  std::cout << "holds_exact " << bool_text(report.holds_exact) << "\n";
  std::cout << "holds_naive " << bool_text(report.holds_naive) << "\n";
  std::cout << "holds_strange " << bool_text(report.holds_strange) << "\n";
  return 0;
}

int cmd_sweep(double a_min, double a_max, int n_points,
              const std::string& out_path) {
  const std::vector<azimuth::FamilyPoint> rows =
      azimuth::sweep(a_min, a_max, n_points);
  if (out_path.empty()) {
    azimuth::write_sweep_csv(std::cout, rows);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 2;
  }
  azimuth::write_sweep_csv(out, rows);
  return 0;
}

int cmd_crossings(const std::string& quantity_name, double target,
                  int n_grid) {
  const azimuth::SweepQuantity quantity =
      quantity_name == "product" ? azimuth::SweepQuantity::product
                                 : azimuth::SweepQuantity::pi_delta_lz;
  const azimuth::CrossingSet crossings =
      azimuth::find_crossings(quantity, target, n_grid);
  char line[32];
  for (const double root : crossings.roots) {
    std::snprintf(line, sizeof(line), "%.6f", root);
    std::cout << line << "\n";
  }
  return 0;
}

struct MomentComparison {
  const char* name;
  double closed;
  double oracle;
};

int cmd_oracle_check(const std::string& state_file, int nodes,
                     double perturb) {
  const azimuth::StateDocument document =
      azimuth::load_state_document(state_file);
  const azimuth::AnyState state = azimuth::make_state(document);

  azimuth::QuadratureSpec spec;
  spec.angular_nodes = nodes;
  spec.radial_nodes = nodes;

  const auto [closed, oracle] = std::visit(
      [&spec](const auto& s) {
        return std::pair{azimuth::moments(s), azimuth::oracle_moments(s, spec)};
      },
      state);

  const MomentComparison fields[] = {
      {"mean_phi", closed.mean_phi + perturb, oracle.mean_phi},
      {"mean_phi_sq", closed.mean_phi_sq + perturb, oracle.mean_phi_sq},
      {"mean_lz", closed.mean_lz + perturb, oracle.mean_lz},
      {"mean_lz_sq", closed.mean_lz_sq + perturb, oracle.mean_lz_sq},
      {"boundary_density", closed.boundary_density + perturb,
       oracle.boundary_density},
      {"cross_antisym", closed.cross_antisym + perturb, oracle.cross_antisym},
  };

  std::cout << kUnitsHeader << "\n";
  double max_discrepancy = 0.0;
  for (const auto& field : fields) {
    const double diff = std::abs(field.closed - field.oracle);
    max_discrepancy = std::max(max_discrepancy, diff);
    std::cout << field.name
              << " closed=" << azimuth::format_significant(field.closed)
              << " oracle=" << azimuth::format_significant(field.oracle)
              << " diff=" << azimuth::format_significant(diff) << "\n";
  }
  std::cout << "max_discrepancy "
            << azimuth::format_significant(max_discrepancy) << "\n";

  constexpr double kTolerance = 1e-8;
  if (max_discrepancy < kTolerance) {
    std::cout << "oracle check passed\n";
    return 0;
  }
  std::cout << "oracle check FAILED (tolerance 1e-08)\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uncertainty relations for the azimuthal angle and L_z on "
               "periodic quantum states"};
  app.require_subcommand(1);

  std::string report_file;
  CLI::App* report_cmd =
      app.add_subcommand("report", "Print the uncertainty report for a state");
  report_cmd->add_option("file", report_file, "State document (JSON)")
      ->required();

  double sweep_min = -1.0;
  double sweep_max = 1.0;
  int sweep_n = 401;
  std::string sweep_out;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Tabulate the one-parameter family as CSV");
  sweep_cmd->add_option("--min", sweep_min, "Lower end of the a range");
  sweep_cmd->add_option("--max", sweep_max, "Upper end of the a range");
  sweep_cmd->add_option("--n", sweep_n, "Number of grid points");
  sweep_cmd->add_option("--out", sweep_out,
                        "Output CSV path (standard output when omitted)");

  std::string crossings_quantity;
  double crossings_target = 0.0;
  int crossings_grid = 10000;
  CLI::App* crossings_cmd = app.add_subcommand(
      "crossings", "Locate parameter values where a quantity meets a target");
  crossings_cmd
      ->add_option("quantity", crossings_quantity,
                   "Quantity to scan: product or pi-dlz")
      ->required()
      ->check(CLI::IsMember({"product", "pi-dlz"}));
  crossings_cmd->add_option("target", crossings_target, "Target value")
      ->required();
  crossings_cmd->add_option("--grid", crossings_grid,
                            "Scan resolution on [-1, 1]");

  std::string oracle_file;
  int oracle_nodes = 128;
  double oracle_perturb = 0.0;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-check", "Compare closed-form moments against quadrature");
  oracle_cmd->add_option("file", oracle_file, "State document (JSON)")
      ->required();
  oracle_cmd->add_option("--nodes", oracle_nodes,
                         "Quadrature nodes per dimension");
  oracle_cmd->add_option("--perturb", oracle_perturb, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*report_cmd) return cmd_report(report_file);
    if (*sweep_cmd) return cmd_sweep(sweep_min, sweep_max, sweep_n, sweep_out);
    if (*crossings_cmd) {
      return cmd_crossings(crossings_quantity, crossings_target,
                           crossings_grid);
    }
    if (*oracle_cmd) {
      return cmd_oracle_check(oracle_file, oracle_nodes, oracle_perturb);
    }
  } catch (const azimuth::document_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const azimuth::invalid_state_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 3;
  } catch (const std::domain_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const azimuth::numerical_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 4;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 4;
  }
  return 2;
}
