#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "gentile/algebra.hpp"
#include "gentile/ensemble.hpp"
#include "gentile/normal_order.hpp"
#include "gentile/parser.hpp"
#include "gentile/statistics.hpp"

namespace {

using namespace gentile;

enum class OutputFormat { plain, csv, json };

// 17 significant digits round-trip doubles exactly; plain mode stays at 6.
int digits_for(OutputFormat format) { return format == OutputFormat::plain ? 6 : 17; }

std::string fmt(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

int run_verify(int n_min, int n_max, double tol) {
  if (!(1 <= n_min && n_min <= n_max && n_max <= 64)) {
    std::cerr << "verify: require 1 <= n-min <= n-max <= 64\n";
    return 2;
  }
  if (!(tol > 0.0)) {
    std::cerr << "verify: require tol > 0\n";
    return 2;
  }
  bool all_pass = true;
  for (int n = n_min; n <= n_max; ++n) {
    const AlgebraOrder order(n);
    const VerificationReport report = verify_relations(order, tol);
    for (const auto& check : report.checks) {
      all_pass = all_pass && check.pass;
      std::printf("n=%-3d %-24s %s  max_dev=%.3e\n", n, check.name.c_str(),
                  check.pass ? "PASS" : "FAIL", check.max_deviation);
    }
    if (n <= kMaxExactFactorialOrder) {
      // the explicit n/(n-1)! (e†)^{n-1} e^{n-1} form, checked where the
      // factorial is exact
      const double dev = max_abs_diff(commutator(annihilator(order), creator(order)),
                                      defining_rhs_direct(order));
      const bool pass = dev <= tol;
      all_pass = all_pass && pass;
      std::printf("n=%-3d %-24s %s  max_dev=%.3e\n", n, "defining_direct_form",
                  pass ? "PASS" : "FAIL", dev);
    }
  }
  return all_pass ? 0 : 1;
}

int run_table(int n, double x_min, double x_max, int steps, OutputFormat format) {
  if (n < 2) {
    std::cerr << "table: require n >= 2\n";
    return 2;
  }
  if (steps < 2) {
    std::cerr << "table: require steps >= 2\n";
    return 2;
  }
  if (!(x_min < x_max)) {
    std::cerr << "table: require x-min < x-max\n";
    return 2;
  }
  const AlgebraOrder order(n);
  const int digits = digits_for(format);

  if (format == OutputFormat::csv)
    std::printf("x,occupancy,fermi,bose\n");
  else if (format == OutputFormat::plain)
    std::printf("%-24s%-24s%-24s%-24s\n", "x", "occupancy", "fermi", "bose");
  else
    std::printf("{\"n\": %d, \"rows\": [", n);

  for (int i = 0; i < steps; ++i) {
    const double x = x_min + (x_max - x_min) * static_cast<double>(i) / (steps - 1);
    const std::string occ = fmt(occupancy_closed(x, order), digits);
    const std::string fd = fmt(fermi(x), digits);
    const bool has_bose = x > 0.0;
    const std::string be = has_bose ? fmt(bose(x), digits) : std::string();
    switch (format) {
      case OutputFormat::csv:
        std::printf("%s,%s,%s,%s\n", fmt(x, digits).c_str(), occ.c_str(), fd.c_str(), be.c_str());
        break;
      case OutputFormat::plain:
        std::printf("%-24s%-24s%-24s%-24s\n", fmt(x, digits).c_str(), occ.c_str(), fd.c_str(),
                    be.c_str());
        break;
      case OutputFormat::json:
        std::printf("%s{\"x\": %s, \"occupancy\": %s, \"fermi\": %s, \"bose\": %s}",
                    i == 0 ? "" : ", ", fmt(x, digits).c_str(), occ.c_str(), fd.c_str(),
                    has_bose ? be.c_str() : "null");
        break;
    }
  }
  if (format == OutputFormat::json) std::printf("]}\n");
  return 0;
}

int run_normal_order(int n, const std::string& text, OutputFormat format) {
  if (n < 1 || n > kMaxExactFactorialOrder) {
    std::cerr << "normal-order: require 1 <= n <= " << kMaxExactFactorialOrder << "\n";
    return 2;
  }
  ExprPtr expr;
  try {
    expr = parse(text);
  } catch (const ParseError& error) {
    std::cerr << error.what() << "\n";
    return 2;
  }
  const NormalForm nf = normal_order(expr, AlgebraOrder(n));
  const auto records = to_records(nf);
  switch (format) {
    case OutputFormat::plain:
      std::printf("%s\n", to_text(nf).c_str());
      break;
    case OutputFormat::csv:
      std::printf("a,b,numerator,denominator\n");
      for (const auto& rec : records)
        std::printf("%d,%d,%s,%s\n", rec.creators, rec.annihilators, rec.numerator.str().c_str(),
                    rec.denominator.str().c_str());
      break;
    case OutputFormat::json: {
      std::printf("{\"n\": %d, \"terms\": [", n);
      bool first = true;
      for (const auto& rec : records) {
        std::printf("%s{\"a\": %d, \"b\": %d, \"numerator\": \"%s\", \"denominator\": \"%s\"}",
                    first ? "" : ", ", rec.creators, rec.annihilators,
                    rec.numerator.str().c_str(), rec.denominator.str().c_str());
        first = false;
      }
      std::printf("]}\n");
      break;
    }
  }
  return 0;
}

int run_ensemble(int n, const std::string& levels_path, double particles, double energy,
                 double tol, OutputFormat format) {
  if (n < 1) {
    std::cerr << "ensemble: require n >= 1\n";
    return 2;
  }
  LevelSystem system;
  try {
    system = load_levels_file(levels_path);
  } catch (const std::exception& error) {
    std::cerr << error.what() << "\n";
    return 2;
  }
  EnsembleSolution sol;
  try {
    sol = solve_ensemble(system, particles, energy, AlgebraOrder(n), tol);
  } catch (const InfeasibleError& error) {
    std::cerr << error.what() << "\n";
    return 3;
  } catch (const ConvergenceError& error) {
    std::cerr << error.what() << "\n";
    return 4;
  }

  const int digits = digits_for(format);
  switch (format) {
    case OutputFormat::plain:
      std::printf("b = %s\n", fmt(sol.b, digits).c_str());
      std::printf("c = %s\n", fmt(sol.c, digits).c_str());
      std::printf("%-8s%-16s%-12s%s\n", "level", "energy", "degeneracy", "occupancy");
      for (std::size_t i = 0; i < system.levels.size(); ++i)
        std::printf("%-8zu%-16s%-12d%s\n", i, fmt(system.levels[i].energy, digits).c_str(),
                    system.levels[i].degeneracy, fmt(sol.occupancies[i], digits).c_str());
      std::printf("achieved_particles = %s\n", fmt(sol.achieved_particles, digits).c_str());
      std::printf("achieved_energy = %s\n", fmt(sol.achieved_energy, digits).c_str());
      std::printf("iterations = %d\n", sol.iterations);
      break;
    case OutputFormat::csv:
      std::printf(
          "level,energy,degeneracy,occupancy,b,c,achieved_particles,achieved_energy,"
          "iterations\n");
      for (std::size_t i = 0; i < system.levels.size(); ++i)
        std::printf("%zu,%s,%d,%s,%s,%s,%s,%s,%d\n", i,
                    fmt(system.levels[i].energy, digits).c_str(), system.levels[i].degeneracy,
                    fmt(sol.occupancies[i], digits).c_str(), fmt(sol.b, digits).c_str(),
                    fmt(sol.c, digits).c_str(), fmt(sol.achieved_particles, digits).c_str(),
                    fmt(sol.achieved_energy, digits).c_str(), sol.iterations);
      break;
    case OutputFormat::json: {
      std::printf("{\"b\": %s, \"c\": %s, \"achieved_particles\": %s, \"achieved_energy\": %s, "
                  "\"iterations\": %d, \"levels\": [",
                  fmt(sol.b, digits).c_str(), fmt(sol.c, digits).c_str(),
                  fmt(sol.achieved_particles, digits).c_str(),
                  fmt(sol.achieved_energy, digits).c_str(), sol.iterations);
      for (std::size_t i = 0; i < system.levels.size(); ++i)
        std::printf("%s{\"energy\": %s, \"degeneracy\": %d, \"occupancy\": %s}",
                    i == 0 ? "" : ", ", fmt(system.levels[i].energy, digits).c_str(),
                    system.levels[i].degeneracy, fmt(sol.occupancies[i], digits).c_str());
      std::printf("]}\n");
      break;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized ladder-operator algebras: identity verification, occupation "
               "statistics, exact normal ordering and ensemble solving"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> format_names{{"plain", OutputFormat::plain},
                                                         {"csv", OutputFormat::csv},
                                                         {"json", OutputFormat::json}};

  auto* verify = app.add_subcommand("verify", "check the defining operator identities");
  int n_min = 1, n_max = 18;
  double verify_tol = 1e-12;
  verify->add_option("--n-min", n_min, "smallest order to check");
  verify->add_option("--n-max", n_max, "largest order to check (<= 64)");
  verify->add_option("--tol", verify_tol, "max-abs deviation allowed per identity");

  auto* table = app.add_subcommand("table", "tabulate occupancy against the Fermi/Bose forms");
  int table_n = 0, steps = 101;
  double x_min = -10.0, x_max = 10.0;
  OutputFormat table_format = OutputFormat::plain;
  table->add_option("--n", table_n, "algebra order (n >= 2)")->required();
  table->add_option("--x-min", x_min, "grid start");
  table->add_option("--x-max", x_max, "grid end");
  table->add_option("--steps", steps, "number of grid points (inclusive ends)");
  table->add_option("--format", table_format, "output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

  auto* normal = app.add_subcommand("normal-order", "reduce an operator expression to the "
                                                    "canonical e+^a e^b form");
  int normal_n = 0;
  std::string expr_text;
  OutputFormat normal_format = OutputFormat::plain;
  normal->add_option("--n", normal_n, "algebra order (n <= 18)")->required();
  normal->add_option("expr", expr_text, "operator expression, e.g. \"[e, e+ e] - e\"")
      ->required();
  normal->add_option("--format", normal_format, "output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

  auto* ensemble = app.add_subcommand("ensemble", "fit Lagrange factors to particle and energy "
                                                  "targets over a level spectrum");
  int ensemble_n = 0;
  std::string levels_path;
  double particles = 0.0, energy = 0.0, ensemble_tol = 1e-10;
  OutputFormat ensemble_format = OutputFormat::plain;
  ensemble->add_option("--n", ensemble_n, "algebra order")->required();
  ensemble->add_option("--levels", levels_path, "levels file (energy,degeneracy rows)")
      ->required();
  ensemble->add_option("--particles", particles, "target particle number")->required();
  ensemble->add_option("--energy", energy, "target total energy")->required();
  ensemble->add_option("--tol", ensemble_tol, "residual tolerance");
  ensemble->add_option("--format", ensemble_format, "output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    std::cerr << error.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return run_verify(n_min, n_max, verify_tol);
    if (app.got_subcommand(table)) return run_table(table_n, x_min, x_max, steps, table_format);
    if (app.got_subcommand(normal)) return run_normal_order(normal_n, expr_text, normal_format);
    if (app.got_subcommand(ensemble))
      return run_ensemble(ensemble_n, levels_path, particles, energy, ensemble_tol,
                          ensemble_format);
  } catch (const std::exception& error) {
    std::cerr << error.what() << "\n";
    return 2;
  }
  return 2;
}
