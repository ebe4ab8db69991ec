#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hadpow/io.hpp"

namespace {

using hadpow::cli::json;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  namespace cli = hadpow::cli;

  CLI::App app{"Fractional Hadamard powers of doubly nonnegative matrices: rank, inertia, monotonicity"};
  app.require_subcommand(1);

  std::optional<double> tol;
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "relative zero tolerance (overrides HADAMARD_TOL)");
  };

  std::string file_a, file_b, grid, at, csv_path, x_list, y_list;
  double r = 0.0;
  int n = 0;
  unsigned m = 0, seed = 1;
  std::optional<std::size_t> nodes;
  bool verify_only = false;

  auto* analyze = app.add_subcommand("analyze", "rank, Hadamard power rank, Kruskal rank and inertia of a matrix");
  analyze->add_option("file", file_a, "headerless square CSV")->required();
  add_tol(analyze);

  auto* sweep = app.add_subcommand("sweep", "rank and inertia of A^(o r) across an exponent grid");
  sweep->add_option("file", file_a, "headerless square CSV")->required();
  sweep->add_option("--grid", grid, "MIN:MAX:STEPS");
  sweep->add_option("--at", at, "extra exponents, comma separated (p/q allowed)");
  sweep->add_option("--csv", csv_path, "also write the table as CSV");
  sweep->add_option("--nodes", nodes, "Gauss-Legendre nodes for the integral identity residual");
  add_tol(sweep);

  auto* monotone = app.add_subcommand("monotone", "check A^(o r) >= B^(o r) against the threshold prediction");
  monotone->add_option("file_a", file_a)->required();
  monotone->add_option("file_b", file_b)->required();
  monotone->add_option("--r", r, "exponent")->required();
  monotone->add_flag("--verify-only", verify_only, "report the verdict even when (A, B) is not a monotone pair");
  add_tol(monotone);

  auto* counter = app.add_subcommand("counterexample", "certificate that [(1 + eps i j)^r] is not PSD");
  counter->add_option("--n", n)->required();
  counter->add_option("--r", r)->required();
  counter->add_option("--csv", csv_path, "write the certified matrix as CSV");
  add_tol(counter);

  auto* factor = app.add_subcommand("factor", "Vandermonde factors of [1 + y_i x_j]^(o m) for integer m");
  factor->add_option("--x", x_list, "comma separated")->required();
  factor->add_option("--y", y_list, "comma separated (defaults to x)");
  factor->add_option("--m", m, "integer exponent")->required();
  add_tol(factor);

  auto* gap = app.add_subcommand("gap-example", "monotone instance with A - B of rank two, n - 2 < r < n - 1");
  gap->add_option("--x", x_list, "distinct positive values, comma separated");
  gap->add_option("--n", n, "size of a random x when --x is absent");
  gap->add_option("--seed", seed, "seed for the random x");
  gap->add_option("--r", r)->required();
  add_tol(gap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) {
      const auto a = hadpow::read_matrix_file(file_a);
      emit(cli::cmd_analyze(a, cli::resolve_tol(tol, a.size())));
    } else if (*sweep) {
      const auto a = hadpow::read_matrix_file(file_a);
      std::vector<double> r_grid;
      if (!grid.empty()) r_grid = cli::parse_grid(grid);
      if (!at.empty())
        for (double v : cli::parse_list(at)) r_grid.push_back(v);
      const auto report = cli::cmd_sweep(a, r_grid, cli::resolve_tol(tol, a.size()), nodes, file_a);
      if (!csv_path.empty()) hadpow::write_text_file(csv_path, report.to_csv());
      emit(report.to_json());
    } else if (*monotone) {
      const auto a = hadpow::read_matrix_file(file_a);
      const auto b = hadpow::read_matrix_file(file_b);
      emit(cli::cmd_monotone(a, b, r, cli::resolve_tol(tol, a.size()), verify_only));
    } else if (*counter) {
      const json out = cli::cmd_counterexample(n, r, cli::resolve_tol(tol, static_cast<std::size_t>(n)));
      if (!csv_path.empty()) {
        std::vector<hadpow::Vector> rows = out["matrix"].get<std::vector<hadpow::Vector>>();
        hadpow::write_text_file(csv_path, hadpow::format_matrix_csv(hadpow::SymMatrix::from_rows(rows)));
      }
      emit(out);
    } else if (*factor) {
      const auto x = cli::parse_list(x_list);
      const auto y = y_list.empty() ? x : cli::parse_list(y_list);
      emit(cli::cmd_factor(y, x, m, cli::resolve_tol(tol, x.size())));
    } else if (*gap) {
      hadpow::Vector x;
      if (!x_list.empty()) {
        x = cli::parse_list(x_list);
      } else {
        if (n < 2) throw hadpow::ArgumentError("gap-example: give --x or --n >= 2");
        x = cli::random_distinct_positive(static_cast<std::size_t>(n), seed);
      }
      emit(cli::cmd_gap_example(x, r, cli::resolve_tol(tol, x.size())));
    }
  } catch (const hadpow::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
