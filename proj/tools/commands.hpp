#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hadpow/errors.hpp"
#include "hadpow/matcore.hpp"
#include "hadpow/spectral.hpp"

namespace hadpow::cli {

using nlohmann::json;

/// 0 success, 1 parse/IO, 2 bad arguments, 3 structural precondition,
/// 4 numerical non-convergence.
int exit_code(ErrorKind kind) noexcept;

/// "MIN:MAX:STEPS" -> STEPS evenly spaced points from MIN to MAX.
std::vector<double> parse_grid(std::string_view spec);
/// Comma-separated reals; each item may also be a fraction "p/q".
std::vector<double> parse_list(std::string_view spec);
/// --tol wins over HADAMARD_TOL, which wins over default_tol(n).
double resolve_tol(std::optional<double> flag, std::size_t n);

json inertia_json(const Inertia& in);

json cmd_analyze(const SymMatrix& a, double tol);

struct SweepRecord {
  double r = 0.0;
  int rank = 0;
  Inertia inertia;
  double min_eigenvalue = 0.0;
  std::optional<Inertia> predicted;
  bool mismatch = false;
  std::optional<double> integral_residual;
};

struct SweepReport {
  std::string source;
  std::size_t n = 0;
  std::vector<double> r_grid;
  std::vector<SweepRecord> per_r;
  int hrk = 0;
  bool has_prediction = false;

  int mismatches() const;
  json to_json() const;
  std::string to_csv() const;
};

/// Rank and inertia of A^{o r} on every grid point (evaluated in
/// parallel, reported in ascending r). A rank-two entrywise positive input
/// also gets the closed-form prediction per point. With nodes, records at
/// r >= 1 carry the integral-identity residual.
SweepReport cmd_sweep(const SymMatrix& a, std::vector<double> r_grid, double tol,
                      std::optional<std::size_t> nodes = std::nullopt, std::string source = {});

/// Verdict for A^{o r} >= B^{o r}. The threshold prediction needs a valid
/// monotone pair; without one a StructureError propagates unless
/// verify_only is set, in which case only the verdict is reported.
json cmd_monotone(const SymMatrix& a, const SymMatrix& b, double r, double tol, bool verify_only);

json cmd_counterexample(int n, double r, double tol);

json cmd_factor(const Vector& y, const Vector& x, unsigned m, double tol);

json cmd_gap_example(const Vector& x, double r, double tol);

/// n distinct positive values drawn from seed (used by gap-example).
Vector random_distinct_positive(std::size_t n, unsigned seed);

}  // namespace hadpow::cli
