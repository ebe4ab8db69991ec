#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "hadpow/matcore.hpp"

namespace hadpow {

/// (n_plus, n_zero, n_minus): counts of positive, zero and negative
/// eigenvalues.
struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  int size() const noexcept { return n_plus + n_zero + n_minus; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct EigenResult {
  Vector values;   // ascending
  Matrix vectors;  // column j belongs to values[j]
  double residual = 0.0;
};

/// Default relative zero tolerance for an n x n matrix: 1e-8 * n.
double default_tol(std::size_t n) noexcept;

/// Cyclic Jacobi eigensolver for small dense symmetric matrices.
///
/// Sweeps run in row-cyclic order and stop once the off-diagonal
/// Frobenius norm drops below 1e-14 * scale(A). The sweep order is fixed,
/// so results are bit-for-bit reproducible. Throws ConvergenceError (with
/// the final off-diagonal norm) after max_sweeps.
EigenResult eigen_sym(const SymMatrix& a, int max_sweeps = 64);

/// Classification rule shared by every spectral count: an eigenvalue is
/// zero when |lambda| < tol * scale, nonzero otherwise (ties count as
/// nonzero).
Inertia inertia_from_values(std::span<const double> values, double scale, double tol);

Inertia inertia_of(const SymMatrix& a, double tol);

struct PsdResult {
  bool psd = false;
  double min_eigenvalue = 0.0;
  /// Present only when psd is false; satisfies w^T A w < 0.
  std::optional<Vector> witness;
};

/// A is PSD iff its smallest eigenvalue is >= -tol * scale(A).
PsdResult psd_check(const SymMatrix& a, double tol);

int numeric_rank(const SymMatrix& a, double tol);
/// Rank of a general matrix from its singular values (one-sided Jacobi);
/// singular values below tol * scale(M) count as zero.
int numeric_rank(const Matrix& m, double tol);
/// Singular values, descending.
Vector singular_values(const Matrix& m);

/// Smallest pairwise distance between eigenvalues classified nonzero.
/// A strictly positive value certifies that the nonzero spectrum is simple.
/// Returns +infinity when exactly one eigenvalue is nonzero; throws
/// ArgumentError when the whole spectrum is zero.
double min_nonzero_gap(const SymMatrix& a, double tol);

/// Cauchy interlacing between A and its principal submatrix on idx,
/// checked to 1e-9 * scale(A). idx must be a proper nonempty subset.
bool interlacing_check(const SymMatrix& a, std::span<const std::size_t> idx);

DnnWitness dnn_witness(const SymMatrix& a, double tol);

}  // namespace hadpow
