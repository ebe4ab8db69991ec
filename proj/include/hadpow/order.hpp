#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "hadpow/matcore.hpp"
#include "hadpow/spectral.hpp"

namespace hadpow {

/// A >= B in the Loewner order: A - B is PSD at tol.
bool loewner_geq(const SymMatrix& a, const SymMatrix& b, double tol);

/// M / M[pivot] = M_cc - M_cb M_bb^{-1} M_bc over the complementary
/// indices c. Throws SingularPivotError when M_bb has numeric rank below
/// |pivot| at pivot_tol.
SymMatrix schur_complement(const SymMatrix& m, std::span<const std::size_t> pivot_block,
                           double pivot_tol = 1e-12);

/// A rank-two PSD matrix A over a rank-one PSD matrix B, both entrywise
/// positive, with A - B = v v^T of rank one. B = u u^T with u > 0 and
/// x_i = v_i / u_i, so A = diag(u) [1 + x_i x_j] diag(u).
struct MonotonePair {
  SymMatrix a;
  SymMatrix b;
  Vector u;
  Vector v;
  Vector x;
  int k = 0;               // Hadamard power rank of A
  bool zero_diag = false;  // A - B has a zero diagonal entry

  /// Validates the structure and extracts u, v. Throws StructureError
  /// naming the first failed invariant.
  static MonotonePair make(const SymMatrix& a, const SymMatrix& b, double tol);
  /// Builds A = u u^T + v v^T, B = u u^T directly.
  static MonotonePair from_factors(std::span<const double> u, std::span<const double> v,
                                   double tol);
};

/// The exponents r with A^{o r} >= B^{o r}: every r > cutoff together with
/// the integers 0..cutoff.
struct ThresholdRule {
  int k = 0;
  int cutoff = 0;  // k - 1, or k - 2 when A - B has a zero diagonal entry
  std::string description;

  bool holds(double r) const noexcept;
};

ThresholdRule monotone_threshold(const MonotonePair& pair);

/// psd_check of A^{o r} - B^{o r}; keeps the minimum eigenvalue for
/// guard-band comparisons.
PsdResult power_difference_check(const MonotonePair& pair, double r, double tol);
bool verify_power_monotone(const MonotonePair& pair, double r, double tol);

/// Max-norm residual of
///   A^{o r} = C^{o r} + r int_0^1 (A - C) o (tA + (1-t)C)^{o (r-1)} dt,
/// C = z z^T with z the last column of A over sqrt(a_nn), the integral
/// taken by Gauss-Legendre with the given node count. Needs A entrywise
/// nonnegative, a_nn > 0 and r >= 1.
double fh_integral_residual(const SymMatrix& a, double r, std::size_t nodes = 64);

struct FhCertificate {
  double epsilon = 0.0;
  double min_eigenvalue = 0.0;
  Vector witness;
  SymMatrix matrix;  // [(1 + eps i j)^r], i, j = 1..n
};

/// Smallest power of two eps = 2^-j (j = 0..60, first hit) for which
/// [(1 + eps i j)^r] has an eigenvalue below -tol * scale. Needs n >= 3
/// and non-integer 0 < r < n - 2; NotFoundError when the sweep misses.
FhCertificate fh_counterexample(int n, double r, double tol);

struct GapExample {
  SymMatrix a;  // [1 + x_i x_j]
  SymMatrix b;  // beta E
  double alpha = 0.0;
  double beta = 0.0;
  bool a_geq_b = false;
  int difference_rank = 0;
  bool powers_geq = false;
};

/// A = [1 + x_i x_j] for distinct positive x and n - 2 < r < n - 1,
/// alpha = min(1 - 1e-6, 1 / (e^T (A^{o r})^{-1} e)), B = alpha^{1/r} E:
/// A >= B with A - B of rank two, and A^{o r} >= B^{o r} still holds.
GapExample rank2_gap_example(std::span<const double> x, double r, double tol);

}  // namespace hadpow
