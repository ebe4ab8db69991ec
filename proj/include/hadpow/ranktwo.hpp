#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "hadpow/matcore.hpp"
#include "hadpow/spectral.hpp"

namespace hadpow {

/// A = [p_i p_j + q_i q_j] with p > 0 (the Perron factor) and
/// x_i = q_i / p_i, so that A = diag(p) [1 + x_i x_j] diag(p).
struct RankTwoForm {
  Vector p;
  Vector q;
  Vector x;
  /// Number of distinct x values; equals the Hadamard power rank of A.
  int k = 0;
  double reconstruction_error = 0.0;
};

/// Splits a rank-two, entrywise positive PSD matrix into its Perron and
/// second factors.
///
/// p = sqrt(l1) v1 with v1 normalized so its largest-magnitude component
/// is positive; q = sqrt(l2) v2 with its first nonzero component positive.
///
/// Throws DomainError for a nonpositive entry, RankError when the numeric
/// rank (at tol) is not 2, StructureError when the nonzero eigenvalues are
/// not both positive, and PerronError when v1 has mixed signs.
RankTwoForm perron_decompose(const SymMatrix& a, double tol);

/// Number of distinct values, two values being equal when they differ by
/// at most 1e-8 * max(1, ||x||_max).
int count_distinct(std::span<const double> x);

/// X = [1 + x_i x_j].
SymMatrix build_X(std::span<const double> x);
/// S = [1 + y_i x_j] (not symmetric in general).
Matrix build_S(std::span<const double> y, std::span<const double> x);

bool is_entrywise_positive(const SymMatrix& a) noexcept;
bool is_entrywise_positive(const Matrix& a) noexcept;

/// Closed-form inertia of A^{o r} for an n x n rank-two, entrywise
/// positive PSD matrix with Hadamard power rank k:
///   r > k - 2                 -> (k, n - k, 0)
///   r in {0, 1, ..., k - 2}   -> (r + 1, n - r - 1, 0)
///   m < r < m + 1 <= k - 2    -> (floor((k+m+2)/2), n - k, ceil((k-m-2)/2))
/// r is snapped to the nearest integer when within 1e-12 of it.
Inertia predict_inertia(int n, int k, double r);

/// S^{o m} = W_left^T diag(d_bin) W_right for S = [1 + y_i x_j], integer m.
struct VandermondeFactor {
  Matrix w_left;   // (m+1) x n, row i holds y_j^i
  Vector d_bin;    // binomial(m, i), i = 0..m
  Matrix w_right;  // (m+1) x n, row i holds x_j^i

  Matrix reconstruct() const;
};

VandermondeFactor vandermonde_factor(std::span<const double> y, std::span<const double> x,
                                     unsigned m);

/// f_r(t) = sum_j c_j (1 + t x_j)^r on the open interval (r1, r2) where
/// every base stays positive.
struct FrSpec {
  Vector x;  // strictly increasing nodes
  Vector c;  // not all zero
  double r = 0.0;
  double r1 = 0.0;  // -1/x_max if x_max > 0, else -inf
  double r2 = 0.0;  // -1/x_min if x_min < 0, else +inf

  static FrSpec make(Vector x, Vector c, double r);
  bool contains(double t) const noexcept { return t > r1 && t < r2; }
};

double fr_eval(const FrSpec& spec, double t);

/// Sign changes of a tuple after deleting its zero terms.
int sign_changes(std::span<const double> c);

/// Sign changes of f_r sampled on a uniform grid of grid_size points: a
/// lower bound on the number of zeros of f_r. The sampling window is
/// clipped to the domain; without an explicit window, infinite ends are
/// cut at -/+1e3 and finite ends are pulled inwards by 1e-3 of the width.
int zero_lower_bound(const FrSpec& spec, std::size_t grid_size,
                     std::optional<std::pair<double, double>> window = std::nullopt);

/// x_i(t) = (1 - t) i + t x_i with 1-based i; x must be strictly
/// increasing and 0 <= t <= 1.
Vector homotopy_x(std::span<const double> x, double t);

}  // namespace hadpow
