#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hadpow {

using Vector = std::vector<double>;

/// Dense real symmetric matrix. Only the lower triangle is stored, so
/// a(i, j) == a(j, i) holds exactly; every entry is finite.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n, double fill = 0.0);

  /// Builds from a full square grid. Throws SymmetryError when
  /// |a_ij - a_ji| exceeds sym_tol * scale; the lower triangle is kept.
  static SymMatrix from_rows(const std::vector<Vector>& rows, double sym_tol = 1e-9);
  static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  static SymMatrix identity(std::size_t n);
  /// All-ones matrix E.
  static SymMatrix ones(std::size_t n);
  static SymMatrix diagonal(std::span<const double> d);
  /// Rank-one outer product u u^T.
  static SymMatrix outer(std::span<const double> u);

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return i >= j ? data_[i * (i + 1) / 2 + j] : data_[j * (j + 1) / 2 + i];
  }
  /// Sets a(i, j) and a(j, i). Non-finite values are rejected.
  void set(std::size_t i, std::size_t j, double v);

  double max_abs() const noexcept;
  /// max(1, max |a_ij|), the reference magnitude for relative tolerances.
  double scale() const noexcept;

  Vector column(std::size_t j) const;
  std::vector<Vector> rows() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  Vector data_;
};

/// General dense row-major matrix (Vandermonde factors, [1 + y_i x_j],
/// eigenvector blocks, column families).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static Matrix from_rows(const std::vector<Vector>& rows);
  explicit Matrix(const SymMatrix& a);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  Vector column(std::size_t j) const;
  double max_abs() const noexcept;
  double scale() const noexcept;
  std::vector<Vector> to_rows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator*(double s, const SymMatrix& a);
Vector operator*(const SymMatrix& a, std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);

/// True when r is within 1e-12 of an integer; integer exponents are a
/// structural property, so near-integers are snapped.
bool is_integral(double r) noexcept;

/// Entrywise product A o B.
SymMatrix hadamard_product(const SymMatrix& a, const SymMatrix& b);

/// Entrywise power A^{o r} with 0^0 = 1. Non-integer r needs every entry
/// nonnegative (DomainError); r < 0 is rejected (ArgumentError).
SymMatrix hadamard_power(const SymMatrix& a, double r);
/// Same contract for a general matrix such as [1 + y_i x_j].
Matrix hadamard_power(const Matrix& a, double r);

/// result[a][b] = A[idx[a]][idx[b]]; idx must be nonempty, strictly
/// increasing and in range.
SymMatrix principal_submatrix(const SymMatrix& a, std::span<const std::size_t> idx);

/// D A D with D = diag(d).
SymMatrix diag_congruence(const SymMatrix& a, std::span<const double> d);

/// Certificate that a matrix is doubly nonnegative: PSD and entrywise
/// nonnegative. Produced by spectral::dnn_witness.
struct DnnWitness {
  SymMatrix matrix;
  double min_entry = 0.0;
  double min_eigenvalue = 0.0;
  double tol = 0.0;

  bool holds() const noexcept {
    return min_entry >= 0.0 && min_eigenvalue >= -tol * matrix.scale();
  }
};

}  // namespace hadpow
