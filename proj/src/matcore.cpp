#include "hadpow/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hadpow/errors.hpp"

namespace hadpow {

namespace {

void require_finite(double v) {
  if (!std::isfinite(v)) throw DomainError("matrix entries must be finite");
}

void require_same_size(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

double entry_power(double a, double r, bool integral) {
  if (r == 0.0) return 1.0;
  if (integral) return std::pow(a, std::round(r));
  return std::pow(a, r);
}

void check_exponent(double r) {
  if (!(r >= 0.0)) throw ArgumentError("unsupported exponent: r must be >= 0");
}

}  // namespace

SymMatrix::SymMatrix(std::size_t n, double fill) : n_(n), data_(n * (n + 1) / 2, fill) {
  require_finite(fill);
}

SymMatrix SymMatrix::from_rows(const std::vector<Vector>& rows, double sym_tol) {
  const std::size_t n = rows.size();
  double amax = 0.0;
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionError("matrix must be square");
    for (double v : row) {
      require_finite(v);
      amax = std::max(amax, std::abs(v));
    }
  }
  const double bound = sym_tol * std::max(1.0, amax);
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double dev = std::abs(rows[i][j] - rows[j][i]);
      if (dev > bound) {
        throw SymmetryError("matrix is not symmetric at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")",
                            dev);
      }
      out.data_[i * (i + 1) / 2 + j] = rows[i][j];
    }
  }
  return out;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<Vector> grid;
  for (const auto& r : rows) grid.emplace_back(r);
  return from_rows(grid);
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1.0);
  return out;
}

SymMatrix SymMatrix::ones(std::size_t n) { return SymMatrix(n, 1.0); }

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
  SymMatrix out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out.set(i, i, d[i]);
  return out;
}

SymMatrix SymMatrix::outer(std::span<const double> u) {
  SymMatrix out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) out.set(i, j, u[i] * u[j]);
  return out;
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
  require_finite(v);
  if (i < j) std::swap(i, j);
  data_[i * (i + 1) / 2 + j] = v;
}

double SymMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double SymMatrix::scale() const noexcept { return std::max(1.0, max_abs()); }

Vector SymMatrix::column(std::size_t j) const {
  Vector c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Vector> SymMatrix::rows() const {
  std::vector<Vector> out(n_, Vector(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows.front().size() : 0;
  Matrix out(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) throw DimensionError("ragged rows");
    for (std::size_t j = 0; j < n; ++j) {
      require_finite(rows[i][j]);
      out(i, j) = rows[i][j];
    }
  }
  return out;
}

Matrix::Matrix(const SymMatrix& a) : Matrix(a.size(), a.size()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = a(i, j);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::scale() const noexcept { return std::max(1.0, max_abs()); }

std::vector<Vector> Matrix::to_rows() const {
  std::vector<Vector> out(rows_, Vector(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_size(a.cols(), b.rows(), "matrix product");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_size(a.rows(), b.rows(), "max_abs_diff");
  require_same_size(a.cols(), b.cols(), "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  require_same_size(a.size(), b.size(), "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  require_same_size(a.size(), b.size(), "matrix sum");
  SymMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) c.set(i, j, a(i, j) + b(i, j));
  return c;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  require_same_size(a.size(), b.size(), "matrix difference");
  SymMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) c.set(i, j, a(i, j) - b(i, j));
  return c;
}

SymMatrix operator*(double s, const SymMatrix& a) {
  SymMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) c.set(i, j, s * a(i, j));
  return c;
}

Vector operator*(const SymMatrix& a, std::span<const double> v) {
  require_same_size(a.size(), v.size(), "matrix-vector product");
  Vector out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_integral(double r) noexcept { return std::abs(r - std::round(r)) < 1e-12; }

SymMatrix hadamard_product(const SymMatrix& a, const SymMatrix& b) {
  require_same_size(a.size(), b.size(), "hadamard_product");
  SymMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) c.set(i, j, a(i, j) * b(i, j));
  return c;
}

SymMatrix hadamard_power(const SymMatrix& a, double r) {
  check_exponent(r);
  const bool integral = is_integral(r);
  SymMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = a(i, j);
      if (!integral && v < 0.0)
        throw DomainError("fractional Hadamard power of a matrix with a negative entry");
      c.set(i, j, entry_power(v, r, integral));
    }
  return c;
}

Matrix hadamard_power(const Matrix& a, double r) {
  check_exponent(r);
  const bool integral = is_integral(r);
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double v = a(i, j);
      if (!integral && v < 0.0)
        throw DomainError("fractional Hadamard power of a matrix with a negative entry");
      c(i, j) = entry_power(v, r, integral);
    }
  return c;
}

SymMatrix principal_submatrix(const SymMatrix& a, std::span<const std::size_t> idx) {
  if (idx.empty()) throw ArgumentError("principal_submatrix: empty index set");
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= a.size()) throw ArgumentError("principal_submatrix: index out of range");
    if (k > 0 && idx[k] <= idx[k - 1])
      throw ArgumentError("principal_submatrix: indices must be strictly increasing");
  }
  SymMatrix out(idx.size());
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = 0; q <= p; ++q) out.set(p, q, a(idx[p], idx[q]));
  return out;
}

SymMatrix diag_congruence(const SymMatrix& a, std::span<const double> d) {
  require_same_size(a.size(), d.size(), "diag_congruence");
  SymMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) out.set(i, j, d[i] * a(i, j) * d[j]);
  return out;
}

}  // namespace hadpow
