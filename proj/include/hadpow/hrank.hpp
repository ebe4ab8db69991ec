#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hadpow/matcore.hpp"

namespace hadpow {

/// n real column vectors of common length m.
struct ColumnFamily {
  std::size_t m = 0;
  std::vector<Vector> columns;

  static ColumnFamily of(const Matrix& a);
  static ColumnFamily of(const SymMatrix& a);
  static ColumnFamily of(std::vector<Vector> columns);

  std::size_t size() const noexcept { return columns.size(); }
  /// The columns at idx as an m x |idx| matrix.
  Matrix select(std::span<const std::size_t> idx) const;
};

/// Returns c with u = c v when ||u - c v||_max <= tol * max(||u||_max, 1),
/// taking the least-squares c = (u.v)/(v.v). A zero u is the zero multiple
/// of anything; a nonzero u is never a multiple of a zero v.
std::optional<double> scalar_multiple_of(std::span<const double> u, std::span<const double> v,
                                         double tol);

struct HrkReport {
  int k = 0;
  /// Lowest column index of each class of nonzero columns, ascending.
  std::vector<std::size_t> representatives;
  /// Partition of all column indices into scalar-multiple classes; zero
  /// columns form one class of their own (listed last).
  std::vector<std::vector<std::size_t>> classes;
};

/// Hadamard power rank: the number of scalar-multiple classes among the
/// nonzero columns. Columns are joined when either is a multiple of the
/// other at tol, so borderline pairs resolve to "dependent".
HrkReport hadamard_power_rank(const ColumnFamily& a, double tol);

/// Largest k for which every k columns are linearly independent; 0 when
/// a column is zero. Exhaustive, so at most 16 columns.
int kruskal_rank(const ColumnFamily& a, double tol);

/// Every m-subset of S is linearly independent (m-quasi linear
/// independence). 1 <= m <= |S| <= 16.
bool is_qli(const ColumnFamily& s, std::size_t m, double tol);

}  // namespace hadpow
