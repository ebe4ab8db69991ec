#include "hadpow/hrank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hadpow/errors.hpp"
#include "hadpow/spectral.hpp"

namespace hadpow {

namespace {

constexpr std::size_t kMaxExhaustiveColumns = 16;

double norm_max(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

bool is_zero(std::span<const double> v, double tol) { return norm_max(v) <= tol; }

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  // The smaller root wins so every class is rooted at its lowest index.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Calls f on every k-subset of {0..n-1} in lexicographic order until f
// returns false.
template <typename F>
bool all_subsets(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(std::span<const std::size_t>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_exhaustive_size(const ColumnFamily& a) {
  if (a.size() > kMaxExhaustiveColumns)
    throw ArgumentError("exhaustive subset search supports at most 16 columns");
}

bool independent(const ColumnFamily& a, std::span<const std::size_t> idx, double tol) {
  if (idx.size() > a.m) return false;
  return numeric_rank(a.select(idx), tol) == static_cast<int>(idx.size());
}

}  // namespace

ColumnFamily ColumnFamily::of(const Matrix& a) {
  ColumnFamily f;
  f.m = a.rows();
  for (std::size_t j = 0; j < a.cols(); ++j) f.columns.push_back(a.column(j));
  return f;
}

ColumnFamily ColumnFamily::of(const SymMatrix& a) { return of(Matrix(a)); }

ColumnFamily ColumnFamily::of(std::vector<Vector> columns) {
  ColumnFamily f;
  f.m = columns.empty() ? 0 : columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != f.m) throw DimensionError("column family: columns differ in length");
  }
  f.columns = std::move(columns);
  return f;
}

Matrix ColumnFamily::select(std::span<const std::size_t> idx) const {
  Matrix out(m, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) out(i, j) = columns.at(idx[j])[i];
  return out;
}

std::optional<double> scalar_multiple_of(std::span<const double> u, std::span<const double> v,
                                         double tol) {
  if (u.size() != v.size()) throw DimensionError("scalar_multiple_of: length mismatch");
  const double vv = dot(v, v);
  if (vv == 0.0 || is_zero(v, tol)) {
    if (is_zero(u, tol)) return 0.0;
    return std::nullopt;
  }
  const double c = dot(u, v) / vv;
  double resid = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) resid = std::max(resid, std::abs(u[i] - c * v[i]));
  if (resid <= tol * std::max(norm_max(u), 1.0)) return c;
  return std::nullopt;
}

HrkReport hadamard_power_rank(const ColumnFamily& a, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  const std::size_t n = a.size();
  std::vector<bool> zero(n);
  for (std::size_t j = 0; j < n; ++j) zero[j] = is_zero(a.columns[j], tol);

  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (zero[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (zero[j] || sets.find(i) == sets.find(j)) continue;
      if (scalar_multiple_of(a.columns[i], a.columns[j], tol) ||
          scalar_multiple_of(a.columns[j], a.columns[i], tol))
        sets.unite(i, j);
    }
  }

  HrkReport report;
  std::vector<std::size_t> zero_class;
  std::vector<long> class_of_root(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    if (zero[j]) {
      zero_class.push_back(j);
      continue;
    }
    const std::size_t root = sets.find(j);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<long>(report.classes.size());
      report.classes.emplace_back();
      report.representatives.push_back(root);
    }
    report.classes[static_cast<std::size_t>(class_of_root[root])].push_back(j);
  }
  report.k = static_cast<int>(report.representatives.size());
  if (!zero_class.empty()) report.classes.push_back(std::move(zero_class));
  return report;
}

int kruskal_rank(const ColumnFamily& a, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  check_exhaustive_size(a);
  const std::size_t n = a.size();
  for (const auto& c : a.columns)
    if (is_zero(c, tol)) return 0;
  int k = 0;
  for (std::size_t size = 1; size <= std::min(n, a.m); ++size) {
    if (!all_subsets(n, size, [&](auto idx) { return independent(a, idx, tol); })) break;
    k = static_cast<int>(size);
  }
  return k;
}

bool is_qli(const ColumnFamily& s, std::size_t m, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  check_exhaustive_size(s);
  if (m < 1 || m > s.size()) throw ArgumentError("is_qli: need 1 <= m <= |S|");
  return all_subsets(s.size(), m, [&](auto idx) { return independent(s, idx, tol); });
}

}  // namespace hadpow
