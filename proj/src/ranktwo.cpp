#include "hadpow/ranktwo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hadpow/errors.hpp"

namespace hadpow {

namespace {

void require_strictly_increasing(std::span<const double> x, const char* what) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1])) throw ArgumentError(std::string(what) + ": x must be strictly increasing");
}

}  // namespace

RankTwoForm perron_decompose(const SymMatrix& a, double tol) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!(a(i, j) > 0.0)) throw DomainError("perron_decompose: entries must be positive");

  const EigenResult e = eigen_sym(a);
  const Inertia in = inertia_from_values(e.values, a.scale(), tol);
  const int rank = in.n_plus + in.n_minus;
  if (rank != 2) throw RankError("perron_decompose: numeric rank is " + std::to_string(rank) + ", need 2", rank);
  if (in.n_minus != 0) throw StructureError("perron_decompose: matrix is not positive semidefinite");

  Vector v1 = e.vectors.column(n - 1);
  Vector v2 = e.vectors.column(n - 2);
  const auto largest = std::max_element(v1.begin(), v1.end(),
                                        [](double s, double t) { return std::abs(s) < std::abs(t); });
  if (*largest < 0.0)
    for (double& v : v1) v = -v;
  for (double v : v1)
    if (!(v > 0.0)) throw PerronError("perron_decompose: top eigenvector has mixed signs");
  for (double v : v2) {
    if (std::abs(v) > 1e-12) {
      if (v < 0.0)
        for (double& w : v2) w = -w;
      break;
    }
  }

  RankTwoForm f;
  const double s1 = std::sqrt(e.values[n - 1]);
  const double s2 = std::sqrt(e.values[n - 2]);
  f.p.resize(n);
  f.q.resize(n);
  f.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    f.p[i] = s1 * v1[i];
    f.q[i] = s2 * v2[i];
    f.x[i] = f.q[i] / f.p[i];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      f.reconstruction_error =
          std::max(f.reconstruction_error, std::abs(f.p[i] * f.p[j] + f.q[i] * f.q[j] - a(i, j)));
  f.k = count_distinct(f.x);
  return f;
}

int count_distinct(std::span<const double> x) {
  if (x.empty()) return 0;
  Vector sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  double amax = 0.0;
  for (double v : sorted) amax = std::max(amax, std::abs(v));
  const double tol = 1e-8 * std::max(1.0, amax);
  int k = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] - sorted[i - 1] > tol) ++k;
  return k;
}

SymMatrix build_X(std::span<const double> x) {
  SymMatrix out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) out.set(i, j, 1.0 + x[i] * x[j]);
  return out;
}

Matrix build_S(std::span<const double> y, std::span<const double> x) {
  if (y.size() != x.size()) throw DimensionError("build_S: y and x differ in length");
  Matrix out(y.size(), x.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out(i, j) = 1.0 + y[i] * x[j];
  return out;
}

bool is_entrywise_positive(const SymMatrix& a) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!(a(i, j) > 0.0)) return false;
  return true;
}

bool is_entrywise_positive(const Matrix& a) noexcept {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) > 0.0)) return false;
  return true;
}

Inertia predict_inertia(int n, int k, double r) {
  if (k < 1 || k > n) throw ArgumentError("predict_inertia: need 1 <= k <= n");
  if (!(r >= 0.0)) throw ArgumentError("predict_inertia: need r >= 0");
  if (is_integral(r)) r = std::round(r);
  if (r > k - 2) return {k, n - k, 0};
  if (is_integral(r)) {
    const int ri = static_cast<int>(r);
    return {ri + 1, n - ri - 1, 0};
  }
  const int m = static_cast<int>(std::floor(r));
  const int plus = (k + m + 2) / 2;
  const int minus = (k - m - 1) / 2;  // ceil((k - m - 2) / 2), k - m - 2 >= 1
  return {plus, n - k, minus};
}

Matrix VandermondeFactor::reconstruct() const {
  Matrix scaled = w_left;
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= d_bin[i];
  return scaled.transpose() * w_right;
}

VandermondeFactor vandermonde_factor(std::span<const double> y, std::span<const double> x, unsigned m) {
  if (y.size() != x.size()) throw DimensionError("vandermonde_factor: y and x differ in length");
  const std::size_t n = x.size();
  VandermondeFactor f{Matrix(m + 1, n), Vector(m + 1), Matrix(m + 1, n)};
  for (std::size_t j = 0; j < n; ++j) {
    double ypow = 1.0;
    double xpow = 1.0;
    for (unsigned i = 0; i <= m; ++i) {
      f.w_left(i, j) = ypow;
      f.w_right(i, j) = xpow;
      ypow *= y[j];
      xpow *= x[j];
    }
  }
  // Row m of Pascal's triangle.
  f.d_bin[0] = 1.0;
  for (unsigned i = 1; i <= m; ++i) f.d_bin[i] = f.d_bin[i - 1] * (m - i + 1) / i;
  return f;
}

FrSpec FrSpec::make(Vector x, Vector c, double r) {
  if (x.empty() || x.size() != c.size()) throw DimensionError("FrSpec: x and c must be nonempty and equal length");
  require_strictly_increasing(x, "FrSpec");
  if (std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; }))
    throw ArgumentError("FrSpec: coefficient tuple is zero");
  constexpr double inf = std::numeric_limits<double>::infinity();
  FrSpec s;
  s.r1 = x.back() > 0.0 ? -1.0 / x.back() : -inf;
  s.r2 = x.front() < 0.0 ? -1.0 / x.front() : inf;
  s.x = std::move(x);
  s.c = std::move(c);
  s.r = r;
  return s;
}

double fr_eval(const FrSpec& spec, double t) {
  if (!spec.contains(t)) throw DomainError("fr_eval: t lies outside (R1, R2)");
  double sum = 0.0;
  for (std::size_t j = 0; j < spec.x.size(); ++j) sum += spec.c[j] * std::pow(1.0 + t * spec.x[j], spec.r);
  return sum;
}

int sign_changes(std::span<const double> c) {
  int changes = 0;
  double last = 0.0;
  for (double v : c) {
    if (v == 0.0) continue;
    if (last != 0.0 && (v > 0.0) != (last > 0.0)) ++changes;
    last = v;
  }
  return changes;
}

int zero_lower_bound(const FrSpec& spec, std::size_t grid_size,
                     std::optional<std::pair<double, double>> window) {
  if (grid_size < 2) throw ArgumentError("zero_lower_bound: grid_size must be >= 2");
  double lo, hi;
  if (window) {
    lo = std::max(window->first, spec.r1);
    hi = std::min(window->second, spec.r2);
    // Open domain: an endpoint sitting on R1/R2 is nudged inwards.
    const double nudge = 1e-9 * std::max(1.0, hi - lo);
    if (lo == spec.r1) lo += nudge;
    if (hi == spec.r2) hi -= nudge;
  } else {
    const double lo_raw = std::isfinite(spec.r1) ? spec.r1 : -1e3;
    const double hi_raw = std::isfinite(spec.r2) ? spec.r2 : 1e3;
    const double inset = 1e-3 * (hi_raw - lo_raw);
    lo = std::isfinite(spec.r1) ? lo_raw + inset : lo_raw;
    hi = std::isfinite(spec.r2) ? hi_raw - inset : hi_raw;
  }
  if (!(lo < hi)) throw DomainError("zero_lower_bound: empty sampling window");

  Vector samples(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_size - 1);
    samples[i] = fr_eval(spec, t);
  }
  return sign_changes(samples);
}

Vector homotopy_x(std::span<const double> x, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw ArgumentError("homotopy_x: t must lie in [0, 1]");
  require_strictly_increasing(x, "homotopy_x");
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (1.0 - t) * static_cast<double>(i + 1) + t * x[i];
  return out;
}

}  // namespace hadpow
