#include "hadpow/order.hpp"

#include <algorithm>
#include <cmath>

#include "hadpow/errors.hpp"
#include "hadpow/quadrature.hpp"
#include "hadpow/ranktwo.hpp"

namespace hadpow {

namespace {

// Solves A X = B by Gaussian elimination with partial pivoting.
Matrix solve(Matrix a, Matrix b) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(a(i, col)) > std::abs(a(piv, col))) piv = i;
    if (a(piv, col) == 0.0) throw SingularPivotError("singular linear system");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(piv, j));
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      const double f = a(i, col) / a(col, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(col, j);
    }
  }
  for (std::size_t col = n; col-- > 0;) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double s = b(col, j);
      for (std::size_t k = col + 1; k < n; ++k) s -= a(col, k) * b(k, j);
      b(col, j) = s / a(col, col);
    }
  }
  return b;
}

// Sign convention: first component above 1e-12 in magnitude is positive.
void normalize_sign(Vector& v) {
  for (double c : v) {
    if (std::abs(c) > 1e-12) {
      if (c < 0.0)
        for (double& w : v) w = -w;
      return;
    }
  }
}

void finish_pair(MonotonePair& pair, double tol) {
  const std::size_t n = pair.u.size();
  const SymMatrix diff = pair.a - pair.b;
  const double cut = tol * diff.scale();
  pair.x.resize(n);
  pair.zero_diag = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(diff(i, i)) < cut) {
      pair.zero_diag = true;
      pair.v[i] = 0.0;
    }
    pair.x[i] = pair.v[i] / pair.u[i];
  }
  pair.k = count_distinct(pair.x);
}

}  // namespace

bool loewner_geq(const SymMatrix& a, const SymMatrix& b, double tol) {
  return psd_check(a - b, tol).psd;
}

SymMatrix schur_complement(const SymMatrix& m, std::span<const std::size_t> pivot_block, double pivot_tol) {
  const std::size_t n = m.size();
  const std::size_t nb = pivot_block.size();
  if (nb == 0 || nb >= n) throw ArgumentError("schur_complement: pivot block must be a proper nonempty subset");
  std::vector<bool> in_block(n, false);
  for (std::size_t i : pivot_block) {
    if (i >= n) throw ArgumentError("schur_complement: pivot index out of range");
    if (in_block[i]) throw ArgumentError("schur_complement: repeated pivot index");
    in_block[i] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (!in_block[i]) rest.push_back(i);

  Matrix mbb(nb, nb);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) mbb(i, j) = m(pivot_block[i], pivot_block[j]);
  if (numeric_rank(mbb, pivot_tol) < static_cast<int>(nb))
    throw SingularPivotError("schur_complement: pivot block is singular");

  Matrix mbc(nb, rest.size());
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < rest.size(); ++j) mbc(i, j) = m(pivot_block[i], rest[j]);
  const Matrix z = solve(mbb, mbc);
  const Matrix correction = mbc.transpose() * z;

  SymMatrix out(rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      out.set(i, j, m(rest[i], rest[j]) - 0.5 * (correction(i, j) + correction(j, i)));
  return out;
}

MonotonePair MonotonePair::make(const SymMatrix& a, const SymMatrix& b, double tol) {
  if (a.size() != b.size()) throw DimensionError("monotone pair: A and B differ in size");
  if (!is_entrywise_positive(a) || !is_entrywise_positive(b))
    throw StructureError("monotone pair: A and B must be entrywise positive");
  const std::size_t n = a.size();

  const EigenResult eb = eigen_sym(b);
  if (inertia_from_values(eb.values, b.scale(), tol) != Inertia{1, static_cast<int>(n) - 1, 0})
    throw StructureError("monotone pair: B must be rank-one positive semidefinite");
  const SymMatrix diff = a - b;
  const EigenResult ed = eigen_sym(diff);
  if (inertia_from_values(ed.values, diff.scale(), tol) != Inertia{1, static_cast<int>(n) - 1, 0})
    throw StructureError("monotone pair: A - B must be rank-one positive semidefinite");
  if (numeric_rank(a, tol) > 2) throw StructureError("monotone pair: A must have rank at most two");

  MonotonePair pair{a, b, eb.vectors.column(n - 1), ed.vectors.column(n - 1), {}, 0, false};
  normalize_sign(pair.u);
  normalize_sign(pair.v);
  const double su = std::sqrt(eb.values.back());
  const double sv = std::sqrt(ed.values.back());
  for (double& c : pair.u) c *= su;
  for (double& c : pair.v) c *= sv;
  for (double c : pair.u)
    if (!(c > 0.0)) throw StructureError("monotone pair: B = u u^T needs u entrywise positive");

  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      err = std::max(err, std::abs(pair.u[i] * pair.u[j] - b(i, j)));
      err = std::max(err, std::abs(pair.v[i] * pair.v[j] - diff(i, j)));
    }
  if (err > 1e-8 * a.scale()) throw StructureError("monotone pair: factor reconstruction failed");

  finish_pair(pair, tol);
  return pair;
}

MonotonePair MonotonePair::from_factors(std::span<const double> u, std::span<const double> v, double tol) {
  if (u.size() != v.size()) throw DimensionError("monotone pair: u and v differ in length");
  for (double c : u)
    if (!(c > 0.0)) throw StructureError("monotone pair: B = u u^T needs u entrywise positive");
  MonotonePair pair{SymMatrix::outer(u) + SymMatrix::outer(v), SymMatrix::outer(u),
                    Vector(u.begin(), u.end()), Vector(v.begin(), v.end()), {}, 0, false};
  if (!is_entrywise_positive(pair.a)) throw StructureError("monotone pair: A must be entrywise positive");
  if (std::all_of(v.begin(), v.end(), [](double c) { return c == 0.0; }))
    throw StructureError("monotone pair: A - B must be rank-one positive semidefinite");
  finish_pair(pair, tol);
  return pair;
}

bool ThresholdRule::holds(double r) const noexcept {
  if (!(r >= 0.0)) return false;
  if (r > cutoff) return true;
  return is_integral(r);
}

ThresholdRule monotone_threshold(const MonotonePair& pair) {
  ThresholdRule rule;
  rule.k = pair.k;
  if (pair.zero_diag) {
    rule.cutoff = pair.k - 2;
    rule.description = "A - B has a zero diagonal entry: r > k - 2 or r in {0, ..., k - 2}";
  } else {
    rule.cutoff = pair.k - 1;
    rule.description = "A - B has no zero diagonal entry: r > k - 1 or r in {0, ..., k - 1}";
  }
  return rule;
}

PsdResult power_difference_check(const MonotonePair& pair, double r, double tol) {
  return psd_check(hadamard_power(pair.a, r) - hadamard_power(pair.b, r), tol);
}

bool verify_power_monotone(const MonotonePair& pair, double r, double tol) {
  return power_difference_check(pair, r, tol).psd;
}

double fh_integral_residual(const SymMatrix& a, double r, std::size_t nodes) {
  const std::size_t n = a.size();
  if (n == 0) throw ArgumentError("fh_integral_residual: empty matrix");
  if (!(r >= 1.0)) throw ArgumentError("fh_integral_residual: need r >= 1");
  if (nodes < 2) throw ArgumentError("fh_integral_residual: need at least 2 nodes");
  const double ann = a(n - 1, n - 1);
  if (!(ann > 0.0)) throw DomainError("fh_integral_residual: need a_nn > 0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (a(i, j) < 0.0) throw DomainError("fh_integral_residual: entries must be nonnegative");

  Vector zeta = a.column(n - 1);
  for (double& z : zeta) z /= std::sqrt(ann);
  const SymMatrix c = SymMatrix::outer(zeta);
  const SymMatrix diff = a - c;

  const GaussLegendre rule(nodes);
  SymMatrix integral(n);
  for (std::size_t q = 0; q < nodes; ++q) {
    const double t = rule.nodes[q];
    const SymMatrix path = t * a + (1.0 - t) * c;
    integral = integral + rule.weights[q] * hadamard_product(diff, hadamard_power(path, r - 1.0));
  }
  const SymMatrix rhs = hadamard_power(c, r) + r * integral;
  return max_abs_diff(hadamard_power(a, r), rhs);
}

FhCertificate fh_counterexample(int n, double r, double tol) {
  if (n < 3) throw ArgumentError("fh_counterexample: need n >= 3");
  if (!(r > 0.0 && r < n - 2) || is_integral(r))
    throw ArgumentError("fh_counterexample: need non-integer r with 0 < r < n - 2");
  Vector ramp(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ramp[static_cast<std::size_t>(i)] = i + 1;
  for (int j = 0; j <= 60; ++j) {
    const double eps = std::ldexp(1.0, -j);
    Vector x = ramp;
    for (double& v : x) v *= std::sqrt(eps);
    SymMatrix m = hadamard_power(build_X(x), r);
    const PsdResult check = psd_check(m, tol);
    if (!check.psd) return {eps, check.min_eigenvalue, *check.witness, std::move(m)};
  }
  throw NotFoundError("fh_counterexample: no negative eigenvalue found for eps = 2^-j, j <= 60");
}

GapExample rank2_gap_example(std::span<const double> x, double r, double tol) {
  const int n = static_cast<int>(x.size());
  if (n < 2) throw ArgumentError("rank2_gap_example: need at least two values");
  if (!(r > n - 2 && r < n - 1)) throw ArgumentError("rank2_gap_example: need n - 2 < r < n - 1");
  for (double v : x)
    if (!(v > 0.0)) throw ArgumentError("rank2_gap_example: x must be positive");
  if (count_distinct(x) != n) throw ArgumentError("rank2_gap_example: x must be distinct");

  GapExample g;
  g.a = build_X(x);
  const SymMatrix power = hadamard_power(g.a, r);
  const Matrix z = solve(Matrix(power), Matrix(x.size(), 1, 1.0));
  double ez = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) ez += z(i, 0);
  g.alpha = std::min(1.0 - 1e-6, 1.0 / ez);
  g.beta = std::pow(g.alpha, 1.0 / r);
  g.b = g.beta * SymMatrix::ones(x.size());

  g.a_geq_b = loewner_geq(g.a, g.b, tol);
  g.difference_rank = numeric_rank(g.a - g.b, tol);
  g.powers_geq = loewner_geq(power, hadamard_power(g.b, r), tol);
  return g;
}

}  // namespace hadpow
