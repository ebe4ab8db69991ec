#pragma once

// Shared instance generators and independent oracles for the unit and
// acceptance suites. Nothing here calls into the eigensolver.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hadpow/matcore.hpp"
#include "hadpow/spectral.hpp"

namespace hadpow::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// k distinct values in (-1, 1): Chebyshev points of amplitude 0.985,
/// each jittered by up to 4% of the mean spacing. |x_i x_j| < 1 keeps
/// [1 + x_i x_j] entrywise positive.
///
/// Node placement matters: for k near 10 the smallest nonzero eigenvalue
/// of [1 + x_i x_j]^{o r} is only ~1e-8 of the largest entry even for the
/// best nodes, and generic uniform draws push it far below 1e-8.
inline Vector spread_values(Rng& rng, int k) {
  Vector x(static_cast<std::size_t>(k));
  const double spacing = 1.97 / std::max(k, 1);
  for (int i = 0; i < k; ++i) {
    const double node = -0.985 * std::cos(std::numbers::pi * (i + 0.5) / k);
    x[static_cast<std::size_t>(i)] = node + uniform(rng, -0.04, 0.04) * spacing;
  }
  std::sort(x.begin(), x.end());
  return x;
}

/// n values taking exactly the k distinct values of `distinct`, each at
/// least once, in random order.
inline Vector with_repeats(Rng& rng, const Vector& distinct, int n) {
  Vector x(distinct);
  std::uniform_int_distribution<std::size_t> pick(0, distinct.size() - 1);
  while (static_cast<int>(x.size()) < n) x.push_back(distinct[pick(rng)]);
  std::shuffle(x.begin(), x.end(), rng);
  return x;
}

/// Positive scaling close to diag(1 + x_i^2)^{-1/2}, which puts
/// diag(p) [1 + x_i x_j] diag(p) near unit diagonal.
inline Vector near_equilibrating_scaling(Rng& rng, const Vector& x) {
  Vector p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p[i] = uniform(rng, 0.95, 1.05) / std::sqrt(1.0 + x[i] * x[i]);
  return p;
}

/// Exponent from one branch of the closed-form inertia:
/// 0: r > k - 2, 1: integer r <= k - 2, 2: non-integer r < k - 2.
/// Non-integer draws keep a distance of 0.2 from the integers.
inline double exponent_in_branch(Rng& rng, int k, int branch) {
  switch (branch) {
    case 1:
      return uniform_int(rng, 0, k - 2);
    case 2:
      return uniform_int(rng, 0, k - 3) + uniform(rng, 0.2, 0.8);
    default:
      return std::max(k - 2, 0) + uniform(rng, 0.2, 3.0);
  }
}

inline std::vector<int> branches_for(int k) {
  std::vector<int> b{0};
  if (k >= 2) b.push_back(1);
  if (k >= 3) b.push_back(2);
  return b;
}

/// Gram matrix of n random nonnegative vectors in R^dim (a doubly
/// nonnegative matrix). With `duplicates`, some vectors are positive
/// multiples of earlier ones so the Hadamard power rank drops below n.
inline SymMatrix random_dnn(Rng& rng, int n, int dim, int duplicates = 0) {
  std::vector<Vector> v;
  for (int i = 0; i < n - duplicates; ++i) {
    Vector w(static_cast<std::size_t>(dim));
    for (double& c : w) c = std::pow(uniform(rng, 0.0, 1.0), 3.0);
    v.push_back(std::move(w));
  }
  for (int i = 0; i < duplicates; ++i) {
    Vector w = v[static_cast<std::size_t>(uniform_int(rng, 0, n - duplicates - 1))];
    const double c = uniform(rng, 0.5, 2.0);
    for (double& e : w) e *= c;
    v.push_back(std::move(w));
  }
  std::shuffle(v.begin(), v.end(), rng);
  SymMatrix g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) g.set(i, j, dot(v[i], v[j]));
  return g;
}

/// Gram matrix of k vectors e_i + 0.5 U(0,1)^k plus n - k scaled copies,
/// so the Hadamard power rank is exactly k. Well conditioned enough that
/// rank(A^{o r}) = k is visible at tol 1e-8 for r >= k - 1.8.
inline SymMatrix spread_dnn(Rng& rng, int n, int k) {
  std::vector<Vector> v;
  for (int i = 0; i < k; ++i) {
    Vector w(static_cast<std::size_t>(k));
    for (double& c : w) c = 0.5 * uniform(rng, 0.0, 1.0);
    w[static_cast<std::size_t>(i)] += 1.0;
    v.push_back(std::move(w));
  }
  for (int i = k; i < n; ++i) {
    Vector w = v[static_cast<std::size_t>(uniform_int(rng, 0, k - 1))];
    const double c = uniform(rng, 0.5, 2.0);
    for (double& e : w) e *= c;
    v.push_back(std::move(w));
  }
  std::shuffle(v.begin(), v.end(), rng);
  SymMatrix g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) g.set(i, j, dot(v[i], v[j]));
  return g;
}

inline SymMatrix random_symmetric(Rng& rng, int n, double lo = -1.0, double hi = 1.0) {
  SymMatrix a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) a.set(i, j, uniform(rng, lo, hi));
  return a;
}

// ---------------------------------------------------------------------------
// Exact integer oracles.

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank by fraction-free (Bareiss) elimination over the integers.
inline int exact_rank(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
  __int128 prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

/// Characteristic polynomial det(lambda I - A) by Faddeev-LeVerrier in
/// exact integer arithmetic; coefficient i multiplies lambda^i.
inline std::vector<__int128> exact_charpoly(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<__int128> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n, 0));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<__int128>> next(n, std::vector<__int128>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        __int128 s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = std::move(next);
    __int128 trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    c[n - k] = -trace / static_cast<__int128>(k);
  }
  return c;
}

/// Exact inertia of an integer symmetric matrix. The characteristic
/// polynomial is real-rooted, so Descartes' rule of signs counts its
/// positive and negative roots exactly.
inline Inertia exact_inertia(const IntMatrix& a) {
  const auto c = exact_charpoly(a);
  std::size_t zero = 0;
  while (zero < c.size() && c[zero] == 0) ++zero;
  auto changes = [&](bool negate) {
    int count = 0;
    int last = 0;
    for (std::size_t i = zero; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      int s = c[i] > 0 ? 1 : -1;
      if (negate && (i % 2 == 1)) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return {changes(false), static_cast<int>(zero), changes(true)};
}

inline SymMatrix to_sym(const IntMatrix& a) {
  SymMatrix s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) s.set(i, j, static_cast<double>(a[i][j]));
  return s;
}

/// Random integer symmetric matrix: either dense with entries in [-5, 5]
/// or G diag(+-1) G^T with G an n x r integer matrix (entries in [-2, 2]),
/// which is rank deficient and indefinite in general.
inline IntMatrix random_int_symmetric(Rng& rng, int n) {
  IntMatrix a(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  if (uniform_int(rng, 0, 1) == 0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) a[i][j] = a[j][i] = uniform_int(rng, -5, 5);
    return a;
  }
  const int r = uniform_int(rng, 1, std::max(1, n - 1));
  std::vector<std::vector<int>> g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(r)));
  for (auto& row : g)
    for (int& v : row) v = uniform_int(rng, -2, 2);
  std::vector<int> d(static_cast<std::size_t>(r));
  for (int& s : d) s = uniform_int(rng, 0, 1) ? 1 : -1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (int l = 0; l < r; ++l) s += static_cast<std::int64_t>(g[i][l]) * d[l] * g[j][l];
      a[i][j] = s;
    }
  return a;
}

/// Rank-two instance: n x n, k distinct x values, entrywise
/// positive, scaled by a near-equilibrating positive diagonal.
struct RankTwoInstance {
  int n = 0;
  int k = 0;
  Vector x;
  Vector p;
  SymMatrix a;
};

inline RankTwoInstance random_rank_two(Rng& rng, int n, int k) {
  RankTwoInstance inst;
  inst.n = n;
  inst.k = k;
  inst.x = with_repeats(rng, spread_values(rng, k), n);
  inst.p = near_equilibrating_scaling(rng, inst.x);
  SymMatrix x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) x.set(i, j, 1.0 + inst.x[i] * inst.x[j]);
  inst.a = diag_congruence(x, inst.p);
  return inst;
}

}  // namespace hadpow::testing
