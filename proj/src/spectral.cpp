#include "hadpow/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hadpow/errors.hpp"

namespace hadpow {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(s);
}

// One Jacobi rotation annihilating a(p, q). Returns false when the entry
// is already negligible against both diagonal entries.
bool rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q, bool late_sweep) {
  const double apq = a(p, q);
  if (apq == 0.0) return false;
  const double app = a(p, p);
  const double aqq = a(q, q);
  const double g = 100.0 * std::abs(apq);
  if (late_sweep && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
    a(p, q) = a(q, p) = 0.0;
    return false;
  }
  const double tau = (aqq - app) / (2.0 * apq);
  double t;
  if (std::abs(tau) > 1e150) {
    t = 0.5 / tau;
  } else {
    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
  return true;
}

}  // namespace

double default_tol(std::size_t n) noexcept { return 1e-8 * static_cast<double>(std::max<std::size_t>(n, 1)); }

EigenResult eigen_sym(const SymMatrix& a, int max_sweeps) {
  const std::size_t n = a.size();
  Matrix w(a);
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const double stop = 1e-14 * a.scale();
  double off = off_diagonal_norm(w);
  int sweep = 0;
  while (off >= stop) {
    if (sweep == max_sweeps) throw ConvergenceError("Jacobi eigensolver did not converge", off);
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotated |= rotate(w, v, p, q, sweep > 3);
    ++sweep;
    off = off_diagonal_norm(w);
    if (!rotated) break;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return w(i, i) < w(j, j); });

  EigenResult out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = w(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }

  double residual = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = out.vectors.column(j);
    const Vector av = a * col;
    for (std::size_t i = 0; i < n; ++i)
      residual = std::max(residual, std::abs(av[i] - out.values[j] * col[i]));
  }
  out.residual = residual;
  return out;
}

Inertia inertia_from_values(std::span<const double> values, double scale, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  const double cut = tol * scale;
  Inertia in;
  for (double l : values) {
    if (std::abs(l) < cut) {
      ++in.n_zero;
    } else if (l > 0.0) {
      ++in.n_plus;
    } else {
      ++in.n_minus;
    }
  }
  return in;
}

Inertia inertia_of(const SymMatrix& a, double tol) {
  const EigenResult e = eigen_sym(a);
  return inertia_from_values(e.values, a.scale(), tol);
}

PsdResult psd_check(const SymMatrix& a, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  PsdResult out;
  if (a.size() == 0) {
    out.psd = true;
    return out;
  }
  const EigenResult e = eigen_sym(a);
  out.min_eigenvalue = e.values.front();
  out.psd = out.min_eigenvalue >= -tol * a.scale();
  if (!out.psd) out.witness = e.vectors.column(0);
  return out;
}

int numeric_rank(const SymMatrix& a, double tol) {
  const Inertia in = inertia_of(a, tol);
  return in.n_plus + in.n_minus;
}

Vector singular_values(const Matrix& m) {
  Matrix w = m.rows() >= m.cols() ? m : m.transpose();
  const std::size_t rows = w.rows();
  const std::size_t cols = w.cols();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < 64; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < cols; ++i)
      for (std::size_t j = i + 1; j < cols; ++j) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t k = 0; k < rows; ++k) {
          alpha += w(k, i) * w(k, i);
          beta += w(k, j) * w(k, j);
          gamma += w(k, i) * w(k, j);
        }
        if (std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < rows; ++k) {
          const double wi = w(k, i);
          const double wj = w(k, j);
          w(k, i) = c * wi - s * wj;
          w(k, j) = s * wi + c * wj;
        }
      }
    if (!rotated) break;
  }
  Vector sv(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < rows; ++k) s += w(k, j) * w(k, j);
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

int numeric_rank(const Matrix& m, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  const double cut = tol * m.scale();
  int rank = 0;
  for (double s : singular_values(m))
    if (s >= cut) ++rank;
  return rank;
}

double min_nonzero_gap(const SymMatrix& a, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  const EigenResult e = eigen_sym(a);
  const double cut = tol * a.scale();
  Vector nonzero;
  for (double l : e.values)
    if (std::abs(l) >= cut) nonzero.push_back(l);
  if (nonzero.empty()) throw ArgumentError("min_nonzero_gap: spectrum is zero at this tolerance");
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < nonzero.size(); ++i) gap = std::min(gap, nonzero[i] - nonzero[i - 1]);
  return gap;
}

bool interlacing_check(const SymMatrix& a, std::span<const std::size_t> idx) {
  const std::size_t n = a.size();
  const std::size_t m = idx.size();
  if (m == 0 || m >= n) throw ArgumentError("interlacing_check: idx must be a proper nonempty subset");
  const Vector full = eigen_sym(a).values;
  const Vector sub = eigen_sym(principal_submatrix(a, idx)).values;
  const double slack = 1e-9 * a.scale();
  for (std::size_t j = 0; j < m; ++j) {
    if (sub[j] < full[j] - slack) return false;
    if (sub[j] > full[j + n - m] + slack) return false;
  }
  return true;
}

DnnWitness dnn_witness(const SymMatrix& a, double tol) {
  DnnWitness w{a, 0.0, 0.0, tol};
  if (a.size() == 0) return w;
  w.min_entry = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) w.min_entry = std::min(w.min_entry, a(i, j));
  w.min_eigenvalue = eigen_sym(a).values.front();
  return w;
}

}  // namespace hadpow
