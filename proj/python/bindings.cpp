#include <optional>
#include <vector>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hadpow/errors.hpp"
#include "hadpow/hrank.hpp"
#include "hadpow/io.hpp"
#include "hadpow/order.hpp"
#include "hadpow/ranktwo.hpp"
#include "hadpow/spectral.hpp"

namespace py = pybind11;
using namespace hadpow;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const Array& a) {
  if (a.ndim() != 2) throw DimensionError("expected a 2-d array");
  const auto r = a.unchecked<2>();
  Matrix m(static_cast<std::size_t>(r.shape(0)), static_cast<std::size_t>(r.shape(1)));
  for (py::ssize_t i = 0; i < r.shape(0); ++i)
    for (py::ssize_t j = 0; j < r.shape(1); ++j) m(i, j) = r(i, j);
  return m;
}

SymMatrix to_sym(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw DimensionError("expected a square 2-d array");
  return SymMatrix::from_rows(to_matrix(a).to_rows());
}

Vector to_vector(const Array& a) {
  if (a.ndim() != 1) throw DimensionError("expected a 1-d array");
  return Vector(a.data(), a.data() + a.size());
}

Array from_matrix(const Matrix& m) {
  Array out({m.rows(), m.cols()});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
  return out;
}

Array from_sym(const SymMatrix& s) { return from_matrix(Matrix(s)); }

Array from_vector(const Vector& v) {
  const auto n = static_cast<py::ssize_t>(v.size());
  return Array(std::vector<py::ssize_t>{n}, std::vector<py::ssize_t>{sizeof(double)}, v.data());
}

double tol_or_default(std::optional<double> tol, std::size_t n) { return tol ? *tol : default_tol(n); }

py::tuple inertia_tuple(const Inertia& in) { return py::make_tuple(in.n_plus, in.n_zero, in.n_minus); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fractional Hadamard powers: rank, inertia, Loewner monotonicity";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ArgumentError>(m, "ArgumentError", base);
  py::register_exception<DimensionError>(m, "DimensionError", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  auto structure = py::register_exception<StructureError>(m, "StructureError", base);
  py::register_exception<RankError>(m, "RankError", structure);
  py::register_exception<PerronError>(m, "PerronError", structure);
  py::register_exception<SingularPivotError>(m, "SingularPivotError", structure);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base);
  py::register_exception<NotFoundError>(m, "NotFoundError", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<SymmetryError>(m, "SymmetryError", base);

  m.def("default_tol", &default_tol, py::arg("n"));

  m.def("hadamard_power", [](const Array& a, double r) { return from_matrix(hadamard_power(to_matrix(a), r)); },
        py::arg("a"), py::arg("r"), "Entrywise r-th power with 0^0 = 1.");

  m.def("eigvalsh", [](const Array& a) { return from_vector(eigen_sym(to_sym(a)).values); }, py::arg("a"),
        "Eigenvalues of a symmetric matrix, ascending.");

  m.def(
      "inertia",
      [](const Array& a, std::optional<double> tol) {
        const SymMatrix s = to_sym(a);
        return inertia_tuple(inertia_of(s, tol_or_default(tol, s.size())));
      },
      py::arg("a"), py::arg("tol") = py::none(), "(n_plus, n_zero, n_minus) at tol * scale.");

  m.def(
      "numeric_rank",
      [](const Array& a, std::optional<double> tol) {
        const Matrix mat = to_matrix(a);
        return numeric_rank(mat, tol_or_default(tol, std::max(mat.rows(), mat.cols())));
      },
      py::arg("a"), py::arg("tol") = py::none());

  m.def(
      "hadamard_power_rank",
      [](const Array& a, std::optional<double> tol) {
        const Matrix mat = to_matrix(a);
        return hadamard_power_rank(ColumnFamily::of(mat), tol_or_default(tol, mat.cols())).k;
      },
      py::arg("a"), py::arg("tol") = py::none(), "Number of scalar-multiple classes of nonzero columns.");

  m.def(
      "kruskal_rank",
      [](const Array& a, std::optional<double> tol) {
        const Matrix mat = to_matrix(a);
        return kruskal_rank(ColumnFamily::of(mat), tol_or_default(tol, mat.cols()));
      },
      py::arg("a"), py::arg("tol") = py::none());

  m.def(
      "predict_inertia", [](int n, int k, double r) { return inertia_tuple(predict_inertia(n, k, r)); },
      py::arg("n"), py::arg("k"), py::arg("r"), "Closed-form inertia of A^(o r) for rank-two positive A.");

  m.def(
      "perron_decompose",
      [](const Array& a, std::optional<double> tol) {
        const SymMatrix s = to_sym(a);
        const RankTwoForm f = perron_decompose(s, tol_or_default(tol, s.size()));
        py::dict out;
        out["p"] = from_vector(f.p);
        out["q"] = from_vector(f.q);
        out["x"] = from_vector(f.x);
        out["k"] = f.k;
        out["reconstruction_error"] = f.reconstruction_error;
        return out;
      },
      py::arg("a"), py::arg("tol") = py::none(), "A = p p^T + q q^T with p > 0 and x = q / p.");

  m.def(
      "vandermonde_factor",
      [](const Array& y, const Array& x, unsigned m_exp) {
        const VandermondeFactor f = vandermonde_factor(to_vector(y), to_vector(x), m_exp);
        return py::make_tuple(from_matrix(f.w_left), from_vector(f.d_bin), from_matrix(f.w_right));
      },
      py::arg("y"), py::arg("x"), py::arg("m"), "(W_left, binomials, W_right) with S^(o m) = W_left^T D W_right.");

  m.def(
      "monotone_threshold",
      [](const Array& a, const Array& b, std::optional<double> tol) {
        const SymMatrix sa = to_sym(a);
        const ThresholdRule rule = monotone_threshold(MonotonePair::make(sa, to_sym(b), tol_or_default(tol, sa.size())));
        py::dict out;
        out["k"] = rule.k;
        out["cutoff"] = rule.cutoff;
        out["description"] = rule.description;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = py::none());

  m.def(
      "verify_power_monotone",
      [](const Array& a, const Array& b, double r, std::optional<double> tol) {
        const SymMatrix sa = to_sym(a);
        const double t = tol_or_default(tol, sa.size());
        return verify_power_monotone(MonotonePair::make(sa, to_sym(b), t), r, t);
      },
      py::arg("a"), py::arg("b"), py::arg("r"), py::arg("tol") = py::none(),
      "A^(o r) >= B^(o r) for a monotone pair (A, B).");

  m.def(
      "loewner_geq",
      [](const Array& a, const Array& b, std::optional<double> tol) {
        const SymMatrix sa = to_sym(a);
        return loewner_geq(sa, to_sym(b), tol_or_default(tol, sa.size()));
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = py::none());

  m.def(
      "fh_integral_residual",
      [](const Array& a, double r, std::size_t nodes) { return fh_integral_residual(to_sym(a), r, nodes); },
      py::arg("a"), py::arg("r"), py::arg("nodes") = 64);

  m.def(
      "fh_counterexample",
      [](int n, double r, double tol) {
        const FhCertificate c = fh_counterexample(n, r, tol);
        py::dict out;
        out["epsilon"] = c.epsilon;
        out["min_eigenvalue"] = c.min_eigenvalue;
        out["witness"] = from_vector(c.witness);
        out["matrix"] = from_sym(c.matrix);
        return out;
      },
      py::arg("n"), py::arg("r"), py::arg("tol") = 1e-12);

  m.def(
      "rank2_gap_example",
      [](const Array& x, double r, std::optional<double> tol) {
        const Vector xv = to_vector(x);
        const GapExample g = rank2_gap_example(xv, r, tol_or_default(tol, xv.size()));
        py::dict out;
        out["a"] = from_sym(g.a);
        out["b"] = from_sym(g.b);
        out["alpha"] = g.alpha;
        out["beta"] = g.beta;
        out["a_geq_b"] = g.a_geq_b;
        out["difference_rank"] = g.difference_rank;
        out["powers_geq"] = g.powers_geq;
        return out;
      },
      py::arg("x"), py::arg("r"), py::arg("tol") = py::none());

  m.def(
      "read_matrix",
      [](const std::string& path) { return from_sym(read_matrix_file(path)); }, py::arg("path"),
      "Headerless square CSV.");
}
