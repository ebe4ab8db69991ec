#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <random>
#include <thread>

#include "hadpow/hrank.hpp"
#include "hadpow/io.hpp"
#include "hadpow/order.hpp"
#include "hadpow/ranktwo.hpp"

namespace hadpow::cli {

namespace {

double parse_real(std::string_view tok) {
  while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
  while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() || !std::isfinite(v))
    throw ArgumentError("not a number: '" + std::string(tok) + "'");
  return v;
}

json rows_json(const std::vector<Vector>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse:
      return 1;
    case ErrorKind::argument:
      return 2;
    case ErrorKind::structure:
      return 3;
    case ErrorKind::convergence:
      return 4;
  }
  return 1;
}

std::vector<double> parse_grid(std::string_view spec) {
  const std::size_t a = spec.find(':');
  const std::size_t b = a == std::string_view::npos ? a : spec.find(':', a + 1);
  if (b == std::string_view::npos) throw ArgumentError("grid must look like MIN:MAX:STEPS");
  const double lo = parse_real(spec.substr(0, a));
  const double hi = parse_real(spec.substr(a + 1, b - a - 1));
  const double steps_real = parse_real(spec.substr(b + 1));
  if (steps_real < 1 || steps_real != std::floor(steps_real)) throw ArgumentError("grid STEPS must be an integer >= 1");
  if (lo < 0.0 || hi < lo) throw ArgumentError("grid needs 0 <= MIN <= MAX");
  const auto steps = static_cast<std::size_t>(steps_real);
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i)
    grid[i] = steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  return grid;
}

std::vector<double> parse_list(std::string_view spec) {
  std::vector<double> out;
  while (true) {
    const std::size_t comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    const std::size_t slash = item.find('/');
    if (slash == std::string_view::npos) {
      out.push_back(parse_real(item));
    } else {
      const double den = parse_real(item.substr(slash + 1));
      if (den == 0.0) throw ArgumentError("zero denominator in '" + std::string(item) + "'");
      out.push_back(parse_real(item.substr(0, slash)) / den);
    }
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return out;
}

double resolve_tol(std::optional<double> flag, std::size_t n) {
  if (flag) {
    if (!(*flag > 0.0)) throw ArgumentError("--tol must be positive");
    return *flag;
  }
  if (const char* env = std::getenv("HADAMARD_TOL"); env && *env) {
    const double v = parse_real(env);
    if (!(v > 0.0)) throw ArgumentError("HADAMARD_TOL must be positive");
    return v;
  }
  return default_tol(n);
}

json inertia_json(const Inertia& in) { return json::array({in.n_plus, in.n_zero, in.n_minus}); }

json cmd_analyze(const SymMatrix& a, double tol) {
  const ColumnFamily cols = ColumnFamily::of(a);
  const EigenResult e = eigen_sym(a);
  const Inertia in = inertia_from_values(e.values, a.scale(), tol);
  const DnnWitness dnn = dnn_witness(a, tol);
  json out;
  out["n"] = a.size();
  out["rank"] = in.n_plus + in.n_minus;
  out["hrk"] = hadamard_power_rank(cols, tol).k;
  out["kruskal_rank"] = a.size() <= 16 ? json(kruskal_rank(cols, tol)) : json(nullptr);
  out["inertia"] = inertia_json(in);
  out["is_dnn"] = dnn.holds();
  out["min_eigenvalue"] = e.values.empty() ? json(nullptr) : json(e.values.front());
  out["min_entry"] = finite_or_null(dnn.min_entry);
  out["tol"] = tol;
  return out;
}

int SweepReport::mismatches() const {
  return static_cast<int>(std::count_if(per_r.begin(), per_r.end(), [](const SweepRecord& s) { return s.mismatch; }));
}

json SweepReport::to_json() const {
  json out;
  out["source"] = source;
  out["n"] = n;
  out["hrk"] = hrk;
  out["rank_two"] = has_prediction;
  out["r_grid"] = r_grid;
  json records = json::array();
  for (const auto& s : per_r) {
    json rec;
    rec["r"] = s.r;
    rec["rank"] = s.rank;
    rec["inertia"] = inertia_json(s.inertia);
    rec["min_eigenvalue"] = s.min_eigenvalue;
    rec["predicted"] = s.predicted ? inertia_json(*s.predicted) : json(nullptr);
    rec["mismatch"] = s.mismatch;
    if (s.integral_residual) rec["integral_residual"] = *s.integral_residual;
    records.push_back(std::move(rec));
  }
  out["per_r"] = std::move(records);
  out["mismatches"] = mismatches();
  return out;
}

std::string SweepReport::to_csv() const {
  std::string out = "r,rank,n_plus,n_zero,n_minus,min_eig,predicted_n_plus,predicted_n_zero,predicted_n_minus,mismatch\n";
  for (const auto& s : per_r) {
    out += format_double(s.r) + ',' + std::to_string(s.rank) + ',' + std::to_string(s.inertia.n_plus) + ',' +
           std::to_string(s.inertia.n_zero) + ',' + std::to_string(s.inertia.n_minus) + ',' +
           format_double(s.min_eigenvalue) + ',';
    if (s.predicted) {
      out += std::to_string(s.predicted->n_plus) + ',' + std::to_string(s.predicted->n_zero) + ',' +
             std::to_string(s.predicted->n_minus);
    } else {
      out += ",,";
    }
    out += s.mismatch ? ",1\n" : ",0\n";
  }
  return out;
}

SweepReport cmd_sweep(const SymMatrix& a, std::vector<double> r_grid, double tol, std::optional<std::size_t> nodes,
                      std::string source) {
  if (r_grid.empty()) throw ArgumentError("sweep: empty exponent grid");
  for (double r : r_grid)
    if (!(r >= 0.0)) throw ArgumentError("sweep: exponents must be >= 0");
  std::sort(r_grid.begin(), r_grid.end());
  r_grid.erase(std::unique(r_grid.begin(), r_grid.end()), r_grid.end());

  SweepReport report;
  report.source = std::move(source);
  report.n = a.size();
  report.r_grid = r_grid;
  report.hrk = hadamard_power_rank(ColumnFamily::of(a), tol).k;

  std::optional<int> distinct;
  try {
    distinct = perron_decompose(a, tol).k;
  } catch (const StructureError&) {
  }
  report.has_prediction = distinct.has_value();

  const bool integral_ok = nodes && a.size() > 0 && a(a.size() - 1, a.size() - 1) > 0.0 &&
                           dnn_witness(a, tol).min_entry >= 0.0;

  report.per_r.resize(r_grid.size());
  std::vector<std::exception_ptr> errors(r_grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < r_grid.size(); i = next++) {
      try {
        SweepRecord& rec = report.per_r[i];
        rec.r = r_grid[i];
        const SymMatrix p = hadamard_power(a, rec.r);
        const EigenResult e = eigen_sym(p);
        rec.inertia = inertia_from_values(e.values, p.scale(), tol);
        rec.rank = rec.inertia.n_plus + rec.inertia.n_minus;
        rec.min_eigenvalue = e.values.empty() ? 0.0 : e.values.front();
        if (distinct) {
          rec.predicted = predict_inertia(static_cast<int>(a.size()), *distinct, rec.r);
          rec.mismatch = *rec.predicted != rec.inertia;
        }
        if (integral_ok && rec.r >= 1.0) rec.integral_residual = fh_integral_residual(a, rec.r, *nodes);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::min<std::size_t>(r_grid.size(), 8));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return report;
}

json cmd_monotone(const SymMatrix& a, const SymMatrix& b, double r, double tol, bool verify_only) {
  if (!(r >= 0.0)) throw ArgumentError("monotone: need r >= 0");
  if (a.size() != b.size()) throw DimensionError("monotone: A and B differ in size");
  json out;
  out["r"] = r;
  const PsdResult check = psd_check(hadamard_power(a, r) - hadamard_power(b, r), tol);
  out["holds"] = check.psd;
  out["min_eigenvalue"] = check.min_eigenvalue;
  out["predicted_cutoff"] = nullptr;
  out["theorem_case"] = nullptr;
  try {
    const MonotonePair pair = MonotonePair::make(a, b, tol);
    const ThresholdRule rule = monotone_threshold(pair);
    out["k"] = pair.k;
    out["zero_diag"] = pair.zero_diag;
    out["predicted_cutoff"] = rule.cutoff;
    out["theorem_case"] = rule.description;
    out["predicted_holds"] = rule.holds(r);
    out["agrees"] = rule.holds(r) == check.psd;
  } catch (const StructureError& e) {
    if (!verify_only) throw;
    out["structure_note"] = e.what();
  }
  return out;
}

json cmd_counterexample(int n, double r, double tol) {
  const FhCertificate cert = fh_counterexample(n, r, tol);
  json out;
  out["n"] = n;
  out["r"] = r;
  out["epsilon"] = cert.epsilon;
  out["min_eigenvalue"] = cert.min_eigenvalue;
  out["scale"] = cert.matrix.scale();
  out["witness"] = cert.witness;
  out["matrix"] = rows_json(cert.matrix.rows());
  return out;
}

json cmd_factor(const Vector& y, const Vector& x, unsigned m, double tol) {
  const VandermondeFactor f = vandermonde_factor(y, x, m);
  const Matrix s = hadamard_power(build_S(y, x), static_cast<double>(m));
  json out;
  out["m"] = m;
  out["x"] = x;
  out["y"] = y;
  out["w_left"] = rows_json(f.w_left.to_rows());
  out["d_bin"] = f.d_bin;
  out["w_right"] = rows_json(f.w_right.to_rows());
  out["reconstruction_error"] = max_abs_diff(f.reconstruct(), s);
  out["scale"] = s.scale();
  out["rank"] = numeric_rank(s, tol);
  return out;
}

json cmd_gap_example(const Vector& x, double r, double tol) {
  const GapExample g = rank2_gap_example(x, r, tol);
  json out;
  out["x"] = x;
  out["r"] = r;
  out["alpha"] = g.alpha;
  out["beta"] = g.beta;
  out["a_geq_b"] = g.a_geq_b;
  out["difference_rank"] = g.difference_rank;
  out["powers_geq"] = g.powers_geq;
  out["A"] = rows_json(g.a.rows());
  out["B"] = rows_json(g.b.rows());
  return out;
}

Vector random_distinct_positive(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.1, 3.0);
  Vector x(n);
  do {
    for (double& v : x) v = dist(rng);
    std::sort(x.begin(), x.end());
  } while (count_distinct(x) != static_cast<int>(n));
  return x;
}

}  // namespace hadpow::cli
