#include <doctest.h>

#include <cmath>

#include "hadpow/errors.hpp"
#include "hadpow/order.hpp"
#include "hadpow/quadrature.hpp"
#include "hadpow/ranktwo.hpp"
#include "support.hpp"

using namespace hadpow;
namespace ht = hadpow::testing;

namespace {

// u > 0 near unit size, v = u o x with k distinct x values; one x is zero
// when zero_diag is set.
MonotonePair random_pair(ht::Rng& rng, int n, int k, bool zero_diag) {
  Vector distinct = ht::spread_values(rng, k);
  if (zero_diag) distinct[static_cast<std::size_t>(ht::uniform_int(rng, 0, k - 1))] = 0.0;
  const Vector x = ht::with_repeats(rng, distinct, n);
  const Vector u = ht::near_equilibrating_scaling(rng, x);
  Vector v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = u[i] * x[i];
  return MonotonePair::from_factors(u, v, 1e-8);
}

}  // namespace

TEST_CASE("loewner_geq") {
  const SymMatrix e = SymMatrix::ones(3);
  CHECK(loewner_geq(build_X(Vector{1, 2, 3}), e, 1e-9));
  CHECK_FALSE(loewner_geq(e, build_X(Vector{1, 2, 3}), 1e-9));
  CHECK(loewner_geq(e, e, 1e-9));
  CHECK_THROWS_AS(loewner_geq(e, SymMatrix::ones(2), 1e-9), DimensionError);
}

TEST_CASE("schur_complement") {
  const SymMatrix m = SymMatrix::from_rows({{4, 2, 2}, {2, 3, 1}, {2, 1, 5}});
  const std::size_t first[] = {0};
  const SymMatrix s = schur_complement(m, first);
  CHECK(s.size() == 2);
  CHECK(s(0, 0) == doctest::Approx(2.0));
  CHECK(s(0, 1) == doctest::Approx(0.0));
  CHECK(s(1, 1) == doctest::Approx(4.0));

  const std::size_t both[] = {0, 1};
  CHECK_THROWS_AS(schur_complement(SymMatrix::ones(3), both), SingularPivotError);
  const std::size_t bad[] = {1, 1};
  CHECK_THROWS(schur_complement(m, bad));

  SUBCASE("[1 + x_i x_j]^(o r) with x_n = 0 over its last entry") {
    ht::Rng rng(51);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = ht::uniform_int(rng, 2, 7);
      Vector x = ht::spread_values(rng, n - 1);
      x.push_back(0.0);
      const double r = ht::uniform(rng, 0.0, 6.0);
      const std::size_t last[] = {static_cast<std::size_t>(n - 1)};
      const SymMatrix sc = schur_complement(hadamard_power(build_X(x), r), last);
      Vector head(x.begin(), x.end() - 1);
      const SymMatrix expected = hadamard_power(build_X(head), r) - SymMatrix::ones(head.size());
      CHECK(max_abs_diff(sc, expected) <= 1e-12 * std::max(1.0, expected.scale()));
    }
  }
}

TEST_CASE("MonotonePair::make") {
  const SymMatrix a = build_X(Vector{1, 2, 3});
  const SymMatrix e = SymMatrix::ones(3);
  const MonotonePair p = MonotonePair::make(a, e, 1e-8);
  CHECK(p.k == 3);
  CHECK_FALSE(p.zero_diag);
  for (double u : p.u) CHECK(u == doctest::Approx(1.0));

  const MonotonePair z = MonotonePair::make(build_X(Vector{1, 2, 0}), e, 1e-8);
  CHECK(z.zero_diag);
  CHECK(z.v[2] == 0.0);

  CHECK_THROWS_AS(MonotonePair::make(e, a, 1e-8), StructureError);
  CHECK_THROWS_AS(MonotonePair::make(hadamard_power(build_X(Vector{1, 2, 3}), 2.0), e, 1e-8), StructureError);
  CHECK_THROWS_AS(MonotonePair::make(a, SymMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 1e-8),
                  StructureError);
}

TEST_CASE("monotone_threshold") {
  const auto rule = [](Vector x) {
    return monotone_threshold(MonotonePair::make(build_X(x), SymMatrix::ones(x.size()), 1e-8));
  };
  CHECK(rule({1, 2, 3}).cutoff == 2);
  CHECK(rule({1, 2, 0}).cutoff == 1);
  CHECK(rule({1, 1, 1}).cutoff == 0);
  CHECK(rule({1, 2, 2, 3}).k == 3);

  const ThresholdRule r3 = rule({1, 2, 3});
  CHECK(r3.holds(0.0));
  CHECK(r3.holds(1.0));
  CHECK(r3.holds(2.0));
  CHECK(r3.holds(2.5));
  CHECK_FALSE(r3.holds(1.5));
  CHECK_FALSE(r3.holds(0.5));
  CHECK_FALSE(r3.description.empty());
}

TEST_CASE("verify_power_monotone") {
  const MonotonePair p = MonotonePair::make(build_X(Vector{1, 2, 3}), SymMatrix::ones(3), 1e-8);
  CHECK(verify_power_monotone(p, 2.5, 1e-8));
  CHECK_FALSE(verify_power_monotone(p, 1.5, 1e-8));
  CHECK(verify_power_monotone(p, 1.0, 1e-8));
  CHECK_THROWS_AS(verify_power_monotone(p, -1.0, 1e-8), ArgumentError);
}

TEST_CASE("monotone pairs follow the threshold rule") {
  ht::Rng rng(52);
  int decided = 0, skipped = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = ht::uniform_int(rng, 2, 6);
    const bool zero_diag = trial % 3 == 0;
    const int k = ht::uniform_int(rng, zero_diag ? 2 : 1, n);
    const MonotonePair pair = random_pair(rng, n, k, zero_diag);
    REQUIRE(pair.zero_diag == zero_diag);
    REQUIRE(pair.k == k);
    const ThresholdRule rule = monotone_threshold(pair);
    CHECK(rule.cutoff == (zero_diag ? k - 2 : k - 1));
    for (int step = 0; step < 20; ++step) {
      double r = step * (n + 1.0) / 19.0;
      if (std::abs(r - std::round(r)) < 0.1) r = std::round(r);
      const double tol = 1e-8;
      const PsdResult check = power_difference_check(pair, r, tol);
      const double scale = hadamard_power(pair.a, r).scale();
      if (rule.holds(r)) {
        CHECK_MESSAGE(check.psd, "n=", n, " k=", k, " r=", r);
        ++decided;
      } else if (check.min_eigenvalue > -10.0 * tol * scale) {
        ++skipped;
      } else {
        CHECK_FALSE(check.psd);
        ++decided;
      }
    }
  }
  CHECK(decided > 10 * skipped);
}

TEST_CASE("GaussLegendre") {
  for (std::size_t m : {1u, 2u, 5u, 16u, 64u}) {
    const GaussLegendre q(m);
    REQUIRE(q.nodes.size() == m);
    for (std::size_t d = 0; d < 2 * m && d < 40; ++d) {
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += q.weights[i] * std::pow(q.nodes[i], static_cast<double>(d));
      CHECK(s == doctest::Approx(1.0 / (d + 1.0)).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(GaussLegendre(0), ArgumentError);
}

TEST_CASE("fh_integral_residual") {
  CHECK(fh_integral_residual(SymMatrix::ones(4), 2.5, 16) <= 1e-14);
  const SymMatrix x = build_X(Vector{1, 2, 3});
  CHECK(fh_integral_residual(x, 2.0, 16) <= 1e-12 * hadamard_power(x, 2.0).scale());

  ht::Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const SymMatrix a = ht::random_dnn(rng, 5, 4);
    CHECK(fh_integral_residual(a, 3.7, 64) <= 1e-6 * hadamard_power(a, 3.7).scale());
    const int r = ht::uniform_int(rng, 1, 4);
    CHECK(fh_integral_residual(a, r, 16) <= 1e-12 * hadamard_power(a, r).scale());
  }
  CHECK_THROWS_AS(fh_integral_residual(x, 0.5), ArgumentError);
  CHECK_THROWS_AS(fh_integral_residual(SymMatrix::from_rows({{1, 1}, {1, 0}}), 2.0), DomainError);
}

TEST_CASE("fh_counterexample") {
  for (auto [n, r] : {std::pair{3, 0.5}, {4, 0.5}, {4, 1.5}, {5, 2.5}}) {
    const FhCertificate c = fh_counterexample(n, r, 1e-12);
    CHECK(c.matrix.size() == static_cast<std::size_t>(n));
    CHECK(c.min_eigenvalue < -1e-12 * c.matrix.scale());
    CHECK(c.epsilon > 0.0);
    CHECK(c.epsilon <= 1.0);
    const double q = dot(c.witness, c.matrix * c.witness);
    CHECK(q < 0.0);
    CHECK(c.matrix(1, 2) == doctest::Approx(std::pow(1.0 + c.epsilon * 6.0, r)));
  }
  CHECK_THROWS_AS(fh_counterexample(2, 0.5, 1e-12), ArgumentError);
  CHECK_THROWS_AS(fh_counterexample(4, 1.0, 1e-12), ArgumentError);
  CHECK_THROWS_AS(fh_counterexample(4, 2.5, 1e-12), ArgumentError);
  CHECK_THROWS_AS(fh_counterexample(4, -0.5, 1e-12), ArgumentError);
}

TEST_CASE("rank2_gap_example") {
  const GapExample g = rank2_gap_example(Vector{1, 2, 3}, 1.5, 1e-8);
  CHECK(g.a_geq_b);
  CHECK(g.difference_rank == 2);
  CHECK(g.powers_geq);
  CHECK(g.alpha > 0.0);
  CHECK(g.alpha < 1.0);
  CHECK(g.beta == doctest::Approx(std::pow(g.alpha, 1.0 / 1.5)));

  CHECK_THROWS_AS(rank2_gap_example(Vector{1, 2, 3}, 2.5, 1e-8), ArgumentError);
  CHECK_THROWS_AS(rank2_gap_example(Vector{1, 2, 3}, 0.5, 1e-8), ArgumentError);
  CHECK_THROWS_AS(rank2_gap_example(Vector{1, 2, 2}, 1.5, 1e-8), ArgumentError);
  CHECK_THROWS_AS(rank2_gap_example(Vector{1, -2, 3}, 1.5, 1e-8), ArgumentError);

  SUBCASE("random distinct positive x") {
    ht::Rng rng(54);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = ht::uniform_int(rng, 2, 6);
      Vector x = ht::spread_values(rng, n);
      for (double& v : x) v = 1.2 + v;
      const double r = n - 2 + ht::uniform(rng, 0.1, 0.9);
      const GapExample ex = rank2_gap_example(x, r, 1e-8);
      CHECK_MESSAGE(ex.a_geq_b, "n=", n, " r=", r);
      CHECK_MESSAGE(ex.difference_rank == 2, "n=", n, " r=", r);
      CHECK_MESSAGE(ex.powers_geq, "n=", n, " r=", r);
    }
  }
}
