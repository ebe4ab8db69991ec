#include "hadpow/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "hadpow/errors.hpp"

namespace hadpow {

GaussLegendre::GaussLegendre(std::size_t count) : nodes(count), weights(count) {
  if (count < 1) throw ArgumentError("Gauss-Legendre rule needs at least one node");
  const auto n = static_cast<double>(count);
  // Roots are symmetric; Newton on P_n from the Tricomi initial guess.
  for (std::size_t i = 0; i < (count + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (std::size_t k = 2; k <= count; ++k) {
        const auto kd = static_cast<double>(k);
        const double p2 = ((2.0 * kd - 1.0) * z * p1 - (kd - 1.0) * p0) / kd;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    // [-1, 1] -> [0, 1]
    nodes[i] = 0.5 * (1.0 - z);
    nodes[count - 1 - i] = 0.5 * (1.0 + z);
    weights[i] = weights[count - 1 - i] = 0.5 * w;
  }
}

}  // namespace hadpow
