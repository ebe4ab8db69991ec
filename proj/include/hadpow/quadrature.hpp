#pragma once

#include <cstddef>

#include "hadpow/matcore.hpp"

namespace hadpow {

/// Gauss-Legendre rule mapped to [0, 1]; exact for polynomials of degree
/// at most 2 * nodes - 1.
struct GaussLegendre {
  Vector nodes;
  Vector weights;

  explicit GaussLegendre(std::size_t count);
};

}  // namespace hadpow
