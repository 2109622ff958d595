#pragma once

#include <cstddef>
#include <vector>

namespace vstirap {

struct GaussLegendreRule {
  std::vector<double> nodes;    ///< ascending, in [-1, 1]
  std::vector<double> weights;  ///< sum to 2
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n). Nodes are
/// mirrored so that nodes[i] == -nodes[n-1-i] and the weights match bitwise.
GaussLegendreRule gauss_legendre(std::size_t n);

}  // namespace vstirap
