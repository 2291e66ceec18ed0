#pragma once

#include <functional>
#include <vector>

#include "dpc/bigreal.hpp"

namespace dpc {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<BigReal> nodes;
  std::vector<BigReal> weights;
};

[[nodiscard]] GaussLegendreRule gauss_legendre(int order, Precision prec);

struct SegmentIntegral {
  BigComplex value;
  /// Last doubling difference plus a rounding floor.
  BigReal abs_uncertainty;
  long nodes = 0;
};

/// Integrates a complex-valued f over the real interval [a, b] with a
/// composite Gauss-Legendre rule, doubling the panel count until successive
/// estimates agree to 2^{-(prec/2)} relative. Throws NonConvergence once the
/// node count would exceed max_nodes.
[[nodiscard]] SegmentIntegral integrate_segment(const std::function<BigComplex(const BigReal&)>& f,
                                                const BigReal& a, const BigReal& b, Precision prec,
                                                long max_nodes = 1L << 20, int order = 16);

}  // namespace dpc
