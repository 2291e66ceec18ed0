#include "dpc/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dpc/error.hpp"

namespace dpc {

namespace {

// P_order(x) and P'_order(x) by the three-term recurrence.
std::pair<BigReal, BigReal> legendre_with_derivative(int order, const BigReal& x) {
  const Precision prec = x.precision();
  BigReal p0 = BigReal::from_int(1, prec);
  BigReal p1 = x;
  for (int k = 2; k <= order; ++k) {
    BigReal p2 = ((2L * k - 1) * x * p1 - (k - 1L) * p0) / k;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  // (1 - x^2) P'_n = n (P_{n-1} - x P_n)
  BigReal one_minus_x2 = BigReal::from_int(1, prec) - x * x;
  BigReal dp = order * (p0 - x * p1) / one_minus_x2;
  return {p1, dp};
}

}  // namespace

GaussLegendreRule gauss_legendre(int order, Precision prec) {
  if (order < 1) throw InvalidArgument("Gauss-Legendre order must be positive");
  const Precision work = prec.plus(16);
  GaussLegendreRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(order));
  rule.weights.reserve(static_cast<std::size_t>(order));
  const BigReal stop = pow2(-(prec.bits + 4), work);
  for (int i = 0; i < order; ++i) {
    const double guess = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    BigReal x = BigReal::from_double(guess, work);
    for (int iter = 0; iter < 200; ++iter) {
      auto [p, dp] = legendre_with_derivative(order, x);
      BigReal dx = p / dp;
      x -= dx;
      if (abs(dx) <= stop) break;
    }
    auto [p, dp] = legendre_with_derivative(order, x);
    BigReal w = 2 / ((BigReal::from_int(1, work) - x * x) * dp * dp);
    rule.nodes.push_back(x.at_precision(prec));
    rule.weights.push_back(w.at_precision(prec));
  }
  return rule;
}

SegmentIntegral integrate_segment(const std::function<BigComplex(const BigReal&)>& f, const BigReal& a,
                                  const BigReal& b, Precision prec, long max_nodes, int order) {
  const Precision work = prec.plus(16);
  const GaussLegendreRule rule = gauss_legendre(order, work);
  const BigReal aw = a.at_precision(work);
  const BigReal width = b.at_precision(work) - aw;
  const BigReal tol = pow2(-(prec.bits / 2), work);

  auto composite = [&](long panels, BigReal& abs_mass) {
    BigComplex total(work);
    abs_mass = BigReal(work);
    const BigReal h = width / panels;
    const BigReal half_h = h / 2;
    for (long p = 0; p < panels; ++p) {
      const BigReal mid = aw + h * p + half_h;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        BigComplex v = f(mid + half_h * rule.nodes[i]);
        abs_mass += abs(v) * rule.weights[i];
        total += v * rule.weights[i];
      }
    }
    abs_mass *= half_h;
    return total * half_h;
  };

  BigReal mass(work);
  BigComplex previous = composite(1, mass);
  long used = order;
  for (long panels = 2; panels * order <= max_nodes; panels *= 2) {
    BigComplex current = composite(panels, mass);
    used += panels * order;
    BigReal diff = abs(current - previous);
    if (diff <= tol * abs(current)) {
      BigReal floor = mass * pow2(-(prec.bits - 8), work);
      return SegmentIntegral{BigComplex(current.re.at_precision(prec), current.im.at_precision(prec)),
                             (diff + floor).at_precision(prec), used};
    }
    previous = std::move(current);
  }
  throw NonConvergence("quadrature did not converge within " + std::to_string(max_nodes) + " nodes");
}

}  // namespace dpc
