#pragma once

#include "gentile/algebra.hpp"

namespace gentile {

// Occupancy functions switch to a Taylor expansion around x = 0 below this
// threshold, where the two terms of the closed form individually diverge.
inline constexpr double kSeriesWindow = 2e-3;

// Argument of the equilibrium distribution: x = E*b + c with (b, c) the
// Lagrange factors for fixed total energy and particle number.
struct StatPoint {
  double x;
  AlgebraOrder order;
};

// Mean occupancy sum_{k=0}^{n-1} k e^{-kx} / sum_{k=0}^{n-1} e^{-kx},
// evaluated with the dominant exponent factored out. Requires n >= 2.
double occupancy_direct(const StatPoint& p);
inline double occupancy_direct(double x, AlgebraOrder order) {
  return occupancy_direct(StatPoint{x, order});
}

// Resummed form 1/(e^x - 1) - n/(e^{nx} - 1), with the series path inside
// the window; agrees with occupancy_direct to 1e-12 on |x| <= 30.
double occupancy_closed(const StatPoint& p);
inline double occupancy_closed(double x, AlgebraOrder order) {
  return occupancy_closed(StatPoint{x, order});
}

// Fermi-Dirac occupancy 1/(e^x + 1); the n = 2 member.
double fermi(double x);

// Bose-Einstein occupancy 1/(e^x - 1); the n -> infinity limit. x > 0 only.
double bose(double x);

// Per-state partition sum sum_{k=0}^{n-1} e^{-kx} = (1 - e^{-nx})/(1 - e^{-x}),
// with the x = 0 limit n.
double state_partition(const StatPoint& p);
inline double state_partition(double x, AlgebraOrder order) {
  return state_partition(StatPoint{x, order});
}

}  // namespace gentile
