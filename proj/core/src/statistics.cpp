#include "gentile/statistics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gentile {

namespace {

void require_finite(double x, const char* where) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(where) + ": x must be finite");
}

// Taylor expansion of 1/(e^x - 1) - n/(e^{nx} - 1) around x = 0. From
// t/(e^t - 1) = sum B_m t^m / m!, the difference collapses to
// sum_m B_m (1 - n^m) x^{m-1} / m!; even m >= 2 terms vanish, leaving odd
// powers. Truncating after x^7 keeps the error below 1e-12 for n <= 50
// throughout |x| < kSeriesWindow.
double occupancy_series(double x, double n) {
  const double n2 = n * n;
  const double n4 = n2 * n2;
  const double x2 = x * x;
  return (n - 1.0) / 2.0 +
         x * ((1.0 - n2) / 12.0 +
              x2 * ((n4 - 1.0) / 720.0 +
                    x2 * ((1.0 - n2 * n4) / 30240.0 + x2 * (n4 * n4 - 1.0) / 1209600.0)));
}

}  // namespace

double occupancy_direct(const StatPoint& p) {
  const int n = p.order.n();
  if (n < 2) throw std::domain_error("occupancy_direct: occupancy requires n >= 2");
  require_finite(p.x, "occupancy_direct");

  // Factor out the largest term (k = 0 for x >= 0, k = n-1 otherwise) so
  // every exponent is <= 0.
  const int k_peak = (p.x >= 0.0) ? 0 : n - 1;
  double weight = 0.0, weighted_k = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = std::exp(-static_cast<double>(k - k_peak) * p.x);
    weight += t;
    weighted_k += static_cast<double>(k) * t;
  }
  return weighted_k / weight;
}

double occupancy_closed(const StatPoint& p) {
  const int n = p.order.n();
  if (n < 2) throw std::domain_error("occupancy_closed: occupancy requires n >= 2");
  require_finite(p.x, "occupancy_closed");

  if (std::abs(p.x) < kSeriesWindow) return occupancy_series(p.x, static_cast<double>(n));
  const double u = std::expm1(p.x);
  const double v = std::expm1(static_cast<double>(n) * p.x);
  return 1.0 / u - static_cast<double>(n) / v;
}

double fermi(double x) {
  if (x >= 0.0) {
    const double t = std::exp(-x);
    return t / (1.0 + t);
  }
  return 1.0 / (std::exp(x) + 1.0);
}

double bose(double x) {
  if (!(x > 0.0)) throw std::domain_error("bose: occupancy diverges for x <= 0");
  return 1.0 / std::expm1(x);
}

double state_partition(const StatPoint& p) {
  const int n = p.order.n();
  require_finite(p.x, "state_partition");
  if (n == 1 || p.x == 0.0) return static_cast<double>(n);
  const double num = std::expm1(-static_cast<double>(n) * p.x);
  const double den = std::expm1(-p.x);
  if (std::isinf(num) && std::isinf(den)) return std::numeric_limits<double>::infinity();
  return num / den;
}

}  // namespace gentile
