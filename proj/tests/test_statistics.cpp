#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gentile/statistics.hpp"

using namespace gentile;

namespace {

// Brute-force oracle: the sums as written, no rescaling. Valid while
// exp((n-1)|x|) stays finite.
double occupancy_naive(double x, int n) {
  double s0 = 0.0, s1 = 0.0;
  for (int k = 0; k < n; ++k) {
    s0 += std::exp(-k * x);
    s1 += k * std::exp(-k * x);
  }
  return s1 / s0;
}

double partition_naive(double x, int n) {
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += std::exp(-k * x);
  return s;
}

}  // namespace

TEST_CASE("occupancy_direct_reference_points") {
  CHECK(occupancy_direct(0.0, AlgebraOrder(4)) == doctest::Approx(1.5).epsilon(1e-15));
  // n=2 reduces to 1/(e^x + 1); at x = ln 2 that is 1/3
  CHECK(std::abs(occupancy_direct(std::log(2.0), AlgebraOrder(2)) - 1.0 / 3.0) <= 1e-15);

  // deep negative x saturates toward n-1
  const double deep = occupancy_direct(-20.0, AlgebraOrder(5));
  CHECK(std::abs(deep - 4.0) <= 1e-8);
  CHECK(std::abs(deep - occupancy_naive(-20.0, 5)) <= 1e-12);
}

TEST_CASE("occupancy_direct_matches_naive_sum_on_grid") {
  for (int n : {2, 3, 7, 20}) {
    for (int i = 0; i <= 200; ++i) {
      const double x = -8.0 + 16.0 * i / 200.0;
      CHECK(std::abs(occupancy_direct(x, AlgebraOrder(n)) - occupancy_naive(x, n)) <= 1e-12);
    }
  }
}

TEST_CASE("occupancy_direct_domain_errors") {
  CHECK_THROWS_AS(occupancy_direct(0.5, AlgebraOrder(1)), std::domain_error);
  CHECK_THROWS_AS(occupancy_direct(std::numeric_limits<double>::infinity(), AlgebraOrder(3)),
                  std::domain_error);
  CHECK_THROWS_AS(occupancy_direct(std::numeric_limits<double>::quiet_NaN(), AlgebraOrder(3)),
                  std::domain_error);
}

TEST_CASE("occupancy_closed_reference_points") {
  // series constant term: (n-1)/2
  CHECK(occupancy_closed(0.0, AlgebraOrder(7)) == 3.0);
  CHECK(std::abs(occupancy_closed(1.0, AlgebraOrder(2)) - 1.0 / (std::exp(1.0) + 1.0)) <= 1e-15);
  CHECK(std::abs(occupancy_closed(0.5, AlgebraOrder(3)) -
                 occupancy_direct(0.5, AlgebraOrder(3))) <= 1e-12);
  CHECK_THROWS_AS(occupancy_closed(std::numeric_limits<double>::quiet_NaN(), AlgebraOrder(3)),
                  std::domain_error);
}

TEST_CASE("occupancy_closed_agrees_with_direct_across_window") {
  for (int n = 2; n <= 50; ++n) {
    const AlgebraOrder order(n);
    // coarse sweep of the full range
    for (int i = 0; i <= 240; ++i) {
      const double x = -30.0 + 60.0 * i / 240.0;
      const double gap = std::abs(occupancy_closed(x, order) - occupancy_direct(x, order));
      CHECK(gap <= (std::abs(x) < kSeriesWindow ? 1e-9 : 1e-12));
    }
    // dense sweep across the series seam
    for (int i = 0; i <= 80; ++i) {
      const double x = kSeriesWindow * (-2.0 + 4.0 * i / 80.0);
      if (x == 0.0) continue;
      const double gap = std::abs(occupancy_closed(x, order) - occupancy_direct(x, order));
      CHECK(gap <= (std::abs(x) < kSeriesWindow ? 1e-9 : 1e-12));
    }
  }
}

TEST_CASE("occupancy_closed_saturates_without_overflow") {
  CHECK(occupancy_closed(800.0, AlgebraOrder(5)) == 0.0);
  CHECK(occupancy_closed(-800.0, AlgebraOrder(5)) == 4.0);
}

TEST_CASE("fermi_reference_points") {
  CHECK(fermi(0.0) == 0.5);
  CHECK(fermi(40.0) < 1e-17);
  CHECK(fermi(40.0) > 0.0);
  CHECK(fermi(-40.0) == doctest::Approx(1.0).epsilon(1e-16));
  CHECK(fermi(800.0) == 0.0);  // saturates, no overflow
  CHECK(fermi(-800.0) == 1.0);
}

TEST_CASE("fermi_is_the_n2_member") {
  for (int i = 0; i < 1000; ++i) {
    const double x = -10.0 + 20.0 * i / 999.0;
    CHECK(std::abs(occupancy_direct(x, AlgebraOrder(2)) - fermi(x)) <= 1e-14);
  }
}

TEST_CASE("bose_reference_points") {
  CHECK(std::abs(bose(std::log(2.0)) - 1.0) <= 1e-15);
  CHECK(std::abs(bose(1.0) - 1.0 / (std::exp(1.0) - 1.0)) <= 1e-15);
  CHECK_THROWS_AS(bose(0.0), std::domain_error);
  CHECK_THROWS_AS(bose(-1.0), std::domain_error);
  CHECK_THROWS_AS(bose(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  // near 0+ the expm1 form keeps full precision: bose(x) ~ 1/x - 1/2
  CHECK(std::abs(bose(1e-12) - (1e12 - 0.5)) <= 1e-3);
}

TEST_CASE("bose_is_the_large_n_limit") {
  const AlgebraOrder big(500);
  CHECK(std::abs(occupancy_direct(1.0, big) - bose(1.0)) <= 1e-12);
  for (int i = 0; i < 100; ++i) {
    const double x = 0.1 + (10.0 - 0.1) * i / 99.0;
    CHECK(std::abs(occupancy_direct(x, big) - bose(x)) <= 1e-9);
  }
}

TEST_CASE("state_partition_reference_points") {
  CHECK(state_partition(0.0, AlgebraOrder(6)) == 6.0);
  CHECK(std::abs(state_partition(std::log(2.0), AlgebraOrder(2)) - 1.5) <= 1e-15);
  CHECK(std::abs(state_partition(std::log(2.0), AlgebraOrder(3)) - 1.75) <= 1e-15);
  CHECK(state_partition(3.0, AlgebraOrder(1)) == 1.0);
  CHECK_THROWS_AS(state_partition(std::numeric_limits<double>::infinity(), AlgebraOrder(3)),
                  std::domain_error);
}

TEST_CASE("state_partition_matches_direct_sum") {
  for (int n : {1, 2, 5, 12}) {
    for (int i = 0; i <= 100; ++i) {
      const double x = -5.0 + 10.0 * i / 100.0;
      const double reference = partition_naive(x, n);
      CHECK(std::abs(state_partition(x, AlgebraOrder(n)) - reference) <=
            1e-12 * std::max(1.0, reference));
    }
  }
}

TEST_CASE("occupancy_is_strictly_decreasing") {
  for (int n : {2, 3, 5, 10, 50}) {
    const AlgebraOrder order(n);
    double previous = occupancy_direct(-10.0, order);
    for (int i = 1; i < 1000; ++i) {
      const double x = -10.0 + 20.0 * i / 999.0;
      const double value = occupancy_direct(x, order);
      CHECK(value < previous);
      previous = value;
    }
  }
}

TEST_CASE("occupancy_respects_exclusion_bounds") {
  for (int n : {2, 3, 4, 10, 25, 50}) {
    const AlgebraOrder order(n);
    // strict bounds, tested where the gap to the walls is representable in
    // double (beyond |x| ~ 37 the value rounds onto the wall itself)
    for (int i = 0; i <= 400; ++i) {
      const double x = -30.0 + 60.0 * i / 400.0;
      const double value = occupancy_direct(x, order);
      CHECK(value > 0.0);
      CHECK(value < static_cast<double>(n - 1));
    }
    // saturation limits
    CHECK(std::abs(occupancy_direct(-40.0, order) - (n - 1)) <= 1e-10);
    CHECK(occupancy_direct(40.0, order) <= 1e-10);
    CHECK(occupancy_direct(40.0, order) > 0.0);
  }
}
