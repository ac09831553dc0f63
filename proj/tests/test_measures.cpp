#include <doctest.h>

#include <cmath>
#include <sstream>

#include "growgraph/errors.hpp"
#include "growgraph/measures.hpp"
#include "growgraph/numeric.hpp"

using namespace growgraph;

namespace {

BoundaryMeasure uniform_table() { return BoundaryMeasure::inverse_cdf_table({{0.0, 0.0}, {1.0, 1.0}}); }

// psi for 0.3*delta_1 + 0.7*delta_0; the repeated u = 0.7 encodes the jump.
BoundaryMeasure two_point_table() {
  return BoundaryMeasure::inverse_cdf_table({{0.0, 0.0}, {0.7, 0.0}, {0.7, 1.0}, {1.0, 1.0}});
}

std::vector<BoundaryMeasure> all_measures() {
  auto v = builtin_measures();
  v.push_back(uniform_table());
  v.push_back(two_point_table());
  v.push_back(BoundaryMeasure::inverse_cdf_table({{0.0, 0.1}, {0.5, 0.2}, {0.5, 0.6}, {1.0, 0.9}}));
  return v;
}

}  // namespace

TEST_CASE("sample_theta examples") {
  RandomStream rng(11);
  const auto pm = BoundaryMeasure::point_mass(0.3);
  const auto tp = BoundaryMeasure::two_point(1.0);
  for (int i = 0; i < 1000; ++i) {
    CHECK(sample_theta(pm, rng) == 0.3);
    CHECK(sample_theta(tp, rng) == 1.0);
  }
  const auto u = BoundaryMeasure::uniform();
  double sum = 0.0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) sum += sample_theta(u, rng);
  CHECK(std::fabs(sum / draws - 0.5) < 0.005);
}

TEST_CASE("moment closed forms") {
  CHECK(moment(BoundaryMeasure::point_mass(0.4), 3) == doctest::Approx(0.064).epsilon(1e-15));
  for (unsigned d = 0; d <= 10; ++d) {
    CHECK(moment(BoundaryMeasure::uniform(), d) == doctest::Approx(1.0 / (d + 1)).epsilon(1e-15));
  }
  CHECK(moment(BoundaryMeasure::two_point(0.3), 5) == 0.3);
  for (const auto& nu : all_measures()) CHECK(moment(nu, 0) == 1.0);
}

TEST_CASE("moments are nonincreasing in d") {
  for (const auto& nu : all_measures()) {
    for (unsigned d = 0; d < 12; ++d) CHECK(moment(nu, d + 1) <= moment(nu, d) + 1e-15);
  }
}

TEST_CASE("beta_integral examples") {
  const auto u = BoundaryMeasure::uniform();
  for (unsigned n : {1u, 2u, 7u, 20u}) {
    for (unsigned k = 0; k < n; ++k) {
      CHECK(choose(n - 1, k) * beta_integral(u, k, n - 1 - k) == doctest::Approx(1.0 / n).epsilon(1e-12));
    }
  }
  CHECK(beta_integral(BoundaryMeasure::point_mass(0.5), 2, 1) == 0.125);
  CHECK(beta_integral(BoundaryMeasure::two_point(0.4), 0, 0) == 1.0);
  // 0^0 = 1 at the atoms.
  CHECK(beta_integral(BoundaryMeasure::point_mass(0.0), 0, 3) == 1.0);
  CHECK(beta_integral(BoundaryMeasure::point_mass(1.0), 3, 0) == 1.0);
}

TEST_CASE("beta_integral(a, 0) equals moment(a)") {
  for (const auto& nu : all_measures()) {
    for (unsigned a = 0; a <= 12; ++a) CHECK(beta_integral(nu, a, 0) == moment(nu, a));
  }
}

TEST_CASE("binomial expansion of beta_integral in moments") {
  for (const auto& nu : all_measures()) {
    for (unsigned a = 0; a <= 12; ++a) {
      for (unsigned b = 0; a + b <= 12; ++b) {
        double s = 0.0;
        for (unsigned k = 0; k <= b; ++k) s += choose(b, k) * ((k % 2) ? -1.0 : 1.0) * moment(nu, a + k);
        CHECK(std::fabs(s - beta_integral(nu, a, b)) < 1e-9);
      }
    }
  }
}

TEST_CASE("moments agree with Monte Carlo within 4 standard errors") {
  RandomStream rng(2024);
  const int draws = 1000000;
  for (const auto& nu : all_measures()) {
    std::vector<double> sum(11, 0.0), sumsq(11, 0.0);
    for (int i = 0; i < draws; ++i) {
      const double x = nu.sample(rng);
      double p = 1.0;
      for (unsigned d = 0; d <= 10; ++d) {
        sum[d] += p;
        sumsq[d] += p * p;
        p *= x;
      }
    }
    for (unsigned d = 1; d <= 10; ++d) {
      const double mean = sum[d] / draws;
      const double var = sumsq[d] / draws - mean * mean;
      const double se = std::sqrt(std::max(var, 0.0) / draws);
      INFO(nu.describe() << " d=" << d);
      CHECK(std::fabs(mean - moment(nu, d)) <= 4.0 * se + 1e-12);
    }
  }
}

TEST_CASE("inverse_cdf examples") {
  CHECK(inverse_cdf(BoundaryMeasure::uniform(), 0.7) == 0.7);
  CHECK(inverse_cdf(BoundaryMeasure::two_point(0.3), 0.69) == 0.0);
  CHECK(inverse_cdf(BoundaryMeasure::two_point(0.3), 0.71) == 1.0);
  CHECK(inverse_cdf(BoundaryMeasure::point_mass(0.4), 0.5) == 0.4);
  // Right-continuous at the jump.
  CHECK(inverse_cdf(BoundaryMeasure::two_point(0.3), 1.0 - 0.3) == 1.0);
}

TEST_CASE("table quantile function: interpolation and right-continuity at jumps") {
  const auto t = BoundaryMeasure::inverse_cdf_table({{0.0, 0.0}, {0.5, 0.2}, {0.5, 0.8}, {1.0, 1.0}});
  CHECK(inverse_cdf(t, 0.25) == doctest::Approx(0.1));
  CHECK(inverse_cdf(t, 0.4999999) == doctest::Approx(0.2).epsilon(1e-6));
  CHECK(inverse_cdf(t, 0.5) == 0.8);
  CHECK(inverse_cdf(t, 0.75) == doctest::Approx(0.9));
  CHECK(inverse_cdf(t, 1.0) == 1.0);
}

TEST_CASE("table moments match the measure they tabulate") {
  const auto ut = uniform_table();
  const auto tp = two_point_table();
  for (unsigned d = 0; d <= 8; ++d) {
    CHECK(std::fabs(moment(ut, d) - 1.0 / (d + 1)) < 1e-6);
    CHECK(std::fabs(moment(tp, d) - moment(BoundaryMeasure::two_point(0.3), d)) < 1e-6);
  }
  CHECK(tp.cdf(0.5) == doctest::Approx(0.7));
  CHECK(tp.atoms() == std::vector<double>{0.0, 1.0});
}

TEST_CASE("inverse_cdf is nondecreasing") {
  RandomStream rng(5);
  for (const auto& nu : all_measures()) {
    for (int i = 0; i < 10000; ++i) {
      double u1 = rng.uniform(), u2 = rng.uniform();
      if (u1 > u2) std::swap(u1, u2);
      CHECK(nu.inverse_cdf(u1) <= nu.inverse_cdf(u2));
    }
  }
}

TEST_CASE("cdf and quantile function are consistent") {
  for (const auto& nu : all_measures()) {
    for (double u : {0.05, 0.3, 0.5, 0.69, 0.71, 0.95}) {
      const double x = nu.inverse_cdf(u);
      INFO(nu.describe() << " u=" << u);
      CHECK(nu.cdf(x) >= u - 1e-12);
      CHECK(nu.cdf_left(x) <= u + 1e-12);
    }
  }
}

TEST_CASE("measure parsing and validation") {
  CHECK(BoundaryMeasure::parse("point:0.3").moment(1) == 0.3);
  CHECK(BoundaryMeasure::parse("twopoint:0.25").moment(4) == 0.25);
  CHECK(BoundaryMeasure::parse("uniform").moment(1) == 0.5);
  CHECK_THROWS_AS(BoundaryMeasure::parse("point:1.5"), InvalidArgument);
  CHECK_THROWS_AS(BoundaryMeasure::parse("point:"), InvalidArgument);
  CHECK_THROWS_AS(BoundaryMeasure::parse("gamma:2"), InvalidArgument);
  CHECK_THROWS_AS(BoundaryMeasure::parse("table:/nonexistent/file"), InvalidArgument);
}

TEST_CASE("quantile table file format") {
  std::istringstream ok("0 0\n0.5 0.2\n# comment\n0.5 0.8\n1 1\n");
  CHECK(read_quantile_table(ok).size() == 4);

  std::istringstream nonmonotone("0 0\n0.5 0.6\n0.7 0.4\n1 1\n");
  CHECK_THROWS_AS(BoundaryMeasure::inverse_cdf_table(read_quantile_table(nonmonotone)), InvalidArgument);

  std::istringstream short_range("0.1 0\n1 1\n");
  CHECK_THROWS_AS(BoundaryMeasure::inverse_cdf_table(read_quantile_table(short_range)), InvalidArgument);

  std::istringstream garbage("0 0 0\n1 1\n");
  CHECK_THROWS_AS(read_quantile_table(garbage), InvalidArgument);
}
