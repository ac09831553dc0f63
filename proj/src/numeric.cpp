#include "growgraph/numeric.hpp"

#include <numbers>

namespace growgraph {

namespace {

/// log(n!) - log(sqrt(2 pi n) (n/e)^n) for integer n >= 1.
double stirling_error(double n) {
  constexpr double s0 = 1.0 / 12, s1 = 1.0 / 360, s2 = 1.0 / 1260, s3 = 1.0 / 1680, s4 = 1.0 / 1188;
  if (n <= 15.0) {
    return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n - 0.5 * std::log(2.0 * std::numbers::pi);
  }
  const double nn = n * n;
  if (n > 500) return (s0 - s1 / nn) / n;
  if (n > 80) return (s0 - (s1 - s2 / nn) / nn) / n;
  if (n > 35) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

/// x log(x / np) + np - x, without cancellation when x is close to np.
double deviance(double x, double np) {
  if (std::fabs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

}  // namespace

double binomial_pmf(std::uint64_t k, std::uint64_t trials, double p) {
  if (k > trials) return 0.0;
  const double q = 1.0 - p;
  if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
  if (q <= 0.0) return k == trials ? 1.0 : 0.0;
  const auto n = static_cast<double>(trials);
  const auto x = static_cast<double>(k);
  if (k == 0) {
    if (trials == 0) return 1.0;
    return std::exp(p < 0.1 ? -deviance(n, n * q) - n * p : n * std::log(q));
  }
  if (k == trials) return std::exp(q < 0.1 ? -deviance(n, n * p) - n * q : n * std::log(p));
  const double lc = stirling_error(n) - stirling_error(x) - stirling_error(n - x) - deviance(x, n * p) -
                    deviance(n - x, n * q);
  const double lf = std::log(2.0 * std::numbers::pi) + std::log(x) + std::log1p(-x / n);
  return std::exp(lc - 0.5 * lf);
}

}  // namespace growgraph
