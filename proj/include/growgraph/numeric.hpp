#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>

namespace growgraph {

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

inline double log_choose(unsigned n, unsigned k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// Binomial coefficient as a double; exact while the result fits in 53 bits.
inline double choose(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  if (k > n - k) k = n - k;
  if (k > 60) return std::exp(log_choose(n, k));
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// x (x-1) ... (x-d+1); zero when d > x.
inline double falling_factorial(std::int64_t x, unsigned d) {
  double r = 1.0;
  for (unsigned i = 0; i < d; ++i) r *= static_cast<double>(x - static_cast<std::int64_t>(i));
  return r;
}

/// Binomial probability mass, accurate to a few ulps in relative terms even
/// for large trial counts (saddle-point form with Stirling-error and
/// deviance corrections, after Loader 2000).
double binomial_pmf(std::uint64_t k, std::uint64_t trials, double p);

/// Shortest decimal text that reads back to exactly `x`.
inline std::string format_double(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

}  // namespace growgraph
