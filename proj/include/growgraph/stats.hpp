#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "growgraph/exact_dist.hpp"
#include "growgraph/graphs.hpp"
#include "growgraph/measures.hpp"

namespace growgraph {

/// (1/2) sum |p(k) - q(k)| over the union of keys; missing keys count as 0.
template <class Key>
double tv_distance(const std::map<Key, double>& p, const std::map<Key, double>& q) {
  double total = 0.0;
  auto a = p.begin();
  auto b = q.begin();
  while (a != p.end() || b != q.end()) {
    if (b == q.end() || (a != p.end() && a->first < b->first)) {
      total += std::fabs(a->second);
      ++a;
    } else if (a == p.end() || b->first < a->first) {
      total += std::fabs(b->second);
      ++b;
    } else {
      total += std::fabs(a->second - b->second);
      ++a;
      ++b;
    }
  }
  return std::min(1.0, 0.5 * total);
}

/// sup_x |F_emp(x) - F_nu(x)|. Both CDFs are compared at x and x- for every
/// sample point and every atom of nu, which is exact for right-continuous
/// step functions.
double ks_distance(std::span<const double> samples, const BoundaryMeasure& nu);

struct MeanEstimate {
  double mean;
  double std_error;
};

/// Sample mean and standard error (sample standard deviation / sqrt(N)).
/// Needs at least two values.
MeanEstimate mc_mean_ci(std::span<const double> values);

/// Counts of isomorphism classes; partial histograms merge deterministically.
class ClassHistogram {
 public:
  void add(const LabeledGraph& g);
  void merge(const ClassHistogram& other);
  std::uint64_t total() const { return total_; }
  const std::map<CanonicalForm, std::uint64_t>& counts() const { return counts_; }
  /// Normalized frequencies; throws when empty.
  ClassDistribution distribution() const;

 private:
  std::size_t n_ = 0;
  std::uint64_t total_ = 0;
  std::map<CanonicalForm, std::uint64_t> counts_;
};

ClassDistribution class_histogram(std::span<const LabeledGraph> samples);

struct ChiSquareResult {
  double statistic;
  std::size_t dof;
  double critical;
  /// Observations that fell where the reference assigns zero probability.
  std::uint64_t impossible;
  bool passed;
};

/// Pearson goodness of fit of integer-keyed counts against probabilities at
/// significance alpha. Cells with zero expectation are excluded from the
/// statistic; any observation there fails the test outright.
ChiSquareResult chi_square_test(const std::map<std::uint64_t, std::uint64_t>& observed,
                                const std::map<std::uint64_t, double>& expected_prob, double alpha);

/// Quantile of the chi-square distribution.
double chi_square_quantile(double p, std::size_t dof);

/// CSV rows "key,value" with the canonical hex as key.
void write_distribution_csv(std::ostream& out, const ClassDistribution& dist);

}  // namespace growgraph
