#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "growgraph/measures.hpp"
#include "growgraph/random.hpp"

namespace growgraph {

/// A probability mass function on {0, ..., n-1}: the law of the number of
/// earlier vertices that vertex n attaches to.
class DegreeLaw {
 public:
  /// Validates nonnegativity and normalization (within 1e-12).
  DegreeLaw(std::size_t n, std::vector<double> pmf);

  std::size_t n() const { return pmf_.size(); }
  double pmf(std::size_t k) const { return k < pmf_.size() ? pmf_[k] : 0.0; }
  std::span<const double> masses() const { return pmf_; }

  /// Inverse transform on the cumulative sums (one uniform per draw).
  std::size_t sample(RandomStream& rng) const;

  /// E[D (D-1) ... (D-d+1)].
  double falling_factorial_moment(unsigned d) const;

  double mean() const { return falling_factorial_moment(1); }

  /// Point mass at k.
  static DegreeLaw degenerate(std::size_t n, std::size_t k);
  static DegreeLaw uniform(std::size_t n);

 private:
  std::vector<double> pmf_;
  std::vector<double> cumulative_;
};

/// Law of D_n when vertex n carries a parameter theta ~ nu and links to each
/// earlier vertex with probability theta: the mixed binomial
///   pmf(k) = C(n-1, k) * integral theta^k (1-theta)^(n-1-k) dnu.
DegreeLaw mixed_binomial(const BoundaryMeasure& nu, std::size_t n);

inline std::size_t sample_degree(const DegreeLaw& law, RandomStream& rng) { return law.sample(rng); }
inline double falling_factorial_moment(const DegreeLaw& law, unsigned d) {
  return law.falling_factorial_moment(d);
}

/// Bin(trials, p) variate. Bernoulli counting for up to 1000 trials,
/// otherwise inversion over the probability mass around the mode; either way
/// the number of uniforms consumed depends only on (trials, p, draws).
std::size_t sample_binomial(std::size_t trials, double p, RandomStream& rng);

/// Mixed binomial variate drawn in two stages (theta, then a binomial), so the
/// law never has to be materialized.
std::size_t sample_mixed_binomial(const BoundaryMeasure& nu, std::size_t trials, RandomStream& rng);

/// One DegreeLaw per growth step k = 1..max_n; law(k) lives on {0..k-1}.
/// Immutable and shareable between threads.
class DegreeLawSequence {
 public:
  /// laws[i] must be a law on {0..i}; step 1 may be omitted (it is always
  /// the point mass at 0).
  explicit DegreeLawSequence(std::vector<DegreeLaw> laws);

  std::size_t max_n() const { return laws_.size(); }
  const DegreeLaw& law(std::size_t k) const;

  static DegreeLawSequence mixed_binomial(const BoundaryMeasure& nu, std::size_t max_n);
  static DegreeLawSequence uniform(std::size_t max_n);
  static DegreeLawSequence degenerate_at_zero(std::size_t max_n);

 private:
  std::vector<DegreeLaw> laws_;
};

/// Single-law file: first line "n", then n lines "k p_k".
DegreeLaw read_degree_law(std::istream& in);
void write_degree_law(std::ostream& out, const DegreeLaw& law);

/// A sequence file is a concatenation of single-law blocks, one per step.
DegreeLawSequence read_degree_law_sequence(std::istream& in);
DegreeLawSequence read_degree_law_sequence_file(const std::string& path);

}  // namespace growgraph
