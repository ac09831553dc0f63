#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "growgraph/random.hpp"

namespace growgraph {

/// Knot of a piecewise-linear inverse CDF.
struct QuantileKnot {
  double u;
  double value;
};

/// A probability measure on [0, 1], the law of the vertex parameters.
///
/// Four families are supported: a point mass at p, the two-point measure
/// p*delta_1 + (1-p)*delta_0, Lebesgue measure, and a tabulated quantile
/// function psi (piecewise linear between knots; a repeated u encodes a jump
/// and the right-hand value wins).
///
/// Immutable after construction.
class BoundaryMeasure {
 public:
  struct PointMass { double p; };
  struct TwoPoint { double p; };
  struct Uniform {};
  struct InverseCdfTable { std::vector<QuantileKnot> knots; };
  using Family = std::variant<PointMass, TwoPoint, Uniform, InverseCdfTable>;

  static BoundaryMeasure point_mass(double p);
  static BoundaryMeasure two_point(double p);
  static BoundaryMeasure uniform();
  /// Knots must start at u = 0, end at u = 1, and be nondecreasing in both
  /// coordinates with values in [0, 1].
  static BoundaryMeasure inverse_cdf_table(std::vector<QuantileKnot> knots);

  /// Parses "point:P", "twopoint:P", "uniform" or "table:FILE".
  static BoundaryMeasure parse(const std::string& spec);

  const Family& family() const { return family_; }
  std::string describe() const;

  /// Draw from the measure (one uniform consumed for every family).
  double sample(RandomStream& rng) const;

  /// M_d = integral of x^d.
  double moment(unsigned d) const;

  /// Integral of x^a (1-x)^b, with 0^0 = 1.
  double beta_integral(unsigned a, unsigned b) const;

  /// C(a+b, a) * beta_integral(a, b): the probability that a mixed binomial
  /// variate with a+b trials equals a. Computed without forming the
  /// binomial coefficient separately.
  double binomial_mixture_mass(unsigned a, unsigned b) const;

  /// Right-continuous inverse of the distribution function.
  double inverse_cdf(double u) const;

  /// F(x) = nu([0, x]).
  double cdf(double x) const;
  /// F(x-) = nu([0, x)).
  double cdf_left(double x) const;
  /// Points carrying positive mass.
  std::vector<double> atoms() const;

 private:
  explicit BoundaryMeasure(Family f) : family_(std::move(f)) {}

  template <class F>
  double integrate_table(F&& integrand) const;

  Family family_;
};

/// Reads the "u psi" per line table format.
std::vector<QuantileKnot> read_quantile_table(std::istream& in);
std::vector<QuantileKnot> read_quantile_table_file(const std::string& path);

/// Free-function spellings used throughout the tests and tools.
inline double sample_theta(const BoundaryMeasure& nu, RandomStream& rng) { return nu.sample(rng); }
inline double moment(const BoundaryMeasure& nu, unsigned d) { return nu.moment(d); }
inline double beta_integral(const BoundaryMeasure& nu, unsigned a, unsigned b) {
  return nu.beta_integral(a, b);
}
inline double inverse_cdf(const BoundaryMeasure& nu, double u) { return nu.inverse_cdf(u); }

/// The measures every sweep in the tools and tests iterates over.
std::vector<BoundaryMeasure> builtin_measures();

}  // namespace growgraph
