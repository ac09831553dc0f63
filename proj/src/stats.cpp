#include "growgraph/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <ostream>
#include <sstream>

#include "growgraph/errors.hpp"
#include "growgraph/numeric.hpp"

namespace growgraph {

double ks_distance(std::span<const double> samples, const BoundaryMeasure& nu) {
  if (samples.empty()) throw InvalidArgument("ks_distance needs at least one sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());

  std::vector<double> points = sorted;
  const auto atoms = nu.atoms();
  points.insert(points.end(), atoms.begin(), atoms.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  double sup = 0.0;
  for (double x : points) {
    const auto below = std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
    const auto at_most = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
    const double emp_left = static_cast<double>(below) / n;
    const double emp = static_cast<double>(at_most) / n;
    sup = std::max({sup, std::fabs(emp - nu.cdf(x)), std::fabs(emp_left - nu.cdf_left(x))});
  }
  return sup;
}

MeanEstimate mc_mean_ci(std::span<const double> values) {
  if (values.size() < 2) throw InvalidArgument("mc_mean_ci needs at least two values");
  const auto n = static_cast<double>(values.size());
  CompensatedSum s;
  for (double v : values) s.add(v);
  const double mean = s.value() / n;
  CompensatedSum ss;
  for (double v : values) ss.add((v - mean) * (v - mean));
  const double var = ss.value() / (n - 1.0);
  return {mean, std::sqrt(var / n)};
}

void ClassHistogram::add(const LabeledGraph& g) {
  if (total_ == 0) {
    n_ = g.n();
  } else if (g.n() != n_) {
    throw InvalidArgument("class histogram: all graphs must have the same vertex count");
  }
  ++counts_[canonical_form(g)];
  ++total_;
}

void ClassHistogram::merge(const ClassHistogram& other) {
  if (other.total_ == 0) return;
  if (total_ != 0 && other.n_ != n_) throw InvalidArgument("class histogram: vertex counts differ");
  n_ = other.n_;
  for (const auto& [k, c] : other.counts_) counts_[k] += c;
  total_ += other.total_;
}

ClassDistribution ClassHistogram::distribution() const {
  if (total_ == 0) throw InvalidArgument("class histogram of an empty sample");
  ClassDistribution out;
  for (const auto& [k, c] : counts_) out.emplace(k, static_cast<double>(c) / static_cast<double>(total_));
  return out;
}

ClassDistribution class_histogram(std::span<const LabeledGraph> samples) {
  ClassHistogram h;
  for (const auto& g : samples) h.add(g);
  return h.distribution();
}

double chi_square_quantile(double p, std::size_t dof) {
  boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::quantile(dist, p);
}

ChiSquareResult chi_square_test(const std::map<std::uint64_t, std::uint64_t>& observed,
                                const std::map<std::uint64_t, double>& expected_prob, double alpha) {
  std::uint64_t total = 0;
  for (const auto& [k, c] : observed) total += c;
  if (total == 0) throw InvalidArgument("chi_square_test: no observations");

  ChiSquareResult r{0.0, 0, 0.0, 0, false};
  std::size_t cells = 0;
  for (const auto& [k, p] : expected_prob) {
    if (p <= 0.0) continue;
    const auto it = observed.find(k);
    const double obs = it == observed.end() ? 0.0 : static_cast<double>(it->second);
    const double expect = p * static_cast<double>(total);
    r.statistic += (obs - expect) * (obs - expect) / expect;
    ++cells;
  }
  for (const auto& [k, c] : observed) {
    const auto it = expected_prob.find(k);
    if (it == expected_prob.end() || it->second <= 0.0) r.impossible += c;
  }
  r.dof = cells > 1 ? cells - 1 : 0;
  r.critical = r.dof > 0 ? chi_square_quantile(1.0 - alpha, r.dof) : 0.0;
  r.passed = r.impossible == 0 && (r.dof == 0 || r.statistic <= r.critical);
  return r;
}

void write_distribution_csv(std::ostream& out, const ClassDistribution& dist) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << "key,value\n";
  for (const auto& [k, v] : dist) os << k.hex() << ',' << v << '\n';
  out << os.str();
}

}  // namespace growgraph
