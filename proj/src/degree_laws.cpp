#include "growgraph/degree_laws.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "growgraph/errors.hpp"
#include "growgraph/numeric.hpp"

namespace growgraph {

namespace {

constexpr double kNormalizationTolerance = 1e-12;
constexpr std::size_t kBernoulliCountingLimit = 1000;

bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos && line[0] != '#') return true;
  }
  return false;
}

DegreeLaw read_law_block(std::istream& in, std::size_t n, std::size_t& lineno) {
  std::vector<double> pmf(n, 0.0);
  std::vector<bool> seen(n, false);
  std::string line;
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_data_line(in, line, lineno)) {
      throw InvalidArgument("degree law: expected " + std::to_string(n) + " 'k p_k' lines");
    }
    std::istringstream ls(line);
    ls.imbue(std::locale::classic());
    long long k = -1;
    double p = 0.0;
    std::string extra;
    if (!(ls >> k >> p) || (ls >> extra)) {
      throw InvalidArgument("degree law line " + std::to_string(lineno) + ": expected 'k p_k'");
    }
    if (k < 0 || static_cast<std::size_t>(k) >= n) {
      throw InvalidArgument("degree law line " + std::to_string(lineno) + ": k outside {0..n-1}");
    }
    if (seen[k]) throw InvalidArgument("degree law line " + std::to_string(lineno) + ": duplicate k");
    seen[k] = true;
    pmf[k] = p;
  }
  return DegreeLaw(n, std::move(pmf));
}

std::size_t parse_size_line(const std::string& line, std::size_t lineno) {
  std::istringstream ls(line);
  long long n = 0;
  std::string extra;
  if (!(ls >> n) || (ls >> extra) || n <= 0) {
    throw InvalidArgument("degree law line " + std::to_string(lineno) + ": expected positive 'n'");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

DegreeLaw::DegreeLaw(std::size_t n, std::vector<double> pmf) : pmf_(std::move(pmf)) {
  if (n == 0) throw InvalidArgument("degree law needs n >= 1");
  if (pmf_.size() != n) throw InvalidArgument("degree law: pmf length must equal n");
  CompensatedSum total;
  for (double p : pmf_) {
    if (!std::isfinite(p) || p < 0.0) throw InvalidArgument("degree law: negative or non-finite mass");
    total.add(p);
  }
  if (std::fabs(total.value() - 1.0) > kNormalizationTolerance) {
    throw InvalidArgument("degree law: masses sum to " + std::to_string(total.value()) + ", not 1");
  }
  cumulative_.resize(n);
  CompensatedSum running;
  for (std::size_t k = 0; k < n; ++k) {
    running.add(pmf_[k]);
    cumulative_[k] = running.value();
  }
}

std::size_t DegreeLaw::sample(RandomStream& rng) const {
  const double u = rng.uniform();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  auto k = static_cast<std::size_t>(it - cumulative_.begin());
  // Rounding can leave the last cumulative sum a hair below 1.
  if (k >= pmf_.size()) k = pmf_.size() - 1;
  while (pmf_[k] == 0.0 && k > 0) --k;
  return k;
}

double DegreeLaw::falling_factorial_moment(unsigned d) const {
  CompensatedSum s;
  for (std::size_t k = d; k < pmf_.size(); ++k) {
    if (pmf_[k] != 0.0) s.add(pmf_[k] * falling_factorial(static_cast<std::int64_t>(k), d));
  }
  return s.value();
}

DegreeLaw DegreeLaw::degenerate(std::size_t n, std::size_t k) {
  if (k >= n) throw InvalidArgument("degenerate degree law: k must be < n");
  std::vector<double> pmf(n, 0.0);
  pmf[k] = 1.0;
  return DegreeLaw(n, std::move(pmf));
}

DegreeLaw DegreeLaw::uniform(std::size_t n) {
  return DegreeLaw(n, std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DegreeLaw mixed_binomial(const BoundaryMeasure& nu, std::size_t n) {
  if (n == 0) throw InvalidArgument("mixed_binomial needs n >= 1");
  const auto trials = static_cast<unsigned>(n - 1);
  std::vector<double> pmf(n);
  for (unsigned k = 0; k <= trials; ++k) pmf[k] = nu.binomial_mixture_mass(k, trials - k);
  return DegreeLaw(n, std::move(pmf));
}

std::size_t sample_binomial(std::size_t trials, double p, RandomStream& rng) {
  if (trials <= kBernoulliCountingLimit) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < trials; ++i) hits += rng.bernoulli(p) ? 1 : 0;
    return hits;
  }
  const double u = rng.uniform();
  if (p <= 0.0) return 0;
  if (p >= 1.0) return trials;

  // Mass in a window around the mode, built from pmf ratios; the tail beyond
  // the window is below 1e-20 of the modal mass.
  const auto mode = std::min<std::size_t>(trials, static_cast<std::size_t>(std::floor((trials + 1) * p)));
  const double odds = p / (1.0 - p);
  const double modal = binomial_pmf(mode, trials, p);
  const double cutoff = modal * 1e-20;

  std::vector<double> left;
  double v = modal;
  for (std::size_t k = mode; k > 0;) {
    v *= static_cast<double>(k) / (static_cast<double>(trials - k + 1) * odds);
    --k;
    if (v < cutoff) break;
    left.push_back(v);
  }
  std::vector<double> right;
  v = modal;
  for (std::size_t k = mode; k < trials; ++k) {
    v *= static_cast<double>(trials - k) / static_cast<double>(k + 1) * odds;
    if (v < cutoff) break;
    right.push_back(v);
  }

  CompensatedSum total;
  for (double x : left) total.add(x);
  total.add(modal);
  for (double x : right) total.add(x);
  const double target = u * total.value();

  double acc = 0.0;
  const std::size_t lo = mode - left.size();
  for (std::size_t i = left.size(); i > 0; --i) {
    acc += left[i - 1];
    if (target < acc) return lo + (left.size() - i);
  }
  acc += modal;
  if (target < acc) return mode;
  for (std::size_t i = 0; i < right.size(); ++i) {
    acc += right[i];
    if (target < acc) return mode + i + 1;
  }
  return mode + right.size();
}

std::size_t sample_mixed_binomial(const BoundaryMeasure& nu, std::size_t trials, RandomStream& rng) {
  const double theta = nu.sample(rng);
  return sample_binomial(trials, theta, rng);
}

DegreeLawSequence::DegreeLawSequence(std::vector<DegreeLaw> laws) {
  if (!laws.empty() && laws.front().n() == 2) laws.insert(laws.begin(), DegreeLaw::degenerate(1, 0));
  for (std::size_t i = 0; i < laws.size(); ++i) {
    if (laws[i].n() != i + 1) {
      throw InvalidArgument("degree law sequence: step " + std::to_string(i + 1) + " law has n = " +
                            std::to_string(laws[i].n()));
    }
  }
  laws_ = std::move(laws);
}

const DegreeLaw& DegreeLawSequence::law(std::size_t k) const {
  if (k == 0 || k > laws_.size()) {
    throw InvalidArgument("no degree law for step " + std::to_string(k) + " (sequence covers 1.." +
                          std::to_string(laws_.size()) + ")");
  }
  return laws_[k - 1];
}

DegreeLawSequence DegreeLawSequence::mixed_binomial(const BoundaryMeasure& nu, std::size_t max_n) {
  std::vector<DegreeLaw> laws;
  laws.reserve(max_n);
  for (std::size_t k = 1; k <= max_n; ++k) laws.push_back(growgraph::mixed_binomial(nu, k));
  return DegreeLawSequence(std::move(laws));
}

DegreeLawSequence DegreeLawSequence::uniform(std::size_t max_n) {
  std::vector<DegreeLaw> laws;
  for (std::size_t k = 1; k <= max_n; ++k) laws.push_back(DegreeLaw::uniform(k));
  return DegreeLawSequence(std::move(laws));
}

DegreeLawSequence DegreeLawSequence::degenerate_at_zero(std::size_t max_n) {
  std::vector<DegreeLaw> laws;
  for (std::size_t k = 1; k <= max_n; ++k) laws.push_back(DegreeLaw::degenerate(k, 0));
  return DegreeLawSequence(std::move(laws));
}

DegreeLaw read_degree_law(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno)) throw InvalidArgument("degree law: empty input");
  return read_law_block(in, parse_size_line(line, lineno), lineno);
}

void write_degree_law(std::ostream& out, const DegreeLaw& law) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << law.n() << '\n';
  for (std::size_t k = 0; k < law.n(); ++k) os << k << ' ' << law.pmf(k) << '\n';
  out << os.str();
}

DegreeLawSequence read_degree_law_sequence(std::istream& in) {
  std::vector<DegreeLaw> laws;
  std::string line;
  std::size_t lineno = 0;
  while (next_data_line(in, line, lineno)) laws.push_back(read_law_block(in, parse_size_line(line, lineno), lineno));
  if (laws.empty()) throw InvalidArgument("degree law sequence: empty input");
  return DegreeLawSequence(std::move(laws));
}

DegreeLawSequence read_degree_law_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open degree law file '" + path + "'");
  return read_degree_law_sequence(in);
}

}  // namespace growgraph
