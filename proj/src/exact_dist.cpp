#include "growgraph/exact_dist.hpp"

#include <vector>

#include "growgraph/errors.hpp"
#include "growgraph/numeric.hpp"

namespace growgraph {

namespace {

void check_oracle_size(std::size_t n) {
  if (n > kOracleMaxVertices) {
    throw CostGuardError("exact distributions are limited to n <= " + std::to_string(kOracleMaxVertices) +
                         " (got n = " + std::to_string(n) + ")");
  }
}

}  // namespace

double labeled_prob_c2(const LabeledGraph& g, const BoundaryMeasure& nu) {
  check_oracle_size(g.n());
  const auto d = g.indegrees();
  double p = 1.0;
  for (std::size_t k = 2; k <= g.n(); ++k) {
    const auto dk = static_cast<unsigned>(d[k - 1]);
    p *= nu.beta_integral(dk, static_cast<unsigned>(k - 1) - dk);
  }
  return p;
}

double labeled_prob_c1(const LabeledGraph& g, const DegreeLawSequence& laws) {
  check_oracle_size(g.n());
  const auto d = g.indegrees();
  double p = 1.0;
  for (std::size_t k = 2; k <= g.n(); ++k) {
    const auto dk = d[k - 1];
    p *= laws.law(k).pmf(dk) / choose(static_cast<unsigned>(k - 1), static_cast<unsigned>(dk));
  }
  return p;
}

double labeled_prob(const LabeledGraph& g, const GrowthModel& model) {
  if (const auto* c1 = std::get_if<Construction1Model>(&model)) return labeled_prob_c1(g, *c1->laws);
  return labeled_prob_c2(g, *std::get<Construction2Model>(model).nu);
}

ClassDistribution unlabeled_distribution(std::size_t n, const GrowthModel& model) {
  check_oracle_size(n);
  std::map<CanonicalForm, CompensatedSum> acc;
  enumerate_all_graphs(n, [&](const LabeledGraph& g) {
    const double p = labeled_prob(g, model);
    if (p != 0.0) acc[canonical_form(g)].add(p);
  });
  ClassDistribution out;
  for (const auto& [key, sum] : acc) out.emplace(key, sum.value());
  return out;
}

}  // namespace growgraph
