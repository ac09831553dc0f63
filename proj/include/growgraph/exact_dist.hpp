#pragma once

#include <cstddef>
#include <map>
#include <variant>

#include "growgraph/degree_laws.hpp"
#include "growgraph/graphs.hpp"
#include "growgraph/measures.hpp"

namespace growgraph {

inline constexpr std::size_t kOracleMaxVertices = 6;

/// Distribution over isomorphism classes.
using ClassDistribution = std::map<CanonicalForm, double>;

/// P(G_n = g) for the parameter model:
///   prod_{k=2..n} integral theta^{d_k} (1-theta)^{k-1-d_k} dnu,  d_k = indegree of k.
double labeled_prob_c2(const LabeledGraph& g, const BoundaryMeasure& nu);

/// P(G_n = g) for sequential attachment: prod_{k=2..n} pmf_k(d_k) / C(k-1, d_k).
double labeled_prob_c1(const LabeledGraph& g, const DegreeLawSequence& laws);

struct Construction1Model {
  const DegreeLawSequence* laws;
};
struct Construction2Model {
  const BoundaryMeasure* nu;
};
using GrowthModel = std::variant<Construction1Model, Construction2Model>;

double labeled_prob(const LabeledGraph& g, const GrowthModel& model);

/// Sums labelled probabilities over all 2^C(n,2) graphs by isomorphism class.
ClassDistribution unlabeled_distribution(std::size_t n, const GrowthModel& model);

inline ClassDistribution unlabeled_distribution(std::size_t n, const BoundaryMeasure& nu) {
  return unlabeled_distribution(n, Construction2Model{&nu});
}

}  // namespace growgraph
