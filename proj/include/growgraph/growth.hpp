#pragma once

#include <cstddef>
#include <vector>

#include "growgraph/degree_laws.hpp"
#include "growgraph/graphs.hpp"
#include "growgraph/measures.hpp"
#include "growgraph/random.hpp"

namespace growgraph {

// Stream consumption order is part of each sampler's contract: changing it
// changes every seeded output.

/// Uniformly random k-subset of {1..m}, sorted. Partial Fisher-Yates over
/// an index array: k uniform_index draws.
std::vector<Vertex> sample_uniform_subset(std::size_t k, std::size_t m, RandomStream& rng);

/// Sequential attachment. Vertex k = 2..n draws D_k from laws.law(k), then
/// links to a uniformly random D_k-subset of {1..k-1}.
LabeledGraph grow_construction1(std::size_t n, const DegreeLawSequence& laws, RandomStream& rng);

struct ParameterGraph {
  LabeledGraph graph;
  /// theta[k-1] is the parameter of vertex k.
  std::vector<double> theta;
};

/// Vertex k draws theta_k ~ nu, then for i = 1..k-1 adds {i, k} with
/// probability theta_k (one uniform each).
ParameterGraph grow_construction2(std::size_t n, const BoundaryMeasure& nu, RandomStream& rng);

/// Urn construction with phantom vertices 0 (adjacent to all) and -1
/// (adjacent to none): for each k and i = 1..k-1, pick j uniformly from
/// {-1, 0, ..., i-1} and copy the indicator of {j, k} onto {i, k}. Same law
/// as grow_construction2 with the uniform measure.
LabeledGraph grow_polya(std::size_t n, RandomStream& rng);

/// Per-vertex urn draws including the phantom columns, for debugging:
/// row k-1 holds the indicators of {-1, k}, {0, k}, {1, k}, ..., {k-1, k}.
/// Consumes the stream exactly like grow_polya.
std::vector<std::vector<bool>> grow_polya_trace(std::size_t n, RandomStream& rng);

}  // namespace growgraph
