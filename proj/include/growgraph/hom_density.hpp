#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "growgraph/degree_laws.hpp"
#include "growgraph/graphs.hpp"
#include "growgraph/measures.hpp"

namespace growgraph {

/// Size limits for exact counting: n <= 10^4 for patterns with at most three
/// vertices, n <= 512 otherwise. Exceeding them throws CostGuardError.
void check_hom_cost(const PatternGraph& f, std::size_t n);

/// n(F, G): maps V(F) -> V(G), not necessarily injective, sending edges to
/// edges. Depth-first over F's vertices with row-bitset pruning; the last
/// vertex is counted by popcount.
std::uint64_t hom_count(const PatternGraph& f, const AdjacencyRows& g);
std::uint64_t hom_count(const PatternGraph& f, const LabeledGraph& g);

/// t(F, G) = n(F, G) / n^m.
double density(const PatternGraph& f, const LabeledGraph& g);
double density(const PatternGraph& f, const AdjacencyRows& g);

/// Homomorphisms F -> G with phi(i) < phi(j) whenever i < j.
std::uint64_t increasing_hom_count(const PatternGraph& f_sigma, const AdjacencyRows& g);
std::uint64_t increasing_hom_count(const PatternGraph& f_sigma, const LabeledGraph& g);
/// Same, for F relabelled by i -> sigma(i).
std::uint64_t increasing_hom_count(const PatternGraph& f, std::span<const Vertex> sigma, const LabeledGraph& g);

/// n_0(F, G): homomorphisms that are not injective, counted directly.
std::uint64_t non_injective_hom_count(const PatternGraph& f, const AdjacencyRows& g);
std::uint64_t non_injective_hom_count(const PatternGraph& f, const LabeledGraph& g);

inline constexpr std::size_t kExpectationMaxPatternVertices = 4;
inline constexpr std::size_t kExpectationMaxVertices = 128;

/// Exact E n_>=(F_sigma, G_n) for sequential growth with the given laws:
///   sum over phi(1) < ... < phi(m) <= n of
///   prod_j E fall(D_phi(j), d_j) / fall(phi(j) - 1, d_j),
/// with a factor 0 whenever d_j > phi(j) - 1.
double expected_increasing_homs(const PatternGraph& f, std::span<const Vertex> sigma,
                                 const DegreeLawSequence& laws, std::size_t n);

/// t_F = (1/m!) sum_sigma prod_j M_{d_j(sigma)}, the limit of t(F, G_n).
double limit_density(const PatternGraph& f, const BoundaryMeasure& nu);

}  // namespace growgraph
