#include "growgraph/growth.hpp"

#include <algorithm>
#include <numeric>

#include "growgraph/errors.hpp"

namespace growgraph {

std::vector<Vertex> sample_uniform_subset(std::size_t k, std::size_t m, RandomStream& rng) {
  if (k > m) {
    throw InvalidArgument("sample_uniform_subset: k = " + std::to_string(k) + " exceeds m = " + std::to_string(m));
  }
  std::vector<Vertex> idx(m);
  std::iota(idx.begin(), idx.end(), Vertex{1});
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_index(m - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

LabeledGraph grow_construction1(std::size_t n, const DegreeLawSequence& laws, RandomStream& rng) {
  if (n == 0) throw InvalidArgument("grow_construction1 needs n >= 1");
  LabeledGraph g(n);
  for (std::size_t k = 2; k <= n; ++k) {
    const auto& law = laws.law(k);
    if (law.n() != k) throw InvalidArgument("degree law for step " + std::to_string(k) + " has wrong support");
    const auto d = law.sample(rng);
    for (Vertex i : sample_uniform_subset(d, k - 1, rng)) g.add_edge(i, k);
  }
  return g;
}

ParameterGraph grow_construction2(std::size_t n, const BoundaryMeasure& nu, RandomStream& rng) {
  if (n == 0) throw InvalidArgument("grow_construction2 needs n >= 1");
  ParameterGraph out{LabeledGraph(n), std::vector<double>(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    const double theta = nu.sample(rng);
    out.theta[k - 1] = theta;
    for (Vertex i = 1; i < k; ++i)
      if (rng.bernoulli(theta)) out.graph.add_edge(i, k);
  }
  return out;
}

std::vector<std::vector<bool>> grow_polya_trace(std::size_t n, RandomStream& rng) {
  if (n == 0) throw InvalidArgument("grow_polya needs n >= 1");
  std::vector<std::vector<bool>> rows(n);
  for (std::size_t k = 1; k <= n; ++k) {
    // Column c holds vertex c - 1, so -1 -> 0 and 0 -> 1.
    auto& row = rows[k - 1];
    row.assign(k + 1, false);
    row[1] = true;
    for (std::size_t i = 1; i < k; ++i) {
      // uniform_index(i + 1) = r maps to j = r - 1 in {-1, 0, ..., i-1}, i.e. column r.
      const auto r = static_cast<std::size_t>(rng.uniform_index(i + 1));
      row[i + 1] = row[r];
    }
  }
  return rows;
}

LabeledGraph grow_polya(std::size_t n, RandomStream& rng) {
  const auto rows = grow_polya_trace(n, rng);
  LabeledGraph g(n);
  for (std::size_t k = 2; k <= n; ++k)
    for (std::size_t i = 1; i < k; ++i)
      if (rows[k - 1][i + 1]) g.add_edge(i, k);
  return g;
}

}  // namespace growgraph
