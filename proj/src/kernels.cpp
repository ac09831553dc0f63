#include "growgraph/kernels.hpp"

#include "growgraph/errors.hpp"

namespace growgraph {

double eval_W(KernelPoint p1, KernelPoint p2) {
  if (p1.t < p2.t) return p2.s;
  if (p1.t > p2.t) return p1.s;
  return 0.0;
}

double eval_W_nu(const BoundaryMeasure& nu, KernelPoint p1, KernelPoint p2) {
  return eval_W({nu.inverse_cdf(p1.s), p1.t}, {nu.inverse_cdf(p2.s), p2.t});
}

int eval_threshold_kernel(double p, double x, double y) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return 1;
  const double q = 1.0 - p;
  // Lower boundary of the quadrilateral: segment (0,1)-(q,q), then (q,q)-(1,0).
  const double boundary = x <= q ? 1.0 - x * p / q : q * (1.0 - x) / p;
  return y >= boundary ? 1 : 0;
}

KernelPoint threshold_embedding(double p, double x) {
  const double q = 1.0 - p;
  if (x <= q) return {0.0, 1.0 - x / q};
  return {1.0, (x - q) / p};
}

double threshold_kernel_pullback(double p, double x, double y) {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  return eval_W(threshold_embedding(p, x), threshold_embedding(p, y));
}

KernelSample sample_Gnw_with_points(std::size_t n, const BoundaryMeasure& nu, RandomStream& rng) {
  if (n == 0) throw InvalidArgument("sample_Gnw needs n >= 1");
  KernelSample out{LabeledGraph(n), {}};
  out.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = nu.sample(rng);
    const double eta = rng.uniform();
    out.points.push_back({xi, eta});
  }
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      if (rng.bernoulli(eval_W(out.points[i - 1], out.points[j - 1]))) out.graph.add_edge(i, j);
  return out;
}

}  // namespace growgraph
