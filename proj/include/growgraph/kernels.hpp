#pragma once

#include <cstddef>
#include <vector>

#include "growgraph/graphs.hpp"
#include "growgraph/measures.hpp"
#include "growgraph/random.hpp"

namespace growgraph {

/// Point of the kernel's ground space: s is the parameter coordinate (law
/// nu, or Lebesgue before the pullback), t the ordering coordinate.
struct KernelPoint {
  double s;
  double t;
};

/// W((s1,t1),(s2,t2)) = s of the point with the larger t; 0 on ties.
double eval_W(KernelPoint p1, KernelPoint p2);

/// Pullback of W along (s, t) -> (psi(s), t), psi the quantile function of nu.
double eval_W_nu(const BoundaryMeasure& nu, KernelPoint p1, KernelPoint p2);

/// Indicator of the closed quadrilateral with corners (0,1), (1-p,1-p),
/// (1,0), (1,1): the monotone threshold-graph kernel for the two-point
/// measure. p = 0 and p = 1 give the constant 0 and 1 kernels.
int eval_threshold_kernel(double p, double x, double y);

/// The measure-preserving map [0,1] -> {0,1} x [0,1] relating the two
/// representations of the two-point limit.
KernelPoint threshold_embedding(double p, double x);

/// W(phi(x), phi(y)). Agrees with eval_threshold_kernel off the boundary of
/// the quadrilateral (a null set).
double threshold_kernel_pullback(double p, double x, double y);

struct KernelSample {
  LabeledGraph graph;
  std::vector<KernelPoint> points;
};

/// W-random graph G(n, W) on the space ([0,1]^2, nu x lambda). Draws
/// (xi_i, eta_i) for i = 1..n (two uniforms each), then one uniform per pair
/// in lexicographic order.
KernelSample sample_Gnw_with_points(std::size_t n, const BoundaryMeasure& nu, RandomStream& rng);

inline LabeledGraph sample_Gnw(std::size_t n, const BoundaryMeasure& nu, RandomStream& rng) {
  return sample_Gnw_with_points(n, nu, rng).graph;
}

}  // namespace growgraph
