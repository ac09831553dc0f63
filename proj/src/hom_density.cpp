#include "growgraph/hom_density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "growgraph/errors.hpp"
#include "growgraph/numeric.hpp"

namespace growgraph {

namespace {

constexpr std::size_t kSmallPatternMaxN = 10000;
constexpr std::size_t kLargePatternMaxN = 512;

using Words = std::vector<std::uint64_t>;

std::uint64_t popcount(std::span<const std::uint64_t> w) {
  std::uint64_t c = 0;
  for (auto x : w) c += static_cast<std::uint64_t>(std::popcount(x));
  return c;
}

/// Pattern vertices (0-based) in visiting order plus, for each position, the
/// earlier positions it must be adjacent to.
struct Plan {
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> back;
};

/// Breadth-first within each component so most positions have an earlier
/// neighbour to prune with.
Plan connected_plan(const PatternGraph& f) {
  const auto m = f.m();
  Plan plan;
  std::vector<bool> placed(m, false);
  for (std::size_t root = 0; root < m; ++root) {
    if (placed[root]) continue;
    std::vector<std::size_t> queue{root};
    placed[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      plan.order.push_back(queue[head]);
      for (std::size_t w = 0; w < m; ++w) {
        if (!placed[w] && f.adjacent(queue[head] + 1, w + 1)) {
          placed[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  plan.back.resize(m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < p; ++q)
      if (f.adjacent(plan.order[p] + 1, plan.order[q] + 1)) plan.back[p].push_back(q);
  return plan;
}

/// Identity order; used for increasing maps where position = label.
Plan identity_plan(const PatternGraph& f) {
  Plan plan;
  const auto m = f.m();
  for (std::size_t p = 0; p < m; ++p) plan.order.push_back(p);
  plan.back.resize(m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < p; ++q)
      if (f.adjacent(p + 1, q + 1)) plan.back[p].push_back(q);
  return plan;
}

enum class Mode { All, Increasing, NonInjective };

class Counter {
 public:
  Counter(const AdjacencyRows& g, Plan plan, Mode mode)
      : g_(g), plan_(std::move(plan)), mode_(mode), image_(plan_.order.size()),
        buffers_(plan_.order.size(), Words(g.words())) {}

  std::uint64_t run() {
    if (g_.n() == 0) return 0;
    return descend(0, false);
  }

 private:
  /// Fills buffers_[p] with the admissible images for position p.
  void candidates(std::size_t p) {
    auto& buf = buffers_[p];
    const auto words = g_.words();
    const auto& back = plan_.back[p];
    if (back.empty()) {
      std::fill(buf.begin(), buf.end(), ~std::uint64_t{0});
      const auto tail = g_.n() % 64;
      if (tail != 0) buf[words - 1] = (std::uint64_t{1} << tail) - 1;
    } else {
      auto first = g_.row(image_[back[0]]);
      std::copy(first.begin(), first.end(), buf.begin());
      for (std::size_t b = 1; b < back.size(); ++b) {
        auto r = g_.row(image_[back[b]]);
        for (std::size_t w = 0; w < words; ++w) buf[w] &= r[w];
      }
    }
    if (mode_ == Mode::Increasing && p > 0) {
      // Keep only vertices above the previous image.
      const auto lo = image_[p - 1] + 1;
      for (std::size_t w = 0; w < words && w * 64 < lo; ++w) {
        const auto start = w * 64;
        if (lo >= start + 64) {
          buf[w] = 0;
        } else {
          buf[w] &= ~std::uint64_t{0} << (lo - start);
        }
      }
    }
  }

  bool used_before(std::size_t p, std::size_t v) const {
    for (std::size_t q = 0; q < p; ++q)
      if (image_[q] == v) return true;
    return false;
  }

  std::uint64_t descend(std::size_t p, bool collided) {
    candidates(p);
    const auto& buf = buffers_[p];
    const bool last = p + 1 == plan_.order.size();
    if (last) {
      if (mode_ != Mode::NonInjective || collided) return popcount(buf);
      // Only images already used create a collision here.
      std::uint64_t c = 0;
      for (std::size_t q = 0; q < p; ++q) {
        const auto v = image_[q];
        if (((buf[v / 64] >> (v % 64)) & 1u) && !used_before(q, v)) ++c;
      }
      return c;
    }
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < buf.size(); ++w) {
      for (auto bits = buf[w]; bits != 0; bits &= bits - 1) {
        const auto v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        image_[p] = v;
        total += descend(p + 1, collided || (mode_ == Mode::NonInjective && used_before(p, v)));
      }
    }
    return total;
  }

  const AdjacencyRows& g_;
  Plan plan_;
  Mode mode_;
  std::vector<std::size_t> image_;
  std::vector<Words> buffers_;
};

}  // namespace

void check_hom_cost(const PatternGraph& f, std::size_t n) {
  const auto cap = f.m() <= 3 ? kSmallPatternMaxN : kLargePatternMaxN;
  if (n > cap) {
    throw CostGuardError("homomorphism counting for a " + std::to_string(f.m()) + "-vertex pattern is limited to n <= " +
                         std::to_string(cap) + " (got n = " + std::to_string(n) + ")");
  }
}

std::uint64_t hom_count(const PatternGraph& f, const AdjacencyRows& g) {
  check_hom_cost(f, g.n());
  return Counter(g, connected_plan(f), Mode::All).run();
}

std::uint64_t hom_count(const PatternGraph& f, const LabeledGraph& g) {
  check_hom_cost(f, g.n());
  return hom_count(f, AdjacencyRows(g));
}

double density(const PatternGraph& f, const AdjacencyRows& g) {
  const auto count = hom_count(f, g);
  return static_cast<double>(count) / std::pow(static_cast<double>(g.n()), static_cast<double>(f.m()));
}

double density(const PatternGraph& f, const LabeledGraph& g) {
  check_hom_cost(f, g.n());
  return density(f, AdjacencyRows(g));
}

std::uint64_t increasing_hom_count(const PatternGraph& f_sigma, const AdjacencyRows& g) {
  check_hom_cost(f_sigma, g.n());
  return Counter(g, identity_plan(f_sigma), Mode::Increasing).run();
}

std::uint64_t increasing_hom_count(const PatternGraph& f_sigma, const LabeledGraph& g) {
  check_hom_cost(f_sigma, g.n());
  return increasing_hom_count(f_sigma, AdjacencyRows(g));
}

std::uint64_t increasing_hom_count(const PatternGraph& f, std::span<const Vertex> sigma, const LabeledGraph& g) {
  return increasing_hom_count(f.relabeled(sigma), g);
}

std::uint64_t non_injective_hom_count(const PatternGraph& f, const AdjacencyRows& g) {
  check_hom_cost(f, g.n());
  if (f.m() < 2) return 0;
  return Counter(g, connected_plan(f), Mode::NonInjective).run();
}

std::uint64_t non_injective_hom_count(const PatternGraph& f, const LabeledGraph& g) {
  check_hom_cost(f, g.n());
  return non_injective_hom_count(f, AdjacencyRows(g));
}

double expected_increasing_homs(const PatternGraph& f, std::span<const Vertex> sigma,
                                const DegreeLawSequence& laws, std::size_t n) {
  const auto m = f.m();
  if (m > kExpectationMaxPatternVertices || n > kExpectationMaxVertices) {
    throw CostGuardError("expected_increasing_homs is limited to m <= " +
                         std::to_string(kExpectationMaxPatternVertices) + ", n <= " +
                         std::to_string(kExpectationMaxVertices));
  }
  if (n == 0) throw InvalidArgument("expected_increasing_homs needs n >= 1");
  if (laws.max_n() < n) throw InvalidArgument("degree law sequence shorter than n");
  const auto d = indegree_sequence(f, sigma);
  if (m > n) return 0.0;

  // ratio[j][k-1] = E fall(D_k, d_j) / fall(k-1, d_j), zero when d_j > k-1.
  std::vector<std::vector<double>> ratio(m, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < m; ++j) {
    const auto dj = static_cast<unsigned>(d[j]);
    for (std::size_t k = 1; k <= n; ++k) {
      if (dj > k - 1) continue;
      ratio[j][k - 1] = laws.law(k).falling_factorial_moment(dj) /
                        falling_factorial(static_cast<std::int64_t>(k - 1), dj);
    }
  }

  // Lexicographic walk over increasing maps, sharing prefix products.
  CompensatedSum total;
  std::vector<std::size_t> phi(m);
  std::vector<double> prefix(m + 1, 1.0);
  std::size_t j = 0;
  phi[0] = 1;
  while (true) {
    if (phi[j] > n - (m - 1 - j)) {
      if (j == 0) break;
      --j;
      ++phi[j];
      continue;
    }
    prefix[j + 1] = prefix[j] * ratio[j][phi[j] - 1];
    if (j + 1 == m) {
      total.add(prefix[m]);
      ++phi[j];
    } else if (prefix[j + 1] == 0.0) {
      ++phi[j];
    } else {
      phi[j + 1] = phi[j] + 1;
      ++j;
    }
  }
  return total.value();
}

double limit_density(const PatternGraph& f, const BoundaryMeasure& nu) {
  const auto m = f.m();
  std::vector<double> moments(m);
  for (std::size_t d = 0; d < m; ++d) moments[d] = nu.moment(static_cast<unsigned>(d));
  CompensatedSum total;
  for (std::size_t s = 0; s < f.permutations().size(); ++s) {
    double prod = 1.0;
    for (auto dj : f.indegrees(s)) prod *= moments[dj];
    total.add(prod);
  }
  return total.value() / static_cast<double>(f.permutations().size());
}

}  // namespace growgraph
