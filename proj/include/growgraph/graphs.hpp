#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace growgraph {

/// Vertex labels are 1-based throughout, matching the growth order.
using Vertex = std::size_t;

/// Simple undirected graph on {1..n}. Adjacency is a packed upper-triangle
/// bit set; pair (i, j), i < j, sits at bit (i-1)(2n-i)/2 + (j-i-1), which
/// lists pairs in lexicographic order.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  /// No-op when the edge already exists. Self-loops are rejected.
  void add_edge(Vertex u, Vertex v);
  void set_edge(Vertex u, Vertex v, bool present);

  /// Number of neighbours with a smaller label.
  std::size_t indegree_of(Vertex k) const;
  std::size_t degree_of(Vertex k) const;
  std::vector<std::size_t> indegrees() const;

  /// Edges (u, v), u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Subgraph induced on {1..k}.
  LabeledGraph restricted_to(std::size_t k) const;

  /// relabel(g, perm): vertex v of this graph becomes perm[v-1] (1-based).
  LabeledGraph relabeled(std::span<const Vertex> perm) const;

  /// Upper-triangle adjacency as an integer, first pair in the most
  /// significant position. Only for n <= 11 (55 bits).
  std::uint64_t upper_triangle_code() const;
  static LabeledGraph from_upper_triangle_code(std::size_t n, std::uint64_t code);

  static LabeledGraph complete(std::size_t n);

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::size_t pair_index(Vertex u, Vertex v) const;

  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Row-bitset adjacency matrix for counting kernels.
class AdjacencyRows {
 public:
  explicit AdjacencyRows(const LabeledGraph& g);

  std::size_t n() const { return n_; }
  std::size_t words() const { return words_; }
  /// Row of 0-based vertex v; bit w set iff {v, w} is an edge.
  std::span<const std::uint64_t> row(std::size_t v) const { return {data_.data() + v * words_, words_}; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return neighbours_[v]; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
  std::vector<std::vector<std::size_t>> neighbours_;
};

/// A small pattern graph F (m <= 6) with, for every permutation sigma of
/// {1..m}, the indegree sequence of F relabelled by i -> sigma(i).
class PatternGraph {
 public:
  static constexpr std::size_t kMaxVertices = 6;

  PatternGraph(std::size_t m, std::vector<std::pair<Vertex, Vertex>> edges, std::string name = {});

  /// Built-ins: "k2", "p3", "k3", "c4", "k4".
  static PatternGraph builtin(const std::string& name);
  static const std::vector<std::string>& builtin_names();
  /// A built-in name, or otherwise a path to an edge-list file.
  static PatternGraph parse(const std::string& name_or_path);

  std::size_t m() const { return m_; }
  const std::string& name() const { return name_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool adjacent(Vertex u, Vertex v) const;
  LabeledGraph as_graph() const;

  /// All m! permutations (1-based images), lexicographic order.
  const std::vector<std::vector<Vertex>>& permutations() const { return perms_; }
  /// Indegree sequence for permutations()[index].
  const std::vector<std::size_t>& indegrees(std::size_t index) const { return indegrees_[index]; }

  /// F relabelled by i -> sigma(i).
  PatternGraph relabeled(std::span<const Vertex> sigma) const;

 private:
  std::size_t m_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::string name_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> perms_;
  std::vector<std::vector<std::size_t>> indegrees_;
};

/// (d_1, ..., d_m) with d_j = |{i < j : {i, j} in E(F_sigma)}|.
std::vector<std::size_t> indegree_sequence(const PatternGraph& f, std::span<const Vertex> sigma);

/// Canonical form of a graph with at most 8 vertices: the lexicographically
/// smallest upper-triangle bit string over all relabellings.
struct CanonicalForm {
  std::size_t n = 0;
  std::uint64_t code = 0;

  std::string bits() const;
  /// Hex of the bit string, left-aligned in whole nibbles ("" when n < 2).
  std::string hex() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr std::size_t kCanonicalFormMaxVertices = 8;

CanonicalForm canonical_form(const LabeledGraph& g);

inline constexpr std::size_t kEnumerationMaxVertices = 6;

/// Calls visit once for each of the 2^C(n,2) labelled graphs on {1..n}, in
/// order of upper_triangle_code.
void enumerate_all_graphs(std::size_t n, const std::function<void(const LabeledGraph&)>& visit);

/// Edge-list format: header "n m", then m lines "u v" with 1 <= u < v <= n.
LabeledGraph read_graph(std::istream& in);
LabeledGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const LabeledGraph& g);

}  // namespace growgraph
