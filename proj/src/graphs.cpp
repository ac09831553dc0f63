#include "growgraph/graphs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "growgraph/errors.hpp"

namespace growgraph {

namespace {

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::vector<std::vector<Vertex>> all_permutations(std::size_t m) {
  std::vector<Vertex> p(m);
  std::iota(p.begin(), p.end(), Vertex{1});
  std::vector<std::vector<Vertex>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// For each permutation of {0..n-1}: the code bit (counted from the most
/// significant end) that pair (u, v) lands on after relabelling.
struct RelabelTables {
  std::size_t n = 0;
  std::vector<std::array<std::array<std::uint8_t, 8>, 8>> bit_of;
};

const RelabelTables& relabel_tables(std::size_t n) {
  static std::array<RelabelTables, kCanonicalFormMaxVertices + 1> cache;
  static std::array<std::once_flag, kCanonicalFormMaxVertices + 1> once;
  std::call_once(once[n], [n] {
    auto& t = cache[n];
    t.n = n;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    // Position of pair (a, b), a < b, in lexicographic pair order.
    std::array<std::array<std::uint8_t, 8>, 8> pos{};
    std::uint8_t idx = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) pos[a][b] = pos[b][a] = idx++;
    do {
      std::array<std::array<std::uint8_t, 8>, 8> table{};
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (a != b) table[a][b] = pos[p[a]][p[b]];
      t.bit_of.push_back(table);
    } while (std::next_permutation(p.begin(), p.end()));
  });
  return cache[n];
}

bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos && line[0] != '#') return true;
  }
  return false;
}

}  // namespace

LabeledGraph::LabeledGraph(std::size_t n) : n_(n), bits_((pair_count(n) + 63) / 64, 0) {}

std::size_t LabeledGraph::pair_index(Vertex u, Vertex v) const {
  if (u == v || u == 0 || v == 0 || u > n_ || v > n_) {
    throw InvalidArgument("vertex pair (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") invalid for a graph on " + std::to_string(n_) + " vertices");
  }
  if (u > v) std::swap(u, v);
  return (u - 1) * (2 * n_ - u) / 2 + (v - u - 1);
}

bool LabeledGraph::has_edge(Vertex u, Vertex v) const {
  const auto i = pair_index(u, v);
  return (bits_[i / 64] >> (i % 64)) & 1u;
}

void LabeledGraph::add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }

void LabeledGraph::set_edge(Vertex u, Vertex v, bool present) {
  const auto i = pair_index(u, v);
  auto& word = bits_[i / 64];
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  const bool had = word & mask;
  if (present && !had) {
    word |= mask;
    ++edges_;
  } else if (!present && had) {
    word &= ~mask;
    --edges_;
  }
}

std::size_t LabeledGraph::indegree_of(Vertex k) const {
  std::size_t d = 0;
  for (Vertex i = 1; i < k; ++i) d += has_edge(i, k) ? 1 : 0;
  return d;
}

std::size_t LabeledGraph::degree_of(Vertex k) const {
  std::size_t d = 0;
  for (Vertex i = 1; i <= n_; ++i)
    if (i != k) d += has_edge(i, k) ? 1 : 0;
  return d;
}

std::vector<std::size_t> LabeledGraph::indegrees() const {
  std::vector<std::size_t> d(n_, 0);
  for (const auto& [u, v] : edges()) ++d[v - 1];
  return d;
}

std::vector<std::pair<Vertex, Vertex>> LabeledGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  std::size_t i = 0;
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v = u + 1; v <= n_; ++v, ++i) {
      if ((bits_[i / 64] >> (i % 64)) & 1u) out.emplace_back(u, v);
    }
  }
  return out;
}

LabeledGraph LabeledGraph::restricted_to(std::size_t k) const {
  if (k > n_) throw InvalidArgument("restricted_to: k exceeds n");
  LabeledGraph h(k);
  for (const auto& [u, v] : edges())
    if (v <= k) h.add_edge(u, v);
  return h;
}

LabeledGraph LabeledGraph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw InvalidArgument("relabeled: permutation has wrong length");
  std::vector<bool> hit(n_ + 1, false);
  for (Vertex p : perm) {
    if (p == 0 || p > n_ || hit[p]) throw InvalidArgument("relabeled: not a permutation");
    hit[p] = true;
  }
  LabeledGraph h(n_);
  for (const auto& [u, v] : edges()) h.add_edge(perm[u - 1], perm[v - 1]);
  return h;
}

std::uint64_t LabeledGraph::upper_triangle_code() const {
  const auto pairs = pair_count(n_);
  if (pairs > 64) throw CostGuardError("upper_triangle_code: graph too large");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    code = (code << 1) | ((bits_[i / 64] >> (i % 64)) & 1u);
  }
  return code;
}

LabeledGraph LabeledGraph::from_upper_triangle_code(std::size_t n, std::uint64_t code) {
  const auto pairs = pair_count(n);
  if (pairs > 64) throw CostGuardError("from_upper_triangle_code: graph too large");
  LabeledGraph g(n);
  std::size_t i = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v, ++i) {
      if ((code >> (pairs - 1 - i)) & 1u) g.add_edge(u, v);
    }
  }
  return g;
}

LabeledGraph LabeledGraph::complete(std::size_t n) {
  LabeledGraph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

AdjacencyRows::AdjacencyRows(const LabeledGraph& g)
    : n_(g.n()), words_((g.n() + 63) / 64), data_(n_ * words_, 0), neighbours_(n_) {
  for (const auto& [u, v] : g.edges()) {
    const auto a = u - 1;
    const auto b = v - 1;
    data_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
    data_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
    neighbours_[a].push_back(b);
    neighbours_[b].push_back(a);
  }
  for (auto& nb : neighbours_) std::sort(nb.begin(), nb.end());
}

PatternGraph::PatternGraph(std::size_t m, std::vector<std::pair<Vertex, Vertex>> edges, std::string name)
    : m_(m), name_(std::move(name)), adj_(m * m, 0) {
  if (m == 0 || m > kMaxVertices) {
    throw InvalidArgument("pattern graphs need 1 to " + std::to_string(kMaxVertices) + " vertices");
  }
  for (auto [u, v] : edges) {
    if (u == v || u == 0 || v == 0 || u > m || v > m) throw InvalidArgument("pattern edge out of range");
    if (u > v) std::swap(u, v);
    if (adj_[(u - 1) * m + (v - 1)]) continue;
    adj_[(u - 1) * m + (v - 1)] = adj_[(v - 1) * m + (u - 1)] = 1;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  perms_ = all_permutations(m);
  indegrees_.reserve(perms_.size());
  for (const auto& sigma : perms_) indegrees_.push_back(indegree_sequence(*this, sigma));
}

PatternGraph PatternGraph::builtin(const std::string& name) {
  if (name == "k2") return PatternGraph(2, {{1, 2}}, name);
  if (name == "p3") return PatternGraph(3, {{1, 2}, {2, 3}}, name);
  if (name == "k3") return PatternGraph(3, {{1, 2}, {1, 3}, {2, 3}}, name);
  if (name == "c4") return PatternGraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, name);
  if (name == "k4") return PatternGraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, name);
  throw InvalidArgument("unknown pattern '" + name + "'");
}

const std::vector<std::string>& PatternGraph::builtin_names() {
  static const std::vector<std::string> names{"k2", "p3", "k3", "c4", "k4"};
  return names;
}

PatternGraph PatternGraph::parse(const std::string& name_or_path) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return builtin(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw InvalidArgument("unknown pattern '" + name_or_path + "' (not a built-in name or readable file)");
  const auto g = read_graph(in);
  return PatternGraph(g.n(), g.edges(), name_or_path);
}

bool PatternGraph::adjacent(Vertex u, Vertex v) const {
  if (u == 0 || v == 0 || u > m_ || v > m_) return false;
  return adj_[(u - 1) * m_ + (v - 1)];
}

LabeledGraph PatternGraph::as_graph() const {
  LabeledGraph g(m_);
  for (const auto& [u, v] : edges_) g.add_edge(u, v);
  return g;
}

PatternGraph PatternGraph::relabeled(std::span<const Vertex> sigma) const {
  if (sigma.size() != m_) throw InvalidArgument("pattern relabel: permutation has wrong length");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (const auto& [u, v] : edges_) e.emplace_back(sigma[u - 1], sigma[v - 1]);
  return PatternGraph(m_, std::move(e), name_);
}

std::vector<std::size_t> indegree_sequence(const PatternGraph& f, std::span<const Vertex> sigma) {
  const auto m = f.m();
  if (sigma.size() != m) throw InvalidArgument("indegree_sequence: permutation has wrong length");
  std::vector<bool> hit(m + 1, false);
  for (Vertex s : sigma) {
    if (s == 0 || s > m || hit[s]) throw InvalidArgument("indegree_sequence: not a permutation");
    hit[s] = true;
  }
  std::vector<std::size_t> d(m, 0);
  for (const auto& [u, v] : f.edges()) {
    const auto a = sigma[u - 1];
    const auto b = sigma[v - 1];
    ++d[std::max(a, b) - 1];
  }
  return d;
}

std::string CanonicalForm::bits() const {
  const auto pairs = pair_count(n);
  std::string s(pairs, '0');
  for (std::size_t i = 0; i < pairs; ++i)
    if ((code >> (pairs - 1 - i)) & 1u) s[i] = '1';
  return s;
}

std::string CanonicalForm::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  const auto b = bits();
  std::string out;
  for (std::size_t i = 0; i < b.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) nibble = (nibble << 1) | (i + j < b.size() && b[i + j] == '1');
    out.push_back(digits[nibble]);
  }
  return out;
}

CanonicalForm canonical_form(const LabeledGraph& g) {
  const auto n = g.n();
  if (n > kCanonicalFormMaxVertices) {
    throw CostGuardError("canonical_form supports at most " + std::to_string(kCanonicalFormMaxVertices) +
                         " vertices (got " + std::to_string(n) + ")");
  }
  const auto pairs = pair_count(n);
  const auto edges = g.edges();
  if (edges.empty() || edges.size() == pairs) return {n, g.upper_triangle_code()};

  const auto& tables = relabel_tables(n);
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& table : tables.bit_of) {
    std::uint64_t code = 0;
    for (const auto& [u, v] : edges) code |= std::uint64_t{1} << (pairs - 1 - table[u - 1][v - 1]);
    best = std::min(best, code);
  }
  return {n, best};
}

void enumerate_all_graphs(std::size_t n, const std::function<void(const LabeledGraph&)>& visit) {
  if (n == 0) throw InvalidArgument("enumerate_all_graphs needs n >= 1");
  if (n > kEnumerationMaxVertices) {
    throw CostGuardError("enumerate_all_graphs supports at most " + std::to_string(kEnumerationMaxVertices) +
                         " vertices (got " + std::to_string(n) + ")");
  }
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < total; ++code) visit(LabeledGraph::from_upper_triangle_code(n, code));
}

LabeledGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno)) throw InvalidArgument("graph file: missing 'n m' header");
  std::istringstream hs(line);
  long long n = -1, m = -1;
  std::string extra;
  if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0) {
    throw InvalidArgument("graph file line " + std::to_string(lineno) + ": expected 'n m'");
  }
  LabeledGraph g(static_cast<std::size_t>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_data_line(in, line, lineno)) throw InvalidArgument("graph file: fewer edges than declared");
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u >> v) || (ls >> extra) || u < 1 || u >= v || v > n) {
      throw InvalidArgument("graph file line " + std::to_string(lineno) + ": expected 'u v' with 1 <= u < v <= n");
    }
    if (g.has_edge(u, v)) throw InvalidArgument("graph file line " + std::to_string(lineno) + ": duplicate edge");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_data_line(in, line, lineno)) throw InvalidArgument("graph file: more edges than declared");
  return g;
}

LabeledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const LabeledGraph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  out << os.str();
}

}  // namespace growgraph
