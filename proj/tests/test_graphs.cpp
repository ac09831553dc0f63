#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

#include "growgraph/errors.hpp"
#include "growgraph/graphs.hpp"
#include "growgraph/random.hpp"
#include "oracles.hpp"

using namespace growgraph;

namespace {

LabeledGraph random_graph(std::size_t n, double p, RandomStream& rng) {
  LabeledGraph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

std::vector<Vertex> random_permutation(std::size_t n, RandomStream& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{1});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.uniform_index(i)]);
  return p;
}

}  // namespace

TEST_CASE("labeled graph basics") {
  LabeledGraph g(5);
  g.add_edge(1, 3);
  g.add_edge(4, 2);
  g.add_edge(3, 5);
  g.add_edge(3, 1);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(3, 1));
  CHECK(g.has_edge(2, 4));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.indegree_of(3) == 1);
  CHECK(g.indegree_of(5) == 1);
  CHECK(g.degree_of(3) == 2);
  CHECK(g.indegrees() == std::vector<std::size_t>{0, 0, 1, 1, 1});
  CHECK_THROWS_AS(g.add_edge(2, 2), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(0, 2), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(2, 6), InvalidArgument);
  g.set_edge(1, 3, false);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("indegree never exceeds k-1") {
  RandomStream rng(1);
  for (int rep = 0; rep < 20; ++rep) {
    const auto g = random_graph(30, 0.6, rng);
    for (Vertex k = 1; k <= 30; ++k) CHECK(g.indegree_of(k) <= k - 1);
  }
}

TEST_CASE("upper-triangle code round trip and lexicographic pair order") {
  LabeledGraph g(4);
  g.add_edge(1, 2);
  CHECK(g.upper_triangle_code() == 0b100000);
  g.add_edge(3, 4);
  CHECK(g.upper_triangle_code() == 0b100001);
  RandomStream rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto h = random_graph(8, 0.5, rng);
    CHECK(LabeledGraph::from_upper_triangle_code(8, h.upper_triangle_code()) == h);
  }
}

TEST_CASE("indegree_sequence examples") {
  const std::vector<Vertex> id2{1, 2}, id3{1, 2, 3};
  CHECK(indegree_sequence(PatternGraph::builtin("k2"), id2) == std::vector<std::size_t>{0, 1});
  const auto k3 = PatternGraph::builtin("k3");
  for (std::size_t s = 0; s < k3.permutations().size(); ++s) {
    CHECK(k3.indegrees(s) == std::vector<std::size_t>{0, 1, 2});
  }
  CHECK(indegree_sequence(PatternGraph::builtin("p3"), id3) == std::vector<std::size_t>{0, 1, 1});
  // Centre of the path first: both edges point to later vertices.
  const std::vector<Vertex> centre_first{2, 1, 3};
  CHECK(indegree_sequence(PatternGraph::builtin("p3"), centre_first) == std::vector<std::size_t>{0, 1, 1});
  const std::vector<Vertex> centre_last{1, 3, 2};
  CHECK(indegree_sequence(PatternGraph::builtin("p3"), centre_last) == std::vector<std::size_t>{0, 0, 2});
  CHECK_THROWS_AS(indegree_sequence(k3, std::vector<Vertex>{1, 1, 2}), InvalidArgument);
}

TEST_CASE("indegree sums equal the edge count for every permutation") {
  std::vector<PatternGraph> patterns;
  for (const auto& name : PatternGraph::builtin_names()) patterns.push_back(PatternGraph::builtin(name));
  patterns.emplace_back(6, std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {2, 5}});
  for (const auto& f : patterns) {
    for (std::size_t s = 0; s < f.permutations().size(); ++s) {
      const auto& d = f.indegrees(s);
      CHECK(std::accumulate(d.begin(), d.end(), std::size_t{0}) == f.edge_count());
      for (std::size_t j = 0; j < d.size(); ++j) CHECK(d[j] <= j);
    }
  }
}

TEST_CASE("canonical_form examples") {
  CHECK(canonical_form(LabeledGraph(4)).bits() == "000000");
  CHECK(canonical_form(LabeledGraph::complete(4)).bits() == "111111");

  LabeledGraph path(4), star(4);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  path.add_edge(3, 4);
  star.add_edge(1, 2);
  star.add_edge(1, 3);
  star.add_edge(1, 4);
  CHECK(canonical_form(path) != canonical_form(star));
  std::vector<Vertex> p{1, 2, 3, 4};
  do {
    CHECK(canonical_form(path.relabeled(p)) == canonical_form(path));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("canonical_form matches brute force and is relabelling invariant") {
  RandomStream rng(77);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng.uniform_index(5);
    const auto g = random_graph(n, rng.uniform(), rng);
    const auto c = canonical_form(g);
    CHECK(c.code == oracle::brute_canonical_code(g));
    CHECK(canonical_form(g.relabeled(random_permutation(n, rng))) == c);
  }
  const auto big = random_graph(8, 0.5, rng);
  CHECK(canonical_form(big.relabeled(random_permutation(8, rng))) == canonical_form(big));
  CHECK_THROWS_AS(canonical_form(LabeledGraph(9)), CostGuardError);
}

TEST_CASE("canonical hex encoding") {
  CHECK(canonical_form(LabeledGraph::complete(4)).hex() == "fc");
  CHECK(canonical_form(LabeledGraph(1)).hex() == "");
  CHECK(canonical_form(LabeledGraph::complete(2)).hex() == "8");
}

TEST_CASE("enumerate_all_graphs counts") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> codes;
    std::size_t calls = 0;
    enumerate_all_graphs(n, [&](const LabeledGraph& g) {
      ++calls;
      codes.insert(g.upper_triangle_code());
    });
    const std::size_t expected = std::size_t{1} << (n * (n - 1) / 2);
    CHECK(calls == expected);
    CHECK(codes.size() == expected);
  }
  std::set<CanonicalForm> classes;
  enumerate_all_graphs(4, [&](const LabeledGraph& g) { classes.insert(canonical_form(g)); });
  CHECK(classes.size() == 11);
  CHECK_THROWS_AS(enumerate_all_graphs(7, [](const LabeledGraph&) {}), CostGuardError);
}

TEST_CASE("unlabeled class counts for n <= 6") {
  // Numbers of graphs on n unlabeled vertices.
  const std::size_t known[] = {0, 1, 2, 4, 11, 34, 156};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<CanonicalForm> classes;
    enumerate_all_graphs(n, [&](const LabeledGraph& g) { classes.insert(canonical_form(g)); });
    CHECK(classes.size() == known[n]);
  }
}

TEST_CASE("graph file format") {
  std::istringstream in("4 2\n1 2\n# comment\n3 4\n");
  const auto g = read_graph(in);
  CHECK(g.n() == 4);
  CHECK(g.has_edge(3, 4));
  std::ostringstream out;
  write_graph(out, g);
  CHECK(out.str() == "4 2\n1 2\n3 4\n");

  std::istringstream reversed("3 1\n2 1\n");
  CHECK_THROWS_AS(read_graph(reversed), InvalidArgument);
  std::istringstream too_few("3 2\n1 2\n");
  CHECK_THROWS_AS(read_graph(too_few), InvalidArgument);
  std::istringstream too_many("3 1\n1 2\n2 3\n");
  CHECK_THROWS_AS(read_graph(too_many), InvalidArgument);
  std::istringstream duplicate("3 2\n1 2\n1 2\n");
  CHECK_THROWS_AS(read_graph(duplicate), InvalidArgument);
}

TEST_CASE("pattern graphs") {
  CHECK(PatternGraph::builtin("c4").edge_count() == 4);
  CHECK(PatternGraph::builtin("k4").permutations().size() == 24);
  CHECK_THROWS_AS(PatternGraph::builtin("bogus"), InvalidArgument);
  CHECK_THROWS_AS(PatternGraph::parse("bogus"), InvalidArgument);
  CHECK_THROWS_AS(PatternGraph(7, {}), InvalidArgument);
}
