#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "growgraph/cli.hpp"
#include "growgraph/graphs.hpp"

using namespace growgraph;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("growgraph_test_" + name);
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

/// Equivalence output is one header line followed by the JSON document.
nlohmann::json report_of(const std::string& out) { return nlohmann::json::parse(out.substr(out.find('\n') + 1)); }

}  // namespace

TEST_CASE("grow: theta = 1 gives the complete graph, theta = 0 the empty graph") {
  const auto path = temp_path("k5.txt");
  auto r = run({"grow", "--model", "c2", "--nu", "point:1.0", "--n", "5", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(read_graph_file(path.string()) == LabeledGraph::complete(5));
  CHECK(r.out.find("edges,10\n") != std::string::npos);
  CHECK(r.out.find("indegree_5,4\n") != std::string::npos);

  r = run({"grow", "--model", "c2", "--nu", "point:0.0", "--n", "5", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(read_graph_file(path.string()).edge_count() == 0);
  std::filesystem::remove(path);
}

TEST_CASE("grow: header line records every effective parameter") {
  const auto r = run({"grow", "--model", "c1", "--nu", "twopoint:0.3", "--n", "6", "--seed", "42"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).at(0) == "# growgraph grow model=c1 nu=twopoint:0.3 laws=- n=6 seed=42");
}

TEST_CASE("grow: polya output is byte-identical for equal seeds") {
  const auto a = temp_path("polya_a.txt"), b = temp_path("polya_b.txt");
  const auto r1 = run({"grow", "--model", "polya", "--n", "4", "--seed", "7", "--out", a.string()});
  const auto r2 = run({"grow", "--model", "polya", "--n", "4", "--seed", "7", "--out", b.string()});
  REQUIRE(r1.code == 0);
  CHECK(r1.out == r2.out);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("grow: custom degree laws for sequential attachment") {
  const auto laws = temp_path("laws.txt");
  {
    std::ofstream f(laws);
    f << "2\n0 0\n1 1\n3\n0 0\n1 0\n2 1\n4\n0 0\n1 0\n2 0\n3 1\n";
  }
  const auto r = run({"grow", "--model", "c1", "--laws", laws.string(), "--n", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("edges,6\n") != std::string::npos);
  CHECK(run({"grow", "--model", "c1", "--laws", laws.string(), "--n", "5"}).code == 2);
  CHECK(run({"grow", "--model", "c2", "--laws", laws.string(), "--n", "4"}).code == 2);
  std::filesystem::remove(laws);
}

TEST_CASE("grow: invalid flags exit 2, oversize graphs exit 3") {
  CHECK(run({"grow", "--n", "5", "--model", "c9"}).code == 2);
  CHECK(run({"grow", "--n", "5", "--nu", "point:2"}).code == 2);
  CHECK(run({"grow", "--n", "0"}).code == 2);
  CHECK(run({"grow", "--model", "polya", "--nu", "point:0.5", "--n", "4"}).code == 2);
  CHECK(run({"grow"}).code == 2);
  CHECK(run({"grow", "--n", "5", "--bogus"}).code == 2);
  CHECK(run({"grow", "--n", "100000"}).code == 3);
  CHECK(run({}).code == 2);
}

TEST_CASE("converge: analytic column and CSV layout") {
  auto r = run({"converge", "--nu", "uniform", "--pattern", "k3", "--n-grid", "8,16", "--reps", "10"});
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0].rfind("# growgraph converge ", 0) == 0);
  CHECK(ls[1] == "n,mean_density,stderr,analytic,gap");
  CHECK(ls[3].find(",0.16666666666666666,") != std::string::npos);

  r = run({"converge", "--nu", "point:0.5", "--pattern", "k2", "--n-grid", "8", "--reps", "5"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).at(2).find(",0.5,") != std::string::npos);

  CHECK(run({"converge", "--pattern", "bogus"}).code == 2);
  CHECK(run({"converge", "--n-grid", "8,x"}).code == 2);
  CHECK(run({"converge", "--reps", "1"}).code == 2);
  CHECK(run({"converge", "--pattern", "c4", "--n-grid", "600", "--reps", "2"}).code == 3);
}

TEST_CASE("converge: output does not depend on the worker count") {
  const std::vector<std::string> base{"converge", "--nu", "twopoint:0.3", "--pattern", "p3", "--n-grid", "16,32",
                                      "--reps", "12", "--seed", "5"};
  auto with_threads = base;
  with_threads.insert(with_threads.end(), {"--threads", "3"});
  CHECK(run(base).out == run(with_threads).out);
}

TEST_CASE("equivalence: report structure and pass flag") {
  const auto r = run({"equivalence", "--nu", "point:0.5", "--n", "4", "--samples", "20000", "--seed", "3"});
  REQUIRE(r.code == 0);
  const auto report = report_of(r.out);
  CHECK(report["oracle"].size() == 11);
  for (const auto& row : report["oracle"]) CHECK(row["canonical"].is_string());
  CHECK(report["histograms"].contains("kernel"));
  CHECK(report["histograms"].contains("construction1"));
  CHECK(report["histograms"].contains("construction2"));
  CHECK(report["params"]["seed"] == 3);
  CHECK(report["threshold"] == 0.015);
  CHECK(report["pass"].is_boolean());

  CHECK(run({"equivalence", "--n", "7"}).code == 3);
  CHECK(run({"equivalence", "--n", "4", "--samples", "0"}).code == 2);
}

TEST_CASE("equivalence: uniform measure passes at 10^5 samples") {
  const auto r = run({"equivalence", "--nu", "uniform", "--n", "4", "--samples", "100000"});
  REQUIRE(r.code == 0);
  const auto report = report_of(r.out);
  CHECK(report["pass"] == true);
  CHECK(report["histograms"].contains("polya"));
}

TEST_CASE("degree: scaled degrees and KS summary") {
  auto r = run({"degree", "--nu", "uniform", "--n", "1000", "--reps", "10000"});
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 10003);
  CHECK(ls[1] == "rep,scaled_degree");
  REQUIRE(ls.back().rfind("ks,", 0) == 0);
  CHECK(std::stod(ls.back().substr(3)) <= 0.03);

  r = run({"degree", "--nu", "point:0.3", "--n", "1000", "--reps", "500"});
  REQUIRE(r.code == 0);
  ls = lines(r.out);
  for (std::size_t i = 2; i + 1 < ls.size(); ++i) {
    const double v = std::stod(ls[i].substr(ls[i].find(',') + 1));
    CHECK(std::fabs(v - 0.3) <= 0.05);
  }
  CHECK(run({"degree", "--reps", "0"}).code == 2);
}
