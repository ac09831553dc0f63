#include "growgraph/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "growgraph/degree_laws.hpp"
#include "growgraph/errors.hpp"
#include "growgraph/exact_dist.hpp"
#include "growgraph/graphs.hpp"
#include "growgraph/growth.hpp"
#include "growgraph/hom_density.hpp"
#include "growgraph/kernels.hpp"
#include "growgraph/measures.hpp"
#include "growgraph/parallel.hpp"
#include "growgraph/random.hpp"
#include "growgraph/stats.hpp"

namespace growgraph::cli {

namespace {

constexpr double kEquivalenceThreshold = 0.015;

// Stream tags for the equivalence command's samplers.
constexpr std::uint64_t kTagKernel = 1;
constexpr std::uint64_t kTagConstruction1 = 2;
constexpr std::uint64_t kTagConstruction2 = 3;
constexpr std::uint64_t kTagPolya = 4;

std::ostringstream number_stream() {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  return os;
}

/// "# growgraph <command> key=value ..." recording every effective parameter.
class Header {
 public:
  explicit Header(const std::string& command) : os_(number_stream()) { os_ << "# growgraph " << command; }
  template <class T>
  Header& add(const std::string& key, const T& value) {
    os_ << ' ' << key << '=' << value;
    json_[key] = value;
    return *this;
  }
  std::string line() const { return os_.str() + '\n'; }
  const nlohmann::ordered_json& json() const { return json_; }

 private:
  std::ostringstream os_;
  nlohmann::ordered_json json_;
};

enum class Model { C1, C2, Polya };

Model parse_model(const std::string& s) {
  if (s == "c1") return Model::C1;
  if (s == "c2") return Model::C2;
  if (s == "polya") return Model::Polya;
  throw InvalidArgument("unknown model '" + s + "' (expected c1, c2 or polya)");
}

std::vector<std::size_t> parse_grid(const std::string& s) {
  std::vector<std::size_t> grid;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || v < 1) throw InvalidArgument("bad --n-grid entry '" + item + "'");
    grid.push_back(static_cast<std::size_t>(v));
  }
  if (grid.empty()) throw InvalidArgument("--n-grid is empty");
  return grid;
}

void check_grow_size(std::size_t n) {
  if (n > kMaxGrowVertices) {
    throw CostGuardError("graphs are limited to n <= " + std::to_string(kMaxGrowVertices) + " (got " +
                         std::to_string(n) + ")");
  }
}

/// Samples one graph of the requested model; `laws` is used only for c1.
LabeledGraph grow(Model model, std::size_t n, const BoundaryMeasure& nu, const DegreeLawSequence* laws,
                  RandomStream& rng) {
  switch (model) {
    case Model::C1: return grow_construction1(n, *laws, rng);
    case Model::C2: return grow_construction2(n, nu, rng).graph;
    case Model::Polya: return grow_polya(n, rng);
  }
  return LabeledGraph(n);
}

struct CommonOptions {
  std::string nu = "uniform";
  std::uint64_t seed = 1;
  std::size_t threads = 1;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--nu", o.nu, "Parameter measure: point:P | twopoint:P | uniform | table:FILE");
  cmd->add_option("--seed", o.seed, "64-bit seed");
  cmd->add_option("--threads", o.threads, "Worker threads (output does not depend on this)")
      ->check(CLI::PositiveNumber);
}

/// Measure for a model; polya fixes the uniform measure.
BoundaryMeasure resolve_measure(Model model, const std::string& nu_spec, bool nu_given) {
  if (model == Model::Polya) {
    if (nu_given && nu_spec != "uniform") throw InvalidArgument("the polya model implies --nu uniform");
    return BoundaryMeasure::uniform();
  }
  return BoundaryMeasure::parse(nu_spec);
}

nlohmann::ordered_json distribution_json(const ClassDistribution& dist) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [k, p] : dist) arr.push_back({{"canonical", k.hex()}, {"probability", p}});
  return arr;
}

int cmd_grow(const std::string& model_s, const CommonOptions& o, bool nu_given, const std::string& laws_path,
             std::size_t n, const std::string& out_path, std::ostream& out) {
  const auto model = parse_model(model_s);
  if (n == 0) throw InvalidArgument("--n must be positive");
  check_grow_size(n);
  const auto nu = resolve_measure(model, o.nu, nu_given);
  if (!laws_path.empty() && model != Model::C1) throw InvalidArgument("--laws applies to --model c1 only");
  std::optional<DegreeLawSequence> laws;
  if (model == Model::C1) {
    laws = laws_path.empty() ? DegreeLawSequence::mixed_binomial(nu, n) : read_degree_law_sequence_file(laws_path);
  }

  auto rng = RandomStream::for_replicate(o.seed, 0);
  const auto g = grow(model, n, nu, laws ? &*laws : nullptr, rng);

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write '" + out_path + "'");
    write_graph(f, g);
  }

  Header h("grow");
  h.add("model", model_s).add("nu", model == Model::C1 && !laws_path.empty() ? std::string("-") : nu.describe());
  h.add("laws", laws_path.empty() ? std::string("-") : laws_path).add("n", n).add("seed", o.seed);
  auto os = number_stream();
  os << h.line() << "key,value\n";
  os << "n," << g.n() << "\nedges," << g.edge_count() << '\n';
  const auto d = g.indegrees();
  for (std::size_t k = 0; k < d.size(); ++k) os << "indegree_" << k + 1 << ',' << d[k] << '\n';
  out << os.str();
  return kExitOk;
}

int cmd_converge(const std::string& model_s, const CommonOptions& o, bool nu_given, const std::string& pattern_s,
                 const std::string& grid_s, std::size_t reps, std::ostream& out) {
  const auto model = parse_model(model_s);
  const auto nu = resolve_measure(model, o.nu, nu_given);
  const auto pattern = PatternGraph::parse(pattern_s);
  const auto grid = parse_grid(grid_s);
  if (reps < 2) throw InvalidArgument("--reps must be at least 2");
  std::size_t max_n = 0;
  for (auto n : grid) {
    check_grow_size(n);
    check_hom_cost(pattern, n);
    max_n = std::max(max_n, n);
  }
  std::optional<DegreeLawSequence> laws;
  if (model == Model::C1) laws = DegreeLawSequence::mixed_binomial(nu, max_n);
  const double analytic = limit_density(pattern, nu);

  Header h("converge");
  h.add("model", model_s).add("nu", nu.describe()).add("pattern", pattern_s).add("n_grid", grid_s);
  h.add("reps", reps).add("seed", o.seed);
  auto os = number_stream();
  os << h.line() << "n,mean_density,stderr,analytic,gap\n";
  for (auto n : grid) {
    std::vector<double> values(reps);
    const auto base = derive_seed(o.seed, n);
    parallel_for(reps, o.threads, [&](std::size_t r) {
      auto rng = RandomStream::for_replicate(base, r);
      values[r] = density(pattern, grow(model, n, nu, laws ? &*laws : nullptr, rng));
    });
    const auto est = mc_mean_ci(values);
    os << n << ',' << est.mean << ',' << est.std_error << ',' << analytic << ','
       << std::fabs(est.mean - analytic) << '\n';
  }
  out << os.str();
  return kExitOk;
}

int cmd_equivalence(const CommonOptions& o, std::size_t n, std::size_t samples, const std::string& out_path,
                    std::ostream& out) {
  if (n == 0) throw InvalidArgument("--n must be positive");
  if (n > kOracleMaxVertices) {
    throw CostGuardError("equivalence needs the exact oracle, limited to n <= " + std::to_string(kOracleMaxVertices));
  }
  if (samples == 0) throw InvalidArgument("--samples must be positive");
  const auto nu = BoundaryMeasure::parse(o.nu);
  const auto laws = DegreeLawSequence::mixed_binomial(nu, n);
  const bool uniform = std::holds_alternative<BoundaryMeasure::Uniform>(nu.family());

  const auto oracle = unlabeled_distribution(n, nu);

  auto sample_histogram = [&](std::uint64_t tag, auto&& draw) {
    const auto base = derive_seed(o.seed, tag);
    const std::size_t chunks = std::min<std::size_t>(samples, 64);
    std::vector<ClassHistogram> partial(chunks);
    parallel_for(chunks, o.threads, [&](std::size_t c) {
      const std::size_t begin = samples * c / chunks;
      const std::size_t end = samples * (c + 1) / chunks;
      for (std::size_t i = begin; i < end; ++i) {
        auto rng = RandomStream::for_replicate(base, i);
        partial[c].add(draw(rng));
      }
    });
    ClassHistogram total;
    for (const auto& p : partial) total.merge(p);
    return total.distribution();
  };

  std::map<std::string, ClassDistribution> hist;
  hist["kernel"] = sample_histogram(kTagKernel, [&](RandomStream& r) { return sample_Gnw(n, nu, r); });
  hist["construction1"] =
      sample_histogram(kTagConstruction1, [&](RandomStream& r) { return grow_construction1(n, laws, r); });
  hist["construction2"] =
      sample_histogram(kTagConstruction2, [&](RandomStream& r) { return grow_construction2(n, nu, r).graph; });
  if (uniform) hist["polya"] = sample_histogram(kTagPolya, [&](RandomStream& r) { return grow_polya(n, r); });

  Header h("equivalence");
  h.add("nu", nu.describe()).add("n", n).add("samples", samples).add("seed", o.seed);

  nlohmann::ordered_json report;
  report["params"] = h.json();
  report["threshold"] = kEquivalenceThreshold;
  report["oracle"] = distribution_json(oracle);
  report["histograms"] = nlohmann::ordered_json::object();
  for (const auto& [name, d] : hist) report["histograms"][name] = distribution_json(d);
  bool pass = true;
  auto tv = nlohmann::ordered_json::object();
  for (const auto& [name, d] : hist) {
    const double v = tv_distance(d, oracle);
    tv[name + "_vs_oracle"] = v;
    pass = pass && v <= kEquivalenceThreshold;
  }
  tv["kernel_vs_construction2"] = tv_distance(hist["kernel"], hist["construction2"]);
  tv["construction1_vs_construction2"] = tv_distance(hist["construction1"], hist["construction2"]);
  report["tv"] = tv;
  report["pass"] = pass;

  const auto doc = report.dump(2) + '\n';
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write '" + out_path + "'");
    f << doc;
  }
  out << h.line() << doc;
  return kExitOk;
}

int cmd_degree(const CommonOptions& o, std::size_t n, std::size_t reps, std::ostream& out) {
  if (n == 0) throw InvalidArgument("--n must be positive");
  if (reps == 0) throw InvalidArgument("--reps must be positive");
  const auto nu = BoundaryMeasure::parse(o.nu);
  std::vector<double> scaled(reps);
  parallel_for(reps, o.threads, [&](std::size_t r) {
    auto rng = RandomStream::for_replicate(o.seed, r);
    scaled[r] = static_cast<double>(sample_mixed_binomial(nu, n - 1, rng)) / static_cast<double>(n);
  });

  Header h("degree");
  h.add("nu", nu.describe()).add("n", n).add("reps", reps).add("seed", o.seed);
  auto os = number_stream();
  os << h.line() << "rep,scaled_degree\n";
  for (std::size_t r = 0; r < reps; ++r) os << r << ',' << scaled[r] << '\n';
  os << "ks," << ks_distance(scaled, nu) << '\n';
  out << os.str();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growing random graphs, their kernel limits, and exact checks"};
  app.require_subcommand(1);

  CommonOptions grow_o, conv_o, eq_o, deg_o;

  auto* grow_cmd = app.add_subcommand("grow", "Grow one graph and write it as an edge list");
  std::string grow_model = "c2", laws_path, grow_out;
  std::size_t grow_n = 0;
  grow_cmd->add_option("--model", grow_model, "c1 | c2 | polya");
  add_common(grow_cmd, grow_o);
  grow_cmd->add_option("--laws", laws_path, "Per-step degree laws for c1 (concatenated law blocks)");
  grow_cmd->add_option("--n", grow_n, "Number of vertices")->required();
  grow_cmd->add_option("--out", grow_out, "Edge-list output path");

  auto* conv_cmd = app.add_subcommand("converge", "Mean homomorphism density along a grid of n");
  std::string conv_model = "c2", pattern = "k2", grid = "32,64,128,256";
  std::size_t conv_reps = 200;
  conv_cmd->add_option("--model", conv_model, "c1 | c2 | polya");
  add_common(conv_cmd, conv_o);
  conv_cmd->add_option("--pattern", pattern, "k2 | p3 | k3 | c4 | k4 | FILE");
  conv_cmd->add_option("--n-grid", grid, "Comma-separated graph sizes");
  conv_cmd->add_option("--reps", conv_reps, "Replicates per grid point");

  auto* eq_cmd = app.add_subcommand("equivalence", "Compare sampled class histograms with the exact law");
  std::size_t eq_n = 4, eq_samples = 100000;
  std::string eq_out;
  add_common(eq_cmd, eq_o);
  eq_cmd->add_option("--n", eq_n, "Number of vertices (at most 6)");
  eq_cmd->add_option("--samples", eq_samples, "Samples per model");
  eq_cmd->add_option("--out", eq_out, "Also write the JSON report here");

  auto* deg_cmd = app.add_subcommand("degree", "Scaled indegree D_n/n of the last vertex");
  std::size_t deg_n = 1000, deg_reps = 10000;
  add_common(deg_cmd, deg_o);
  deg_cmd->add_option("--n", deg_n, "Number of vertices");
  deg_cmd->add_option("--reps", deg_reps, "Replicates");

  std::vector<const char*> argv{"growgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (grow_cmd->parsed()) {
      return cmd_grow(grow_model, grow_o, grow_cmd->count("--nu") > 0, laws_path, grow_n, grow_out, out);
    }
    if (conv_cmd->parsed()) {
      return cmd_converge(conv_model, conv_o, conv_cmd->count("--nu") > 0, pattern, grid, conv_reps, out);
    }
    if (eq_cmd->parsed()) return cmd_equivalence(eq_o, eq_n, eq_samples, eq_out, out);
    return cmd_degree(deg_o, deg_n, deg_reps, out);
  } catch (const CostGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCostGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace growgraph::cli
