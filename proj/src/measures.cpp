#include "growgraph/measures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "growgraph/errors.hpp"
#include "growgraph/numeric.hpp"

namespace growgraph {

namespace {

constexpr std::size_t kMinQuadraturePanels = 1u << 12;

double checked_probability(double p, const char* what) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw InvalidArgument(std::string(what) + ": parameter must lie in [0,1]");
  }
  return p;
}

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

BoundaryMeasure BoundaryMeasure::point_mass(double p) {
  return BoundaryMeasure(PointMass{checked_probability(p, "point mass")});
}

BoundaryMeasure BoundaryMeasure::two_point(double p) {
  return BoundaryMeasure(TwoPoint{checked_probability(p, "two-point measure")});
}

BoundaryMeasure BoundaryMeasure::uniform() { return BoundaryMeasure(Uniform{}); }

BoundaryMeasure BoundaryMeasure::inverse_cdf_table(std::vector<QuantileKnot> knots) {
  if (knots.size() < 2) throw InvalidArgument("quantile table needs at least two knots");
  if (knots.front().u != 0.0 || knots.back().u != 1.0) {
    throw InvalidArgument("quantile table must start at u = 0 and end at u = 1");
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const auto& k = knots[i];
    if (!std::isfinite(k.u) || !std::isfinite(k.value) || k.value < 0.0 || k.value > 1.0) {
      throw InvalidArgument("quantile table entries must lie in [0,1]");
    }
    if (i > 0 && (k.u < knots[i - 1].u || k.value < knots[i - 1].value)) {
      throw InvalidArgument("quantile table is not monotone at line " + std::to_string(i + 1));
    }
  }
  return BoundaryMeasure(InverseCdfTable{std::move(knots)});
}

BoundaryMeasure BoundaryMeasure::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  auto number = [&]() {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (arg.empty() || used != arg.size()) throw InvalidArgument("bad measure parameter in '" + spec + "'");
    return v;
  };
  if (kind == "uniform" && colon == std::string::npos) return uniform();
  if (kind == "point") return point_mass(number());
  if (kind == "twopoint") return two_point(number());
  if (kind == "table" && !arg.empty()) return inverse_cdf_table(read_quantile_table_file(arg));
  throw InvalidArgument("unknown measure '" + spec + "' (expected point:P, twopoint:P, uniform or table:FILE)");
}

std::string BoundaryMeasure::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const PointMass& m) { os << "point:" << format_double(m.p); },
                 [&](const TwoPoint& m) { os << "twopoint:" << format_double(m.p); },
                 [&](const Uniform&) { os << "uniform"; },
                 [&](const InverseCdfTable& t) { os << "table[" << t.knots.size() << " knots]"; },
             },
             family_);
  return os.str();
}

double BoundaryMeasure::sample(RandomStream& rng) const { return inverse_cdf(rng.uniform()); }

template <class F>
double BoundaryMeasure::integrate_table(F&& integrand) const {
  const auto& knots = std::get<InverseCdfTable>(family_).knots;
  CompensatedSum total;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double u0 = knots[i].u;
    const double u1 = knots[i + 1].u;
    if (u1 <= u0) continue;
    const double v0 = knots[i].value;
    const double v1 = knots[i + 1].value;
    const auto panels = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(static_cast<double>(kMinQuadraturePanels) * (u1 - u0))));
    const double h = (u1 - u0) / static_cast<double>(panels);
    for (std::size_t j = 0; j < panels; ++j) {
      const double frac = (static_cast<double>(j) + 0.5) / static_cast<double>(panels);
      total.add(h * integrand(v0 + frac * (v1 - v0)));
    }
  }
  return total.value();
}

double BoundaryMeasure::moment(unsigned d) const {
  if (d == 0) return 1.0;
  return std::visit(overloaded{
                        [&](const PointMass& m) { return std::pow(m.p, d); },
                        [&](const TwoPoint& m) { return m.p; },
                        [&](const Uniform&) { return 1.0 / (d + 1.0); },
                        [&](const InverseCdfTable&) {
                          return integrate_table([d](double x) { return std::pow(x, d); });
                        },
                    },
                    family_);
}

double BoundaryMeasure::beta_integral(unsigned a, unsigned b) const {
  return std::visit(overloaded{
                        [&](const PointMass& m) { return std::pow(m.p, a) * std::pow(1.0 - m.p, b); },
                        [&](const TwoPoint& m) {
                          return (b == 0 ? m.p : 0.0) + (a == 0 ? 1.0 - m.p : 0.0);
                        },
                        [&](const Uniform&) {
                          // a! b! / (a+b+1)!
                          return 1.0 / ((a + b + 1.0) * choose(a + b, a));
                        },
                        [&](const InverseCdfTable&) {
                          return integrate_table(
                              [a, b](double x) { return std::pow(x, a) * std::pow(1.0 - x, b); });
                        },
                    },
                    family_);
}

double BoundaryMeasure::binomial_mixture_mass(unsigned a, unsigned b) const {
  const unsigned trials = a + b;
  return std::visit(overloaded{
                        [&](const PointMass& m) { return binomial_pmf(a, trials, m.p); },
                        [&](const TwoPoint& m) {
                          return (b == 0 ? m.p : 0.0) + (a == 0 ? 1.0 - m.p : 0.0);
                        },
                        [&](const Uniform&) { return 1.0 / (trials + 1.0); },
                        [&](const InverseCdfTable&) {
                          return integrate_table([a, trials](double x) { return binomial_pmf(a, trials, x); });
                        },
                    },
                    family_);
}

double BoundaryMeasure::inverse_cdf(double u) const {
  u = std::clamp(u, 0.0, 1.0);
  return std::visit(overloaded{
                        [&](const PointMass& m) { return m.p; },
                        [&](const TwoPoint& m) { return (m.p > 0.0 && u >= 1.0 - m.p) ? 1.0 : 0.0; },
                        [&](const Uniform&) { return u; },
                        [&](const InverseCdfTable& t) {
                          const auto& k = t.knots;
                          // First knot strictly to the right of u; the knot before it is the
                          // last one with knot.u <= u, so duplicate u values resolve rightwards.
                          auto hi = std::upper_bound(k.begin(), k.end(), u,
                                                     [](double x, const QuantileKnot& q) { return x < q.u; });
                          if (hi == k.end()) return k.back().value;
                          auto lo = std::prev(hi);
                          const double w = (u - lo->u) / (hi->u - lo->u);
                          return lo->value + w * (hi->value - lo->value);
                        },
                    },
                    family_);
}

double BoundaryMeasure::cdf(double x) const {
  if (x < 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return std::visit(overloaded{
                        [&](const PointMass& m) { return x >= m.p ? 1.0 : 0.0; },
                        [&](const TwoPoint& m) { return 1.0 - m.p; },
                        [&](const Uniform&) { return x; },
                        [&](const InverseCdfTable& t) {
                          // Lebesgue measure of {u : psi(u) <= x}.
                          double f = 0.0;
                          const auto& k = t.knots;
                          for (std::size_t i = 0; i + 1 < k.size(); ++i) {
                            const auto& a = k[i];
                            const auto& b = k[i + 1];
                            if (b.value <= x) {
                              f = b.u;
                            } else {
                              if (a.value <= x && b.u > a.u) f = a.u + (x - a.value) / (b.value - a.value) * (b.u - a.u);
                              break;
                            }
                          }
                          return f;
                        },
                    },
                    family_);
}

double BoundaryMeasure::cdf_left(double x) const {
  if (x <= 0.0) return 0.0;
  if (x > 1.0) return 1.0;
  return std::visit(overloaded{
                        [&](const PointMass& m) { return x > m.p ? 1.0 : 0.0; },
                        [&](const TwoPoint& m) { return 1.0 - m.p; },
                        [&](const Uniform&) { return x; },
                        [&](const InverseCdfTable& t) {
                          // Lebesgue measure of {u : psi(u) < x}.
                          double f = 0.0;
                          const auto& k = t.knots;
                          for (std::size_t i = 0; i + 1 < k.size(); ++i) {
                            const auto& a = k[i];
                            const auto& b = k[i + 1];
                            if (b.value < x) {
                              f = b.u;
                            } else {
                              if (a.value < x && b.u > a.u) f = a.u + (x - a.value) / (b.value - a.value) * (b.u - a.u);
                              break;
                            }
                          }
                          return f;
                        },
                    },
                    family_);
}

std::vector<double> BoundaryMeasure::atoms() const {
  return std::visit(overloaded{
                        [](const PointMass& m) { return std::vector<double>{m.p}; },
                        [](const TwoPoint& m) {
                          std::vector<double> out;
                          if (m.p < 1.0) out.push_back(0.0);
                          if (m.p > 0.0) out.push_back(1.0);
                          return out;
                        },
                        [](const Uniform&) { return std::vector<double>{}; },
                        [](const InverseCdfTable& t) {
                          std::vector<double> out;
                          const auto& k = t.knots;
                          for (std::size_t i = 0; i + 1 < k.size(); ++i) {
                            if (k[i + 1].u > k[i].u && k[i + 1].value == k[i].value &&
                                (out.empty() || out.back() != k[i].value)) {
                              out.push_back(k[i].value);
                            }
                          }
                          return out;
                        },
                    },
                    family_);
}

std::vector<QuantileKnot> read_quantile_table(std::istream& in) {
  std::vector<QuantileKnot> knots;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    ls.imbue(std::locale::classic());
    QuantileKnot k{};
    std::string extra;
    if (!(ls >> k.u >> k.value) || (ls >> extra)) {
      throw InvalidArgument("quantile table line " + std::to_string(lineno) + ": expected 'u psi'");
    }
    knots.push_back(k);
  }
  return knots;
}

std::vector<QuantileKnot> read_quantile_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open quantile table '" + path + "'");
  return read_quantile_table(in);
}

std::vector<BoundaryMeasure> builtin_measures() {
  return {BoundaryMeasure::point_mass(0.5), BoundaryMeasure::two_point(0.3), BoundaryMeasure::uniform()};
}

}  // namespace growgraph
