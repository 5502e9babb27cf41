#include "gluing/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>
#include <nlohmann/json.hpp>

#include "gluing/calculus.hpp"
#include "gluing/counting.hpp"
#include "gluing/errors.hpp"
#include "gluing/graph_io.hpp"

#ifndef GLUING_VERSION
#define GLUING_VERSION "0.0.0"
#endif

namespace gluing {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kMaxJointCells = std::uint64_t{1} << 20;

std::uint64_t mod_of(const Integer& value, std::uint64_t q) {
  Integer r = value % q;
  if (r < 0) r += q;
  return r.convert_to<std::uint64_t>();
}

// Runs fn(i) -> cell for every sample, split across jobs threads. Each
// thread owns a slice of the cell vector, so the merge is a plain sum and
// the result is the same for any job count.
template <typename CellOf>
std::vector<std::uint64_t> tally(std::uint64_t samples, unsigned jobs, std::size_t cells,
                                 const CellOf& cell_of) {
  jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, samples));
  std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(cells, 0));
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned j) {
    try {
      const std::uint64_t lo = samples * j / jobs, hi = samples * (j + 1) / jobs;
      for (std::uint64_t i = lo; i < hi; ++i) ++partial[j][cell_of(i)];
    } catch (...) {
      errors[j] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<std::uint64_t> merged(cells, 0);
  for (const auto& part : partial) {
    for (std::size_t c = 0; c < cells; ++c) merged[c] += part[c];
  }
  return merged;
}

void check_sampling(std::size_t n, double p, std::uint64_t q, std::uint64_t samples,
                    unsigned jobs) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("edge probability must lie in (0, 1)");
  if (q < 2) throw ConfigError("modulus must be at least 2");
  if (samples < 1) throw ConfigError("at least one sample is required");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
  if (n > 64 * 1024) throw ConfigError("host order too large");
}

std::string rational_text(const Probability& m) {
  return boost::multiprecision::numerator(m).str() + "/" +
         boost::multiprecision::denominator(m).str();
}

Probability parse_mass(const std::string& text) {
  auto bad = [&] { return ParseError("bad probability mass '" + text + "'", 1, 0); };
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const Integer num(text.substr(0, slash)), den(text.substr(slash + 1));
      if (den == 0) throw bad();
      return Probability(num, den);
    }
    if (text.find_first_of("eE") != std::string::npos) throw bad();
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Probability(Integer(text));
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 9) throw bad();
    const std::string whole = text.substr(0, dot);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Integer w(whole.empty() || whole == "-" ? whole + "0" : whole);
    const Integer f(frac);
    return Probability(w * scale + (text.front() == '-' ? -f : f), scale);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

}  // namespace

std::string_view library_version() { return GLUING_VERSION; }

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + kGolden * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph(n, edges);
}

double Histogram::frequency(std::uint64_t residue) const {
  if (total == 0) return 0.0;
  return static_cast<double>(counts.at(residue)) / static_cast<double>(total);
}

std::string to_string(CountMethod m) {
  return m == CountMethod::direct ? "direct" : "formula";
}

void ExperimentConfig::validate() const {
  if (components.empty()) throw ConfigError("at least one component is required");
  std::size_t order = 0;
  for (const auto& g : components) order += g.order();
  if (n < order) throw ConfigError("host order is smaller than the pattern");
  check_sampling(n, p, q, samples, jobs);
  if (!(tv_threshold >= 0.0 && tv_threshold <= 1.0)) {
    throw ConfigError("TV threshold must lie in [0, 1]");
  }
}

Histogram mod_q_histogram(const ExperimentConfig& config) {
  config.validate();
  const Graph pattern = disjoint_union(config.components);
  std::optional<CoefficientTable> table;
  if (config.method == CountMethod::formula && config.components.size() >= 2) {
    table = coefficient_table(config.components);
  }
  Histogram h;
  h.q = config.q;
  h.total = config.samples;
  h.counts = tally(config.samples, config.jobs, config.q, [&](std::uint64_t i) {
    const Graph host = sample_gnp(config.n, config.p, sample_seed(config.seed, i));
    if (table) return mod_of(table->evaluate(host), config.q);
    return count_copies(pattern, host) % config.q;
  });
  return h;
}

JointHistogram joint_mod_q_histogram(const std::vector<Graph>& patterns,
                                     const ExperimentConfig& config) {
  if (patterns.empty()) throw ConfigError("at least one pattern is required");
  check_sampling(config.n, config.p, config.q, config.samples, config.jobs);
  std::uint64_t cells = 1;
  for (const auto& g : patterns) {
    if (g.order() > config.n) throw ConfigError("host order is smaller than a pattern");
    if (cells > kMaxJointCells / config.q) throw ConfigError("too many joint cells");
    cells *= config.q;
  }
  JointHistogram h;
  h.q = config.q;
  h.arity = patterns.size();
  h.total = config.samples;
  h.counts = tally(config.samples, config.jobs, cells, [&](std::uint64_t i) {
    const Graph host = sample_gnp(config.n, config.p, sample_seed(config.seed, i));
    std::uint64_t cell = 0, place = 1;
    for (const auto& g : patterns) {
      cell += (count_copies(g, host) % config.q) * place;
      place *= config.q;
    }
    return cell;
  });
  return h;
}

double total_variation(const Histogram& h, const DistributionSpec& spec) {
  if (h.q != spec.q || h.counts.size() != spec.mass.size()) {
    throw ArgumentError("histogram and distribution have different moduli");
  }
  if (h.total == 0) throw ArgumentError("empty histogram");
  double sum = 0.0;
  for (std::uint64_t r = 0; r < h.q; ++r) {
    sum += std::abs(h.frequency(r) - spec.probability(r));
  }
  return std::clamp(sum / 2.0, 0.0, 1.0);
}

double total_variation_to_uniform(const JointHistogram& h) {
  if (h.total == 0 || h.counts.empty()) throw ArgumentError("empty histogram");
  const double expected = 1.0 / static_cast<double>(h.counts.size());
  double sum = 0.0;
  for (auto c : h.counts) {
    sum += std::abs(static_cast<double>(c) / static_cast<double>(h.total) - expected);
  }
  return std::clamp(sum / 2.0, 0.0, 1.0);
}

ChiSquare chi_square(const Histogram& h, const DistributionSpec& spec) {
  if (h.q != spec.q || h.counts.size() != spec.mass.size()) {
    throw ArgumentError("histogram and distribution have different moduli");
  }
  if (h.total == 0) throw ArgumentError("empty histogram");
  ChiSquare result;
  const std::size_t support = spec.support_size();
  result.degrees_of_freedom = support == 0 ? 0 : support - 1;
  const auto total = static_cast<double>(h.total);
  for (std::uint64_t r = 0; r < h.q; ++r) {
    const double expected = spec.probability(r) * total;
    const auto observed = static_cast<double>(h.counts[r]);
    if (expected == 0.0) {
      if (observed > 0.0) {
        result.statistic = std::numeric_limits<double>::infinity();
        result.p_value = 0.0;
        return result;
      }
      continue;
    }
    result.statistic += (observed - expected) * (observed - expected) / expected;
  }
  if (result.degrees_of_freedom == 0) {
    result.p_value = 1.0;
  } else {
    const boost::math::chi_squared dist(static_cast<double>(result.degrees_of_freedom));
    result.p_value = boost::math::cdf(boost::math::complement(dist, result.statistic));
  }
  return result;
}

ExperimentReport run_experiment(const ExperimentConfig& config, const Prediction& prediction) {
  config.validate();
  ExperimentReport report;
  report.config = config;
  switch (prediction.kind) {
    case Prediction::Kind::automatic:
      if (config.components.size() != 2) {
        throw ConfigError("automatic prediction needs exactly two components");
      }
      report.predicted = classify_pair_distribution(config.components[0], config.components[1],
                                                    config.q, config.n);
      break;
    case Prediction::Kind::uniform:
      report.predicted = DistributionSpec::uniform(config.q);
      break;
    case Prediction::Kind::given:
      if (!prediction.spec) throw ConfigError("missing predicted distribution");
      prediction.spec->validate();
      if (prediction.spec->q != config.q) {
        throw ConfigError("predicted distribution has a different modulus");
      }
      report.predicted = *prediction.spec;
      break;
  }
  report.histogram = mod_q_histogram(config);
  report.tv_distance = total_variation(report.histogram, report.predicted);
  report.chi = chi_square(report.histogram, report.predicted);
  report.pass = report.tv_distance <= config.tv_threshold;
  return report;
}

std::string report_json(const ExperimentReport& report, int indent) {
  using nlohmann::json;
  const auto& c = report.config;
  json components = json::array();
  for (const auto& g : c.components) components.push_back(to_graph6(g));
  json masses = json::array(), probabilities = json::array();
  for (std::uint64_t r = 0; r < report.predicted.q; ++r) {
    masses.push_back(rational_text(report.predicted.mass[r]));
    probabilities.push_back(report.predicted.probability(r));
  }
  json chi = {{"statistic", report.chi.statistic},
              {"degrees_of_freedom", report.chi.degrees_of_freedom},
              {"p_value", report.chi.p_value}};
  if (std::isinf(report.chi.statistic)) chi["statistic"] = "inf";
  const json doc = {
      {"config",
       {{"components", components},
        {"n", c.n},
        {"p", c.p},
        {"q", c.q},
        {"samples", c.samples},
        {"seed", c.seed},
        {"jobs", c.jobs},
        {"method", to_string(c.method)},
        {"tv_threshold", c.tv_threshold}}},
      {"counts", report.histogram.counts},
      {"total", report.histogram.total},
      {"predicted",
       {{"q", report.predicted.q},
        {"law", report.predicted.law},
        {"mass", masses},
        {"probability", probabilities}}},
      {"tv", report.tv_distance},
      {"chi_square", chi},
      {"pass", report.pass},
      {"tool_version", std::string(library_version())},
      {"generator", std::string(kGeneratorId)},
  };
  return doc.dump(indent);
}

DistributionSpec distribution_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
  const nlohmann::json* mass = &doc;
  if (doc.is_object()) {
    if (!doc.contains("mass")) throw ParseError("missing \"mass\"", 1, 0);
    mass = &doc["mass"];
  }
  if (!mass->is_array()) throw ParseError("\"mass\" must be an array", 1, 0);
  DistributionSpec spec;
  spec.q = mass->size();
  spec.law = "custom";
  for (const auto& m : *mass) {
    if (m.is_string()) {
      spec.mass.push_back(parse_mass(m.get<std::string>()));
    } else if (m.is_number()) {
      spec.mass.push_back(parse_mass(m.dump()));
    } else {
      throw ParseError("probability masses must be numbers or strings", 1, 0);
    }
  }
  if (doc.is_object() && doc.contains("q")) {
    if (!doc["q"].is_number_unsigned() || doc["q"].get<std::uint64_t>() != spec.q) {
      throw ParseError("\"q\" does not match the number of masses", 1, 0);
    }
  }
  try {
    spec.validate();
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 1, 0);
  }
  return spec;
}

}  // namespace gluing
