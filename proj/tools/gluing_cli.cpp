// gluing: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gluing/calculus.hpp"
#include "gluing/canonical.hpp"
#include "gluing/composer.hpp"
#include "gluing/counting.hpp"
#include "gluing/decomposition.hpp"
#include "gluing/distribution.hpp"
#include "gluing/enumerate.hpp"
#include "gluing/errors.hpp"
#include "gluing/graph_io.hpp"
#include "gluing/lab.hpp"
#include "gluing/named.hpp"
#include "gluing/oracle.hpp"
#include "gluing/structure.hpp"

namespace {

using namespace gluing;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "g6:<graph6>", "std:<name>" or a path to a graph6 / edge-list file.
Graph load_graph(const std::string& spec) {
  if (spec.rfind("g6:", 0) == 0) return from_graph6(spec.substr(3));
  if (spec.rfind("std:", 0) == 0) return named_graph(spec.substr(4));
  const std::string text = read_file(spec);
  return parse_graph_text({sniff_format(text), text});
}

std::vector<Graph> load_graphs(const std::vector<std::string>& specs) {
  std::vector<Graph> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(load_graph(s));
  return out;
}

std::string rational_text(const Probability& m) {
  return boost::multiprecision::numerator(m).str() + "/" +
         boost::multiprecision::denominator(m).str();
}

// Integers that fit in 64 bits stay JSON numbers; larger ones become strings
// so no precision is lost.
json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

json keys_json(const KeyMultiset& keys) {
  json out = json::array();
  for (const auto& k : keys) out.push_back(k.code);
  return out;
}

std::string keys_text(const KeyMultiset& keys) {
  std::string out;
  for (const auto& k : keys) out += (out.empty() ? "" : " ") + k.code;
  return out;
}

void print_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------- count

int run_count(const std::string& pattern_spec, const std::string& host_spec,
              const std::string& method, bool as_json) {
  const Graph pattern = load_graph(pattern_spec);
  const Graph host = load_graph(host_spec);
  Integer value;
  if (method == "direct") {
    value = count_copies(pattern, host);
  } else if (method == "oracle") {
    value = oracle_count(pattern, host);
  } else {
    const auto parts = connected_components(pattern);
    value = parts.size() < 2 ? Integer(count_copies(pattern, host))
                             : Integer(multi_component_count(parts, host));
  }
  if (as_json) {
    print_json({{"pattern", to_graph6(pattern)},
                {"host", to_graph6(host)},
                {"method", method},
                {"count", integer_json(value)}});
  } else {
    std::cout << value << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- gluings

int run_gluings(const std::vector<std::string>& specs, bool as_json) {
  const auto components = load_graphs(specs);
  const auto records = enumerate_gluings(components);
  if (as_json) {
    json out = json::array();
    for (const auto& r : records) {
      out.push_back({{"graph6", r.key.code},
                     {"order", r.key.order},
                     {"size", r.key.size},
                     {"s", r.s}});
    }
    print_json({{"components", keys_json([&] {
                   KeyMultiset keys;
                   for (const auto& g : components) keys.push_back(canonical_key(g));
                   return keys;
                 }())},
                {"gluings", out}});
    return kOk;
  }
  std::cout << std::left << std::setw(16) << "graph6" << std::setw(8) << "order"
            << std::setw(8) << "size" << "s\n";
  for (const auto& r : records) {
    std::cout << std::setw(16) << r.key.code << std::setw(8) << r.key.order << std::setw(8)
              << r.key.size << r.s << "\n";
  }
  std::cout << records.size() << " gluings\n";
  return kOk;
}

// ---------------------------------------------------------------- coeffs

int run_coeffs(const std::vector<std::string>& specs, bool as_json) {
  const auto components = load_graphs(specs);
  const auto table = coefficient_table(components);
  if (as_json) {
    json terms = json::array();
    for (const auto& [monomial, c] : table.terms) {
      terms.push_back({{"monomial", keys_json(monomial)}, {"coefficient", integer_json(c)}});
    }
    print_json({{"pattern", keys_json(table.pattern)}, {"terms", terms}});
    return kOk;
  }
  std::cout << "N(" << keys_text(table.pattern) << ") =\n";
  for (const auto& [monomial, c] : table.terms) {
    std::cout << "  " << std::right << std::setw(6) << c.str() << "  N(" << keys_text(monomial)
              << ")\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- compose

int run_compose(const std::vector<std::string>& specs, bool as_json) {
  const auto components = load_graphs(specs);
  if (components.size() < 2) throw UsageError("compose needs at least two components");
  const auto cert = components.size() == 2 ? compose_pair(components[0], components[1])
                                           : compose_chain(components);
  if (as_json) {
    json sites = json::array();
    for (const auto& s : cert.glue_sites) {
      sites.push_back({{"first", s.first},
                       {"second", s.second},
                       {"first_vertices", s.first_vertices},
                       {"second_vertices", s.second_vertices}});
    }
    json comps = json::array();
    for (const auto& g : cert.components) comps.push_back(to_graph6(g));
    print_json({{"graph6", to_graph6(cert.result)},
                {"case", to_string(cert.case_used)},
                {"components", comps},
                {"glue_sites", sites},
                {"uniqueness_verified", cert.uniqueness_verified},
                {"s", cert.s_value},
                {"rejected_candidates", cert.rejected_candidates},
                {"fallback", cert.fallback}});
  } else {
    std::cout << "graph6   " << to_graph6(cert.result) << "\n"
              << "case     " << to_string(cert.case_used) << (cert.fallback ? " (fallback)" : "")
              << "\n"
              << "s        " << cert.s_value << "\n"
              << "verified " << (cert.uniqueness_verified ? "yes" : "no") << "\n";
    for (const auto& s : cert.glue_sites) {
      std::cout << "glue     G" << s.first + 1 << "{";
      for (std::size_t i = 0; i < s.first_vertices.size(); ++i) {
        std::cout << (i ? "," : "") << s.first_vertices[i];
      }
      std::cout << "} = G" << s.second + 1 << "{";
      for (std::size_t i = 0; i < s.second_vertices.size(); ++i) {
        std::cout << (i ? "," : "") << s.second_vertices[i];
      }
      std::cout << "}\n";
    }
  }
  return cert.uniqueness_verified && cert.s_value == 1 ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- classify

int run_classify(const std::string& g1, const std::string& g2, std::uint64_t q,
                 std::uint64_t n, bool as_json) {
  const auto spec = classify_pair_distribution(load_graph(g1), load_graph(g2), q, n);
  if (as_json) {
    json masses = json::array(), probabilities = json::array();
    for (std::uint64_t r = 0; r < q; ++r) {
      masses.push_back(rational_text(spec.mass[r]));
      probabilities.push_back(spec.probability(r));
    }
    print_json({{"q", q},
                {"n", n},
                {"law", spec.law},
                {"mass", masses},
                {"probability", probabilities}});
    return kOk;
  }
  std::cout << "law " << spec.law << "\n";
  for (std::uint64_t r = 0; r < q; ++r) {
    std::cout << std::setw(4) << r << "  " << rational_text(spec.mass[r]) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- experiment

struct ExperimentArgs {
  std::vector<std::string> components;
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t q = 2;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string predict = "auto";
  std::string method = "direct";
  double threshold = 0.05;
};

int run_experiment_command(const ExperimentArgs& a, bool as_json) {
  ExperimentConfig config;
  config.components = load_graphs(a.components);
  config.n = a.n;
  config.p = a.p;
  config.q = a.q;
  config.samples = a.samples;
  config.seed = a.seed;
  config.jobs = a.jobs;
  config.method = a.method == "formula" ? CountMethod::formula : CountMethod::direct;
  config.tv_threshold = a.threshold;
  Prediction prediction = Prediction::automatic();
  if (a.predict == "uniform") {
    prediction = Prediction::uniform();
  } else if (a.predict != "auto") {
    prediction = Prediction::given(distribution_from_json(read_file(a.predict)));
  }
  const auto report = run_experiment(config, prediction);
  if (as_json) {
    std::cout << report_json(report) << "\n";
  } else {
    std::cout << "residue  observed  predicted\n";
    for (std::uint64_t r = 0; r < config.q; ++r) {
      std::cout << std::setw(7) << r << "  " << std::setw(8) << std::fixed
                << std::setprecision(4) << report.histogram.frequency(r) << "  "
                << report.predicted.probability(r) << "\n";
    }
    std::cout << "law " << report.predicted.law << "\n"
              << "tv " << std::setprecision(6) << report.tv_distance << " (threshold "
              << config.tv_threshold << ")\n"
              << "chi2 " << report.chi.statistic << " df " << report.chi.degrees_of_freedom
              << " p " << report.chi.p_value << "\n"
              << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- selftest

struct Check {
  std::string name;
  std::function<std::string()> run;  // empty string on success
};

std::vector<Count> s_values(const std::vector<Graph>& comps) {
  std::vector<Count> out;
  for (const auto& r : enumerate_gluings(comps)) out.push_back(r.s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Check> selftest_checks(bool full) {
  const std::size_t host_order = full ? 7 : 5;
  const std::size_t compose_order = full ? 5 : 4;
  const std::vector<std::vector<Graph>> fixtures = {
      {cycle_graph(3), cycle_graph(4)},
      {path_graph(1), path_graph(2)},
      {path_graph(1), path_graph(3)},
  };
  std::vector<Check> checks;
  checks.push_back({"gluing census", [] {
    if (s_values({cycle_graph(3), cycle_graph(4)}) != std::vector<Count>{1, 1, 2, 3}) {
      return std::string("[C3,C4]");
    }
    if (s_values({path_graph(1), path_graph(2)}) != std::vector<Count>{2, 2, 3, 3}) {
      return std::string("[P1,P2]");
    }
    if (s_values({path_graph(1), path_graph(3)}) != std::vector<Count>{2, 2, 2, 3, 4}) {
      return std::string("[P1,P3]");
    }
    return std::string();
  }});
  checks.push_back({"formula vs oracle, hosts up to " + std::to_string(host_order) + " vertices",
                    [=] {
    for (const auto& comps : fixtures) {
      const auto table = coefficient_table(comps);
      const Graph pattern = disjoint_union(comps);
      for (std::size_t n = 1; n <= host_order; ++n) {
        for (const auto& host : enumerate_graphs(n, false)) {
          const Count expected = oracle_count(pattern, host);
          if (two_component_count(comps[0], comps[1], host) != expected ||
              table.evaluate(host) != expected) {
            return "host " + to_graph6(host);
          }
        }
      }
    }
    return std::string();
  }});
  checks.push_back({"linear solve reproduces the tables", [=] {
    for (const auto& comps : fixtures) {
      if (!(fit_coefficient_table(comps) == coefficient_table(comps))) {
        return "pattern " + to_graph6(disjoint_union(comps));
      }
    }
    return std::string();
  }});
  checks.push_back({"compose_pair on connected graphs up to " + std::to_string(compose_order) +
                        " vertices",
                    [=] {
    std::vector<Graph> graphs;
    for (std::size_t n = 2; n <= compose_order; ++n) {
      for (auto& g : enumerate_graphs(n, true)) graphs.push_back(std::move(g));
    }
    const auto p1 = canonical_key(path_graph(1));
    const auto p2 = canonical_key(path_graph(2));
    const auto p3 = canonical_key(path_graph(3));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        const auto a = canonical_key(graphs[i]), b = canonical_key(graphs[j]);
        const bool excluded = (a == p1 && (b == p2 || b == p3)) ||
                              (b == p1 && (a == p2 || a == p3));
        if (excluded) continue;
        const auto cert = compose_pair(graphs[i], graphs[j]);
        const Graph both[] = {graphs[i], graphs[j]};
        if (!cert.uniqueness_verified || count_decompositions(cert.result, both) != 1) {
          return to_graph6(graphs[i]) + " + " + to_graph6(graphs[j]);
        }
      }
    }
    return std::string();
  }});
  checks.push_back({"isolated-vertex residues", [=] {
    ExperimentConfig c;
    c.components = {empty_graph(1), cycle_graph(3)};
    c.n = 23;
    c.q = 4;
    c.samples = full ? 2000 : 200;
    c.seed = 1;
    const auto h = mod_q_histogram(c);
    return h.counts[0] == c.samples ? std::string() : std::string("nonzero residue observed");
  }});
  checks.push_back({"graph6 round trip", [] {
    for (std::size_t n = 0; n <= 5; ++n) {
      for (const auto& g : enumerate_graphs(n, false)) {
        if (!(from_graph6(to_graph6(g)) == g)) return to_graph6(g);
      }
    }
    return std::string();
  }});
  return checks;
}

int run_selftest(const std::string& level, bool as_json) {
  const auto checks = selftest_checks(level == "full");
  json results = json::array();
  bool all = true;
  for (const auto& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = check.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && failure.empty();
    if (as_json) {
      results.push_back({{"check", check.name},
                         {"pass", failure.empty()},
                         {"detail", failure},
                         {"seconds", seconds}});
    } else {
      std::cout << (failure.empty() ? "PASS " : "FAIL ") << check.name;
      if (!failure.empty()) std::cout << ": " << failure;
      std::cout << " (" << std::fixed << std::setprecision(2) << seconds << " s)\n";
    }
  }
  if (as_json) print_json({{"level", level}, {"checks", results}, {"pass", all}});
  return all ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Copy counts of disconnected graphs, gluings and their coefficients."};
  app.set_version_flag("--version", std::string(gluing::library_version()));
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  const char* graph_help = "graph6 file, edge-list file, g6:<code> or std:<name>";

  auto* count = app.add_subcommand("count", "Copies of a pattern in a host");
  std::string pattern, host, method = "formula";
  count->add_option("--pattern", pattern, graph_help)->required();
  count->add_option("--host", host, graph_help)->required();
  count->add_option("--method", method, "formula, direct or oracle")
      ->check(CLI::IsMember({"formula", "direct", "oracle"}));

  std::vector<std::string> components;
  auto add_components = [&](CLI::App* cmd) {
    cmd->add_option("--components", components, graph_help)->required()->delimiter(',');
  };
  auto* gluings = app.add_subcommand("gluings", "Connected gluings with their s values");
  add_components(gluings);
  auto* coeffs = app.add_subcommand("coeffs", "Expansion into connected copy counts");
  add_components(coeffs);
  auto* compose = app.add_subcommand("compose", "Uniquely decomposable gluing");
  add_components(compose);

  auto* classify = app.add_subcommand("classify", "Predicted law of N(G1+G2) mod q");
  std::string g1, g2;
  std::uint64_t q = 2, n = 0;
  classify->add_option("--g1", g1, graph_help)->required();
  classify->add_option("--g2", g2, graph_help)->required();
  classify->add_option("--q", q, "Modulus")->required();
  classify->add_option("--n", n, "Host order")->required();

  auto* experiment = app.add_subcommand("experiment", "Sample G(n,p) and compare residues");
  ExperimentArgs ea;
  experiment->add_option("--components", ea.components, graph_help)->required()->delimiter(',');
  experiment->add_option("--n", ea.n, "Host order")->required();
  experiment->add_option("--p", ea.p, "Edge probability")->capture_default_str();
  experiment->add_option("--q", ea.q, "Modulus")->required();
  experiment->add_option("--samples", ea.samples)->capture_default_str();
  experiment->add_option("--seed", ea.seed)->capture_default_str();
  experiment->add_option("--jobs", ea.jobs)->capture_default_str();
  experiment->add_option("--predict", ea.predict, "auto, uniform or a JSON file of masses")
      ->capture_default_str();
  experiment->add_option("--method", ea.method)
      ->check(CLI::IsMember({"direct", "formula"}))
      ->capture_default_str();
  experiment->add_option("--threshold", ea.threshold, "Pass if TV <= threshold")
      ->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Built-in consistency checks");
  std::string level = "quick";
  selftest->add_option("--level", level)
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return run_count(pattern, host, method, as_json);
    if (*gluings) return run_gluings(components, as_json);
    if (*coeffs) return run_coeffs(components, as_json);
    if (*compose) return run_compose(components, as_json);
    if (*classify) return run_classify(g1, g2, q, n, as_json);
    if (*experiment) return run_experiment_command(ea, as_json);
    if (*selftest) return run_selftest(level, as_json);
  } catch (const gluing::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const gluing::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
