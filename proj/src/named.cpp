#include "gluing/named.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "gluing/errors.hpp"

namespace gluing {

namespace {

const std::map<std::string, Graph, std::less<>>& fixed_graphs() {
  static const auto* table = new std::map<std::string, Graph, std::less<>>{
      {"claw", star_graph(3)},
      {"paw", Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})},
      {"chair", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}})},
      {"diamond", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})},
      {"bowtie", Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})},
      {"domino",
       Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}})},
      {"house", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}})},
  };
  return *table;
}

}  // namespace

Graph named_graph(std::string_view name) {
  const auto& fixed = fixed_graphs();
  if (auto it = fixed.find(name); it != fixed.end()) return it->second;

  if (name.size() >= 2 && std::isdigit(static_cast<unsigned char>(name[1]))) {
    std::size_t n = 0;
    const char* first = name.data() + 1;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last && n <= 4096) {
      switch (name[0]) {
        case 'K': return complete_graph(n);
        case 'C': if (n >= 3) return cycle_graph(n); break;
        case 'P': return path_graph(n);
        case 'S': return star_graph(n);
        case 'E': return empty_graph(n);
        default: break;
      }
    }
  }
  throw ArgumentError("unknown graph name '" + std::string(name) + "'");
}

std::vector<std::string> named_graph_catalog() {
  std::vector<std::string> out;
  for (const auto& [name, g] : fixed_graphs()) out.push_back(name);
  return out;
}

}  // namespace gluing
