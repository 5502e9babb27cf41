#include "gluing/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

#include "gluing/errors.hpp"

namespace gluing {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::size_t kMaxLongOrder = 258047;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= kMaxLongOrder) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
    }
  } else {
    throw SizeError("graph6 encoding supports at most " +
                    std::to_string(kMaxLongOrder) + " vertices");
  }

  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  int filled = 0;
  unsigned chunk = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) |
              (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1u
                                                                          : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  }
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t base = 0;
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) {
    body.remove_prefix(1);
    ++base;
  }
  if (body.substr(0, kGraph6Header.size()) == kGraph6Header) {
    body.remove_prefix(kGraph6Header.size());
    base += kGraph6Header.size();
  }
  body = trim(body);
  if (body.empty()) throw ParseError("empty graph6 string", 1, base);

  auto sextet = [&](std::size_t pos) -> unsigned {
    const auto c = static_cast<unsigned char>(body[pos]);
    if (c < 63 || c > 126) {
      throw ParseError("bad graph6 character", 1, base + pos);
    }
    return c - 63u;
  };

  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(body[0]) == 126) {
    if (body.size() >= 2 && static_cast<unsigned char>(body[1]) == 126) {
      throw ParseError("graph6 orders above 258047 are not supported", 1,
                       base + 1);
    }
    if (body.size() < 4) throw ParseError("truncated graph6 size", 1, base);
    n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
    pos = 4;
  } else {
    n = sextet(0);
    pos = 1;
  }

  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (body.size() - pos != expected) {
    throw ParseError("graph6 body has " + std::to_string(body.size() - pos) +
                         " bytes, expected " + std::to_string(expected),
                     1, base + pos);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const unsigned value = sextet(pos + k / 6);
      if ((value >> (5 - k % 6)) & 1u) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  if (bits % 6 != 0) {
    const unsigned last = sextet(pos + expected - 1);
    if ((last & ((1u << (6 - bits % 6)) - 1)) != 0) {
      throw ParseError("nonzero graph6 padding bits", 1,
                       base + pos + expected - 1);
    }
  }
  return Graph(n, edges);
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edgelist(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto cut = text.find('\n');
    std::string_view line = text.substr(0, cut);
    text.remove_prefix(cut == std::string_view::npos ? text.size() : cut + 1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    lines.emplace_back(line_no, line);
  }

  auto read_two = [](std::size_t line, std::string_view s) {
    std::uint64_t values[2];
    const char* p = s.data();
    const char* end = s.data() + s.size();
    for (auto& v : values) {
      while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) {
        throw ParseError("expected a non-negative integer", line,
                         static_cast<std::size_t>(p - s.data()));
      }
      p = next;
    }
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (p != end) {
      throw ParseError("trailing characters", line,
                       static_cast<std::size_t>(p - s.data()));
    }
    return std::pair{values[0], values[1]};
  };

  if (lines.empty()) throw ParseError("missing 'n m' header", 1, 0);
  const auto [n, m] = read_two(lines[0].first, lines[0].second);
  if (lines.size() - 1 != m) {
    throw ParseError("header announces " + std::to_string(m) +
                         " edges but found " + std::to_string(lines.size() - 1),
                     lines[0].first, 0);
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [line, body] = lines[i];
    const auto [u, v] = read_two(line, body);
    if (u >= n || v >= n) {
      throw ParseError("endpoint out of range for n=" + std::to_string(n), line,
                       0);
    }
    if (u == v) throw ParseError("self-loop", line, 0);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph(n, edges);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), lines[0].first, 0);
  }
}

Graph parse_graph_text(const GraphText& input) {
  return input.format == GraphFormat::graph6 ? from_graph6(input.payload)
                                             : from_edgelist(input.payload);
}

GraphText serialize_graph(const Graph& g, GraphFormat format) {
  return {format, format == GraphFormat::graph6 ? to_graph6(g) : to_edgelist(g)};
}

GraphFormat sniff_format(std::string_view text) {
  while (!text.empty()) {
    const auto cut = text.find('\n');
    std::string_view line = trim(text.substr(0, cut));
    text.remove_prefix(cut == std::string_view::npos ? text.size() : cut + 1);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream in{std::string(line)};
    long long a = 0, b = 0;
    return (in >> a >> b) ? GraphFormat::edgelist : GraphFormat::graph6;
  }
  return GraphFormat::graph6;
}

}  // namespace gluing
