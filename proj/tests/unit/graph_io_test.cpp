#include <random>
#include <string>

#include "gluing/enumerate.hpp"
#include "gluing/errors.hpp"
#include "gluing/graph_io.hpp"
#include "gtest/gtest.h"
#include "support/fixtures.hpp"

namespace gluing {
namespace {

// Straight transcription of the published graph6 layout: size prefix, then
// the upper triangle column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...),
// six bits per printable character offset by 63.
std::string reference_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + 63);
    }
  }
  std::vector<int> bits;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      bits.push_back(g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
    }
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[k + b];
    out += static_cast<char>(v + 63);
  }
  return out;
}

TEST(Graph6, Examples) {
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(complete_graph(3)), reference_graph6(complete_graph(3)));
  EXPECT_EQ(to_graph6(empty_graph(1)), "@");
  EXPECT_EQ(to_graph6(empty_graph(1)), reference_graph6(empty_graph(1)));
  EXPECT_EQ(to_graph6(empty_graph(0)), "?");
  EXPECT_EQ(from_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(from_graph6(">>graph6<<Bw\n"), complete_graph(3));
}

TEST(Graph6, MatchesReferenceEncoder) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& g : enumerate_graphs(n, false)) {
      ASSERT_EQ(to_graph6(g), reference_graph6(g));
      ASSERT_EQ(from_graph6(reference_graph6(g)), g);
    }
  }
  std::mt19937_64 rng(21);
  for (std::size_t n : {7u, 20u, 62u, 63u, 64u, 100u}) {
    const Graph g = testing::random_graph(n, 0.3, rng);
    EXPECT_EQ(to_graph6(g), reference_graph6(g)) << n;
    EXPECT_EQ(from_graph6(to_graph6(g)), g) << n;
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(from_graph6(""), ParseError);
  try {
    from_graph6("B!");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(from_graph6("C"), ParseError);     // body missing
  EXPECT_THROW(from_graph6("Bww"), ParseError);   // body too long
  EXPECT_THROW(from_graph6("Bx"), ParseError);    // padding bits set
  EXPECT_THROW(from_graph6("~??"), ParseError);   // truncated long size
}

TEST(EdgeList, Examples) {
  EXPECT_EQ(from_edgelist("3 3\n0 1\n1 2\n0 2\n"), complete_graph(3));
  EXPECT_EQ(from_edgelist("# triangle\n\n3 3\n0 1\n1 2\n0 2"), complete_graph(3));
  EXPECT_EQ(from_edgelist("4 0\n"), empty_graph(4));
  EXPECT_EQ(to_edgelist(path_graph(2)), "3 2\n0 1\n1 2\n");
}

TEST(EdgeList, ReportsLineOfError) {
  try {
    from_edgelist("2 1\n0 2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(from_edgelist(""), ParseError);
  EXPECT_THROW(from_edgelist("3\n"), ParseError);
  EXPECT_THROW(from_edgelist("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(from_edgelist("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(from_edgelist("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(from_edgelist("3 2\n0 1\n1 0\n"), ParseError);
}

TEST(GraphText, RoundTripsInBothFormats) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& g : enumerate_graphs(n, false)) {
      for (auto format : {GraphFormat::graph6, GraphFormat::edgelist}) {
        const GraphText text = serialize_graph(g, format);
        EXPECT_EQ(text.format, format);
        EXPECT_EQ(parse_graph_text(text), g);
        EXPECT_EQ(sniff_format(text.payload), format);
      }
    }
  }
}

}  // namespace
}  // namespace gluing
