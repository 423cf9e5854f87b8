#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "recon/errors.hpp"
#include "recon/graph6.hpp"

namespace recon {
namespace {

TEST(Graph6Test, ReferenceEncoderAgreesOnSmallGraphs) {
  EXPECT_EQ(testing::reference_graph6(2, {{0, 1}}), "A_");
  EXPECT_EQ(testing::reference_graph6(3, {}), "B?");
  EXPECT_EQ(testing::reference_graph6(3, {{0, 1}, {0, 2}, {1, 2}}), "Bw");
  EXPECT_EQ(testing::reference_graph6(3, {{0, 1}, {1, 2}}), "Bg");
}

TEST(Graph6Test, Parse) {
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(parse_graph6("B?"), Graph::empty(3));
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(parse_graph6("Bw\n"), complete_graph(3));
}

TEST(Graph6Test, Emit) {
  EXPECT_EQ(emit_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(emit_graph6(Graph()), "?");
  EXPECT_EQ(emit_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(emit_graph6(Graph::empty(1)), "@");
}

TEST(Graph6Test, MatchesReferenceOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 40;
    const Graph g = testing::random_graph(rng, n, 0.3);
    const std::string text = emit_graph6(g);
    ASSERT_EQ(text, testing::reference_graph6(n, g.edges()));
    ASSERT_EQ(parse_graph6(text), g);
  }
}

TEST(Graph6Test, ErrorsNameOffsets) {
  auto offset_of = [](std::string_view text) {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of("~??~"), 0);   // long form
  EXPECT_EQ(offset_of(" "), 0);      // below 63
  EXPECT_EQ(offset_of("B"), 1);      // missing data byte
  EXPECT_EQ(offset_of("Bww"), 2);    // trailing byte
  EXPECT_EQ(offset_of("B\x7f"), 1);  // data byte above 126
  EXPECT_EQ(offset_of("Bx"), 1);     // padding bit set
}

TEST(Graph6Test, EmitRejectsLargeGraphs) {
  EXPECT_NO_THROW(emit_graph6(Graph::empty(62)));
  EXPECT_THROW(emit_graph6(Graph::empty(63)), SizeError);
}

}  // namespace
}  // namespace recon
