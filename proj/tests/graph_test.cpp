#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "recon/errors.hpp"
#include "recon/graph.hpp"

namespace recon {
namespace {

TEST(GraphTest, ClosedNeighborhood) {
  EXPECT_EQ(closed_neighborhood(complete_graph(3), 0), (VertexSet{0, 1, 2}));
  EXPECT_EQ(closed_neighborhood(Graph::empty(3), 1), (VertexSet{1}));
  EXPECT_EQ(closed_neighborhood(path_graph(3), 0), (VertexSet{0, 1}));
  EXPECT_THROW(closed_neighborhood(path_graph(3), 3), VertexRangeError);
}

TEST(GraphTest, DeleteVertex) {
  EXPECT_EQ(delete_vertex(complete_graph(3), 0), complete_graph(2));
  EXPECT_EQ(delete_vertex(path_graph(3), 1), Graph::empty(2));
  EXPECT_EQ(delete_vertex(path_graph(3), 0), complete_graph(2));
  EXPECT_THROW(delete_vertex(path_graph(3), 5), VertexRangeError);
}

TEST(GraphTest, DeleteVertexPreservesLabelOrder) {
  // 0-3, 1-3, 2-4; removing 1 maps 0->0, 2->1, 3->2, 4->3.
  const Graph g = Graph::from_edges(5, {{0, 3}, {1, 3}, {2, 4}});
  EXPECT_EQ(delete_vertex(g, 1), Graph::from_edges(4, {{0, 2}, {1, 3}}));
}

TEST(GraphTest, DegreeSequence) {
  using V = std::vector<std::size_t>;
  EXPECT_EQ(degree_sequence(complete_graph(3)), (V{2, 2, 2}));
  EXPECT_EQ(degree_sequence(path_graph(3)), (V{2, 1, 1}));
  EXPECT_EQ(degree_sequence(testing::stars({3, 5})), (V{5, 3, 1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST(GraphTest, RejectsMalformedConstruction) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), PreconditionError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), VertexRangeError);
  const std::uint64_t asymmetric[] = {0b10, 0b00};
  EXPECT_THROW(Graph::from_rows(asymmetric), PreconditionError);
  EXPECT_THROW(Graph::empty(65), SizeError);
}

TEST(GraphTest, SmallOrdersAreLegal) {
  EXPECT_EQ(Graph().order(), 0u);
  EXPECT_EQ(Graph::empty(1).edge_count(), 0u);
  EXPECT_TRUE(delete_vertex(Graph::empty(1), 0) == Graph());
}

TEST(GraphTest, AddVertex) {
  const Graph g = add_vertex(path_graph(3), VertexSet{0, 2});
  EXPECT_EQ(g, cycle_graph(4));
  EXPECT_THROW(add_vertex(path_graph(3), VertexSet{3}), VertexRangeError);
}

// Card-degree identity and handshake, over random graphs.
TEST(GraphTest, DeletionDegreeIdentityProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const Graph g = testing::random_graph(rng, n, 0.4);
    std::size_t total = 0;
    for (Vertex v = 0; v < n; ++v) total += g.degree(v);
    ASSERT_EQ(total, 2 * g.edge_count());

    const Vertex v = rng() % n;
    const Graph card = delete_vertex(g, v);
    ASSERT_EQ(card.order(), n - 1);
    ASSERT_EQ(card.edge_count(), g.edge_count() - g.degree(v));
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      const Vertex w = u < v ? u : u - 1;
      ASSERT_EQ(card.degree(w), g.degree(u) - (g.adjacent(u, v) ? 1 : 0));
    }
  }
}

TEST(GraphTest, RelabelIsInvertible) {
  std::mt19937_64 rng(11);
  const Graph g = testing::random_graph(rng, 9, 0.5);
  const auto perm = testing::random_permutation(rng, 9);
  std::vector<Vertex> inverse(9);
  for (Vertex v = 0; v < 9; ++v) inverse[perm[v]] = v;
  EXPECT_EQ(relabel(relabel(g, perm), inverse), g);
  EXPECT_EQ(degree_sequence(relabel(g, perm)), degree_sequence(g));
}

}  // namespace
}  // namespace recon
