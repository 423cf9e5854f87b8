#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "recon/deck.hpp"
#include "recon/errors.hpp"
#include "recon/graph6.hpp"

namespace recon {
namespace {

using Degrees = std::vector<std::size_t>;

std::vector<CanonicalForm> card_forms(const Deck& d) {
  std::vector<CanonicalForm> out;
  for (const Card& c : d.cards()) out.push_back(c.canonical);
  return out;
}

TEST(DeckTest, MakeDeck) {
  const Deck k3 = make_deck(complete_graph(3));
  ASSERT_EQ(k3.size(), 3u);
  for (const Card& c : k3.cards()) EXPECT_EQ(c.canonical, canonical_form(complete_graph(2)));

  const Deck p3 = make_deck(path_graph(3));
  const std::vector<CanonicalForm> expected{canonical_form(Graph::empty(2)), canonical_form(complete_graph(2)),
                                            canonical_form(complete_graph(2))};
  auto sorted = expected;
  std::ranges::sort(sorted);
  EXPECT_EQ(card_forms(p3), sorted);

  const Deck c4 = make_deck(cycle_graph(4));
  ASSERT_EQ(c4.size(), 4u);
  for (const Card& c : c4.cards()) EXPECT_EQ(c.canonical, canonical_form(path_graph(3)));
}

TEST(DeckTest, CardInvariants) {
  const Deck d = make_deck(testing::stars({3, 5}));
  for (const Card& c : d.cards()) {
    EXPECT_EQ(c.edge_count, c.representative.edge_count());
    EXPECT_EQ(c.canonical, canonical_form(c.representative));
    EXPECT_EQ(c.representative.order(), d.size() - 1);
  }
}

TEST(DeckTest, RejectsSmallGraphs) {
  EXPECT_THROW(make_deck(complete_graph(2)), SizeError);
  EXPECT_THROW(make_deck(Graph()), SizeError);
}

TEST(DeckTest, DecksEqual) {
  EXPECT_TRUE(decks_equal(make_deck(complete_graph(3)), make_deck(relabel(complete_graph(3), std::vector<Vertex>{2, 0, 1}))));
  EXPECT_FALSE(decks_equal(make_deck(path_graph(3)), make_deck(complete_graph(3))));
}

TEST(DeckTest, EdgeCountOfOriginal) {
  EXPECT_EQ(edge_count_of_original(make_deck(complete_graph(3))), 3u);
  EXPECT_EQ(edge_count_of_original(make_deck(path_graph(3))), 2u);
  EXPECT_EQ(edge_count_of_original(make_deck(cycle_graph(4))), 4u);
}

TEST(DeckTest, DeletedDegrees) {
  EXPECT_EQ(deleted_degrees(make_deck(complete_graph(3))), (Degrees{2, 2, 2}));

  // Pair each card of P3 with its deleted degree: K2 cards come from leaves.
  const Deck p3 = make_deck(path_graph(3));
  const Degrees dd = deleted_degrees(p3);
  for (std::size_t j = 0; j < p3.size(); ++j) {
    EXPECT_EQ(dd[j], p3[j].edge_count == 1 ? 1u : 2u);
  }
  auto sorted = dd;
  std::ranges::sort(sorted);
  EXPECT_EQ(sorted, (Degrees{1, 1, 2}));

  auto stars = deleted_degrees(make_deck(testing::stars({3, 5})));
  std::ranges::sort(stars);
  EXPECT_EQ(stars, (Degrees{1, 1, 1, 1, 1, 1, 1, 1, 3, 5}));
}

TEST(DeckTest, DegreeMultisetOfOriginal) {
  EXPECT_EQ(degree_multiset_of_original(make_deck(cycle_graph(4))), (Degrees{2, 2, 2, 2}));
  EXPECT_EQ(degree_multiset_of_original(make_deck(path_graph(3))), (Degrees{2, 1, 1}));
  EXPECT_EQ(degree_multiset_of_original(make_deck(testing::stars({3, 5}))), (Degrees{5, 3, 1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST(DeckTest, IllegitimateDecksDetected) {
  // Edge total 1 over n - 2 = 2: not divisible.
  const std::vector<Graph> odd{Graph::from_edges(3, {{0, 1}}), Graph::empty(3), Graph::empty(3), Graph::empty(3)};
  EXPECT_THROW(edge_count_of_original(Deck::from_cards(odd)), IllegitimateDeckError);

  // m = (3 + 3 + 0 + 2) / 2 = 4, so the empty card implies degree 4 > n - 1.
  const std::vector<Graph> heavy{complete_graph(3), complete_graph(3), Graph::empty(3), path_graph(3)};
  EXPECT_THROW(deleted_degrees(Deck::from_cards(heavy)), IllegitimateDeckError);

  // m = (3 + 0 + 0 + 1) / 2 = 2, yet one card has 3 edges.
  const std::vector<Graph> negative{complete_graph(3), Graph::empty(3), Graph::empty(3),
                                    Graph::from_edges(3, {{0, 1}})};
  EXPECT_THROW(deleted_degrees(Deck::from_cards(negative)), IllegitimateDeckError);

  const std::vector<Graph> ragged{complete_graph(2), complete_graph(2), complete_graph(3)};
  EXPECT_THROW(Deck::from_cards(ragged), IllegitimateDeckError);
}

TEST(DeckTest, RecoveryIdentitiesProperty) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 8;
    const Graph g = testing::random_graph(rng, n, 0.45);
    const Deck d = make_deck(g);
    ASSERT_EQ(edge_count_of_original(d), g.edge_count());
    ASSERT_EQ(degree_multiset_of_original(d), degree_sequence(g));
    const Degrees dd = deleted_degrees(d);
    ASSERT_EQ(std::accumulate(dd.begin(), dd.end(), std::size_t{0}), 2 * g.edge_count());
    ASSERT_TRUE(decks_equal(d, make_deck(relabel(g, testing::random_permutation(rng, n)))));
  }
}

TEST(DeckTest, DeckFileRoundTrip) {
  const Deck d = make_deck(testing::stars({3, 5}));
  std::istringstream in("# deck of two stars\n\n" + format_deck(d));
  EXPECT_TRUE(decks_equal(read_deck(in), d));
}

TEST(DeckTest, DeckFileErrorsNameTheLine) {
  std::istringstream in("A_\n# comment\nA_\nzzz\n");
  try {
    read_deck(in);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

}  // namespace
}  // namespace recon
