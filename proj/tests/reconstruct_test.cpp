#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "recon/canonical.hpp"
#include "recon/enumeration.hpp"
#include "recon/errors.hpp"
#include "recon/graph6.hpp"
#include "recon/reconstruct.hpp"

namespace recon {
namespace {

const Graph kTwoStars = testing::stars({3, 5});

void expect_disjoint_neighborhoods(const ReconstructionResult& r) {
  // N[v1] is disjoint from the closed neighborhoods of S on the rebuilt graph.
  const ConditionReport report = check_conditions(r.graph, r.witness);
  EXPECT_TRUE(report.condition(2));
  EXPECT_TRUE(report.all());
}

TEST(ReconstructWithProfileTest, BothTwoStarProfiles) {
  const Deck d = make_deck(kTwoStars);
  for (const DegreeProfile& profile : {DegreeProfile{3, {5}}, DegreeProfile{5, {3}}}) {
    const auto r = reconstruct_with_profile(d, profile);
    ASSERT_TRUE(r) << profile.d1;
    EXPECT_TRUE(r->verified);
    EXPECT_TRUE(is_isomorphic(r->graph, kTwoStars));
    EXPECT_EQ(r->graph.degree(r->witness.v1), profile.d1);
    EXPECT_EQ(deleted_degrees(d)[r->card_index], profile.d1);
    expect_disjoint_neighborhoods(*r);
  }
}

TEST(ReconstructWithProfileTest, MarkedVerticesKeepTheirDegrees) {
  const Deck d = make_deck(kTwoStars);
  const auto r = reconstruct_with_profile(d, DegreeProfile{3, {5}});
  ASSERT_TRUE(r);
  const Graph& card = d[r->card_index].representative;
  for (Vertex s : r->witness.others) EXPECT_EQ(card.degree(s), r->graph.degree(s));
}

TEST(ReconstructWithProfileTest, WrongProfiles) {
  const Deck d = make_deck(kTwoStars);
  // Leaves as S fail condition (5) on the rebuilt graph.
  EXPECT_FALSE(reconstruct_with_profile(d, DegreeProfile{5, {1, 1, 1, 1, 1, 1, 1, 1}}));
  EXPECT_THROW(reconstruct_with_profile(d, DegreeProfile{4, {3}}), ProfileMismatchError);
  EXPECT_THROW(reconstruct_with_profile(d, DegreeProfile{1, {3}}), ProfileMismatchError);
  EXPECT_THROW(reconstruct_with_profile(make_deck(cycle_graph(4)), DegreeProfile{2, {}}), ProfileMismatchError);
}

TEST(ReconstructAutoTest, Examples) {
  const auto r = reconstruct_auto(make_deck(kTwoStars));
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->verified);
  EXPECT_TRUE(is_isomorphic(r->graph, kTwoStars));
  EXPECT_EQ(r->profile, (DegreeProfile{5, {3}}));
  expect_disjoint_neighborhoods(*r);

  EXPECT_FALSE(reconstruct_auto(make_deck(path_graph(3))));
  EXPECT_FALSE(reconstruct_auto(make_deck(cycle_graph(4))));
}

TEST(ReconstructAutoTest, ThreeStarFamilyBeyondDefaultCaps) {
  const Limits wide{.canonical_cap = 15, .oracle_max_order = 15};
  const Graph g = testing::stars({3, 3, 6});
  const Deck d = make_deck(g, wide);
  const auto r = reconstruct_auto(d, wide);
  ASSERT_TRUE(r);
  EXPECT_TRUE(is_isomorphic(r->graph, g, wide));
  EXPECT_EQ(r->profile, (DegreeProfile{6, {3, 3}}));
  expect_disjoint_neighborhoods(*r);

  const auto preimages = brute_force_preimages(d, kDefaultPreimageCap, wide);
  ASSERT_EQ(preimages.size(), 1u);
  EXPECT_TRUE(is_isomorphic(preimages.front(), r->graph, wide));
}

TEST(BruteForcePreimagesTest, Examples) {
  const auto k3 = brute_force_preimages(make_deck(complete_graph(3)));
  ASSERT_EQ(k3.size(), 1u);
  EXPECT_TRUE(is_isomorphic(k3.front(), complete_graph(3)));

  const auto stars = brute_force_preimages(make_deck(kTwoStars));
  ASSERT_EQ(stars.size(), 1u);
  EXPECT_TRUE(is_isomorphic(stars.front(), kTwoStars));

  const auto c4 = brute_force_preimages(make_deck(cycle_graph(4)));
  ASSERT_EQ(c4.size(), 1u);
  EXPECT_TRUE(is_isomorphic(c4.front(), cycle_graph(4)));
}

TEST(BruteForcePreimagesTest, EmptyForIllegitimateDeck) {
  // m = (3 + 3 + 0 + 0) / 2 = 3 and degrees {3, 3, 0, 0} pass the cheap
  // checks, but a degree-3 vertex on 4 vertices leaves no isolated vertex.
  const std::vector<Graph> cards{complete_graph(3), complete_graph(3), Graph::empty(3), Graph::empty(3)};
  const Deck d = Deck::from_cards(cards);
  EXPECT_EQ(degree_multiset_of_original(d), (std::vector<std::size_t>{3, 3, 0, 0}));
  for (std::size_t j = 0; j < d.size(); ++j) EXPECT_TRUE(brute_force_preimages(d, kDefaultPreimageCap, {}, j).empty());
  EXPECT_FALSE(reconstruct_auto(d));
}

TEST(BruteForcePreimagesTest, IndependentOfCardChoice) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_graph(rng, 4 + rng() % 4, 0.5);
    const Deck d = make_deck(g);
    const auto reference = brute_force_preimages(d, kDefaultPreimageCap, {}, 0);
    for (std::size_t j = 1; j < d.size(); ++j) {
      const auto other = brute_force_preimages(d, kDefaultPreimageCap, {}, j);
      ASSERT_EQ(other.size(), reference.size());
      for (std::size_t i = 0; i < other.size(); ++i) ASSERT_EQ(canonical_form(other[i]), canonical_form(reference[i]));
    }
  }
}

TEST(BruteForcePreimagesTest, LimitsEnforced) {
  const Graph g = testing::stars({3, 6});  // 11 vertices
  EXPECT_NO_THROW(brute_force_preimages(make_deck(g)));
  const Graph big = testing::stars({3, 7});  // 12 vertices
  const Limits wide{.canonical_cap = 12};
  EXPECT_THROW(brute_force_preimages(make_deck(big, wide), kDefaultPreimageCap, wide), ResourceError);
  EXPECT_THROW(brute_force_preimages(make_deck(complete_graph(3)), 0), ResourceError);
}

TEST(VerifyUniqueTest, Examples) {
  EXPECT_TRUE(verify_unique(kTwoStars));
  EXPECT_TRUE(verify_unique(complete_graph(3)));
  EXPECT_TRUE(verify_unique(cycle_graph(4)));
}

// Reconstruction of every graph on up to 6 vertices agrees with the oracle.
TEST(VerifyUniqueTest, SmallGraphsAreReconstructible) {
  for (std::size_t n = 3; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) ASSERT_TRUE(verify_unique(g)) << emit_graph6(g);
}

}  // namespace
}  // namespace recon
