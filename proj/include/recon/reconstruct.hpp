#pragma once

#include <optional>
#include <vector>

#include "recon/deck.hpp"
#include "recon/graph.hpp"
#include "recon/limits.hpp"
#include "recon/membership.hpp"

namespace recon {

struct ReconstructionResult {
  Graph graph;
  DegreeProfile profile;
  /// Witness on `graph`; v1 is the vertex added to the chosen card.
  ClassWitness witness;
  /// The deck of `graph` equals the input deck and the witness passes all
  /// five conditions.
  bool verified = false;
  /// Index into the deck of the card used as G - v1.
  std::size_t card_index = 0;
};

/// Rebuilds a class member from its deck assuming the given degree profile.
///
/// The card whose deleted vertex has degree d1 plays G - v1. Inside it the
/// vertices whose degree lies in `profile.others` are S (their degrees are
/// unchanged because S avoids N[v1]); the vertices outside every N[s] are
/// exactly N(v1). A new vertex joined to those is the candidate, accepted
/// only after its deck and witness are re-checked.
///
/// Throws ProfileMismatchError when not exactly one card has deleted degree
/// d1. Returns nullopt when the profile does not lead to a verified graph.
std::optional<ReconstructionResult> reconstruct_with_profile(const Deck& d, const DegreeProfile& profile,
                                                             const Limits& limits = {});

/// Tries every profile from class_degree_profiles in order and returns the
/// first verified reconstruction.
std::optional<ReconstructionResult> reconstruct_auto(const Deck& d, const Limits& limits = {});

/// All isomorphism classes of graphs whose deck is d, sorted by canonical form.
///
/// Exhaustive: every preimage is the card `card_choice` plus one vertex joined
/// to some subset of the card's vertices of the recovered size. Refuses decks
/// above limits.oracle_max_order (ResourceError) and throws ResourceError when
/// more than `cap` classes are found. An empty result means d is not a deck.
std::vector<Graph> brute_force_preimages(const Deck& d, std::size_t cap = kDefaultPreimageCap,
                                         const Limits& limits = {}, std::size_t card_choice = 0);

/// True iff the oracle finds exactly one preimage of g's deck, isomorphic to g.
bool verify_unique(const Graph& g, std::size_t cap = kDefaultPreimageCap, const Limits& limits = {});

}  // namespace recon
