#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "recon/canonical.hpp"
#include "recon/graph.hpp"
#include "recon/limits.hpp"

namespace recon {

/// One vertex-deleted subgraph, kept both as an isomorphism-class key and as a
/// concrete graph (the canonical relabeling of the card).
struct Card {
  CanonicalForm canonical;
  std::size_t edge_count = 0;
  Graph representative;
};

/// Multiset of cards sorted by canonical bytes; holds at least three cards,
/// each on size() - 1 vertices.
class Deck {
 public:
  /// Canonicalizes and sorts `cards`. Throws SizeError for fewer than three
  /// cards and IllegitimateDeckError when card orders disagree with the count.
  static Deck from_cards(std::span<const Graph> cards, const Limits& limits = {});

  /// Number of cards, i.e. the order of any preimage.
  std::size_t size() const { return cards_.size(); }
  std::span<const Card> cards() const { return cards_; }
  const Card& operator[](std::size_t i) const { return cards_[i]; }

 private:
  std::vector<Card> cards_;
};

/// The deck of g. Requires g.order() >= 3 and g.order() - 1 <= limits.canonical_cap.
Deck make_deck(const Graph& g, const Limits& limits = {});

/// Multiset equality of card isomorphism classes.
bool decks_equal(const Deck& a, const Deck& b);

/// |E(G)| = (sum of card edge counts) / (n - 2).
std::size_t edge_count_of_original(const Deck& d);

/// Degree of the deleted vertex for each card, in card order.
std::vector<std::size_t> deleted_degrees(const Deck& d);

/// Degree sequence (descending) of every graph with deck d.
std::vector<std::size_t> degree_multiset_of_original(const Deck& d);

/// Reads a deck file: one graph6 card per line; blank lines and lines starting
/// with '#' are skipped. ParseError offsets are 1-based line numbers.
Deck read_deck(std::istream& in, const Limits& limits = {});

/// One graph6 line per card, in deck order.
std::string format_deck(const Deck& d);

}  // namespace recon
