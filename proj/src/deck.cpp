#include "recon/deck.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>

#include "recon/errors.hpp"
#include "recon/graph6.hpp"

namespace recon {

namespace {

void require_deck_order(std::size_t n) {
  if (n < 3) throw SizeError("a deck needs at least 3 cards, got " + std::to_string(n));
}

}  // namespace

Deck Deck::from_cards(std::span<const Graph> cards, const Limits& limits) {
  require_deck_order(cards.size());
  Deck d;
  d.cards_.reserve(cards.size());
  for (std::size_t j = 0; j < cards.size(); ++j) {
    if (cards[j].order() + 1 != cards.size()) {
      throw IllegitimateDeckError("card " + std::to_string(j) + " has " + std::to_string(cards[j].order()) +
                                  " vertices; expected " + std::to_string(cards.size() - 1));
    }
    CanonicalForm form = canonical_form(cards[j], limits.canonical_cap);
    Graph rep = parse_graph6(form.bytes);
    d.cards_.push_back(Card{std::move(form), cards[j].edge_count(), rep});
  }
  std::ranges::sort(d.cards_, {}, &Card::canonical);
  return d;
}

Deck make_deck(const Graph& g, const Limits& limits) {
  require_deck_order(g.order());
  std::vector<Graph> cards;
  cards.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) cards.push_back(delete_vertex(g, v));
  return Deck::from_cards(cards, limits);
}

bool decks_equal(const Deck& a, const Deck& b) {
  return std::ranges::equal(a.cards(), b.cards(), {}, &Card::canonical, &Card::canonical);
}

std::size_t edge_count_of_original(const Deck& d) {
  require_deck_order(d.size());
  const std::size_t total = std::transform_reduce(d.cards().begin(), d.cards().end(), std::size_t{0}, std::plus<>(),
                                                  [](const Card& c) { return c.edge_count; });
  const std::size_t n = d.size();
  if (total % (n - 2) != 0) {
    throw IllegitimateDeckError("card edge total " + std::to_string(total) + " is not divisible by n - 2 = " +
                                std::to_string(n - 2));
  }
  return total / (n - 2);
}

std::vector<std::size_t> deleted_degrees(const Deck& d) {
  const std::size_t m = edge_count_of_original(d);
  std::vector<std::size_t> out;
  out.reserve(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    const std::size_t e = d[j].edge_count;
    if (e > m) throw IllegitimateDeckError("card " + std::to_string(j) + " has more edges than the original");
    if (m - e > d.size() - 1) throw IllegitimateDeckError("card " + std::to_string(j) + " implies degree above n - 1");
    out.push_back(m - e);
  }
  return out;
}

std::vector<std::size_t> degree_multiset_of_original(const Deck& d) {
  std::vector<std::size_t> out = deleted_degrees(d);
  std::ranges::sort(out, std::greater<>());
  return out;
}

Deck read_deck(std::istream& in, const Limits& limits) {
  std::vector<Graph> cards;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      cards.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("deck line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return Deck::from_cards(cards, limits);
}

std::string format_deck(const Deck& d) {
  std::string out;
  for (const Card& c : d.cards()) {
    out += emit_graph6(c.representative);
    out += '\n';
  }
  return out;
}

}  // namespace recon
