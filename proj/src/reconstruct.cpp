#include "recon/reconstruct.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "recon/canonical.hpp"
#include "recon/errors.hpp"
#include "recon/graph6.hpp"

namespace recon {

std::optional<ReconstructionResult> reconstruct_with_profile(const Deck& d, const DegreeProfile& profile,
                                                             const Limits& limits) {
  const std::vector<std::size_t> deleted = deleted_degrees(d);
  std::optional<std::size_t> card_index;
  for (std::size_t j = 0; j < deleted.size(); ++j) {
    if (deleted[j] != profile.d1) continue;
    if (card_index) {
      throw ProfileMismatchError("several cards have deleted degree " + std::to_string(profile.d1));
    }
    card_index = j;
  }
  if (!card_index) throw ProfileMismatchError("no card has deleted degree " + std::to_string(profile.d1));

  const Graph& card = d[*card_index].representative;

  VertexSet marked;
  for (Vertex v : card.vertices()) {
    if (std::ranges::binary_search(profile.others, card.degree(v))) marked = marked.with(v);
  }
  VertexSet covered;
  for (Vertex w : marked) covered |= closed_neighborhood(card, w);
  const VertexSet attach = card.vertices() - covered;
  if (attach.size() != profile.d1) return std::nullopt;

  Graph candidate = add_vertex(card, attach);
  const ClassWitness witness{card.order(), marked};
  if (marked.empty() || witness.k() >= candidate.order()) return std::nullopt;
  if (!decks_equal(make_deck(candidate, limits), d)) return std::nullopt;
  if (!check_conditions(candidate, witness).all()) return std::nullopt;

  return ReconstructionResult{std::move(candidate), profile, witness, true, *card_index};
}

std::optional<ReconstructionResult> reconstruct_auto(const Deck& d, const Limits& limits) {
  const std::vector<std::size_t> degrees = degree_multiset_of_original(d);
  for (const DegreeProfile& profile : class_degree_profiles(degrees)) {
    if (auto result = reconstruct_with_profile(d, profile, limits)) return result;
  }
  return std::nullopt;
}

std::vector<Graph> brute_force_preimages(const Deck& d, std::size_t cap, const Limits& limits,
                                         std::size_t card_choice) {
  const std::size_t n = d.size();
  if (n > limits.oracle_max_order) {
    throw ResourceError("preimage oracle refuses decks of " + std::to_string(n) + " cards (limit " +
                        std::to_string(limits.oracle_max_order) + ")");
  }
  if (card_choice >= n) throw PreconditionError("card index " + std::to_string(card_choice) + " out of range");

  const std::vector<std::size_t> deleted = deleted_degrees(d);
  const std::vector<std::size_t> expected_degrees = degree_multiset_of_original(d);
  const Graph& card = d[card_choice].representative;
  const std::size_t delta = deleted[card_choice];
  const std::size_t m = card.order();

  std::set<CanonicalForm> seen;
  std::vector<Graph> out;
  // Gosper's hack over all delta-subsets of the card's m vertices.
  const std::uint64_t limit = std::uint64_t{1} << m;
  std::uint64_t subset = (std::uint64_t{1} << delta) - 1;
  for (;;) {
    Graph candidate = add_vertex(card, VertexSet(subset));
    if (degree_sequence(candidate) == expected_degrees && decks_equal(make_deck(candidate, limits), d)) {
      CanonicalForm form = canonical_form(candidate, limits.canonical_cap);
      if (seen.insert(form).second) {
        if (out.size() == cap) throw ResourceError("more than " + std::to_string(cap) + " preimages");
        out.push_back(parse_graph6(form.bytes));
      }
    }
    if (subset == 0) break;
    const std::uint64_t low = subset & (~subset + 1);
    const std::uint64_t ripple = subset + low;
    subset = (((ripple ^ subset) >> 2) / low) | ripple;
    if (subset >= limit) break;
  }
  std::ranges::sort(out, {}, [&](const Graph& g) { return emit_graph6(g); });
  return out;
}

bool verify_unique(const Graph& g, std::size_t cap, const Limits& limits) {
  const std::vector<Graph> preimages = brute_force_preimages(make_deck(g, limits), cap, limits);
  return preimages.size() == 1 && is_isomorphic(preimages.front(), g, limits).has_value();
}

}  // namespace recon
