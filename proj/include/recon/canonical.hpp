#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "recon/graph.hpp"
#include "recon/limits.hpp"

namespace recon {

/// Label-independent byte string identifying an isomorphism class.
///
/// The bytes are the graph6 encoding of the canonically relabeled graph, so
/// they are printable and can be decoded back into a representative.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
};

/// Bijection between the vertex sets of two graphs: forward[u] is the image of u.
struct IsoMap {
  std::vector<Vertex> forward;

  bool operator==(const IsoMap&) const = default;
};

struct CanonicalLabeling {
  /// order[p] is the vertex of the input placed at canonical position p.
  std::vector<Vertex> order;
  CanonicalForm form;
};

/// Canonical labeling by equitable partition refinement and individualization,
/// taking the lexicographically greatest leaf. Subtrees equivalent under an
/// automorphism already discovered are skipped.
///
/// Throws ResourceError when g.order() exceeds `cap`; the cap itself may not
/// exceed 62 (SizeError).
CanonicalLabeling canonical_labeling(const Graph& g, std::size_t cap = Limits{}.canonical_cap);

CanonicalForm canonical_form(const Graph& g, std::size_t cap = Limits{}.canonical_cap);

/// The canonical representative of g's isomorphism class.
Graph canonical_graph(const Graph& g, std::size_t cap = Limits{}.canonical_cap);

/// True iff f is a bijection V(g) -> V(h) preserving adjacency both ways.
bool is_isomorphism(const Graph& g, const Graph& h, const IsoMap& f);

/// Returns an isomorphism g -> h when one exists.
///
/// Graphs within limits.canonical_cap go through canonical labelings; larger
/// ones fall back to find_isomorphism_backtracking.
std::optional<IsoMap> is_isomorphic(const Graph& g, const Graph& h, const Limits& limits = {});

/// Degree-constrained backtracking. Throws ResourceError once more than
/// `node_budget` partial assignments have been tried.
std::optional<IsoMap> find_isomorphism_backtracking(const Graph& g, const Graph& h, std::size_t node_budget);

}  // namespace recon
