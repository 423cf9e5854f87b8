#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recon/graph.hpp"
#include "recon/membership.hpp"

namespace recon {

inline constexpr std::size_t kMaxEnumerationOrder = 7;

/// Bit k of `mask` is the k-th vertex pair in graph6 order (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask);

/// One graph per isomorphism class on n vertices: the labeled graph with the
/// least edge mask in its class, in ascending mask order. The output does not
/// depend on `jobs`. Throws SizeError for n > 7.
std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t jobs = 1);

/// Star sizes a1;a2,...,ak. The a1-star carries v1.
struct StarSizes {
  std::size_t distinguished = 0;
  std::vector<std::size_t> rest;

  bool operator==(const StarSizes&) const = default;
};

/// Parses "A;B,C,...". Throws ParseError with the offending offset.
StarSizes parse_star_sizes(std::string_view text);
std::string format_star_sizes(const StarSizes& sizes);

struct MultiStar {
  Graph graph;
  ClassWitness witness;
};

/// Disjoint union of K_{1,a} for every size, the distinguished star first,
/// each hub followed by its leaves. Requires every size >= 3, a1 appearing
/// once, and no two sizes at distance exactly 1 (PreconditionError otherwise).
MultiStar generate_multi_star(const StarSizes& sizes);

/// Every valid StarSizes with at least two stars and total order <= max_order.
std::vector<StarSizes> star_battery(std::size_t max_order);

struct SurveyRow {
  std::size_t n = 0;
  std::size_t graphs = 0;
  std::size_t members = 0;
  std::size_t verified = 0;
  std::size_t counterexamples = 0;
  double seconds = 0.0;
  std::vector<Graph> member_graphs;
};

struct BatteryRow {
  StarSizes sizes;
  std::size_t n = 0;
  /// The preimage oracle found exactly one class, isomorphic to the member.
  bool verified = false;
  /// reconstruct_auto returned a verified graph isomorphic to the member.
  bool reconstructed = false;
};

struct SurveyReport {
  std::vector<SurveyRow> rows;
  std::vector<BatteryRow> battery;

  std::size_t counterexamples() const;
  /// Smallest n with at least one class member, if any was found.
  std::optional<std::size_t> minimal_member_order() const;
};

/// For 3 <= n <= n_max: enumerate, search witnesses, and check every member
/// with both the preimage oracle and reconstruct_auto. A member failing
/// either check counts as a counterexample. Each row is handed to `on_row`
/// as soon as it is complete. Finishes with the multi-star battery up to 11
/// vertices. Throws SizeError for n_max > 7.
SurveyReport survey(std::size_t n_max, std::size_t jobs = 1,
                    const std::function<void(const SurveyRow&)>& on_row = {});

}  // namespace recon
