#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

/// A distinguished vertex v1 together with the unordered set S = {v2..vk}.
struct ClassWitness {
  Vertex v1 = 0;
  VertexSet others;

  /// k = 1 + |S|
  std::size_t k() const { return 1 + others.size(); }

  bool operator==(const ClassWitness&) const = default;
};

/// Throws WitnessShapeError unless v1 < n, v1 is not in S, S is a nonempty
/// subset of V and 1 < k < n.
void validate_witness(const ClassWitness& w, std::size_t n);

struct Violation {
  /// 1-based condition index.
  int condition = 0;
  /// Vertices exhibiting the failure (see check_conditions).
  std::vector<Vertex> vertices;

  bool operator==(const Violation&) const = default;
};

struct ConditionReport {
  std::array<bool, 5> holds{};
  /// Lowest-numbered failing condition, if any.
  std::optional<Violation> first_violation;

  bool all() const { return !first_violation.has_value(); }
  bool condition(int i) const { return holds[static_cast<std::size_t>(i - 1)]; }
};

/// Evaluates the five membership conditions for the witness (v1, S):
///
///   1. the closed neighborhoods of v1 and of every s in S cover V;
///   2. N[v1] is disjoint from the union of N[s] over S;
///   3. no vertex of {v1} + S has a degree at distance exactly 1 from the
///      degree of any other vertex;
///   4. v1 is the only vertex of degree d(v1);
///   5. for each s in S, every vertex of degree d(s) lies in S.
///
/// Violation vertices: (1) an uncovered vertex; (2) a shared vertex; (3) the
/// offending pair; (4) v1 and another vertex of its degree; (5) s and a vertex
/// outside S with the same degree.
ConditionReport check_conditions(const Graph& g, const ClassWitness& w);

/// Searches for a witness. Candidates for v1 are the unique-degree vertices
/// with no vertex at degree distance 1, tried in ascending order; for the
/// first v1 that admits any S, the lexicographically least sorted S (a union
/// of whole degree classes) is returned.
std::optional<ClassWitness> find_witness(const Graph& g);

/// Degree data a witness can have: d(v1) and the multiset {d(s) : s in S}.
struct DegreeProfile {
  std::size_t d1 = 0;
  /// Ascending, with multiplicities.
  std::vector<std::size_t> others;

  auto operator<=>(const DegreeProfile&) const = default;
};

/// Every profile compatible with conditions (3)-(5) for a graph with the given
/// degree multiset (any order). Sorted by descending d1, then ascending
/// lexicographic `others`.
std::vector<DegreeProfile> class_degree_profiles(std::span<const std::size_t> degrees);

}  // namespace recon
