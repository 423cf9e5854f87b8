#include "recon/membership.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "recon/errors.hpp"

namespace recon {

namespace {

constexpr std::size_t kMaxEligibleClasses = 24;

std::size_t distance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

// Degree value -> multiplicity, for any degree list.
std::map<std::size_t, std::size_t> degree_counts(std::span<const std::size_t> degrees) {
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t d : degrees) ++counts[d];
  return counts;
}

bool has_neighbor_degree(const std::map<std::size_t, std::size_t>& counts, std::size_t d) {
  return counts.contains(d + 1) || (d > 0 && counts.contains(d - 1));
}

// Degrees that may appear in S once v1 has degree d1: not d1 itself, and no
// degree at distance exactly 1 anywhere in the graph.
std::vector<std::size_t> eligible_other_degrees(const std::map<std::size_t, std::size_t>& counts, std::size_t d1) {
  std::vector<std::size_t> out;
  for (const auto& [d, count] : counts) {
    if (d != d1 && !has_neighbor_degree(counts, d)) out.push_back(d);
  }
  if (out.size() > kMaxEligibleClasses) {
    throw ResourceError("too many candidate degree classes (" + std::to_string(out.size()) + ")");
  }
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  const auto va = a.to_vector();
  const auto vb = b.to_vector();
  return std::ranges::lexicographical_compare(va, vb);
}

}  // namespace

void validate_witness(const ClassWitness& w, std::size_t n) {
  if (w.v1 >= n) throw WitnessShapeError("v1 = " + std::to_string(w.v1) + " is not a vertex");
  if (!w.others.is_subset_of(VertexSet::first(n))) throw WitnessShapeError("S contains a missing vertex");
  if (w.others.contains(w.v1)) throw WitnessShapeError("v1 must not belong to S");
  if (w.others.empty()) throw WitnessShapeError("S must be nonempty");
  if (w.k() >= n) {
    throw WitnessShapeError("k = " + std::to_string(w.k()) + " must be below n = " + std::to_string(n));
  }
}

ConditionReport check_conditions(const Graph& g, const ClassWitness& w) {
  validate_witness(w, g.order());
  ConditionReport report;
  auto fail = [&](int condition, std::vector<Vertex> vertices) {
    report.holds[static_cast<std::size_t>(condition - 1)] = false;
    if (!report.first_violation) report.first_violation = Violation{condition, std::move(vertices)};
  };
  report.holds.fill(true);

  const VertexSet closed_v1 = closed_neighborhood(g, w.v1);
  VertexSet closed_others;
  for (Vertex s : w.others) closed_others |= closed_neighborhood(g, s);

  const VertexSet uncovered = g.vertices() - (closed_v1 | closed_others);
  if (!uncovered.empty()) fail(1, {*uncovered.begin()});

  const VertexSet shared = closed_v1 & closed_others;
  if (!shared.empty()) fail(2, {*shared.begin()});

  const VertexSet members = w.others.with(w.v1);
  [&] {
    for (Vertex i : members)
      for (Vertex j : g.vertices().without(i))
        if (distance(g.degree(i), g.degree(j)) == 1) return fail(3, {i, j});
  }();

  for (Vertex u : g.vertices().without(w.v1)) {
    if (g.degree(u) == g.degree(w.v1)) {
      fail(4, {w.v1, u});
      break;
    }
  }

  [&] {
    for (Vertex s : w.others)
      for (Vertex u : g.vertices() - w.others)
        if (g.degree(u) == g.degree(s)) return fail(5, {s, u});
  }();

  return report;
}

std::optional<ClassWitness> find_witness(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;

  std::vector<std::size_t> degrees(n);
  std::map<std::size_t, VertexSet> classes;
  for (Vertex v = 0; v < n; ++v) {
    degrees[v] = g.degree(v);
    classes[degrees[v]] = classes[degrees[v]].with(v);
  }
  const auto counts = degree_counts(degrees);

  for (Vertex v1 = 0; v1 < n; ++v1) {
    const std::size_t d1 = degrees[v1];
    if (counts.at(d1) != 1 || has_neighbor_degree(counts, d1)) continue;

    const std::vector<std::size_t> eligible = eligible_other_degrees(counts, d1);
    std::optional<VertexSet> best;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << eligible.size()); ++mask) {
      VertexSet s;
      for (std::size_t i = 0; i < eligible.size(); ++i)
        if ((mask >> i) & 1u) s |= classes.at(eligible[i]);
      if (1 + s.size() >= n) continue;
      if (best && !lex_less(s, *best)) continue;
      if (check_conditions(g, ClassWitness{v1, s}).all()) best = s;
    }
    if (best) return ClassWitness{v1, *best};
  }
  return std::nullopt;
}

std::vector<DegreeProfile> class_degree_profiles(std::span<const std::size_t> degrees) {
  const std::size_t n = degrees.size();
  const auto counts = degree_counts(degrees);
  std::vector<DegreeProfile> out;
  for (const auto& [d1, count] : counts) {
    if (count != 1 || has_neighbor_degree(counts, d1)) continue;
    const std::vector<std::size_t> eligible = eligible_other_degrees(counts, d1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << eligible.size()); ++mask) {
      DegreeProfile profile{d1, {}};
      for (std::size_t i = 0; i < eligible.size(); ++i)
        if ((mask >> i) & 1u) profile.others.insert(profile.others.end(), counts.at(eligible[i]), eligible[i]);
      if (1 + profile.others.size() >= n) continue;
      std::ranges::sort(profile.others);
      out.push_back(std::move(profile));
    }
  }
  std::ranges::sort(out, [](const DegreeProfile& a, const DegreeProfile& b) {
    if (a.d1 != b.d1) return a.d1 > b.d1;
    return a.others < b.others;
  });
  return out;
}

}  // namespace recon
