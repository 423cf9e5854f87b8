#include "recon/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "recon/errors.hpp"

namespace recon {

namespace {

void check_order(std::size_t n) {
  if (n > kMaxVertices) {
    throw SizeError("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> vertices) {
  for (Vertex v : vertices) {
    if (v >= kMaxVertices) throw VertexRangeError("vertex " + std::to_string(v) + " out of range");
    bits_ |= std::uint64_t{1} << v;
  }
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

Graph Graph::empty(std::size_t n) {
  check_order(n);
  Graph g;
  g.n_ = n;
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g = empty(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    g.rows_[u] |= std::uint64_t{1} << v;
    g.rows_[v] |= std::uint64_t{1} << u;
  }
  return g;
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  Graph g = empty(rows.size());
  const std::uint64_t all = VertexSet::first(g.n_).bits();
  for (Vertex v = 0; v < g.n_; ++v) {
    if ((rows[v] & ~all) != 0) throw PreconditionError("row " + std::to_string(v) + " references missing vertices");
    if ((rows[v] >> v) & 1u) throw PreconditionError("self-loop at vertex " + std::to_string(v));
    g.rows_[v] = rows[v];
  }
  for (Vertex u = 0; u < g.n_; ++u) {
    for (Vertex v : VertexSet(g.rows_[u])) {
      if (((g.rows_[v] >> u) & 1u) == 0) {
        throw PreconditionError("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
      }
    }
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw VertexRangeError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return ((rows_[u] >> v) & 1u) != 0;
}

VertexSet Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return VertexSet(rows_[v]);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Vertex v = 0; v < n_; ++v) twice += static_cast<std::size_t>(std::popcount(rows_[v]));
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    const std::uint64_t above = u + 1 < 64 ? ~((std::uint64_t{2} << u) - 1) : 0;
    for (Vertex v : VertexSet(rows_[u] & above)) out.emplace_back(u, v);
  }
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v).with(v); }

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw VertexRangeError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
  }
  const std::uint64_t low = (std::uint64_t{1} << v) - 1;
  std::array<std::uint64_t, kMaxVertices> rows{};
  std::size_t out = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u == v) continue;
    const std::uint64_t r = g.row(u);
    // bits above v shift down by one
    const std::uint64_t high = v + 1 < 64 ? (r >> (v + 1)) << v : 0;
    rows[out++] = (r & low) | high;
  }
  return Graph::from_rows(std::span<const std::uint64_t>(rows.data(), out));
}

Graph add_vertex(const Graph& g, VertexSet neighbors) {
  const std::size_t n = g.order();
  check_order(n + 1);
  if (!neighbors.is_subset_of(g.vertices())) throw VertexRangeError("new vertex attached to a missing vertex");
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (Vertex u = 0; u < n; ++u) {
    rows[u] = g.row(u) | (neighbors.contains(u) ? std::uint64_t{1} << n : 0);
  }
  rows[n] = neighbors.bits();
  return Graph::from_rows(std::span<const std::uint64_t>(rows.data(), n + 1));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw PreconditionError("permutation size does not match graph order");
  std::uint64_t seen = 0;
  for (Vertex p : perm) {
    if (p >= n || ((seen >> p) & 1u)) throw PreconditionError("relabeling is not a permutation");
    seen |= std::uint64_t{1} << p;
  }
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (Vertex u = 0; u < n; ++u) {
    std::uint64_t r = 0;
    for (Vertex v : VertexSet(g.row(u))) r |= std::uint64_t{1} << perm[v];
    rows[perm[u]] = r;
  }
  return Graph::from_rows(std::span<const std::uint64_t>(rows.data(), n));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t n = a.order() + b.order();
  check_order(n);
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (Vertex u = 0; u < a.order(); ++u) rows[u] = a.row(u);
  for (Vertex u = 0; u < b.order(); ++u) rows[a.order() + u] = b.row(u) << a.order();
  return Graph::from_rows(std::span<const std::uint64_t>(rows.data(), n));
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::ranges::sort(out, std::greater<>());
  return out;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

}  // namespace recon
