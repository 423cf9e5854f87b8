#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

namespace recon {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Graphs hold one 64-bit adjacency word per vertex.
inline constexpr std::size_t kMaxVertices = 64;

/// A subset of {0..63} packed into a single word.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vertices);

  /// {0..n-1}
  static constexpr VertexSet first(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return v < 64 && ((bits_ >> v) & 1u) != 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a symmetric, loop-free bit matrix. Two Graph values compare
/// equal only when they are the same labeled graph; use canonical_form or
/// is_isomorphic for equality up to relabeling.
class Graph {
 public:
  /// The graph with no vertices.
  Graph() = default;

  static Graph empty(std::size_t n);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges);
  /// rows[v] is the neighbor mask of v; validated for symmetry and loops.
  static Graph from_rows(std::span<const std::uint64_t> rows);

  std::size_t order() const { return n_; }
  VertexSet vertices() const { return VertexSet::first(n_); }

  bool adjacent(Vertex u, Vertex v) const;
  /// N(v)
  VertexSet neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  std::uint64_t row(Vertex v) const { return rows_[v]; }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

/// N[v] = N(v) + v
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Removes v and compacts the remaining labels, preserving their order.
Graph delete_vertex(const Graph& g, Vertex v);

/// Appends a vertex labeled g.order() adjacent exactly to `neighbors`.
Graph add_vertex(const Graph& g, VertexSet neighbors);

/// Vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Degrees sorted in descending order.
std::vector<std::size_t> degree_sequence(const Graph& g);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// K_{1,leaves}; the hub is vertex 0.
Graph star_graph(std::size_t leaves);

}  // namespace recon
