#include "recon/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "recon/errors.hpp"
#include "recon/graph6.hpp"

namespace recon {

namespace {

using Rows = std::array<std::uint64_t, kMaxVertices>;
using Labels = std::array<std::uint8_t, kMaxVertices>;

// Ordered partition of positions 0..n-1. lab[p] is the vertex at position p;
// bit p of `starts` marks the first position of a cell.
struct Partition {
  Labels lab{};
  std::uint64_t starts = 1;
  std::size_t n = 0;

  std::size_t cell_end(std::size_t start) const {
    const std::uint64_t later = starts & ~((std::uint64_t{2} << start) - 1);
    return later == 0 ? n : static_cast<std::size_t>(std::countr_zero(later));
  }
  bool discrete() const { return static_cast<std::size_t>(std::popcount(starts)) == n; }
};

// Splits cells until the partition is equitable. Every choice depends only on
// cell positions and cell contents as sets, so the result commutes with
// relabeling of the graph.
void refine(const Graph& g, Partition& p) {
  std::array<std::uint32_t, kMaxVertices> key{};
  for (;;) {
    bool split = false;
    for (std::uint64_t s_bits = p.starts; s_bits != 0 && !split; s_bits &= s_bits - 1) {
      const std::size_t s_start = static_cast<std::size_t>(std::countr_zero(s_bits));
      const std::size_t s_end = p.cell_end(s_start);
      std::uint64_t splitter = 0;
      for (std::size_t i = s_start; i < s_end; ++i) splitter |= std::uint64_t{1} << p.lab[i];

      for (std::uint64_t c_bits = p.starts; c_bits != 0; c_bits &= c_bits - 1) {
        const std::size_t c_start = static_cast<std::size_t>(std::countr_zero(c_bits));
        const std::size_t c_end = p.cell_end(c_start);
        if (c_end - c_start == 1) continue;

        bool uniform = true;
        for (std::size_t i = c_start; i < c_end; ++i) {
          key[i] = static_cast<std::uint32_t>(std::popcount(g.row(p.lab[i]) & splitter));
          if (key[i] != key[c_start]) uniform = false;
        }
        if (uniform) continue;

        std::array<std::uint32_t, kMaxVertices> packed{};
        for (std::size_t i = c_start; i < c_end; ++i) packed[i] = (key[i] << 8) | p.lab[i];
        std::sort(packed.begin() + static_cast<std::ptrdiff_t>(c_start),
                  packed.begin() + static_cast<std::ptrdiff_t>(c_end));
        for (std::size_t i = c_start; i < c_end; ++i) {
          p.lab[i] = static_cast<std::uint8_t>(packed[i] & 0xff);
          if (i > c_start && (packed[i] >> 8) != (packed[i - 1] >> 8)) p.starts |= std::uint64_t{1} << i;
        }
        split = true;
        break;
      }
    }
    if (!split) return;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Partition root;
    root.n = n_;
    for (std::size_t i = 0; i < n_; ++i) root.lab[i] = static_cast<std::uint8_t>(i);
    if (n_ == 0) {
      have_best_ = true;
      return;
    }
    refine(g_, root);
    std::vector<Vertex> prefix;
    visit(root, prefix);
  }

  const Labels& best_labels() const { return best_lab_; }
  const Rows& best_rows() const { return best_cert_; }

 private:
  void visit(const Partition& p, std::vector<Vertex>& prefix) {
    if (p.discrete()) {
      leaf(p);
      return;
    }
    std::size_t start = 0;
    std::size_t end = 0;
    for (std::uint64_t bits = p.starts; bits != 0; bits &= bits - 1) {
      start = static_cast<std::size_t>(std::countr_zero(bits));
      end = p.cell_end(start);
      if (end - start > 1) break;
    }

    std::vector<Vertex> cell(p.lab.begin() + static_cast<std::ptrdiff_t>(start),
                             p.lab.begin() + static_cast<std::ptrdiff_t>(end));
    std::ranges::sort(cell);
    std::vector<Vertex> explored;
    for (Vertex v : cell) {
      if (!explored.empty() && same_orbit_as_any(v, explored, prefix)) continue;

      Partition child = p;
      const auto at = std::find(child.lab.begin() + static_cast<std::ptrdiff_t>(start),
                                child.lab.begin() + static_cast<std::ptrdiff_t>(end), v);
      std::iter_swap(child.lab.begin() + static_cast<std::ptrdiff_t>(start), at);
      child.starts |= std::uint64_t{1} << (start + 1);
      refine(g_, child);

      prefix.push_back(v);
      visit(child, prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  // Orbits of the group generated by known automorphisms fixing `prefix`
  // pointwise.
  bool same_orbit_as_any(Vertex v, const std::vector<Vertex>& explored, const std::vector<Vertex>& prefix) const {
    std::array<std::uint8_t, kMaxVertices> parent{};
    std::iota(parent.begin(), parent.begin() + static_cast<std::ptrdiff_t>(n_), std::uint8_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const Labels& gamma : autos_) {
      const bool fixes = std::ranges::all_of(prefix, [&](Vertex x) { return gamma[x] == x; });
      if (!fixes) continue;
      for (std::size_t x = 0; x < n_; ++x) {
        const std::size_t a = find(x);
        const std::size_t b = find(gamma[x]);
        if (a != b) parent[a] = static_cast<std::uint8_t>(b);
      }
    }
    const std::size_t root = find(v);
    return std::ranges::any_of(explored, [&](Vertex u) { return find(u) == root; });
  }

  void leaf(const Partition& p) {
    Labels pos{};
    for (std::size_t i = 0; i < n_; ++i) pos[p.lab[i]] = static_cast<std::uint8_t>(i);
    Rows cert{};
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (Vertex u : VertexSet(g_.row(p.lab[i]))) r |= std::uint64_t{1} << pos[u];
      cert[i] = r;
    }

    if (!have_best_) {
      have_best_ = true;
      best_cert_ = cert;
      best_lab_ = p.lab;
      return;
    }
    const auto cmp = std::lexicographical_compare_three_way(cert.begin(), cert.begin() + static_cast<std::ptrdiff_t>(n_),
                                                            best_cert_.begin(),
                                                            best_cert_.begin() + static_cast<std::ptrdiff_t>(n_));
    if (cmp > 0) {
      best_cert_ = cert;
      best_lab_ = p.lab;
    } else if (cmp == 0) {
      Labels gamma{};
      bool identity = true;
      for (std::size_t i = 0; i < n_; ++i) {
        gamma[p.lab[i]] = best_lab_[i];
        identity = identity && p.lab[i] == best_lab_[i];
      }
      if (!identity) autos_.push_back(gamma);
    }
  }

  const Graph& g_;
  std::size_t n_;
  bool have_best_ = false;
  Rows best_cert_{};
  Labels best_lab_{};
  std::vector<Labels> autos_;
};

void check_cap(const Graph& g, std::size_t cap) {
  if (cap > kMaxGraph6Order) throw SizeError("canonical-form cap above " + std::to_string(kMaxGraph6Order));
  if (g.order() > cap) {
    throw ResourceError("canonical form requested for order " + std::to_string(g.order()) + " above cap " +
                    std::to_string(cap));
  }
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::size_t cap) {
  check_cap(g, cap);
  CanonicalSearch search(g);
  search.run();
  const std::size_t n = g.order();
  CanonicalLabeling out;
  out.order.assign(search.best_labels().begin(), search.best_labels().begin() + static_cast<std::ptrdiff_t>(n));
  const Graph relabeled = Graph::from_rows(std::span<const std::uint64_t>(search.best_rows().data(), n));
  out.form.bytes = emit_graph6(relabeled);
  return out;
}

CanonicalForm canonical_form(const Graph& g, std::size_t cap) { return canonical_labeling(g, cap).form; }

Graph canonical_graph(const Graph& g, std::size_t cap) { return parse_graph6(canonical_form(g, cap).bytes); }

bool is_isomorphism(const Graph& g, const Graph& h, const IsoMap& f) {
  const std::size_t n = g.order();
  if (h.order() != n || f.forward.size() != n) return false;
  std::uint64_t seen = 0;
  for (Vertex x : f.forward) {
    if (x >= n || ((seen >> x) & 1u)) return false;
    seen |= std::uint64_t{1} << x;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != h.adjacent(f.forward[u], f.forward[v])) return false;
  return true;
}

std::optional<IsoMap> is_isomorphic(const Graph& g, const Graph& h, const Limits& limits) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;
  if (g.order() > limits.canonical_cap) return find_isomorphism_backtracking(g, h, limits.isomorphism_node_budget);

  const CanonicalLabeling lg = canonical_labeling(g, limits.canonical_cap);
  const CanonicalLabeling lh = canonical_labeling(h, limits.canonical_cap);
  if (lg.form != lh.form) return std::nullopt;
  IsoMap f{std::vector<Vertex>(g.order())};
  for (std::size_t p = 0; p < g.order(); ++p) f.forward[lg.order[p]] = lh.order[p];
  return f;
}

std::optional<IsoMap> find_isomorphism_backtracking(const Graph& g, const Graph& h, std::size_t node_budget) {
  const std::size_t n = g.order();
  if (h.order() != n || g.edge_count() != h.edge_count()) return std::nullopt;

  // Visit vertices so that each one has as many already-placed neighbors as possible.
  std::vector<Vertex> sequence;
  VertexSet placed;
  while (sequence.size() < n) {
    Vertex pick = n;
    std::pair<std::size_t, std::size_t> best{0, 0};
    for (Vertex v : g.vertices() - placed) {
      const std::pair<std::size_t, std::size_t> score{(g.neighbors(v) & placed).size(), g.degree(v)};
      if (pick == n || score > best) {
        pick = v;
        best = score;
      }
    }
    sequence.push_back(pick);
    placed = placed.with(pick);
  }

  std::vector<Vertex> image(n, n);
  VertexSet used;
  std::size_t nodes = 0;
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Vertex u = sequence[depth];
    VertexSet wanted;
    for (std::size_t i = 0; i < depth; ++i)
      if (g.adjacent(u, sequence[i])) wanted = wanted.with(image[sequence[i]]);
    for (Vertex w : h.vertices() - used) {
      if (h.degree(w) != g.degree(u)) continue;
      if (++nodes > node_budget) throw ResourceError("isomorphism search exceeded its node budget");
      if ((h.neighbors(w) & used) != wanted) continue;
      image[u] = w;
      used = used.with(w);
      if (self(self, depth + 1)) return true;
      used = used.without(w);
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return IsoMap{image};
}

}  // namespace recon
