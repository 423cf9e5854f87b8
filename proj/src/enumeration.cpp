#include "recon/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <tuple>
#include <thread>
#include <unordered_map>

#include "recon/canonical.hpp"
#include "recon/deck.hpp"
#include "recon/errors.hpp"
#include "recon/reconstruct.hpp"

namespace recon {

namespace {

std::size_t distance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

// canonical bytes -> least edge mask seen
using ClassMap = std::unordered_map<std::string, std::uint64_t>;

ClassMap classify_range(std::size_t n, std::uint64_t begin, std::uint64_t end) {
  ClassMap classes;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    classes.try_emplace(canonical_form(graph_from_edge_mask(n, mask), kMaxEnumerationOrder).bytes, mask);
  }
  return classes;
}

struct MemberCheck {
  bool verified = false;
  bool reconstructed = false;
};

MemberCheck check_member(const Graph& g) {
  MemberCheck check;
  check.verified = verify_unique(g);
  const auto rebuilt = reconstruct_auto(make_deck(g));
  check.reconstructed = rebuilt && rebuilt->verified && is_isomorphic(rebuilt->graph, g).has_value();
  return check;
}

std::size_t star_order(const StarSizes& sizes) {
  std::size_t order = sizes.distinguished + 1;
  for (std::size_t a : sizes.rest) order += a + 1;
  return order;
}

}  // namespace

Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask) {
  std::array<std::uint64_t, kMaxVertices> rows{};
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1u) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows(std::span<const std::uint64_t>(rows.data(), n));
}

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t jobs) {
  if (n > kMaxEnumerationOrder) {
    throw SizeError("exhaustive enumeration supports n <= " + std::to_string(kMaxEnumerationOrder));
  }
  const std::uint64_t total = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
  jobs = std::clamp<std::size_t>(jobs, 1, 256);
  if (total < 4096) jobs = 1;

  std::vector<ClassMap> shards(jobs);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    const std::uint64_t begin = total * w / jobs;
    const std::uint64_t end = total * (w + 1) / jobs;
    workers.emplace_back([&shards, w, n, begin, end] { shards[w] = classify_range(n, begin, end); });
  }
  for (auto& t : workers) t.join();

  ClassMap merged;
  for (const ClassMap& shard : shards) {
    for (const auto& [bytes, mask] : shard) {
      auto [it, inserted] = merged.try_emplace(bytes, mask);
      if (!inserted) it->second = std::min(it->second, mask);
    }
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(merged.size());
  for (const auto& [bytes, mask] : merged) masks.push_back(mask);
  std::ranges::sort(masks);

  std::vector<Graph> out;
  out.reserve(masks.size());
  for (std::uint64_t mask : masks) out.push_back(graph_from_edge_mask(n, mask));
  return out;
}

StarSizes parse_star_sizes(std::string_view text) {
  StarSizes sizes;
  std::size_t pos = 0;
  auto read_number = [&]() {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) throw ParseError("expected a star size", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  sizes.distinguished = read_number();
  if (pos >= text.size() || text[pos] != ';') throw ParseError("expected ';' after the first star size", pos);
  ++pos;
  sizes.rest.push_back(read_number());
  while (pos < text.size()) {
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
    sizes.rest.push_back(read_number());
  }
  return sizes;
}

std::string format_star_sizes(const StarSizes& sizes) {
  std::string out = std::to_string(sizes.distinguished) + ';';
  for (std::size_t i = 0; i < sizes.rest.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(sizes.rest[i]);
  }
  return out;
}

MultiStar generate_multi_star(const StarSizes& sizes) {
  if (sizes.rest.empty()) throw PreconditionError("at least two stars are required");
  std::vector<std::size_t> all{sizes.distinguished};
  all.insert(all.end(), sizes.rest.begin(), sizes.rest.end());

  std::size_t order = 0;
  for (std::size_t a : all) {
    if (a < 3) throw PreconditionError("star size " + std::to_string(a) + " is below 3");
    order += a + 1;
  }
  if (order > kMaxVertices) throw PreconditionError("multi-star has " + std::to_string(order) + " vertices");
  if (std::ranges::count(sizes.rest, sizes.distinguished) != 0) {
    throw PreconditionError("distinguished size " + std::to_string(sizes.distinguished) + " occurs more than once");
  }
  for (std::size_t a : all)
    for (std::size_t b : all)
      if (distance(a, b) == 1) {
        throw PreconditionError("sizes " + std::to_string(std::min(a, b)) + " and " + std::to_string(std::max(a, b)) +
                                " differ by 1");
      }

  Graph g;
  ClassWitness witness;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Vertex hub = g.order();
    if (i == 0) {
      witness.v1 = hub;
    } else {
      witness.others = witness.others.with(hub);
    }
    g = disjoint_union(g, star_graph(all[i]));
  }
  return MultiStar{g, witness};
}

std::vector<StarSizes> star_battery(std::size_t max_order) {
  std::vector<StarSizes> out;
  std::vector<std::size_t> current;
  // Nondecreasing size lists; each valid list yields one entry per size of multiplicity 1.
  auto extend = [&](auto&& self, std::size_t min_size, std::size_t used) -> void {
    if (current.size() >= 2) {
      for (std::size_t i = 0; i < current.size(); ++i) {
        if (std::ranges::count(current, current[i]) != 1) continue;
        StarSizes s{current[i], {}};
        for (std::size_t j = 0; j < current.size(); ++j)
          if (j != i) s.rest.push_back(current[j]);
        out.push_back(std::move(s));
      }
    }
    for (std::size_t a = min_size; used + a + 1 <= max_order; ++a) {
      if (std::ranges::any_of(current, [a](std::size_t b) { return distance(a, b) == 1; })) continue;
      current.push_back(a);
      self(self, a, used + a + 1);
      current.pop_back();
    }
  };
  extend(extend, 3, 0);
  std::ranges::sort(out, [](const StarSizes& x, const StarSizes& y) {
    const std::size_t nx = star_order(x);
    const std::size_t ny = star_order(y);
    return std::tie(nx, x.distinguished, x.rest) < std::tie(ny, y.distinguished, y.rest);
  });
  return out;
}

std::size_t SurveyReport::counterexamples() const {
  std::size_t total = 0;
  for (const SurveyRow& row : rows) total += row.counterexamples;
  for (const BatteryRow& row : battery) total += (row.verified && row.reconstructed) ? 0 : 1;
  return total;
}

std::optional<std::size_t> SurveyReport::minimal_member_order() const {
  for (const SurveyRow& row : rows)
    if (row.members > 0) return row.n;
  return std::nullopt;
}

SurveyReport survey(std::size_t n_max, std::size_t jobs, const std::function<void(const SurveyRow&)>& on_row) {
  if (n_max > kMaxEnumerationOrder) {
    throw SizeError("survey supports n <= " + std::to_string(kMaxEnumerationOrder));
  }
  SurveyReport report;
  for (std::size_t n = 3; n <= n_max; ++n) {
    const auto started = std::chrono::steady_clock::now();
    SurveyRow row;
    row.n = n;
    const std::vector<Graph> graphs = enumerate_graphs(n, jobs);
    row.graphs = graphs.size();
    for (const Graph& g : graphs) {
      if (!find_witness(g)) continue;
      ++row.members;
      row.member_graphs.push_back(g);
      const MemberCheck check = check_member(g);
      if (check.verified) ++row.verified;
      if (!check.verified || !check.reconstructed) ++row.counterexamples;
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (on_row) on_row(row);
    report.rows.push_back(std::move(row));
  }

  for (const StarSizes& sizes : star_battery(11)) {
    const MultiStar member = generate_multi_star(sizes);
    const MemberCheck check = check_member(member.graph);
    report.battery.push_back(BatteryRow{sizes, member.graph.order(), check.verified, check.reconstructed});
  }
  return report;
}

}  // namespace recon
