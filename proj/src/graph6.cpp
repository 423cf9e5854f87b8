#include "recon/graph6.hpp"

#include <array>
#include <cstdint>

#include "recon/errors.hpp"

namespace recon {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

// Bits are laid out column by column over the upper triangle:
// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
template <typename Fn>
void for_each_pair(std::size_t n, Fn&& fn) {
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) fn(i, j, k++);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 line", 0);

  const int head = static_cast<unsigned char>(text[0]);
  if (head == kMaxByte) throw ParseError("graph6 long form (n > 62) is not supported", 0);
  if (head < kBias || head > kMaxByte) throw ParseError("size byte out of range", 0);

  const std::size_t n = static_cast<std::size_t>(head - kBias);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  for (std::size_t i = 1; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxByte) throw ParseError("data byte out of range", i);
  }
  if (text.size() < expected) throw ParseError("graph6 line too short for n = " + std::to_string(n), text.size());
  if (text.size() > expected) throw ParseError("graph6 line too long for n = " + std::to_string(n), expected);

  auto bit_at = [&](std::size_t k) {
    const int group = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
    return ((group >> (5 - k % 6)) & 1) != 0;
  };
  for (std::size_t k = bits; k < 6 * (expected - 1); ++k) {
    if (bit_at(k)) throw ParseError("nonzero padding bit", 1 + k / 6);
  }

  std::array<std::uint64_t, kMaxVertices> rows{};
  for_each_pair(n, [&](Vertex i, Vertex j, std::size_t k) {
    if (bit_at(k)) {
      rows[i] |= std::uint64_t{1} << j;
      rows[j] |= std::uint64_t{1} << i;
    }
  });
  return Graph::from_rows(std::span<const std::uint64_t>(rows.data(), n));
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) throw SizeError("graph6 short form supports n <= 62, got " + std::to_string(n));

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::string out(1 + (bits + 5) / 6, static_cast<char>(kBias));
  out[0] = static_cast<char>(kBias + n);
  for_each_pair(n, [&](Vertex i, Vertex j, std::size_t k) {
    if ((g.row(i) >> j) & 1u) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
  });
  return out;
}

}  // namespace recon
