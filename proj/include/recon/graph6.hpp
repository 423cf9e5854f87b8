#pragma once

#include <string>
#include <string_view>

#include "recon/graph.hpp"

namespace recon {

/// Largest order representable in the one-byte-size graph6 form.
inline constexpr std::size_t kMaxGraph6Order = 62;

/// Decodes one short-form graph6 line (trailing '\n' / '\r' tolerated).
/// Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes g as short-form graph6; throws SizeError when g.order() > 62.
std::string emit_graph6(const Graph& g);

}  // namespace recon
