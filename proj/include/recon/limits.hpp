#pragma once

#include <cstddef>

namespace recon {

/// Size bounds shared by the canonical-form, deck and oracle routines.
///
/// The defaults are the desk-scale caps; callers that knowingly work with
/// larger graphs (e.g. multi-star families beyond 11 vertices) raise them.
struct Limits {
  /// Largest order accepted by canonical_form. At most 62.
  std::size_t canonical_cap = 12;
  /// Largest deck size the brute-force preimage oracle accepts.
  std::size_t oracle_max_order = 11;
  /// Search-node budget for direct isomorphism backtracking.
  std::size_t isomorphism_node_budget = std::size_t{1} << 22;
};

inline constexpr std::size_t kDefaultPreimageCap = 64;

}  // namespace recon
