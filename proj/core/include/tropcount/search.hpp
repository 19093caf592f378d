#pragma once

// Depth-first search over all marking assignments of one unmarked type.

#include <cstdint>
#include <vector>

#include "tropcount/curves.hpp"
#include "tropcount/matching.hpp"

namespace tropcount {

struct MatchedCurve {
  CombType type;  // the searched type with markings set; key is the marked canonical key
  Solution solution;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

struct SearchResult {
  std::vector<MatchedCurve> curves;  // one per marked isomorphism class, sorted by key
  bool non_general = false;          // constraints must be resampled
  SearchStats stats;
};

/// Finds every marking of `type` for which a unique curve matches `constraints`.
/// Markings whose equations become inconsistent or whose determined lengths or
/// marking positions leave their strict ranges are pruned with their whole subtree.
SearchResult search_markings(const CombType& type, const std::vector<AffineConstraint>& constraints);

}  // namespace tropcount
