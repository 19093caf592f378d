#pragma once

// Affine incidence constraints and exact matching of combinatorial types.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropcount/curves.hpp"
#include "tropcount/lattice.hpp"

namespace tropcount {

/// A_i = offset + L_i with L_i spanned by a saturated basis.
struct AffineConstraint {
  std::vector<LatticeVec> directions;
  RationalVec offset;

  std::size_t rank() const { return offset.dim(); }
  /// d_i = n - dim L_i - 1.
  std::size_t codim() const { return rank() - directions.size() - 1; }
  bool contains(const RationalVec& point) const;
};

/// Saturates `directions` and validates dimensions.
AffineConstraint make_constraint(const std::vector<LatticeVec>& directions, RationalVec offset);

struct Solution {
  RationalVec root_position;     // h(vertex 0), or a point of the line for a degenerate line
  std::vector<Rational> lengths;  // per edge; 0 for unbounded edges
  std::vector<Rational> mark_params;
};

/// Images of all vertices of `type` under `solution`.
std::vector<RationalVec> vertex_positions(const CombType& type, const Solution& solution);

/// h(tail E_i) + t_i u_{E_i}.
RationalVec marked_point(const CombType& type, const Solution& solution, std::size_t marking);

enum class MatchStatus { none, unique, non_general };

struct MatchResult {
  MatchStatus status = MatchStatus::none;
  std::optional<Solution> solution;
};

/// Thrown when the codimensions do not add up to e + n - 3.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch() : std::invalid_argument("constraint codimensions do not sum to e+n-3") {}
};

/// Decides whether a unique curve of the marked type `type` matches `constraints`.
MatchResult match_constraints(const CombType& type, const std::vector<AffineConstraint>& constraints);

enum class Violation { vertex_on_constraint, not_embedded, plane_singularity };

struct GeneralityReport {
  bool general = true;
  std::vector<Violation> violations;
  std::vector<std::string> details;
};

GeneralityReport verify_general(const CombType& type, const Solution& solution,
                                const std::vector<AffineConstraint>& constraints);

struct ConstraintSpec {
  std::size_t codim = 0;
  std::vector<LatticeVec> directions;
};

/// Offsets uniform in [-bound, bound]^n drawn from a stream seeded by (seed, retry).
std::vector<AffineConstraint> generate_constraints(const std::vector<ConstraintSpec>& spec, std::size_t rank,
                                                   std::uint64_t seed, std::uint64_t bound,
                                                   std::uint64_t retry = 0);

class GeneralityExhausted : public std::runtime_error {
 public:
  GeneralityExhausted() : std::runtime_error("could not reach general position; increase bound") {}
};

}  // namespace tropcount
