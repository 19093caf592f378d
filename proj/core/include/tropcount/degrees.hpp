#pragma once

// Coarse-degrees, their refinements into degrees, and the two built-in degree sets.

#include <map>
#include <optional>
#include <vector>

#include "tropcount/curves.hpp"
#include "tropcount/lattice.hpp"

namespace tropcount {

/// Finite-support map from primitive vectors to nonnegative integers.
class CoarseDegree {
 public:
  CoarseDegree() = default;
  /// Drops zero values. Throws on a non-primitive key or a negative value.
  explicit CoarseDegree(std::map<LatticeVec, Integer> values);

  const std::map<LatticeVec, Integer>& values() const { return values_; }
  Integer at(const LatticeVec& v) const;
  Integer mass() const;
  bool balanced() const;
  bool empty() const { return values_.empty(); }

  friend bool operator==(const CoarseDegree&, const CoarseDegree&) = default;
  friend auto operator<=>(const CoarseDegree& a, const CoarseDegree& b) { return a.values_ <=> b.values_; }

 private:
  std::map<LatticeVec, Integer> values_;
};

/// Sorted and deduplicated.
using DegreeSet = std::vector<CoarseDegree>;

/// Delta_D(v) = sum over a > 0 of a Delta(a v).
CoarseDegree coarse_of(const Degree& degree);

/// Every degree whose coarse-degree is `coarse`, with end weights at most `max_weight`
/// (default: the total mass). Empty for the zero coarse-degree.
std::vector<Degree> refine_coarse(const CoarseDegree& coarse, std::optional<Integer> max_weight = std::nullopt);

/// sum_r coeffs[r] * count(ray r) = target.
struct RayConstraint {
  std::vector<Integer> coeffs;
  Integer target;
};

/// Bound on the total count used when none is given: sum of |targets| times n.
Integer default_cap(const std::vector<RayConstraint>& constraints, std::size_t rank);

/// All balanced nonnegative count vectors on `rays` meeting every constraint with total
/// count at most `cap`.
DegreeSet enumerate_coarse_degrees(const std::vector<LatticeVec>& rays, const std::vector<RayConstraint>& constraints,
                                   std::optional<Integer> cap = std::nullopt);

/// Rays (-1,0,0), (0,1,0), (1,0,0), (1,0,-1), (0,-1,0), (0,-1,1).
std::vector<LatticeVec> flag3_rays();
/// Counts on (-1,0,0) and (0,1,0) equal s and t.
std::vector<RayConstraint> flag3_constraints(const Integer& s, const Integer& t);
DegreeSet preset_flag3(const Integer& s, const Integer& t);

/// Rays (0,1,1), (-1,0,0), (0,-1,0), (1,0,1), (0,1,0), (-1,0,-1), (0,-1,-1), (1,0,0).
std::vector<LatticeVec> octahedron_rays();
/// Opposite rays carry equal counts and the total count is 2a.
std::vector<RayConstraint> octahedron_constraints(const Integer& a);
DegreeSet preset_octahedron(const Integer& a);

}  // namespace tropcount
