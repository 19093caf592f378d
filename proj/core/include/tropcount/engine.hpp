#pragma once

// End-to-end counting of tropical curves for a problem.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropcount/curves.hpp"
#include "tropcount/degrees.hpp"
#include "tropcount/matching.hpp"
#include "tropcount/multiplicity.hpp"
#include "tropcount/search.hpp"

namespace tropcount {

struct DegreeSource {
  enum class Kind { explicit_degrees, flag3, octahedron, coarse };
  Kind kind = Kind::explicit_degrees;
  std::vector<Degree> degrees;            // explicit_degrees
  Integer s = 0, t = 0;                   // flag3 class
  Integer a = 0;                          // octahedron class
  std::vector<LatticeVec> rays;           // coarse
  std::vector<RayConstraint> ray_constraints;
  std::optional<Integer> cap;
  std::optional<Integer> max_weight;      // refinement bound
};

struct ConstraintSource {
  enum class Kind { explicit_list, generate };
  Kind kind = Kind::generate;
  std::vector<AffineConstraint> constraints;  // explicit_list
  std::vector<ConstraintSpec> spec;           // generate
  std::uint64_t seed = 1;
  std::uint64_t bound = 100;
  std::uint64_t retries = 32;
};

struct Options {
  unsigned workers = 1;
  bool long_run = false;
  unsigned odd_insertions = 0;
};

/// Divisor classes inserted on top of the counted constraints.
struct DivisorInsertions {
  std::vector<Integer> pairings;
  std::vector<unsigned long> exponents;
};

struct Problem {
  std::size_t rank = 0;
  DegreeSource degree_source;
  ConstraintSource constraints;
  Options options;
  std::optional<DivisorInsertions> divisor;
};

struct CurveRecord {
  CombType type;
  Solution solution;
  Multiplicity multiplicity;
};

struct DegreeReport {
  Degree degree;
  bool dimension_ok = false;
  std::size_t type_count = 0;
  std::vector<CurveRecord> curves;
  Integer subtotal = 0;
  SearchStats stats;
};

struct CountReport {
  std::vector<DegreeReport> per_degree;
  Integer tropical_total = 0;  // sum of curve multiplicities
  Integer total = 0;           // after divisor insertions and vanishing rules
  std::uint64_t seed = 0;
  std::uint64_t genericity_retries = 0;
  std::vector<AffineConstraint> constraints;
  double seconds = 0;
  std::vector<std::string> notes;
};

/// Degrees the problem counts, in a deterministic order.
std::vector<Degree> expand_degrees(const Problem& p);

CountReport count_invariant(const Problem& p);

/// base * prod pairings[i]^exponents[i].
Integer apply_divisor_axiom(const Integer& base, const std::vector<Integer>& pairings,
                            const std::vector<unsigned long>& exponents);

/// 0 when the problem carries an odd-degree insertion, nullopt otherwise.
std::optional<Integer> odd_class_vanishing(const Problem& p);

/// Number of rational plane curves of degree d through 3d - 1 general points.
Integer kontsevich_oracle(unsigned long d);

/// Point constraints only: flag3 (s, t) through s + t points.
Problem preset_flag3_problem(const Integer& s, const Integer& t);
/// Point constraints only: octahedron class a through a points.
Problem preset_octahedron_problem(const Integer& a);
/// The plane degree d {(-1,0), (0,-1), (1,1)} through 3d - 1 points.
Problem plane_problem(unsigned long d);

}  // namespace tropcount
