#pragma once

// Lattice-index multiplicities of matched curves.

#include <stdexcept>
#include <vector>

#include "tropcount/curves.hpp"
#include "tropcount/matching.hpp"

namespace tropcount {

struct Multiplicity {
  Integer w;
  Integer d_index;
  std::vector<Integer> deltas;
  Integer total;
};

/// Raised when an index map is singular; the constraints are not general.
class NonGeneralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |det| of Map(vertices, N) -> prod_bounded N/Z u_E x prod_i N/(Q u_{E_i} + L_i) cap N.
/// For a degenerate line, the map from a complement of Q u to the marking quotients.
Integer d_index(const CombType& type, const std::vector<AffineConstraint>& constraints);

/// w(E_i) [Z u + L_i : (Q u + L_i) cap N]. Throws NonGeneralError if u lies in L_i.
Integer delta_index(std::size_t marking, const CombType& type, const AffineConstraint& constraint);

Multiplicity total_multiplicity(const CombType& type, const Solution& solution,
                                const std::vector<AffineConstraint>& constraints);

/// Product over vertices of |det(w1 u1, w2 u2)| for two flags at the vertex (n = 2).
Integer mikhalkin_multiplicity(const CombType& type);

}  // namespace tropcount
