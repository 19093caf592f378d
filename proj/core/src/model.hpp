#pragma once

// Linear parameterization of a rooted type: unknowns are the bounded-edge lengths in
// bottom-up order followed by the root position.

#include <span>
#include <vector>

#include "tropcount/curves.hpp"
#include "tropcount/lattice.hpp"
#include "tropcount/matching.hpp"

namespace tropcount::detail {

/// What a constraint imposes on a point travelling along direction u.
struct MarkingGeometry {
  IntMatrix projection;            // n x k; columns are the functionals that must vanish
  std::vector<Rational> functional;  // lambda(u) = 1, lambda(L) = 0
  bool parallel = false;             // u lies in L
};

MarkingGeometry marking_geometry(const LatticeVec& u, const AffineConstraint& c);

struct AffineRow {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// Rows and the position parameter t of one marking placed on one edge.
struct MarkingForms {
  std::vector<AffineRow> rows;
  std::vector<Rational> t_coeffs;  // t = t_coeffs . x + t_constant
  Rational t_constant;
};

class LinearModel {
 public:
  explicit LinearModel(const CombType& type);

  const CombType& type() const { return type_; }
  std::size_t rank() const { return type_.rank; }
  std::size_t unknowns() const { return bounded_ + type_.rank; }
  std::size_t bounded() const { return bounded_; }

  /// Edges in bottom-up order: at each vertex its ends, then per child the child's
  /// subtree followed by the connecting edge.
  const std::vector<int>& edge_order() const { return order_; }
  /// Index of the length unknown of a bounded edge, -1 for ends.
  int length_unknown(int edge) const { return length_index_[static_cast<std::size_t>(edge)]; }
  /// First length unknown inside the subtree closed by a bounded edge.
  int subtree_begin(int edge) const { return subtree_begin_[static_cast<std::size_t>(edge)]; }
  std::size_t root_unknown(std::size_t k) const { return bounded_ + k; }
  /// Bounded edges whose lengths enter the position of the tail of `edge`.
  const std::vector<std::pair<int, int>>& path_to_tail(int edge) const {
    return path_[static_cast<std::size_t>(type_.edges[static_cast<std::size_t>(edge)].tail)];
  }

  /// Adds functional . h(v) to out.
  void add_position(int vertex, std::span<const Rational> functional, const Rational& scale,
                    std::vector<Rational>& out) const;

  MarkingForms marking_forms(int edge, const MarkingGeometry& g, const AffineConstraint& c) const;

  Solution extract(const std::vector<Rational>& x, const std::vector<MarkingForms>& forms) const;

 private:
  const CombType& type_;
  std::size_t bounded_ = 0;
  std::vector<int> order_;
  std::vector<int> length_index_;
  std::vector<int> subtree_begin_;
  std::vector<std::vector<std::pair<int, int>>> path_;  // per vertex: (edge, sign) from the root
};

/// Rational a . v for integer a.
Rational dot(std::span<const Rational> a, const LatticeVec& v);
Rational dot(std::span<const Rational> a, const RationalVec& v);

}  // namespace tropcount::detail
