#pragma once

// Small exact linear programs over Q (dense two-phase simplex, Bland's rule).

#include <vector>

#include "tropcount/lattice.hpp"

namespace tropcount {

enum class Relation { less_equal, equal, greater_equal };

struct LpRow {
  std::vector<Rational> coeffs;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Maximizes objective . x over free variables x subject to rows.
LpResult maximize(const std::vector<Rational>& objective, const std::vector<LpRow>& rows);

/// Whether {x : equalities hold, every strict row has coeffs . x > rhs} is nonempty.
/// The rows in `strict` are read as strict inequalities regardless of their relation field.
bool strictly_feasible(const std::vector<LpRow>& equalities, const std::vector<LpRow>& strict);

}  // namespace tropcount
