#include "tropcount/multiplicity.hpp"

namespace tropcount {

namespace {

IntMatrix marking_quotient(const LatticeVec& u, const AffineConstraint& c) {
  std::vector<LatticeVec> span = c.directions;
  span.push_back(u);
  if (rank(span, u.dim()) != span.size()) throw NonGeneralError("marked edge direction lies in the constraint");
  return quotient_projection(saturate(span, u.dim()), u.dim());
}

}  // namespace

Integer d_index(const CombType& type, const std::vector<AffineConstraint>& constraints) {
  const std::size_t n = type.rank;
  if (constraints.size() != type.markings.size())
    throw std::invalid_argument("number of constraints differs from number of markings");

  if (type.degenerate_line) {
    const LatticeVec& u = type.edges.front().direction;
    auto complement = complete_basis(std::vector<LatticeVec>{u}, n);
    std::vector<std::vector<Integer>> cols;  // one per codomain coordinate
    for (const auto& c : constraints) {
      IntMatrix p = marking_quotient(u, c);
      for (std::size_t col = 0; col < p.cols(); ++col) {
        std::vector<Integer> entries;
        for (const auto& b : complement) {
          Integer s = 0;
          for (std::size_t k = 0; k < n; ++k) s += b[k] * p(k, col);
          entries.push_back(s);
        }
        cols.push_back(std::move(entries));
      }
    }
    if (cols.size() != n - 1) throw DimensionMismatch();
    IntMatrix m(n - 1, n - 1);
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r + 1 < n; ++r) m(r, c) = cols[c][r];
    Integer det = abs(determinant(m));
    if (det == 0) throw NonGeneralError("line index map is singular");
    return det;
  }

  // Rows: domain coordinates (vertex v, coordinate k); columns: codomain coordinates.
  const std::size_t size = n * static_cast<std::size_t>(type.vertex_count);
  std::vector<std::vector<Integer>> cols;
  for (const auto& e : type.edges) {
    if (!e.bounded()) continue;
    IntMatrix p = quotient_projection(std::vector<LatticeVec>{e.direction}, n);
    for (std::size_t col = 0; col < p.cols(); ++col) {
      std::vector<Integer> entries(size);
      for (std::size_t k = 0; k < n; ++k) {
        entries[static_cast<std::size_t>(e.head) * n + k] += p(k, col);
        entries[static_cast<std::size_t>(e.tail) * n + k] -= p(k, col);
      }
      cols.push_back(std::move(entries));
    }
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& e = type.edges[static_cast<std::size_t>(type.markings[i])];
    IntMatrix p = marking_quotient(e.direction, constraints[i]);
    for (std::size_t col = 0; col < p.cols(); ++col) {
      std::vector<Integer> entries(size);
      for (std::size_t k = 0; k < n; ++k) entries[static_cast<std::size_t>(e.tail) * n + k] = p(k, col);
      cols.push_back(std::move(entries));
    }
  }
  if (cols.size() != size) throw DimensionMismatch();
  IntMatrix m(size, size);
  for (std::size_t c = 0; c < size; ++c)
    for (std::size_t r = 0; r < size; ++r) m(r, c) = cols[c][r];
  Integer det = abs(determinant(m));
  if (det == 0) throw NonGeneralError("index map is singular");
  return det;
}

Integer delta_index(std::size_t marking, const CombType& type, const AffineConstraint& constraint) {
  const auto& e = type.edges.at(static_cast<std::size_t>(type.markings.at(marking)));
  const std::size_t n = type.rank;
  std::vector<LatticeVec> sub = constraint.directions;
  sub.push_back(e.direction);
  if (rank(sub, n) != sub.size()) throw NonGeneralError("marked edge direction lies in the constraint");
  auto super = saturate(sub, n);
  return e.weight * lattice_index(sub, super, n);
}

Multiplicity total_multiplicity(const CombType& type, const Solution&,
                                const std::vector<AffineConstraint>& constraints) {
  Multiplicity m;
  m.w = weight(type);
  m.d_index = d_index(type, constraints);
  m.total = m.w * m.d_index;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    m.deltas.push_back(delta_index(i, type, constraints[i]));
    m.total *= m.deltas.back();
  }
  return m;
}

Integer mikhalkin_multiplicity(const CombType& type) {
  if (type.rank != 2) throw std::invalid_argument("Mikhalkin multiplicity needs a plane type");
  if (type.degenerate_line) throw std::invalid_argument("Mikhalkin multiplicity needs a vertex");
  Integer total = 1;
  for (int v = 0; v < type.vertex_count; ++v) {
    auto f = type.flag_vectors(v);
    Integer det = f[0][0] * f[1][1] - f[0][1] * f[1][0];
    total *= abs(det);
  }
  return total;
}

}  // namespace tropcount
