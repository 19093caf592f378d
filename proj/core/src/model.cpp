#include "model.hpp"

#include <functional>
#include <stdexcept>

namespace tropcount::detail {

Rational dot(std::span<const Rational> a, const LatticeVec& v) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && v[k] != 0) s += a[k] * v[k];
  return s;
}

Rational dot(std::span<const Rational> a, const RationalVec& v) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && v[k] != 0) s += a[k] * v[k];
  return s;
}

MarkingGeometry marking_geometry(const LatticeVec& u, const AffineConstraint& c) {
  const std::size_t n = u.dim();
  MarkingGeometry g;
  std::vector<LatticeVec> span = c.directions;
  span.push_back(u);
  g.parallel = rank(span, n) == c.directions.size();
  if (g.parallel) {
    g.projection = quotient_projection(c.directions, n);
  } else {
    auto sat = saturate(span, n);
    g.projection = quotient_projection(sat, n);
  }

  // lambda solves lambda . u = 1 and lambda . l = 0 for every l in L.
  RatMatrix a(span.size(), n);
  RationalVec b(span.size());
  for (std::size_t j = 0; j < c.directions.size(); ++j)
    for (std::size_t k = 0; k < n; ++k) a(j, k) = c.directions[j][k];
  for (std::size_t k = 0; k < n; ++k) a(span.size() - 1, k) = u[k];
  b[span.size() - 1] = 1;
  auto sol = solve_rational(a, b);
  if (auto* uq = std::get_if<UniqueSolution>(&sol))
    g.functional = uq->x.coords();
  else if (auto* fam = std::get_if<SolutionFamily>(&sol))
    g.functional = fam->particular.coords();
  else
    g.functional.assign(n, Rational(0));  // u in L: t is not determined by the constraint
  return g;
}

LinearModel::LinearModel(const CombType& type) : type_(type) {
  if (type.degenerate_line) throw std::invalid_argument("degenerate line has no vertex parameterization");
  const auto nv = static_cast<std::size_t>(type.vertex_count);
  std::vector<std::vector<int>> incident(nv);
  for (std::size_t i = 0; i < type.edges.size(); ++i) {
    const auto& e = type.edges[i];
    incident[static_cast<std::size_t>(e.tail)].push_back(static_cast<int>(i));
    if (e.bounded()) incident[static_cast<std::size_t>(e.head)].push_back(static_cast<int>(i));
  }
  length_index_.assign(type.edges.size(), -1);
  subtree_begin_.assign(type.edges.size(), -1);
  path_.assign(nv, {});

  std::function<void(int, int)> visit = [&](int v, int from) {
    for (int ei : incident[static_cast<std::size_t>(v)])
      if (!type.edges[static_cast<std::size_t>(ei)].bounded()) order_.push_back(ei);
    for (int ei : incident[static_cast<std::size_t>(v)]) {
      const auto& e = type.edges[static_cast<std::size_t>(ei)];
      if (!e.bounded() || ei == from) continue;
      const int child = e.tail == v ? e.head : e.tail;
      auto& p = path_[static_cast<std::size_t>(child)];
      p = path_[static_cast<std::size_t>(v)];
      p.emplace_back(ei, e.tail == v ? 1 : -1);
      const int begin = static_cast<int>(bounded_);
      visit(child, ei);
      subtree_begin_[static_cast<std::size_t>(ei)] = begin;
      length_index_[static_cast<std::size_t>(ei)] = static_cast<int>(bounded_++);
      order_.push_back(ei);
    }
  };
  visit(0, -1);
}

void LinearModel::add_position(int vertex, std::span<const Rational> functional, const Rational& scale,
                               std::vector<Rational>& out) const {
  const std::size_t n = rank();
  for (std::size_t k = 0; k < n; ++k)
    if (functional[k] != 0) out[root_unknown(k)] += scale * functional[k];
  for (auto [ei, sign] : path_[static_cast<std::size_t>(vertex)]) {
    Rational v = dot(functional, type_.edges[static_cast<std::size_t>(ei)].direction);
    if (v == 0) continue;
    if (sign < 0) v = -v;
    out[static_cast<std::size_t>(length_unknown(ei))] += scale * v;
  }
}

MarkingForms LinearModel::marking_forms(int edge, const MarkingGeometry& g, const AffineConstraint& c) const {
  const std::size_t n = rank();
  const int tail = type_.edges[static_cast<std::size_t>(edge)].tail;
  MarkingForms f;
  std::vector<Rational> column(n);
  for (std::size_t col = 0; col < g.projection.cols(); ++col) {
    for (std::size_t k = 0; k < n; ++k) column[k] = g.projection(k, col);
    AffineRow row{std::vector<Rational>(unknowns()), dot(column, c.offset)};
    add_position(tail, column, 1, row.coeffs);
    f.rows.push_back(std::move(row));
  }
  f.t_coeffs.assign(unknowns(), Rational(0));
  add_position(tail, g.functional, -1, f.t_coeffs);
  f.t_constant = dot(g.functional, c.offset);
  return f;
}

Solution LinearModel::extract(const std::vector<Rational>& x, const std::vector<MarkingForms>& forms) const {
  Solution s;
  const std::size_t n = rank();
  s.root_position = RationalVec(n);
  for (std::size_t k = 0; k < n; ++k) s.root_position[k] = x[root_unknown(k)];
  s.lengths.assign(type_.edges.size(), Rational(0));
  for (std::size_t i = 0; i < type_.edges.size(); ++i)
    if (length_index_[i] >= 0) s.lengths[i] = x[static_cast<std::size_t>(length_index_[i])];
  for (const auto& f : forms) {
    Rational t = f.t_constant;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (f.t_coeffs[j] != 0) t += f.t_coeffs[j] * x[j];
    s.mark_params.push_back(t);
  }
  return s;
}

}  // namespace tropcount::detail
