#include "tropcount/matching.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "model.hpp"

namespace tropcount {

using detail::dot;

bool AffineConstraint::contains(const RationalVec& point) const {
  const std::size_t n = rank();
  IntMatrix p = quotient_projection(directions, n);
  RationalVec diff = point - offset;
  for (std::size_t c = 0; c < p.cols(); ++c) {
    Rational s = 0;
    for (std::size_t k = 0; k < n; ++k) s += p(k, c) * diff[k];
    if (s != 0) return false;
  }
  return true;
}

AffineConstraint make_constraint(const std::vector<LatticeVec>& directions, RationalVec offset) {
  const std::size_t n = offset.dim();
  if (n < 2) throw std::invalid_argument("constraints live in dimension at least 2");
  for (const auto& d : directions)
    if (d.dim() != n) throw std::invalid_argument("constraint direction has the wrong dimension");
  if (directions.size() >= n) throw std::invalid_argument("constraint must have codimension at least 1");
  AffineConstraint c;
  c.directions = directions.empty() ? directions : saturate(directions, n);
  c.offset = std::move(offset);
  return c;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> paths_from_root(const CombType& type) {
  const auto nv = static_cast<std::size_t>(type.vertex_count);
  std::vector<std::vector<std::pair<int, int>>> path(nv);
  std::vector<bool> seen(nv, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int ei : type.incident_edges(v)) {
      const auto& e = type.edges[static_cast<std::size_t>(ei)];
      if (!e.bounded()) continue;
      int w = e.tail == v ? e.head : e.tail;
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      path[static_cast<std::size_t>(w)] = path[static_cast<std::size_t>(v)];
      path[static_cast<std::size_t>(w)].emplace_back(ei, e.tail == v ? 1 : -1);
      stack.push_back(w);
    }
  }
  return path;
}

void check_dimensions(const CombType& type, const std::vector<AffineConstraint>& constraints) {
  if (constraints.size() != type.markings.size())
    throw std::invalid_argument("number of constraints differs from number of markings");
  std::size_t total = 0;
  for (const auto& c : constraints) {
    if (c.rank() != type.rank) throw std::invalid_argument("constraint dimension differs from the type");
    total += c.codim();
  }
  if (static_cast<long>(total) != expected_dimension(type.end_count(), 0, type.rank)) throw DimensionMismatch();
}

MatchResult match_line(const CombType& type, const std::vector<AffineConstraint>& constraints) {
  const std::size_t n = type.rank;
  const LatticeVec& u = type.edges.front().direction;
  const auto complement = complete_basis(std::vector<LatticeVec>{u}, n);
  RowEchelon ech(n - 1);
  std::vector<detail::MarkingGeometry> geos;
  for (const auto& c : constraints) {
    geos.push_back(detail::marking_geometry(u, c));
    const auto& g = geos.back();
    std::vector<Rational> column(n);
    for (std::size_t col = 0; col < g.projection.cols(); ++col) {
      for (std::size_t k = 0; k < n; ++k) column[k] = g.projection(k, col);
      std::vector<Rational> coeffs(n - 1);
      for (std::size_t j = 0; j + 1 < n; ++j) coeffs[j] = dot(column, complement[j]);
      switch (ech.add(coeffs, dot(column, c.offset))) {
        case RowEchelon::AddResult::inconsistent:
          return {MatchStatus::none, std::nullopt};
        case RowEchelon::AddResult::redundant:
          return {MatchStatus::non_general, std::nullopt};
        case RowEchelon::AddResult::independent:
          break;
      }
    }
  }
  if (!ech.complete()) return {MatchStatus::non_general, std::nullopt};
  auto x = ech.solution();
  Solution s;
  s.root_position = RationalVec(n);
  for (std::size_t j = 0; j + 1 < n; ++j) s.root_position += x[j] * RationalVec(complement[j]);
  s.lengths.assign(type.edges.size(), Rational(0));
  for (std::size_t i = 0; i < constraints.size(); ++i)
    s.mark_params.push_back(dot(geos[i].functional, constraints[i].offset - s.root_position));
  return {MatchStatus::unique, std::move(s)};
}

}  // namespace

std::vector<RationalVec> vertex_positions(const CombType& type, const Solution& solution) {
  std::vector<RationalVec> out;
  if (type.degenerate_line) return out;
  auto paths = paths_from_root(type);
  for (const auto& path : paths) {
    RationalVec p = solution.root_position;
    for (auto [ei, sign] : path) {
      const auto& e = type.edges[static_cast<std::size_t>(ei)];
      Rational step = solution.lengths[static_cast<std::size_t>(ei)];
      if (sign < 0) step = -step;
      p += step * RationalVec(e.direction);
    }
    out.push_back(std::move(p));
  }
  return out;
}

RationalVec marked_point(const CombType& type, const Solution& solution, std::size_t marking) {
  const auto& e = type.edges[static_cast<std::size_t>(type.markings.at(marking))];
  RationalVec base = type.degenerate_line ? solution.root_position
                                          : vertex_positions(type, solution)[static_cast<std::size_t>(e.tail)];
  return base + solution.mark_params.at(marking) * RationalVec(e.direction);
}

MatchResult match_constraints(const CombType& type, const std::vector<AffineConstraint>& constraints) {
  check_dimensions(type, constraints);
  if (type.degenerate_line) return match_line(type, constraints);

  detail::LinearModel model(type);
  RowEchelon ech(model.unknowns());
  std::vector<detail::MarkingForms> forms;
  bool redundant = false;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const int edge = type.markings[i];
    auto g = detail::marking_geometry(type.edges[static_cast<std::size_t>(edge)].direction, constraints[i]);
    forms.push_back(model.marking_forms(edge, g, constraints[i]));
    for (const auto& row : forms.back().rows) {
      auto r = ech.add(row.coeffs, row.rhs);
      if (r == RowEchelon::AddResult::inconsistent) return {MatchStatus::none, std::nullopt};
      if (r == RowEchelon::AddResult::redundant) redundant = true;
    }
  }
  if (redundant || !ech.complete()) return {MatchStatus::non_general, std::nullopt};

  Solution s = model.extract(ech.solution(), forms);
  for (std::size_t i = 0; i < type.edges.size(); ++i)
    if (type.edges[i].bounded() && s.lengths[i] <= 0) return {MatchStatus::none, std::nullopt};
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto m = static_cast<std::size_t>(type.markings[i]);
    if (s.mark_params[i] <= 0) return {MatchStatus::none, std::nullopt};
    if (type.edges[m].bounded() && s.mark_params[i] >= s.lengths[m]) return {MatchStatus::none, std::nullopt};
  }
  return {MatchStatus::unique, std::move(s)};
}

namespace {

// Image of an edge: base + s * dir with s in [0, 1] (segment) or [0, inf) (ray).
struct Piece {
  RationalVec base;
  RationalVec dir;
  bool ray = false;
};

struct Intersection {
  enum class Kind { empty, point, overlap } kind = Kind::empty;
  RationalVec point;
};

bool parallel(const RationalVec& a, const RationalVec& b, Rational& ratio) {
  // b = ratio * a ?
  std::size_t k = 0;
  while (k < a.dim() && a[k] == 0) ++k;
  ratio = b[k] / a[k];
  for (std::size_t j = 0; j < a.dim(); ++j)
    if (b[j] != ratio * a[j]) return false;
  return true;
}

bool in_range(const Rational& s, bool ray) { return s >= 0 && (ray || s <= 1); }

Intersection intersect(const Piece& a, const Piece& b) {
  const std::size_t n = a.base.dim();
  Intersection out;
  Rational c;
  if (parallel(a.dir, b.dir, c)) {
    Rational r0;
    RationalVec diff = b.base - a.base;
    if (!diff.is_zero() && !parallel(a.dir, diff, r0)) return out;
    if (diff.is_zero()) r0 = 0;
    // b covers r0 + c * [0, 1] or r0 + c * [0, inf) in the parameter of a.
    Rational lo, hi;
    bool lo_inf = false, hi_inf = false;
    if (b.ray) {
      if (c > 0) {
        lo = r0;
        hi_inf = true;
      } else {
        hi = r0;
        lo_inf = true;
      }
    } else {
      lo = c > 0 ? r0 : r0 + c;
      hi = c > 0 ? r0 + c : r0;
    }
    // Clip to a's range [0, 1] or [0, inf).
    Rational clo = lo_inf ? Rational(0) : std::max(lo, Rational(0));
    bool chi_inf = hi_inf && a.ray;
    Rational chi;
    if (!chi_inf) {
      if (hi_inf)
        chi = 1;
      else if (a.ray)
        chi = hi;
      else
        chi = std::min(hi, Rational(1));
    }
    if (!chi_inf && chi < clo) return out;
    if (!chi_inf && chi == clo) {
      out.kind = Intersection::Kind::point;
      out.point = a.base + clo * a.dir;
      return out;
    }
    out.kind = Intersection::Kind::overlap;
    return out;
  }
  // Independent directions: solve s a.dir - r b.dir = b.base - a.base on a nonsingular 2x2 minor.
  RationalVec rhs = b.base - a.base;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational det = a.dir[i] * (-b.dir[j]) - (-b.dir[i]) * a.dir[j];
      if (det == 0) continue;
      Rational s = (rhs[i] * (-b.dir[j]) - (-b.dir[i]) * rhs[j]) / det;
      Rational r = (a.dir[i] * rhs[j] - rhs[i] * a.dir[j]) / det;
      RationalVec pa = a.base + s * a.dir;
      RationalVec pb = b.base + r * b.dir;
      if (pa != pb) return out;
      if (!in_range(s, a.ray) || !in_range(r, b.ray)) return out;
      out.kind = Intersection::Kind::point;
      out.point = std::move(pa);
      return out;
    }
  return out;
}

// Whether x lies on the piece away from its endpoints.
bool in_relative_interior(const Piece& p, const RationalVec& x) {
  RationalVec diff = x - p.base;
  if (diff.is_zero()) return false;
  Rational s;
  if (!parallel(p.dir, diff, s)) return false;
  return s > 0 && (p.ray || s < 1);
}

}  // namespace

GeneralityReport verify_general(const CombType& type, const Solution& solution,
                                const std::vector<AffineConstraint>& constraints) {
  GeneralityReport report;
  auto fail = [&](Violation v, std::string detail) {
    report.general = false;
    if (std::find(report.violations.begin(), report.violations.end(), v) == report.violations.end())
      report.violations.push_back(v);
    report.details.push_back(std::move(detail));
  };
  if (type.degenerate_line) return report;

  const auto pos = vertex_positions(type, solution);
  for (std::size_t v = 0; v < pos.size(); ++v)
    for (std::size_t i = 0; i < constraints.size(); ++i)
      if (constraints[i].contains(pos[v]))
        fail(Violation::vertex_on_constraint,
             "vertex " + std::to_string(v) + " lies on constraint " + std::to_string(i));

  std::vector<Piece> pieces;
  for (const auto& e : type.edges) {
    Piece p;
    p.base = pos[static_cast<std::size_t>(e.tail)];
    if (e.bounded()) {
      p.dir = pos[static_cast<std::size_t>(e.head)] - p.base;
    } else {
      p.dir = RationalVec(e.direction);
      p.ray = true;
    }
    pieces.push_back(std::move(p));
  }

  auto shared_vertex = [&](std::size_t i, std::size_t j) -> int {
    const auto& a = type.edges[i];
    const auto& b = type.edges[j];
    for (int x : {a.tail, a.head})
      if (x >= 0 && (x == b.tail || x == b.head)) return x;
    return -1;
  };

  const bool plane = type.rank == 2;
  if (plane)
    for (std::size_t v = 0; v < pos.size(); ++v)
      for (std::size_t w = v + 1; w < pos.size(); ++w)
        if (pos[v] == pos[w])
          fail(Violation::plane_singularity,
               "vertices " + std::to_string(v) + " and " + std::to_string(w) + " coincide");

  std::vector<RationalVec> double_points;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      auto x = intersect(pieces[i], pieces[j]);
      if (x.kind == Intersection::Kind::empty) continue;
      const std::string which = "edges " + std::to_string(i) + " and " + std::to_string(j);
      if (x.kind == Intersection::Kind::overlap) {
        fail(plane ? Violation::plane_singularity : Violation::not_embedded, which + " overlap");
        continue;
      }
      const int v = shared_vertex(i, j);
      if (v >= 0 && x.point == pos[static_cast<std::size_t>(v)]) continue;
      if (plane)
        double_points.push_back(std::move(x.point));
      else
        fail(Violation::not_embedded, which + " meet away from a common vertex");
    }

  for (const auto& x : double_points) {
    std::size_t preimages = 0;
    for (const auto& p : pos)
      if (p == x) ++preimages;
    for (const auto& p : pieces)
      if (in_relative_interior(p, x)) ++preimages;
    if (preimages > 2) fail(Violation::plane_singularity, "point " + x.str() + " has more than two preimages");
  }
  return report;
}

std::vector<AffineConstraint> generate_constraints(const std::vector<ConstraintSpec>& spec, std::size_t rank,
                                                   std::uint64_t seed, std::uint64_t bound,
                                                   std::uint64_t retry) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(retry), static_cast<std::uint32_t>(retry >> 32)};
  std::mt19937_64 rng(seq);
  const auto b = static_cast<std::int64_t>(bound);
  std::uniform_int_distribution<std::int64_t> dist(-b, b);
  std::vector<AffineConstraint> out;
  for (const auto& item : spec) {
    if (item.directions.size() + item.codim + 1 != rank)
      throw std::invalid_argument("codim must equal n - dim L - 1");
    RationalVec offset(rank);
    for (std::size_t k = 0; k < rank; ++k) offset[k] = Rational(static_cast<long>(dist(rng)));
    out.push_back(make_constraint(item.directions, std::move(offset)));
  }
  return out;
}

}  // namespace tropcount
