#include "tropcount/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "tropcount/simplex.hpp"

namespace tropcount {

namespace {

std::vector<LpRow> polytope_rows(const Polytope& p) {
  std::vector<LpRow> rows;
  for (const auto& q : p.inequalities) {
    LpRow r;
    for (const auto& c : q.normal.coords()) r.coeffs.emplace_back(c);
    r.relation = Relation::greater_equal;
    r.rhs = -q.constant;
    rows.push_back(std::move(r));
  }
  return rows;
}

void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int start) {
    if (idx.size() == k) {
      visit(idx);
      return;
    }
    for (int i = start; i < static_cast<int>(m); ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

Rational evaluate(const Inequality& q, const RationalVec& x) {
  Rational s = q.constant;
  for (std::size_t k = 0; k < x.dim(); ++k) s += q.normal[k] * x[k];
  return s;
}

// Whether v is a nonnegative combination of rays.
bool in_cone(const LatticeVec& v, const std::vector<LatticeVec>& rays) {
  if (std::find(rays.begin(), rays.end(), v) != rays.end()) return true;
  const std::size_t n = v.dim();
  const std::size_t m = rays.size();
  std::vector<LpRow> rows;
  for (std::size_t k = 0; k < n; ++k) {
    LpRow r{std::vector<Rational>(m), Relation::equal, v[k]};
    for (std::size_t j = 0; j < m; ++j) r.coeffs[j] = rays[j][k];
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < m; ++j) {
    LpRow r{std::vector<Rational>(m), Relation::greater_equal, 0};
    r.coeffs[j] = 1;
    rows.push_back(std::move(r));
  }
  return maximize(std::vector<Rational>(m), rows).status == LpResult::Status::optimal;
}

// A nonzero normal of the hyperplane spanned by n - 1 independent vectors.
std::vector<Rational> hyperplane_normal(const std::vector<LatticeVec>& face, std::size_t n) {
  RatMatrix a(face.size(), n);
  for (std::size_t i = 0; i < face.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) a(i, k) = face[i][k];
  auto sol = solve_rational(a, RationalVec(face.size()));
  const auto* fam = std::get_if<SolutionFamily>(&sol);
  if (fam == nullptr || fam->kernel.size() != 1) throw std::logic_error("face does not span a hyperplane");
  return fam->kernel.front().coords();
}

Rational pair(const std::vector<Rational>& m, const LatticeVec& v) {
  Rational s = 0;
  for (std::size_t k = 0; k < v.dim(); ++k) s += m[k] * v[k];
  return s;
}

// Whether two simplicial cones meet exactly in the cone over their common rays.
bool proper_intersection(const std::vector<int>& a, const std::vector<int>& b, const std::vector<LatticeVec>& rays) {
  const std::size_t n = rays.front().dim();
  std::vector<LpRow> rows;
  auto add = [&](int r, Relation rel, long rhs) {
    LpRow row{std::vector<Rational>(n), rel, rhs};
    for (std::size_t k = 0; k < n; ++k) row.coeffs[k] = rays[static_cast<std::size_t>(r)][k];
    rows.push_back(std::move(row));
  };
  for (int r : a) {
    bool common = std::find(b.begin(), b.end(), r) != b.end();
    add(r, common ? Relation::equal : Relation::greater_equal, common ? 0 : 1);
  }
  for (int r : b)
    if (std::find(a.begin(), a.end(), r) == a.end()) add(r, Relation::less_equal, -1);
  return maximize(std::vector<Rational>(n), rows).status == LpResult::Status::optimal;
}

}  // namespace

void check_polytope(const Polytope& p) {
  const std::size_t n = p.dim();
  if (n == 0) throw std::invalid_argument("polytope has no inequalities");
  for (const auto& q : p.inequalities) {
    if (q.normal.dim() != n) throw std::invalid_argument("inequalities have different dimensions");
    if (q.normal.is_zero()) throw std::invalid_argument("inequality normal is zero");
  }
  auto rows = polytope_rows(p);
  if (!strictly_feasible({}, rows)) throw std::invalid_argument("polytope is empty or not full-dimensional");
  for (std::size_t k = 0; k < n; ++k)
    for (int sign : {1, -1}) {
      std::vector<Rational> obj(n);
      obj[k] = sign;
      if (maximize(obj, rows).status != LpResult::Status::optimal) throw std::invalid_argument("polytope is unbounded");
    }
}

std::vector<PolytopeVertex> polytope_vertices(const Polytope& p) {
  check_polytope(p);
  const std::size_t n = p.dim();
  const auto& ineq = p.inequalities;
  std::map<RationalVec, PolytopeVertex> found;
  for_each_subset(ineq.size(), n, [&](const std::vector<int>& idx) {
    RatMatrix a(n, n);
    RationalVec b(n);
    for (std::size_t r = 0; r < n; ++r) {
      const auto& q = ineq[static_cast<std::size_t>(idx[r])];
      for (std::size_t k = 0; k < n; ++k) a(r, k) = q.normal[k];
      b[r] = -q.constant;
    }
    auto sol = solve_rational(a, b);
    const auto* u = std::get_if<UniqueSolution>(&sol);
    if (u == nullptr || found.contains(u->x)) return;
    PolytopeVertex v{u->x, {}};
    for (std::size_t i = 0; i < ineq.size(); ++i) {
      Rational s = evaluate(ineq[i], u->x);
      if (s < 0) return;
      if (s == 0) v.tight.push_back(static_cast<int>(i));
    }
    found.emplace(u->x, std::move(v));
  });
  std::vector<PolytopeVertex> out;
  for (auto& [k, v] : found) out.push_back(std::move(v));
  return out;
}

std::vector<int> facet_inequalities(const Polytope& p) {
  const auto verts = polytope_vertices(p);
  const std::size_t n = p.dim();
  std::vector<int> out;
  std::vector<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < p.inequalities.size(); ++i) {
    std::vector<std::size_t> on;
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (std::find(verts[v].tight.begin(), verts[v].tight.end(), static_cast<int>(i)) != verts[v].tight.end())
        on.push_back(v);
    if (on.size() < n) continue;
    RatMatrix diffs(on.size() - 1, n);
    for (std::size_t r = 1; r < on.size(); ++r)
      for (std::size_t k = 0; k < n; ++k) diffs(r - 1, k) = verts[on[r]].point[k] - verts[on[0]].point[k];
    if (rank(diffs) != n - 1) continue;
    if (std::find(seen.begin(), seen.end(), on) != seen.end()) continue;
    seen.push_back(on);
    out.push_back(static_cast<int>(i));
  }
  return out;
}

Fan normal_fan(const Polytope& p) {
  const auto verts = polytope_vertices(p);
  const auto facets = facet_inequalities(p);
  Fan fan;
  for (int f : facets) fan.rays.push_back(primitive(p.inequalities[static_cast<std::size_t>(f)].normal).direction);
  for (const auto& v : verts) {
    std::vector<int> cone;
    for (std::size_t r = 0; r < facets.size(); ++r)
      if (std::find(v.tight.begin(), v.tight.end(), facets[r]) != v.tight.end()) cone.push_back(static_cast<int>(r));
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

bool ResolutionReport::violated(char check) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Item& i) { return i.check == check; });
}

ResolutionReport verify_small_resolution(const Fan& fan, const RefinementCertificate& cert) {
  ResolutionReport report;
  auto fail = [&](char c, std::string detail) {
    report.valid = false;
    report.violations.push_back({c, std::move(detail)});
  };
  if (fan.rays.empty()) {
    fail('b', "fan has no rays");
    return report;
  }
  const std::size_t n = fan.rays.front().dim();

  // Rays of the certificate expressed as fan ray indices.
  const auto& cert_rays = cert.rays.empty() ? fan.rays : cert.rays;
  std::vector<int> to_fan(cert_rays.size(), -1);
  for (std::size_t i = 0; i < cert_rays.size(); ++i) {
    if (cert_rays[i].dim() != n || cert_rays[i].is_zero()) {
      fail('a', "certificate ray " + std::to_string(i) + " is not a nonzero vector of the fan's dimension");
      continue;
    }
    auto dir = primitive(cert_rays[i]).direction;
    auto it = std::find(fan.rays.begin(), fan.rays.end(), dir);
    if (it == fan.rays.end())
      fail('a', "certificate ray " + dir.str() + " is not a ray of the fan");
    else
      to_fan[i] = static_cast<int>(it - fan.rays.begin());
  }
  std::vector<std::vector<int>> cones;
  for (std::size_t c = 0; c < cert.cones.size(); ++c) {
    std::vector<int> cone;
    bool ok = true;
    for (int r : cert.cones[c]) {
      if (r < 0 || static_cast<std::size_t>(r) >= cert_rays.size()) {
        fail('a', "certificate cone " + std::to_string(c) + " references a missing ray");
        ok = false;
      } else if (to_fan[static_cast<std::size_t>(r)] < 0) {
        ok = false;
      } else {
        cone.push_back(to_fan[static_cast<std::size_t>(r)]);
      }
    }
    std::sort(cone.begin(), cone.end());
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    if (!ok) cone.clear();
    cones.push_back(std::move(cone));
  }
  if (!report.valid) return report;

  auto vectors = [&](const std::vector<int>& idx) {
    std::vector<LatticeVec> v;
    for (int i : idx) v.push_back(fan.rays[static_cast<std::size_t>(i)]);
    return v;
  };

  // (b) containment and (c) unimodularity.
  std::vector<int> home(cones.size(), -1);
  std::vector<bool> simplicial(cones.size(), false);
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const auto v = vectors(cones[c]);
    for (std::size_t f = 0; f < fan.cones.size() && home[c] < 0; ++f) {
      const auto fv = vectors(fan.cones[f]);
      if (std::all_of(v.begin(), v.end(), [&](const LatticeVec& x) { return in_cone(x, fv); }))
        home[c] = static_cast<int>(f);
    }
    if (home[c] < 0) fail('b', "certificate cone " + std::to_string(c) + " lies in no cone of the fan");
    if (v.empty() || rank(v, n) != v.size()) {
      fail('c', "certificate cone " + std::to_string(c) + " is not simplicial");
      continue;
    }
    simplicial[c] = true;
    if (lattice_index(v, saturate(v, n), n) != 1)
      fail('c', "certificate cone " + std::to_string(c) + " is not unimodular");
  }

  // (d) pairwise intersections in common faces.
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      if (!simplicial[a] || !simplicial[b]) continue;
      if (cones[a] == cones[b] || !proper_intersection(cones[a], cones[b], fan.rays))
        fail('d', "certificate cones " + std::to_string(a) + " and " + std::to_string(b) +
                      " do not meet in a common face");
    }

  // (d) covering: inside each fan cone the full-dimensional pieces form a pseudo-manifold
  // whose free facets lie on the cone's boundary.
  for (std::size_t f = 0; f < fan.cones.size(); ++f) {
    const auto fv = vectors(fan.cones[f]);
    if (rank(fv, n) != n) continue;
    std::vector<std::size_t> pieces;
    for (std::size_t c = 0; c < cones.size(); ++c)
      if (home[c] == static_cast<int>(f) && simplicial[c] && cones[c].size() == n) pieces.push_back(c);
    if (pieces.empty()) {
      fail('d', "fan cone " + std::to_string(f) + " is not covered");
      continue;
    }
    for (std::size_t c : pieces)
      for (std::size_t drop = 0; drop < n; ++drop) {
        std::vector<int> face = cones[c];
        const int apex = face[drop];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        const auto m = hyperplane_normal(vectors(face), n);
        bool pos = false, neg = false;
        for (const auto& x : fv) {
          Rational s = pair(m, x);
          pos = pos || s > 0;
          neg = neg || s < 0;
        }
        if (!(pos && neg)) continue;  // on the boundary of the fan cone
        const Rational side = pair(m, fan.rays[static_cast<std::size_t>(apex)]);
        std::size_t across = 0;
        for (std::size_t o : pieces) {
          if (o == c || !std::includes(cones[o].begin(), cones[o].end(), face.begin(), face.end())) continue;
          for (int r : cones[o])
            if (std::find(face.begin(), face.end(), r) == face.end() &&
                pair(m, fan.rays[static_cast<std::size_t>(r)]) * side < 0)
              ++across;
        }
        if (across != 1)
          fail('d', "interior face of certificate cone " + std::to_string(c) + " inside fan cone " +
                        std::to_string(f) + " is not matched by exactly one neighbour");
      }
  }
  return report;
}

Polytope builtin_gc3(const Rational& lambda) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  return Polytope{{
      {{0, 1, 0}, -lambda},
      {{0, -1, 0}, 2 * lambda},
      {{1, 0, 0}, 0},
      {{-1, 0, 0}, lambda},
      {{-1, 0, 1}, 0},
      {{0, 1, -1}, 0},
  }};
}

Polytope builtin_octahedron(const Rational& lambda) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  return Polytope{{
      {{0, 1, 1}, 0},
      {{-1, 0, 0}, lambda},
      {{0, -1, 0}, lambda},
      {{1, 0, 1}, 0},
      {{0, 1, 0}, 0},
      {{-1, 0, -1}, lambda},
      {{0, -1, -1}, lambda},
      {{1, 0, 0}, 0},
  }};
}

}  // namespace tropcount
