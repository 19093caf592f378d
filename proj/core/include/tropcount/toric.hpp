#pragma once

// Polytopes given by inequalities, normal fans, and small-resolution certificates.

#include <string>
#include <vector>

#include "tropcount/lattice.hpp"

namespace tropcount {

/// <normal, u> + constant >= 0.
struct Inequality {
  LatticeVec normal;
  Rational constant;
};

struct Polytope {
  std::vector<Inequality> inequalities;
  std::size_t dim() const { return inequalities.empty() ? 0 : inequalities.front().normal.dim(); }
};

struct PolytopeVertex {
  RationalVec point;
  std::vector<int> tight;  // indices of inequalities holding with equality
};

/// Fan stored by maximal cones; cones index into rays.
struct Fan {
  std::vector<LatticeVec> rays;
  std::vector<std::vector<int>> cones;
};

struct RefinementCertificate {
  std::vector<std::vector<int>> cones;
  /// When non-empty, cones index into these vectors instead of the fan's rays.
  std::vector<LatticeVec> rays;
};

/// Throws std::invalid_argument if the polytope is empty, unbounded or not full-dimensional.
void check_polytope(const Polytope& p);

/// Vertices in lexicographic order.
std::vector<PolytopeVertex> polytope_vertices(const Polytope& p);

/// Indices of inequalities that define facets, one per distinct facet.
std::vector<int> facet_inequalities(const Polytope& p);

/// Rays are the primitive inward facet normals; one maximal cone per vertex.
Fan normal_fan(const Polytope& p);

struct ResolutionReport {
  bool valid = true;
  struct Item {
    char check;  // 'a' new ray, 'b' containment, 'c' unimodularity, 'd' covering or intersection
    std::string detail;
  };
  std::vector<Item> violations;
  bool violated(char check) const;
};

ResolutionReport verify_small_resolution(const Fan& fan, const RefinementCertificate& cert);

/// Gelfand-Cetlin polytope for n = 3 with lambda_1 = 2 lambda, lambda_2 = lambda, lambda_3 = 0
/// in coordinates (x, y, z): lambda <= y <= 2 lambda, 0 <= x <= lambda, x <= z <= y.
Polytope builtin_gc3(const Rational& lambda);

/// The octahedron with the eight facet inequalities l_1 .. l_8.
Polytope builtin_octahedron(const Rational& lambda);

}  // namespace tropcount
