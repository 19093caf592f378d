#pragma once

// Degrees and combinatorial types of marked rational trivalent tropical curves.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropcount/lattice.hpp"

namespace tropcount {

/// One unbounded end: primitive direction and positive weight.
struct End {
  LatticeVec direction;
  Integer weight = 1;

  LatticeVec vector() const { return weight * direction; }
  friend bool operator==(const End&, const End&) = default;
  friend std::strong_ordering operator<=>(const End& a, const End& b);
};

/// Multiset of ends. Kept in the order given; equality is multiset equality.
class Degree {
 public:
  Degree() = default;
  /// Throws std::invalid_argument on a non-primitive direction, a non-positive weight,
  /// or mixed dimensions.
  explicit Degree(std::vector<End> ends);

  std::size_t size() const { return ends_.size(); }
  std::size_t rank() const { return ends_.empty() ? 0 : ends_.front().direction.dim(); }
  const std::vector<End>& ends() const { return ends_; }

  LatticeVec sum() const;
  bool balanced() const { return !ends_.empty() && sum().is_zero(); }
  Degree sorted() const;

  friend bool operator==(const Degree& a, const Degree& b);

 private:
  std::vector<End> ends_;
};

/// e + (n - 3)(1 - g) - ov.
long expected_dimension(std::size_t ends, int genus, std::size_t rank, long overvalence = 0);

struct TypeEdge {
  int tail = -1;  // the vertex called d^- ; the unique vertex of an unbounded edge
  int head = -1;  // d^+ for bounded edges, -1 for unbounded edges
  Integer weight = 1;
  LatticeVec direction;  // primitive, pointing from tail to head (outwards along an end)

  bool bounded() const { return head >= 0; }
};

/// A combinatorial type (Gamma, E, u). Vertex 0 is the root; bounded edges point away
/// from it. The degenerate line has no vertices and a single edge.
struct CombType {
  std::size_t rank = 0;
  int vertex_count = 0;
  std::vector<TypeEdge> edges;
  std::vector<int> markings;  // edge index carrying the i-th marking
  bool degenerate_line = false;
  std::string key;  // canonical key of the marked type; empty until canonicalized

  std::size_t end_count() const;
  std::vector<int> bounded_edges() const;
  std::vector<int> incident_edges(int vertex) const;
  /// w(E) u for every flag at `vertex`, pointing away from it.
  std::vector<LatticeVec> flag_vectors(int vertex) const;
};

/// Unrooted trivalent tree. Nodes 0..leaves-1 are leaves; the rest are internal.
struct LeafTree {
  std::size_t leaves = 0;
  std::vector<std::pair<int, int>> edges;
};

/// (2e - 5)!! for e >= 3.
std::uint64_t trivalent_tree_count(std::size_t leaves);

/// Visits every trivalent tree with labelled leaves, built by repeated leaf insertion.
void for_each_trivalent_tree(std::size_t leaves, const std::function<void(const LeafTree&)>& visit);

/// Attaches leaf i of `tree` to end i of `degree` and derives the bounded edges from
/// balancing. Returns nullopt when some bounded edge would carry the zero vector.
std::optional<CombType> balance_propagate(const LeafTree& tree, const Degree& degree);

/// Re-roots and renumbers a type into its canonical representative and fills `key`.
CombType canonicalize(const CombType& type);

/// Representative of the same marked type rooted at `root`, bounded edges pointing away from it.
CombType reroot(const CombType& type, int root);

/// All isomorphism classes of unmarked genus-0 trivalent types of the given degree,
/// sorted by canonical key. Throws std::invalid_argument for an unbalanced degree.
std::vector<CombType> unmarked_types(const Degree& degree);

/// All isomorphism classes of l-marked types, sorted by canonical key.
std::vector<CombType> enumerate_types(const Degree& degree, std::size_t marks);

/// Product of bounded-edge weights times product of marked-edge weights.
Integer weight(const CombType& type);

bool vertex_balanced(const CombType& type, int vertex);
Degree degree_of(const CombType& type);

}  // namespace tropcount
