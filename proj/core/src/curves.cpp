#include "tropcount/curves.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tropcount {

std::strong_ordering operator<=>(const End& a, const End& b) {
  if (auto c = a.direction <=> b.direction; c != 0) return c;
  int w = cmp(a.weight, b.weight);
  return w < 0 ? std::strong_ordering::less
               : (w > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Degree::Degree(std::vector<End> ends) : ends_(std::move(ends)) {
  for (const auto& e : ends_) {
    if (e.direction.dim() != ends_.front().direction.dim())
      throw std::invalid_argument("degree entries have different dimensions");
    if (e.weight <= 0) throw std::invalid_argument("end weights must be positive");
    if (!is_primitive(e.direction)) throw std::invalid_argument("end direction must be primitive");
  }
}

LatticeVec Degree::sum() const {
  LatticeVec s(rank());
  for (const auto& e : ends_) s += e.vector();
  return s;
}

Degree Degree::sorted() const {
  auto ends = ends_;
  std::sort(ends.begin(), ends.end());
  return Degree(std::move(ends));
}

bool operator==(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) return false;
  auto x = a.ends_, y = b.ends_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

long expected_dimension(std::size_t ends, int genus, std::size_t rank, long overvalence) {
  return static_cast<long>(ends) + (static_cast<long>(rank) - 3) * (1 - genus) - overvalence;
}

std::size_t CombType::end_count() const {
  if (degenerate_line) return 2;
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const TypeEdge& e) { return !e.bounded(); }));
}

std::vector<int> CombType::bounded_edges() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].bounded()) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> CombType::incident_edges(int vertex) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].tail == vertex || edges[i].head == vertex) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<LatticeVec> CombType::flag_vectors(int vertex) const {
  std::vector<LatticeVec> out;
  for (int i : incident_edges(vertex)) {
    const auto& e = edges[static_cast<std::size_t>(i)];
    LatticeVec v = e.weight * e.direction;
    out.push_back(e.tail == vertex ? v : -v);
  }
  return out;
}

std::uint64_t trivalent_tree_count(std::size_t leaves) {
  if (leaves < 3) return 0;
  std::uint64_t count = 1;
  for (std::uint64_t k = 3; k <= 2 * leaves - 5; k += 2) count *= k;
  return count;
}

namespace {

void insert_leaf(LeafTree& tree, std::size_t leaf, const std::function<void(const LeafTree&)>& visit) {
  if (leaf == tree.leaves) {
    visit(tree);
    return;
  }
  const int fresh = static_cast<int>(tree.leaves + leaf - 2);
  const std::size_t existing = tree.edges.size();
  for (std::size_t i = 0; i < existing; ++i) {
    const auto [a, b] = tree.edges[i];
    tree.edges[i] = {a, fresh};
    tree.edges.emplace_back(fresh, b);
    tree.edges.emplace_back(fresh, static_cast<int>(leaf));
    insert_leaf(tree, leaf + 1, visit);
    tree.edges.pop_back();
    tree.edges.pop_back();
    tree.edges[i] = {a, b};
  }
}

}  // namespace

void for_each_trivalent_tree(std::size_t leaves, const std::function<void(const LeafTree&)>& visit) {
  if (leaves < 3) return;
  LeafTree tree;
  tree.leaves = leaves;
  const int centre = static_cast<int>(leaves);
  tree.edges = {{0, centre}, {1, centre}, {2, centre}};
  tree.edges.reserve(2 * leaves - 3);
  insert_leaf(tree, 3, visit);
}

std::optional<CombType> balance_propagate(const LeafTree& tree, const Degree& degree) {
  const std::size_t e = tree.leaves;
  if (degree.size() != e) throw std::invalid_argument("leaf count does not match degree");
  const std::size_t nodes = 2 * e - 2;
  std::vector<std::vector<int>> adj(nodes);
  for (auto [a, b] : tree.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  const int root = static_cast<int>(e);
  std::vector<int> parent(nodes, -1), order;
  order.reserve(nodes);
  std::vector<int> stack{root};
  parent[static_cast<std::size_t>(root)] = root;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : adj[static_cast<std::size_t>(v)])
      if (parent[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
  }
  const std::size_t n = degree.rank();
  std::vector<LatticeVec> sums(nodes, LatticeVec(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    if (v < e) sums[v] = degree.ends()[v].vector();
    if (*it != root) sums[static_cast<std::size_t>(parent[v])] += sums[v];
  }

  CombType type;
  type.rank = n;
  std::vector<int> vertex_id(nodes, -1);
  for (int v : order)
    if (static_cast<std::size_t>(v) >= e) vertex_id[static_cast<std::size_t>(v)] = type.vertex_count++;
  for (int v : order) {
    const auto vi = static_cast<std::size_t>(v);
    if (vi < e) continue;
    for (int w : adj[vi]) {
      const auto wi = static_cast<std::size_t>(w);
      if (w == parent[vi]) continue;
      TypeEdge edge;
      edge.tail = vertex_id[vi];
      if (wi < e) {
        edge.direction = degree.ends()[wi].direction;
        edge.weight = degree.ends()[wi].weight;
      } else {
        if (sums[wi].is_zero()) return std::nullopt;
        auto [dir, mult] = primitive(sums[wi]);
        edge.head = vertex_id[wi];
        edge.direction = std::move(dir);
        edge.weight = std::move(mult);
      }
      type.edges.push_back(std::move(edge));
    }
  }
  return type;
}

namespace {

class Canonicalizer {
 public:
  explicit Canonicalizer(const CombType& type) : type_(type), incident_(static_cast<std::size_t>(type.vertex_count)) {
    for (std::size_t i = 0; i < type.edges.size(); ++i) {
      const auto& e = type.edges[i];
      incident_[static_cast<std::size_t>(e.tail)].push_back(static_cast<int>(i));
      if (e.bounded()) incident_[static_cast<std::size_t>(e.head)].push_back(static_cast<int>(i));
    }
    marks_.resize(type.edges.size());
    for (std::size_t i = 0; i < type.markings.size(); ++i) {
      auto& m = marks_[static_cast<std::size_t>(type.markings[i])];
      m += m.empty() ? "{" : ",";
      m += std::to_string(i);
    }
    for (auto& m : marks_)
      if (!m.empty()) m += "}";
    end_labels_.resize(type.edges.size());
    for (std::size_t i = 0; i < type.edges.size(); ++i) {
      const auto& e = type.edges[i];
      if (!e.bounded()) end_labels_[i] = "[" + e.direction.str() + "w" + e.weight.get_str() + marks_[i] + "]";
    }
    order_.resize(static_cast<std::size_t>(type.vertex_count));
  }

  std::string encode(int root, bool record) { return encode(root, -1, record); }

  /// Child edges of each vertex in canonical order, valid after encode(root, true).
  const std::vector<std::vector<int>>& order() const { return order_; }

 private:
  std::string encode(int v, int from, bool record) {
    std::vector<std::pair<std::string, int>> items;
    for (int ei : incident_[static_cast<std::size_t>(v)]) {
      if (ei == from) continue;
      const auto i = static_cast<std::size_t>(ei);
      const auto& e = type_.edges[i];
      if (!e.bounded()) {
        items.emplace_back(end_labels_[i], ei);
      } else {
        int child = e.tail == v ? e.head : e.tail;
        items.emplace_back("(" + marks_[i] + encode(child, ei, record) + ")", ei);
      }
    }
    std::sort(items.begin(), items.end());
    std::string out;
    for (auto& it : items) out += it.first;
    if (record) {
      auto& o = order_[static_cast<std::size_t>(v)];
      o.clear();
      for (auto& it : items) o.push_back(it.second);
    }
    return out;
  }

  const CombType& type_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::string> marks_;
  std::vector<std::string> end_labels_;
  std::vector<std::vector<int>> order_;
};

// Rebuilds `type` rooted at `root`, visiting child edges in `order`.
CombType rebuild(const CombType& type, int root, const std::vector<std::vector<int>>& order) {
  CombType out;
  out.rank = type.rank;
  out.vertex_count = type.vertex_count;
  std::vector<int> edge_map(type.edges.size(), -1);
  std::vector<int> vertex_map(static_cast<std::size_t>(type.vertex_count), -1);
  int next_vertex = 0;

  std::function<void(int)> visit = [&](int v) {
    const int nv = vertex_map[static_cast<std::size_t>(v)];
    for (int ei : order[static_cast<std::size_t>(v)]) {
      const auto& e = type.edges[static_cast<std::size_t>(ei)];
      TypeEdge ne;
      ne.tail = nv;
      ne.weight = e.weight;
      edge_map[static_cast<std::size_t>(ei)] = static_cast<int>(out.edges.size());
      if (!e.bounded()) {
        ne.direction = e.direction;
        out.edges.push_back(std::move(ne));
        continue;
      }
      const int child = e.tail == v ? e.head : e.tail;
      ne.direction = e.tail == v ? e.direction : -e.direction;
      ne.head = next_vertex;
      vertex_map[static_cast<std::size_t>(child)] = next_vertex++;
      out.edges.push_back(std::move(ne));
      visit(child);
    }
  };
  vertex_map[static_cast<std::size_t>(root)] = next_vertex++;
  visit(root);

  out.markings.reserve(type.markings.size());
  for (int m : type.markings) out.markings.push_back(edge_map[static_cast<std::size_t>(m)]);
  return out;
}

std::vector<std::vector<int>> incidence_order(const CombType& type, int root) {
  std::vector<std::vector<int>> order(static_cast<std::size_t>(type.vertex_count));
  std::vector<int> parent_edge(static_cast<std::size_t>(type.vertex_count), -2);
  std::vector<int> stack{root};
  parent_edge[static_cast<std::size_t>(root)] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int ei : type.incident_edges(v)) {
      if (ei == parent_edge[static_cast<std::size_t>(v)]) continue;
      order[static_cast<std::size_t>(v)].push_back(ei);
      const auto& e = type.edges[static_cast<std::size_t>(ei)];
      if (e.bounded()) {
        int child = e.tail == v ? e.head : e.tail;
        parent_edge[static_cast<std::size_t>(child)] = ei;
        stack.push_back(child);
      }
    }
  }
  return order;
}

}  // namespace

CombType canonicalize(const CombType& type) {
  if (type.degenerate_line) {
    CombType out = type;
    auto& e = out.edges.front();
    LatticeVec neg = -e.direction;
    if (neg > e.direction) e.direction = std::move(neg);
    out.key = "line[" + e.direction.str() + "w" + e.weight.get_str() + "]{";
    for (std::size_t i = 0; i < out.markings.size(); ++i) out.key += (i ? "," : "") + std::to_string(i);
    out.key += "}";
    return out;
  }
  Canonicalizer canon(type);
  int best_root = 0;
  std::string best;
  for (int r = 0; r < type.vertex_count; ++r) {
    std::string s = canon.encode(r, false);
    if (r == 0 || s < best) {
      best = std::move(s);
      best_root = r;
    }
  }
  canon.encode(best_root, true);
  CombType out = rebuild(type, best_root, canon.order());
  out.key = std::move(best);
  return out;
}

CombType reroot(const CombType& type, int root) {
  if (type.degenerate_line) return type;
  if (root < 0 || root >= type.vertex_count) throw std::out_of_range("root vertex out of range");
  CombType out = rebuild(type, root, incidence_order(type, root));
  out.key = type.key;
  return out;
}

std::vector<CombType> unmarked_types(const Degree& degree) {
  if (degree.size() < 2) throw std::invalid_argument("a degree needs at least two ends");
  if (!degree.balanced()) throw std::invalid_argument("degree is not balanced");
  if (degree.size() == 2) {
    const auto& a = degree.ends()[0];
    CombType line;
    line.rank = degree.rank();
    line.degenerate_line = true;
    line.edges.push_back(TypeEdge{-1, -1, a.weight, a.direction});
    return {canonicalize(line)};
  }
  std::map<std::string, CombType> seen;
  for_each_trivalent_tree(degree.size(), [&](const LeafTree& tree) {
    auto type = balance_propagate(tree, degree);
    if (!type) return;
    CombType canon = canonicalize(*type);
    if (!seen.contains(canon.key)) seen.emplace(canon.key, std::move(canon));
  });
  std::vector<CombType> out;
  out.reserve(seen.size());
  for (auto& [k, t] : seen) out.push_back(std::move(t));
  return out;
}

std::vector<CombType> enumerate_types(const Degree& degree, std::size_t marks) {
  std::map<std::string, CombType> seen;
  for (const auto& base : unmarked_types(degree)) {
    const std::size_t edges = base.edges.size();
    std::vector<int> assignment(marks, 0);
    while (true) {
      CombType marked = base;
      marked.markings = assignment;
      CombType canon = canonicalize(marked);
      if (!seen.contains(canon.key)) seen.emplace(canon.key, std::move(canon));
      std::size_t i = 0;
      while (i < marks && ++assignment[i] == static_cast<int>(edges)) assignment[i++] = 0;
      if (i == marks) break;
    }
  }
  std::vector<CombType> out;
  out.reserve(seen.size());
  for (auto& [k, t] : seen) out.push_back(std::move(t));
  return out;
}

Integer weight(const CombType& type) {
  Integer w = 1;
  for (const auto& e : type.edges)
    if (e.bounded()) w *= e.weight;
  for (int m : type.markings) w *= type.edges[static_cast<std::size_t>(m)].weight;
  return w;
}

bool vertex_balanced(const CombType& type, int vertex) {
  LatticeVec s(type.rank);
  for (const auto& f : type.flag_vectors(vertex)) s += f;
  return s.is_zero();
}

Degree degree_of(const CombType& type) {
  std::vector<End> ends;
  for (const auto& e : type.edges) {
    if (e.bounded()) continue;
    ends.push_back(End{e.direction, e.weight});
    if (type.degenerate_line) ends.push_back(End{-e.direction, e.weight});
  }
  return Degree(std::move(ends));
}

}  // namespace tropcount
