#include "tropcount/search.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "model.hpp"

namespace tropcount {

namespace {

// Raised when machine arithmetic would overflow; the search is redone with GMP.
struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
  return std::gcd(a, b);
}

// IntegerEchelon on 64-bit integers; every operation that could overflow throws Overflow.
class SmallEchelon {
 public:
  using AddResult = IntegerEchelon::AddResult;

  explicit SmallEchelon(std::size_t unknowns) : unknowns_(unknowns), pivot_row_(unknowns, -1) {}

  bool complete() const { return size_ == unknowns_; }
  bool is_pivot(std::size_t column) const { return pivot_row_[column] >= 0; }

  AddResult add(std::span<const std::int64_t> coeffs, std::int64_t rhs) {
    scratch_.assign(coeffs.begin(), coeffs.end());
    std::int64_t k = rhs;
    for (std::size_t i = 0; i < size_; ++i)
      if (scratch_[rows_[i].pivot] != 0) eliminate(rows_[i], k);
    std::size_t pivot = 0;
    while (pivot < unknowns_ && scratch_[pivot] == 0) ++pivot;
    if (pivot == unknowns_) return k == 0 ? AddResult::redundant : AddResult::inconsistent;
    std::int64_t g = k;
    for (auto v : scratch_) g = gcd64(g, v);
    if (scratch_[pivot] < 0) g = -g;
    if (size_ == rows_.size()) rows_.emplace_back();
    Row& row = rows_[size_];
    row.coeffs.resize(unknowns_);
    for (std::size_t j = 0; j < unknowns_; ++j) row.coeffs[j] = scratch_[j] / g;
    row.rhs = k / g;
    row.pivot = pivot;
    pivot_row_[pivot] = static_cast<int>(size_++);
    return AddResult::independent;
  }

  void pop() { pivot_row_[rows_[--size_].pivot] = -1; }

  std::optional<int> sign_if_determined(std::span<const std::int64_t> coeffs, std::int64_t constant) const {
    scratch_.assign(coeffs.begin(), coeffs.end());
    std::int64_t k = checked_neg(constant);
    for (std::size_t i = 0; i < size_; ++i)
      if (scratch_[rows_[i].pivot] != 0) eliminate(rows_[i], k);
    for (auto v : scratch_)
      if (v != 0) return std::nullopt;
    return k < 0 ? 1 : (k > 0 ? -1 : 0);
  }

  std::vector<Rational> solution() const {
    IntegerEchelon big(unknowns_);
    std::vector<Integer> c(unknowns_);
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = 0; j < unknowns_; ++j) c[j] = static_cast<long>(rows_[i].coeffs[j]);
      big.add(c, Integer(static_cast<long>(rows_[i].rhs)));
    }
    return big.solution();
  }

 private:
  struct Row {
    std::vector<std::int64_t> coeffs;
    std::int64_t rhs = 0;
    std::size_t pivot = 0;
  };

  // f <- a f - b row with a > 0, so that f vanishes at the row's pivot.
  void eliminate(const Row& row, std::int64_t& k) const {
    const std::int64_t c = scratch_[row.pivot], p = row.coeffs[row.pivot];
    const std::int64_t g = gcd64(c, p);
    const std::int64_t a = p / g, b = c / g;
    for (std::size_t j = 0; j < unknowns_; ++j)
      if (row.coeffs[j] != 0 || scratch_[j] != 0)
        scratch_[j] = checked_sub(checked_mul(scratch_[j], a), checked_mul(b, row.coeffs[j]));
    k = checked_sub(checked_mul(k, a), checked_mul(b, row.rhs));
  }

  std::size_t unknowns_;
  std::size_t size_ = 0;
  std::vector<Row> rows_;
  std::vector<int> pivot_row_;
  mutable std::vector<std::int64_t> scratch_;
};

// Arithmetic used by one search: GMP, or machine integers with overflow detection.
struct BigArithmetic {
  using Scalar = Integer;
  using Echelon = IntegerEchelon;
  static Scalar from(const Integer& v) { return v; }
  static Scalar neg(const Scalar& v) { return -v; }
};

struct SmallArithmetic {
  using Scalar = std::int64_t;
  using Echelon = SmallEchelon;
  static Scalar from(const Integer& v) {
    if (!v.fits_slong_p()) throw Overflow{};
    return v.get_si();
  }
  static Scalar neg(Scalar v) { return checked_neg(v); }
};

// An integer affine form coeffs . x + constant that must end up strictly positive.
template <typename Scalar>
struct Check {
  std::vector<Scalar> coeffs;
  Scalar constant;
};

// Scales a rational affine form by a positive integer so that it becomes integral.
template <typename Arith>
Check<typename Arith::Scalar> integral(const std::vector<Rational>& coeffs, const Rational& constant) {
  Integer den = constant.get_den();
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Check<typename Arith::Scalar> out{std::vector<typename Arith::Scalar>(coeffs.size()),
                                    Arith::from(Integer(constant * den))};
  for (std::size_t j = 0; j < coeffs.size(); ++j) out.coeffs[j] = Arith::from(Integer(coeffs[j] * den));
  return out;
}

// One marking placed on one edge, in integer form.
template <typename Scalar>
struct Placement {
  std::vector<Check<Scalar>> rows;  // coeffs . x = -constant
  int lower = -1;                   // index of the check t > 0
  int upper = -1;                   // index of the check length - t > 0 on bounded edges
};

template <typename Arith>
class Searcher {
  using Scalar = typename Arith::Scalar;
  using Echelon = typename Arith::Echelon;

 public:
  Searcher(const CombType& type, const std::vector<AffineConstraint>& constraints)
      : type_(type), constraints_(constraints), model_(type), order_(model_.edge_order()), ech_(model_.unknowns()) {
    const std::size_t l = constraints.size();
    forms_.assign(l, std::vector<std::optional<detail::MarkingForms>>(type.edges.size()));
    placements_.assign(l, std::vector<Placement<Scalar>>(type.edges.size()));
    std::map<std::pair<std::size_t, LatticeVec>, detail::MarkingGeometry> geometry;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t e = 0; e < type.edges.size(); ++e) {
        const auto& dir = type.edges[e].direction;
        auto key = std::make_pair(i, dir);
        auto it = geometry.find(key);
        if (it == geometry.end()) it = geometry.emplace(key, detail::marking_geometry(dir, constraints[i])).first;
        const auto& f = *(forms_[i][e] = model_.marking_forms(static_cast<int>(e), it->second, constraints[i]));
        auto& pl = placements_[i][e];
        for (const auto& row : f.rows) pl.rows.push_back(integral<Arith>(row.coeffs, -row.rhs));
        pl.lower = add_check(integral<Arith>(f.t_coeffs, f.t_constant));
        if (type.edges[e].bounded()) {
          std::vector<Rational> c = f.t_coeffs;
          for (auto& v : c) v = -v;
          c[static_cast<std::size_t>(model_.length_unknown(static_cast<int>(e)))] += 1;
          pl.upper = add_check(integral<Arith>(c, -f.t_constant));
        }
      }
    assignment_.assign(l, -1);
    rows_below_.assign(type.edges.size(), 0);
    for (std::size_t j = 0; j < model_.bounded(); ++j) {
      Check<Scalar> c{std::vector<Scalar>(model_.unknowns()), Scalar(0)};
      c.coeffs[j] = 1;
      initial_.push_back(add_check(std::move(c)));
    }
  }

  SearchResult run() {
    step(0, 0, initial_);
    for (auto& [key, curve] : found_) result_.curves.push_back(std::move(curve));
    if (result_.non_general) result_.curves.clear();
    return std::move(result_);
  }

 private:
  int add_check(Check<Scalar> c) {
    checks_.push_back(std::move(c));
    return static_cast<int>(checks_.size() - 1);
  }

  // Drops checks that became constant; false if one of them is not positive.
  bool settle(std::vector<int>& pending) const {
    for (std::size_t k = 0; k < pending.size();) {
      const auto& c = checks_[static_cast<std::size_t>(pending[k])];
      if (auto sign = ech_.sign_if_determined(c.coeffs, c.constant)) {
        if (*sign <= 0) return false;
        pending[k] = pending.back();
        pending.pop_back();
      } else {
        ++k;
      }
    }
    return true;
  }

  void step(std::size_t pos, std::size_t next, const std::vector<int>& pending) {
    if (result_.non_general) return;
    ++result_.stats.nodes;
    const int edge = order_[pos];
    const auto& e = type_.edges[static_cast<std::size_t>(edge)];

    // The same count applied to the far side of each edge caps the equations below it.
    const auto& owners = model_.path_to_tail(edge);
    const int slack = static_cast<int>(model_.rank()) - 1;
    for (std::size_t i = next; i < constraints_.size(); ++i) {
      if (assignment_[i] >= 0) continue;
      const auto& pl = placements_[i][static_cast<std::size_t>(edge)];
      const int added = static_cast<int>(pl.rows.size());
      if (std::any_of(owners.begin(), owners.end(), [&](const auto& o) {
            return rows_below_[static_cast<std::size_t>(o.first)] + added > span(o.first) + slack;
          }))
        continue;
      std::size_t kept = 0;
      bool ok = true;
      for (const auto& row : pl.rows) {
        auto r = ech_.add(row.coeffs, Arith::neg(row.constant));
        if (r == Echelon::AddResult::independent) {
          ++kept;
          continue;
        }
        ok = false;
        if (r == Echelon::AddResult::redundant) result_.non_general = true;
        break;
      }
      if (ok) {
        std::vector<int> next_pending = pending;
        next_pending.push_back(pl.lower);
        if (pl.upper >= 0) next_pending.push_back(pl.upper);
        if (settle(next_pending)) {
          assignment_[i] = edge;
          for (const auto& o : owners) rows_below_[static_cast<std::size_t>(o.first)] += added;
          step(pos, i + 1, next_pending);
          for (const auto& o : owners) rows_below_[static_cast<std::size_t>(o.first)] -= added;
          assignment_[i] = -1;
        }
      }
      for (; kept > 0; --kept) ech_.pop();
      if (result_.non_general) return;
    }

    // Leaving a bounded edge closes its subtree: the markings whose rows involve its lengths
    // must determine every one of them.
    if (e.bounded()) {
      if (rows_below_[static_cast<std::size_t>(edge)] < span(edge)) return;
      const int last = model_.length_unknown(edge);
      for (int j = model_.subtree_begin(edge); j <= last; ++j)
        if (!ech_.is_pivot(static_cast<std::size_t>(j))) return;
    }
    if (pos + 1 < order_.size()) {
      step(pos + 1, 0, pending);
      return;
    }
    if (!ech_.complete()) return;
    if (std::any_of(assignment_.begin(), assignment_.end(), [](int a) { return a < 0; })) return;
    leaf();
  }

  // Number of length unknowns in the subtree closed by a bounded edge, the edge included.
  int span(int edge) const { return model_.length_unknown(edge) - model_.subtree_begin(edge) + 1; }

  void leaf() {
    ++result_.stats.leaves;
    std::vector<detail::MarkingForms> forms;
    for (std::size_t i = 0; i < constraints_.size(); ++i)
      forms.push_back(*forms_[i][static_cast<std::size_t>(assignment_[i])]);
    Solution s = model_.extract(ech_.solution(), forms);
    CombType marked = type_;
    marked.markings = assignment_;
    marked.key = canonicalize(marked).key;
    if (found_.contains(marked.key)) return;
    if (!verify_general(marked, s, constraints_).general) {
      result_.non_general = true;
      return;
    }
    auto key = marked.key;
    found_.emplace(std::move(key), MatchedCurve{std::move(marked), std::move(s)});
  }

  const CombType& type_;
  const std::vector<AffineConstraint>& constraints_;
  detail::LinearModel model_;
  const std::vector<int>& order_;
  Echelon ech_;
  std::vector<std::vector<std::optional<detail::MarkingForms>>> forms_;
  std::vector<std::vector<Placement<Scalar>>> placements_;
  std::vector<Check<Scalar>> checks_;
  std::vector<int> assignment_;
  std::vector<int> rows_below_;  // per bounded edge: equations that involve its subtree lengths
  std::vector<int> initial_;
  std::map<std::string, MatchedCurve> found_;
  SearchResult result_;
};

}  // namespace

SearchResult search_markings(const CombType& type, const std::vector<AffineConstraint>& constraints) {
  if (type.degenerate_line) {
    CombType marked = type;
    marked.markings.assign(constraints.size(), 0);
    marked.key = canonicalize(marked).key;
    SearchResult out;
    auto m = match_constraints(marked, constraints);
    out.stats.nodes = out.stats.leaves = 1;
    if (m.status == MatchStatus::non_general) {
      out.non_general = true;
    } else if (m.status == MatchStatus::unique) {
      out.curves.push_back(MatchedCurve{std::move(marked), std::move(*m.solution)});
    }
    return out;
  }
  std::size_t total = 0;
  for (const auto& c : constraints) total += c.codim();
  if (static_cast<long>(total) != expected_dimension(type.end_count(), 0, type.rank)) throw DimensionMismatch();
  try {
    return Searcher<SmallArithmetic>(type, constraints).run();
  } catch (const Overflow&) {
    return Searcher<BigArithmetic>(type, constraints).run();
  }
}

}  // namespace tropcount
