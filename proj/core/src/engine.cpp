#include "tropcount/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

namespace tropcount {

namespace {

std::vector<Degree> refine_all(const DegreeSet& set, const std::optional<Integer>& max_weight) {
  std::vector<Degree> out;
  for (const auto& c : set)
    for (auto& d : refine_coarse(c, max_weight)) out.push_back(std::move(d));
  return out;
}

std::size_t codim_sum(const Problem& p) {
  std::size_t s = 0;
  if (p.constraints.kind == ConstraintSource::Kind::explicit_list) {
    for (const auto& c : p.constraints.constraints) s += c.codim();
  } else {
    for (const auto& c : p.constraints.spec) s += c.codim;
  }
  return s;
}

struct WorkItem {
  std::size_t degree;
  const CombType* type;
};

struct ItemResult {
  SearchResult search;
  std::vector<Multiplicity> multiplicities;
  bool non_general = false;
};

ItemResult run_item(const WorkItem& item, const std::vector<AffineConstraint>& constraints) {
  ItemResult r;
  r.search = search_markings(*item.type, constraints);
  if (r.search.non_general) {
    r.non_general = true;
    return r;
  }
  try {
    for (const auto& c : r.search.curves) r.multiplicities.push_back(total_multiplicity(c.type, c.solution, constraints));
  } catch (const NonGeneralError&) {
    r.non_general = true;
  }
  return r;
}

// Runs every item; stops early once some item reports non-general constraints.
std::vector<ItemResult> run_items(const std::vector<WorkItem>& items, const std::vector<AffineConstraint>& constraints,
                                  unsigned workers, bool& non_general) {
  std::vector<ItemResult> results(items.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  auto worker = [&] {
    while (!abort.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      results[i] = run_item(items[i], constraints);
      if (results[i].non_general) abort.store(true);
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(items.size())));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < count; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  non_general = abort.load();
  return results;
}

}  // namespace

std::vector<Degree> expand_degrees(const Problem& p) {
  const auto& src = p.degree_source;
  std::vector<Degree> degrees;
  switch (src.kind) {
    case DegreeSource::Kind::explicit_degrees:
      degrees = src.degrees;
      break;
    case DegreeSource::Kind::flag3:
      degrees = refine_all(preset_flag3(src.s, src.t), src.max_weight);
      break;
    case DegreeSource::Kind::octahedron:
      degrees = refine_all(preset_octahedron(src.a), src.max_weight);
      break;
    case DegreeSource::Kind::coarse:
      degrees = refine_all(enumerate_coarse_degrees(src.rays, src.ray_constraints, src.cap), src.max_weight);
      break;
  }
  for (const auto& d : degrees)
    if (d.rank() != p.rank) throw std::invalid_argument("degree dimension differs from the problem rank");
  std::vector<Degree> unique;
  for (auto& d : degrees)
    if (std::find(unique.begin(), unique.end(), d) == unique.end()) unique.push_back(std::move(d));
  return unique;
}

std::optional<Integer> odd_class_vanishing(const Problem& p) {
  if (p.options.odd_insertions == 0) return std::nullopt;
  if (p.degree_source.kind != DegreeSource::Kind::octahedron)
    throw std::invalid_argument("odd-degree insertions are only supported for the octahedron preset");
  return Integer(0);
}

CountReport count_invariant(const Problem& p) {
  const auto start = std::chrono::steady_clock::now();
  CountReport report;
  report.seed = p.constraints.seed;
  auto finish = [&] {
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  if (auto zero = odd_class_vanishing(p)) {
    report.total = *zero;
    report.notes.push_back("odd-degree cohomology insertion: the invariant vanishes");
    return finish();
  }

  const std::size_t codims = codim_sum(p);
  std::vector<std::vector<CombType>> types;
  std::size_t max_ends = 0;
  for (auto& d : expand_degrees(p)) {
    DegreeReport dr;
    dr.dimension_ok = static_cast<long>(codims) == expected_dimension(d.size(), 0, p.rank);
    dr.degree = std::move(d);
    if (dr.dimension_ok) max_ends = std::max(max_ends, dr.degree.size());
    report.per_degree.push_back(std::move(dr));
  }
  if (max_ends >= 8 && !p.options.long_run)
    throw std::runtime_error("long-running problem: enable the long option to run it");

  std::vector<WorkItem> items;
  types.resize(report.per_degree.size());
  for (std::size_t i = 0; i < report.per_degree.size(); ++i) {
    auto& dr = report.per_degree[i];
    if (!dr.dimension_ok) continue;
    types[i] = unmarked_types(dr.degree);
    dr.type_count = types[i].size();
  }
  for (std::size_t i = 0; i < types.size(); ++i)
    for (const auto& t : types[i]) items.push_back(WorkItem{i, &t});

  if (std::none_of(report.per_degree.begin(), report.per_degree.end(),
                   [](const DegreeReport& d) { return d.dimension_ok; })) {
    report.notes.push_back("no degree satisfies the dimension condition; the count is 0");
    if (p.constraints.kind == ConstraintSource::Kind::explicit_list)
      report.constraints = p.constraints.constraints;
    else
      report.constraints = generate_constraints(p.constraints.spec, p.rank, p.constraints.seed, p.constraints.bound);
    return finish();
  }

  const bool explicit_list = p.constraints.kind == ConstraintSource::Kind::explicit_list;
  const std::uint64_t attempts = explicit_list ? 1 : std::max<std::uint64_t>(1, p.constraints.retries);
  std::vector<ItemResult> results;
  bool done = false;
  for (std::uint64_t retry = 0; retry < attempts && !done; ++retry) {
    report.constraints = explicit_list ? p.constraints.constraints
                                       : generate_constraints(p.constraints.spec, p.rank, p.constraints.seed,
                                                              p.constraints.bound, retry);
    for (const auto& c : report.constraints)
      if (c.rank() != p.rank) throw std::invalid_argument("constraint dimension differs from the problem rank");
    report.genericity_retries = retry;
    bool non_general = false;
    results = run_items(items, report.constraints, p.options.workers, non_general);
    done = !non_general;
  }
  if (!done) {
    if (explicit_list) throw std::runtime_error("the given constraints are not general");
    throw GeneralityExhausted();
  }

  for (std::size_t k = 0; k < items.size(); ++k) {
    auto& dr = report.per_degree[items[k].degree];
    auto& r = results[k];
    dr.stats.nodes += r.search.stats.nodes;
    dr.stats.leaves += r.search.stats.leaves;
    for (std::size_t c = 0; c < r.search.curves.size(); ++c) {
      dr.subtotal += r.multiplicities[c].total;
      dr.curves.push_back(CurveRecord{std::move(r.search.curves[c].type), std::move(r.search.curves[c].solution),
                                      std::move(r.multiplicities[c])});
    }
  }
  for (const auto& dr : report.per_degree) report.tropical_total += dr.subtotal;
  report.total = report.tropical_total;
  if (p.divisor) report.total = apply_divisor_axiom(report.tropical_total, p.divisor->pairings, p.divisor->exponents);
  return finish();
}

Integer apply_divisor_axiom(const Integer& base, const std::vector<Integer>& pairings,
                            const std::vector<unsigned long>& exponents) {
  if (pairings.size() != exponents.size()) throw std::invalid_argument("pairings and exponents differ in length");
  Integer out = base;
  for (std::size_t i = 0; i < pairings.size(); ++i) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), pairings[i].get_mpz_t(), exponents[i]);
    out *= power;
  }
  return out;
}

Integer kontsevich_oracle(unsigned long d) {
  if (d == 0) throw std::invalid_argument("degree must be positive");
  std::vector<Integer> n(d + 1);
  n[1] = 1;
  auto binom = [](unsigned long a, unsigned long b) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
  };
  for (unsigned long k = 2; k <= d; ++k) {
    Integer sum = 0;
    for (unsigned long d1 = 1; d1 < k; ++d1) {
      const unsigned long d2 = k - d1;
      Integer term = n[d1] * n[d2] * (d1 * d1) * d2;
      term *= Integer(d2) * binom(3 * k - 4, 3 * d1 - 2) - Integer(d1) * binom(3 * k - 4, 3 * d1 - 1);
      sum += term;
    }
    n[k] = sum;
  }
  return n[d];
}

namespace {

Problem points_problem(std::size_t rank, std::size_t points) {
  Problem p;
  p.rank = rank;
  p.constraints.kind = ConstraintSource::Kind::generate;
  p.constraints.spec.assign(points, ConstraintSpec{rank - 1, {}});
  return p;
}

}  // namespace

Problem preset_flag3_problem(const Integer& s, const Integer& t) {
  Integer points = s + t;
  Problem p = points_problem(3, points.get_ui());
  p.degree_source.kind = DegreeSource::Kind::flag3;
  p.degree_source.s = s;
  p.degree_source.t = t;
  return p;
}

Problem preset_octahedron_problem(const Integer& a) {
  Problem p = points_problem(3, a.get_ui());
  p.degree_source.kind = DegreeSource::Kind::octahedron;
  p.degree_source.a = a;
  return p;
}

Problem plane_problem(unsigned long d) {
  if (d == 0) throw std::invalid_argument("degree must be positive");
  Problem p = points_problem(2, 3 * d - 1);
  std::vector<End> ends;
  for (unsigned long i = 0; i < d; ++i) {
    ends.push_back(End{{-1, 0}, 1});
    ends.push_back(End{{0, -1}, 1});
    ends.push_back(End{{1, 1}, 1});
  }
  p.degree_source.kind = DegreeSource::Kind::explicit_degrees;
  p.degree_source.degrees = {Degree(std::move(ends))};
  // Bounded edges take many directions, so small offsets often line up along one of them.
  p.constraints.bound = 1000000;
  return p;
}

}  // namespace tropcount
