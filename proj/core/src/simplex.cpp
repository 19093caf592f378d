#include "tropcount/simplex.hpp"

#include <stdexcept>

namespace tropcount {

namespace {

struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // variable columns; rhs stored separately
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / a[r][c];
    for (auto& v : a[r])
      if (v != 0) v *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    basis[r] = c;
  }
};

enum class RunStatus { optimal, unbounded };

// Maximizes cost . x from the current basic feasible solution. Columns flagged in
// `blocked` never enter the basis.
RunStatus run(Tableau& t, const std::vector<Rational>& cost, const std::vector<bool>& blocked) {
  while (true) {
    std::size_t entering = t.cols;
    for (std::size_t j = 0; j < t.cols && entering == t.cols; ++j) {
      if (blocked[j]) continue;
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < t.rows; ++i)
        if (t.a[i][j] != 0) reduced -= cost[t.basis[i]] * t.a[i][j];
      if (reduced > 0) entering = j;
    }
    if (entering == t.cols) return RunStatus::optimal;

    std::size_t leaving = t.rows;
    Rational best;
    for (std::size_t i = 0; i < t.rows; ++i) {
      if (t.a[i][entering] <= 0) continue;
      Rational ratio = t.b[i] / t.a[i][entering];
      if (leaving == t.rows || ratio < best || (ratio == best && t.basis[i] < t.basis[leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    if (leaving == t.rows) return RunStatus::unbounded;
    t.pivot(leaving, entering);
  }
}

}  // namespace

LpResult maximize(const std::vector<Rational>& objective, const std::vector<LpRow>& rows) {
  const std::size_t n = objective.size();
  const std::size_t m = rows.size();
  for (const auto& r : rows)
    if (r.coeffs.size() != n) throw std::invalid_argument("LP row dimension mismatch");

  // Normalize signs so every right-hand side is nonnegative.
  std::vector<LpRow> norm = rows;
  for (auto& r : norm) {
    if (r.rhs < 0) {
      for (auto& c : r.coeffs) c = -c;
      r.rhs = -r.rhs;
      if (r.relation == Relation::less_equal)
        r.relation = Relation::greater_equal;
      else if (r.relation == Relation::greater_equal)
        r.relation = Relation::less_equal;
    }
  }

  std::size_t slack_count = 0, art_count = 0;
  for (const auto& r : norm) {
    if (r.relation != Relation::equal) ++slack_count;
    if (r.relation != Relation::less_equal) ++art_count;
  }
  const std::size_t art_begin = 2 * n + slack_count;
  Tableau t;
  t.rows = m;
  t.cols = art_begin + art_count;
  t.a.assign(m, std::vector<Rational>(t.cols));
  t.b.resize(m);
  t.basis.resize(m);

  std::size_t slack = 2 * n, art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = norm[i];
    for (std::size_t j = 0; j < n; ++j) {
      t.a[i][j] = r.coeffs[j];
      t.a[i][n + j] = -r.coeffs[j];
    }
    t.b[i] = r.rhs;
    switch (r.relation) {
      case Relation::less_equal:
        t.a[i][slack] = 1;
        t.basis[i] = slack++;
        break;
      case Relation::greater_equal:
        t.a[i][slack++] = -1;
        t.a[i][art] = 1;
        t.basis[i] = art++;
        break;
      case Relation::equal:
        t.a[i][art] = 1;
        t.basis[i] = art++;
        break;
    }
  }

  std::vector<bool> blocked(t.cols, false);
  if (art_count > 0) {
    std::vector<Rational> phase1(t.cols);
    for (std::size_t j = art_begin; j < t.cols; ++j) phase1[j] = -1;
    run(t, phase1, blocked);
    Rational infeas = 0;
    for (std::size_t i = 0; i < t.rows; ++i)
      if (t.basis[i] >= art_begin) infeas += t.b[i];
    if (infeas != 0) return LpResult{LpResult::Status::infeasible, 0, {}};

    // Drive zero-level artificials out of the basis; drop rows that are redundant.
    for (std::size_t i = 0; i < t.rows;) {
      if (t.basis[i] < art_begin) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < art_begin && t.a[i][j] == 0) ++j;
      if (j < art_begin) {
        t.pivot(i, j);
        ++i;
      } else {
        t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
        t.b.erase(t.b.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        --t.rows;
      }
    }
    for (std::size_t j = art_begin; j < t.cols; ++j) blocked[j] = true;
  }

  std::vector<Rational> cost(t.cols);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = objective[j];
    cost[n + j] = -objective[j];
  }
  if (run(t, cost, blocked) == RunStatus::unbounded) return LpResult{LpResult::Status::unbounded, 0, {}};

  LpResult out;
  out.status = LpResult::Status::optimal;
  std::vector<Rational> full(t.cols);
  for (std::size_t i = 0; i < t.rows; ++i) full[t.basis[i]] = t.b[i];
  out.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.x[j] = full[j] - full[n + j];
  out.value = 0;
  for (std::size_t j = 0; j < n; ++j) out.value += objective[j] * out.x[j];
  return out;
}

bool strictly_feasible(const std::vector<LpRow>& equalities, const std::vector<LpRow>& strict) {
  std::size_t n = 0;
  if (!equalities.empty())
    n = equalities.front().coeffs.size();
  else if (!strict.empty())
    n = strict.front().coeffs.size();
  else
    return true;

  // Maximize a margin s with coeffs . x - s >= rhs and s <= 1.
  std::vector<LpRow> rows;
  for (const auto& e : equalities) {
    LpRow r{e.coeffs, Relation::equal, e.rhs};
    r.coeffs.emplace_back(0);
    rows.push_back(std::move(r));
  }
  for (const auto& s : strict) {
    LpRow r{s.coeffs, Relation::greater_equal, s.rhs};
    r.coeffs.emplace_back(-1);
    rows.push_back(std::move(r));
  }
  LpRow cap{std::vector<Rational>(n + 1), Relation::less_equal, 1};
  cap.coeffs[n] = 1;
  rows.push_back(std::move(cap));

  std::vector<Rational> objective(n + 1);
  objective[n] = 1;
  LpResult res = maximize(objective, rows);
  return res.status == LpResult::Status::optimal && res.value > 0;
}

}  // namespace tropcount
