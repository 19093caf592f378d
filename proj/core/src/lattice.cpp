#include "tropcount/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tropcount {

namespace {

std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

template <typename Vec>
std::strong_ordering lex_compare(const Vec& a, const Vec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = cmp(a[i], b[i]); c != 0) return to_ordering(c);
  }
  return a.size() <=> b.size();
}

}  // namespace

LatticeVec::LatticeVec(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool LatticeVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

LatticeVec& LatticeVec::operator+=(const LatticeVec& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticeVec& LatticeVec::operator-=(const LatticeVec& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LatticeVec LatticeVec::operator-() const {
  LatticeVec out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

LatticeVec operator*(const Integer& k, const LatticeVec& v) {
  LatticeVec out(v);
  for (auto& c : out.coords_) c *= k;
  return out;
}

std::strong_ordering operator<=>(const LatticeVec& a, const LatticeVec& b) {
  return lex_compare(a.coords_, b.coords_);
}

std::string LatticeVec::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

RationalVec::RationalVec(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
}

RationalVec::RationalVec(const LatticeVec& v) {
  coords_.reserve(v.dim());
  for (const auto& c : v.coords()) coords_.emplace_back(c);
}

RationalVec::RationalVec(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool RationalVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
}

RationalVec& RationalVec::operator+=(const RationalVec& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RationalVec& RationalVec::operator-=(const RationalVec& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RationalVec operator*(const Rational& k, const RationalVec& v) {
  RationalVec out(v);
  for (auto& c : out.coords_) c *= k;
  return out;
}

std::strong_ordering operator<=>(const RationalVec& a, const RationalVec& b) {
  return lex_compare(a.coords_, b.coords_);
}

std::string RationalVec::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

IntMatrix matrix_from_rows(std::span<const LatticeVec> rows, std::size_t dim) {
  IntMatrix m(rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != dim) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

Primitive primitive(const LatticeVec& v) {
  Integer g = 0;
  for (const auto& c : v.coords()) g = gcd(g, c);
  if (g == 0) throw std::invalid_argument("zero vector has no direction");
  LatticeVec dir(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) dir[i] = v[i] / g;
  return {std::move(dir), g};
}

bool is_primitive(const LatticeVec& v) {
  Integer g = 0;
  for (const auto& c : v.coords()) g = gcd(g, c);
  return g == 1;
}

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  // row[dst] += k * row[src]
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(src, c) != 0) m(dst, c) += k * m(src, c);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m(r, src) != 0) m(r, dst) += k * m(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (pi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        exhausted = true;
        break;
      }
      a.swap_rows(t, pi);
      left.swap_rows(t, pi);
      a.swap_cols(t, pj);
      right.swap_cols(t, pj);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        Integer negq = -q;
        row_axpy(a, i, t, negq);
        row_axpy(left, i, t, negq);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        Integer negq = -q;
        col_axpy(a, j, t, negq);
        col_axpy(right, j, t, negq);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      row_axpy(a, t, bad_row, Integer(1));
      row_axpy(left, t, bad_row, Integer(1));
    }
    if (exhausted) break;
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) left(t, c) = -left(t, c);
    }
  }

  SmithForm out;
  out.diagonal.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) out.diagonal[i] = a(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t prow = 0;
  Integer g, s, t, x, y;
  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    for (std::size_t i = prow + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      if (a(prow, col) == 0) {
        a.swap_rows(prow, i);
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(prow, col).get_mpz_t(),
                 a(i, col).get_mpz_t());
      x = a(prow, col) / g;
      y = a(i, col) / g;
      for (std::size_t c = 0; c < cols; ++c) {
        Integer top = s * a(prow, c) + t * a(i, c);
        Integer bottom = x * a(i, c) - y * a(prow, c);
        a(prow, c) = std::move(top);
        a(i, c) = std::move(bottom);
      }
    }
    if (a(prow, col) == 0) continue;
    if (a(prow, col) < 0)
      for (std::size_t c = 0; c < cols; ++c) a(prow, c) = -a(prow, c);
    for (std::size_t k = 0; k < prow; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(k, col).get_mpz_t(), a(prow, col).get_mpz_t());
      if (q != 0) row_axpy(a, k, prow, Integer(-q));
    }
    ++prow;
  }
  IntMatrix out(prow, cols);
  for (std::size_t r = 0; r < prow; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = a(r, c);
  return out;
}

bool hnf_contains(const IntMatrix& hnf, const LatticeVec& v) {
  if (v.dim() != hnf.cols()) throw std::invalid_argument("vector dimension mismatch");
  LatticeVec rest = v;
  for (std::size_t r = 0; r < hnf.rows(); ++r) {
    std::size_t p = 0;
    while (p < hnf.cols() && hnf(r, p) == 0) ++p;
    if (p == hnf.cols()) continue;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), hnf(r, p).get_mpz_t())) return false;
    Integer q = rest[p] / hnf(r, p);
    for (std::size_t c = 0; c < hnf.cols(); ++c) rest[c] -= q * hnf(r, c);
  }
  return rest.is_zero();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t coefficient_cols) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < coefficient_cols && prow < a.rows(); ++col) {
    std::size_t s = prow;
    while (s < a.rows() && a(s, col) == 0) ++s;
    if (s == a.rows()) continue;
    a.swap_rows(prow, s);
    Rational inv = 1 / a(prow, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(prow, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == prow || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(prow, c);
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t s = k;
    while (s < n && a(s, k) == 0) ++s;
    if (s == n) return 0;
    if (s != k) {
      a.swap_rows(k, s);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a, a.cols()).size();
}

std::size_t rank(std::span<const LatticeVec> vectors, std::size_t dim) {
  return rank(to_rational(matrix_from_rows(vectors, dim)));
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  if (rref(aug, n).size() != n) throw std::invalid_argument("matrix is singular");
  IntMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& q = aug(r, n + c);
      if (q.get_den() != 1) throw std::invalid_argument("matrix is not unimodular");
      inv(r, c) = q.get_num();
    }
  return inv;
}

std::vector<LatticeVec> saturate(std::span<const LatticeVec> basis, std::size_t dim) {
  if (basis.empty()) return {};
  const std::size_t k = basis.size();
  SmithForm snf = smith_normal_form(matrix_from_rows(basis, dim));
  if (k > dim || std::any_of(snf.diagonal.begin(), snf.diagonal.end(),
                             [](const Integer& d) { return d == 0; }))
    throw std::invalid_argument("basis vectors are linearly dependent");
  IntMatrix rinv = unimodular_inverse(snf.right);
  IntMatrix top(k, dim);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < dim; ++c) top(r, c) = rinv(r, c);
  IntMatrix hnf = hermite_normal_form(top);
  std::vector<LatticeVec> out;
  for (std::size_t r = 0; r < hnf.rows(); ++r) {
    LatticeVec v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = hnf(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

Integer lattice_index(std::span<const LatticeVec> sub, std::span<const LatticeVec> super,
                      std::size_t dim) {
  const std::size_t k = super.size();
  if (rank(super, dim) != k) throw std::invalid_argument("super basis is linearly dependent");
  if (sub.size() != k || rank(sub, dim) != k)
    throw std::invalid_argument("lattices do not span the same rational subspace");
  if (k == 0) return 1;
  IntMatrix hnf = hermite_normal_form(matrix_from_rows(super, dim));
  for (const auto& v : sub)
    if (!hnf_contains(hnf, v)) {
      std::vector<LatticeVec> both(super.begin(), super.end());
      both.push_back(v);
      if (rank(both, dim) != k)
        throw std::invalid_argument("lattices do not span the same rational subspace");
      throw std::invalid_argument("sublattice is not contained in the super lattice");
    }
  // Coordinates of sub in the super basis.
  RatMatrix st = to_rational(matrix_from_rows(super, dim)).transposed();  // dim x k
  IntMatrix coeffs(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto sol = solve_rational(st, RationalVec(sub[i]));
    const auto* u = std::get_if<UniqueSolution>(&sol);
    if (u == nullptr) throw std::invalid_argument("lattices do not span the same rational subspace");
    for (std::size_t j = 0; j < k; ++j) coeffs(i, j) = u->x[j].get_num();
  }
  Integer det = determinant(coeffs);
  return abs(det);
}

IntMatrix quotient_projection(std::span<const LatticeVec> saturated_basis, std::size_t dim) {
  const std::size_t k = saturated_basis.size();
  if (k == 0) return IntMatrix::identity(dim);
  SmithForm snf = smith_normal_form(matrix_from_rows(saturated_basis, dim));
  for (const auto& d : snf.diagonal)
    if (d != 1) throw std::invalid_argument("sublattice is not saturated");
  IntMatrix p(dim, dim - k);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = k; c < dim; ++c) p(r, c - k) = snf.right(r, c);
  return p;
}

std::vector<LatticeVec> complete_basis(std::span<const LatticeVec> saturated_basis, std::size_t dim) {
  const std::size_t k = saturated_basis.size();
  IntMatrix rinv;
  if (k == 0) {
    rinv = IntMatrix::identity(dim);
  } else {
    SmithForm snf = smith_normal_form(matrix_from_rows(saturated_basis, dim));
    for (const auto& d : snf.diagonal)
      if (d != 1) throw std::invalid_argument("sublattice is not saturated");
    rinv = unimodular_inverse(snf.right);
  }
  std::vector<LatticeVec> out;
  for (std::size_t r = k; r < dim; ++r) {
    LatticeVec v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = rinv(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

LinearSolution solve_rational(const RatMatrix& a, const RationalVec& b) {
  if (b.dim() != a.rows()) throw std::invalid_argument("right-hand side dimension mismatch");
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = rref(aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (aug(r, n) != 0) return Infeasible{};

  RationalVec particular(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) particular[pivots[i]] = aug(i, n);
  if (pivots.size() == n) return UniqueSolution{std::move(particular)};

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVec> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVec k(n);
    k[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -aug(i, f);
    kernel.push_back(std::move(k));
  }
  return SolutionFamily{std::move(particular), std::move(kernel)};
}

RowEchelon::AddResult RowEchelon::add(std::span<const Rational> coeffs, const Rational& rhs) {
  scratch_.assign(coeffs.begin(), coeffs.end());
  Rational r = rhs;
  for (const auto& row : rows_) {
    if (scratch_[row.pivot] == 0) continue;
    Rational f = scratch_[row.pivot];
    for (std::size_t c = 0; c < unknowns_; ++c)
      if (row.coeffs[c] != 0) scratch_[c] -= f * row.coeffs[c];
    r -= f * row.rhs;
  }
  std::size_t p = 0;
  while (p < unknowns_ && scratch_[p] == 0) ++p;
  if (p == unknowns_) return r == 0 ? AddResult::redundant : AddResult::inconsistent;

  Rational inv = 1 / scratch_[p];
  for (std::size_t c = p; c < unknowns_; ++c)
    if (scratch_[c] != 0) scratch_[c] *= inv;
  r *= inv;
  for (auto& row : rows_) {
    if (row.coeffs[p] == 0) continue;
    Rational f = row.coeffs[p];
    for (std::size_t c = 0; c < unknowns_; ++c)
      if (scratch_[c] != 0) row.coeffs[c] -= f * scratch_[c];
    row.rhs -= f * r;
  }
  pivot_row_[p] = static_cast<int>(rows_.size());
  rows_.push_back(Row{scratch_, r, p});
  return AddResult::independent;
}

bool RowEchelon::evaluate(std::span<const Rational> coeffs, const Rational& constant,
                          Rational& value) const {
  scratch_.assign(coeffs.begin(), coeffs.end());
  Rational v = constant;
  for (const auto& row : rows_) {
    if (scratch_[row.pivot] == 0) continue;
    Rational f = scratch_[row.pivot];
    for (std::size_t c = 0; c < unknowns_; ++c)
      if (row.coeffs[c] != 0) scratch_[c] -= f * row.coeffs[c];
    v += f * row.rhs;
  }
  for (const auto& s : scratch_)
    if (s != 0) return false;
  value = v;
  return true;
}

std::vector<Rational> RowEchelon::solution() const {
  if (!complete()) throw std::logic_error("system is not fully determined");
  std::vector<Rational> x(unknowns_);
  for (const auto& row : rows_) x[row.pivot] = row.rhs;
  return x;
}

void IntegerEchelon::eliminate(const Row& row, std::vector<Integer>& f, Integer& k, Integer& a, Integer& b) {
  const Integer& c = f[row.pivot];
  const Integer& p = row.coeffs[row.pivot];
  mpz_gcd(a.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
  mpz_divexact(a.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (row.coeffs[j] == 0) {
      if (f[j] != 0) f[j] *= a;
    } else {
      f[j] *= a;
      mpz_submul(f[j].get_mpz_t(), b.get_mpz_t(), row.coeffs[j].get_mpz_t());
    }
  }
  k *= a;
  mpz_submul(k.get_mpz_t(), b.get_mpz_t(), row.rhs.get_mpz_t());
}

IntegerEchelon::AddResult IntegerEchelon::add(std::span<const Integer> coeffs, const Integer& rhs) {
  scratch_.assign(coeffs.begin(), coeffs.end());
  k_ = rhs;
  for (std::size_t i = 0; i < size_; ++i)
    if (scratch_[rows_[i].pivot] != 0) eliminate(rows_[i], scratch_, k_, a_, b_);
  std::size_t pivot = 0;
  while (pivot < unknowns_ && scratch_[pivot] == 0) ++pivot;
  if (pivot == unknowns_) return k_ == 0 ? AddResult::redundant : AddResult::inconsistent;

  Integer g = k_;
  for (const auto& v : scratch_)
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (scratch_[pivot] < 0) g = -g;
  if (size_ == rows_.size()) rows_.emplace_back();
  Row& row = rows_[size_];
  row.coeffs.resize(unknowns_);
  for (std::size_t j = 0; j < unknowns_; ++j) mpz_divexact(row.coeffs[j].get_mpz_t(), scratch_[j].get_mpz_t(), g.get_mpz_t());
  mpz_divexact(row.rhs.get_mpz_t(), k_.get_mpz_t(), g.get_mpz_t());
  row.pivot = pivot;
  pivot_row_[pivot] = static_cast<int>(size_++);
  return AddResult::independent;
}

void IntegerEchelon::pop() {
  if (size_ == 0) throw std::logic_error("pop from an empty echelon");
  pivot_row_[rows_[--size_].pivot] = -1;
}

std::optional<int> IntegerEchelon::sign_if_determined(std::span<const Integer> coeffs, const Integer& constant) const {
  scratch_.assign(coeffs.begin(), coeffs.end());
  // Rows hold rhs on the right, so a form f.x + k evaluates as f.x - (-k); track -k.
  k_ = -constant;
  for (std::size_t i = 0; i < size_; ++i)
    if (scratch_[rows_[i].pivot] != 0) eliminate(rows_[i], scratch_, k_, a_, b_);
  for (const auto& v : scratch_)
    if (v != 0) return std::nullopt;
  return -sgn(k_);
}

std::vector<Rational> IntegerEchelon::solution() const {
  if (!complete()) throw std::logic_error("echelon system is not complete");
  std::vector<Rational> x(unknowns_);
  for (std::size_t i = size_; i-- > 0;) {
    const Row& row = rows_[i];
    Rational v = row.rhs;
    for (std::size_t j = 0; j < unknowns_; ++j)
      if (j != row.pivot && row.coeffs[j] != 0) v -= row.coeffs[j] * x[j];
    x[row.pivot] = v / row.coeffs[row.pivot];
  }
  return x;
}

}  // namespace tropcount
