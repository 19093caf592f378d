#pragma once

// Exact integer and rational linear algebra over N = Z^n.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tropcount {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point or direction in N = Z^n.
class LatticeVec {
 public:
  LatticeVec() = default;
  explicit LatticeVec(std::size_t n) : coords_(n) {}
  explicit LatticeVec(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVec(std::initializer_list<long> coords);

  std::size_t dim() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;

  LatticeVec& operator+=(const LatticeVec& o);
  LatticeVec& operator-=(const LatticeVec& o);
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  LatticeVec operator-() const;
  friend LatticeVec operator*(const Integer& k, const LatticeVec& v);

  friend bool operator==(const LatticeVec& a, const LatticeVec& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const LatticeVec& a, const LatticeVec& b);

  std::string str() const;

 private:
  std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVec& v);

/// A point of N_Q = N (x) Q. Coordinates are kept canonical (reduced, positive denominators).
class RationalVec {
 public:
  RationalVec() = default;
  explicit RationalVec(std::size_t n) : coords_(n) {}
  explicit RationalVec(std::vector<Rational> coords);
  explicit RationalVec(const LatticeVec& v);
  RationalVec(std::initializer_list<long> coords);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  RationalVec& operator+=(const RationalVec& o);
  RationalVec& operator-=(const RationalVec& o);
  friend RationalVec operator+(RationalVec a, const RationalVec& b) { return a += b; }
  friend RationalVec operator-(RationalVec a, const RationalVec& b) { return a -= b; }
  friend RationalVec operator*(const Rational& k, const RationalVec& v);

  friend bool operator==(const RationalVec& a, const RationalVec& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const RationalVec& a, const RationalVec& b);

  std::string str() const;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const RationalVec& v);

/// Dense row-major matrix with exact entries.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Matrix whose rows are the given vectors (all of dimension `dim`).
IntMatrix matrix_from_rows(std::span<const LatticeVec> rows, std::size_t dim);
RatMatrix to_rational(const IntMatrix& m);

struct Primitive {
  LatticeVec direction;
  Integer multiple;
};

/// Splits v = multiple * direction with direction primitive and multiple > 0.
/// Throws std::invalid_argument for the zero vector.
Primitive primitive(const LatticeVec& v);

bool is_primitive(const LatticeVec& v);

struct SmithForm {
  std::vector<Integer> diagonal;  // length min(rows, cols), d_i | d_{i+1}, all >= 0
  IntMatrix left;                 // unimodular, rows x rows
  IntMatrix right;                // unimodular, cols x cols
};

/// left * m * right = diag(diagonal). Pivots on the smallest nonzero entry.
SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: the nonzero rows of an upper echelon basis of the
/// row lattice, pivots positive, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Membership of v in the row lattice of a Hermite normal form.
bool hnf_contains(const IntMatrix& hnf, const LatticeVec& v);

Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(std::span<const LatticeVec> vectors, std::size_t dim);

/// Inverse of a unimodular integer matrix. Throws if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Basis of (Q span(basis)) intersected with N. Throws std::invalid_argument if the
/// input vectors are linearly dependent.
std::vector<LatticeVec> saturate(std::span<const LatticeVec> basis, std::size_t dim);

/// Index [super : sub] of two lattices with the same rational span.
/// Throws std::invalid_argument when spans differ or sub is not contained in super.
Integer lattice_index(std::span<const LatticeVec> sub, std::span<const LatticeVec> super,
                      std::size_t dim);

/// For a saturated sublattice S of N given by a basis, an n x (n - rank S) integer matrix P
/// such that v -> v P is a surjection N -> Z^(n - rank S) with kernel S.
IntMatrix quotient_projection(std::span<const LatticeVec> saturated_basis, std::size_t dim);

/// Vectors that extend a saturated basis to a basis of N.
std::vector<LatticeVec> complete_basis(std::span<const LatticeVec> saturated_basis, std::size_t dim);

struct UniqueSolution {
  RationalVec x;
};
struct SolutionFamily {
  RationalVec particular;
  std::vector<RationalVec> kernel;
};
struct Infeasible {};

using LinearSolution = std::variant<UniqueSolution, SolutionFamily, Infeasible>;

/// Exact Gaussian elimination for a x = b over Q.
LinearSolution solve_rational(const RatMatrix& a, const RationalVec& b);

/// Incrementally maintained reduced row echelon form of an affine system over Q.
/// Every stored row has a leading 1 in its pivot column and zeros in all other pivot columns.
class RowEchelon {
 public:
  enum class AddResult { independent, redundant, inconsistent };

  RowEchelon() = default;
  explicit RowEchelon(std::size_t unknowns) : unknowns_(unknowns), pivot_row_(unknowns, -1) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return rows_.size(); }
  bool complete() const { return rows_.size() == unknowns_; }
  bool is_pivot(std::size_t column) const { return pivot_row_[column] >= 0; }

  /// Adds coeffs . x = rhs.
  AddResult add(std::span<const Rational> coeffs, const Rational& rhs);

  /// If the affine form coeffs . x + constant is constant on the solution set, returns true
  /// and writes that constant to value.
  bool evaluate(std::span<const Rational> coeffs, const Rational& constant, Rational& value) const;

  /// The unique solution; requires complete().
  std::vector<Rational> solution() const;

 private:
  struct Row {
    std::vector<Rational> coeffs;
    Rational rhs;
    std::size_t pivot;
  };
  std::size_t unknowns_ = 0;
  std::vector<Row> rows_;
  std::vector<int> pivot_row_;
  mutable std::vector<Rational> scratch_;
};

/// Append-only integer echelon form for backtracking: rows are reduced fraction-free against
/// earlier rows and take their leftmost nonzero column as pivot, so the pivot columns agree
/// with the reduced row echelon form and undoing an addition is a pop.
class IntegerEchelon {
 public:
  using AddResult = RowEchelon::AddResult;

  IntegerEchelon() = default;
  explicit IntegerEchelon(std::size_t unknowns) : unknowns_(unknowns), pivot_row_(unknowns, -1) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return size_; }
  bool complete() const { return size_ == unknowns_; }
  bool is_pivot(std::size_t column) const { return pivot_row_[column] >= 0; }

  /// Adds coeffs . x = rhs; only an independent row is kept.
  AddResult add(std::span<const Integer> coeffs, const Integer& rhs);
  /// Removes the most recently kept row.
  void pop();

  /// If coeffs . x + constant is constant on the solution set, returns its sign.
  std::optional<int> sign_if_determined(std::span<const Integer> coeffs, const Integer& constant) const;

  /// The unique solution; requires complete().
  std::vector<Rational> solution() const;

 private:
  struct Row {
    std::vector<Integer> coeffs;
    Integer rhs;
    std::size_t pivot = 0;
  };
  // Replaces (f, k) by a f - b row with a > 0 so that f vanishes at the row's pivot.
  static void eliminate(const Row& row, std::vector<Integer>& f, Integer& k, Integer& a, Integer& b);

  std::size_t unknowns_ = 0;
  std::size_t size_ = 0;
  std::vector<Row> rows_;  // storage beyond size_ is reused
  std::vector<int> pivot_row_;
  mutable std::vector<Integer> scratch_;
  mutable Integer k_, a_, b_;
};

}  // namespace tropcount
