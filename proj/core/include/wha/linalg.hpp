#ifndef WHA_LINALG_HPP
#define WHA_LINALG_HPP

#include "wha/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wha {

/// Thrown when operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse vector over Scalar. Terms are sorted by index and never zero.
class Vec {
public:
  using Term = std::pair<std::size_t, Scalar>;

  Vec() = default;
  explicit Vec(std::size_t dim) : dim_(dim) {}

  static Vec unit(std::size_t dim, std::size_t index, Scalar coeff = Scalar(1));
  static Vec from_dense(std::span<const Scalar> values);
  /// Sorts, merges duplicate indices and drops zeros.
  static Vec from_terms(std::size_t dim, std::vector<Term> terms);

  std::size_t dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t nnz() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar operator[](std::size_t index) const;
  const Scalar* find(std::size_t index) const;
  std::vector<Scalar> dense() const;

  /// this += c * x
  Vec& axpy(const Scalar& c, const Vec& x);
  Vec& operator+=(const Vec& x) { return axpy(Scalar(1), x); }
  Vec& operator-=(const Vec& x) { return axpy(Scalar(-1), x); }
  Vec& operator*=(const Scalar& c);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& c, Vec a) { return a *= c; }
  friend bool operator==(const Vec& a, const Vec& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

private:
  std::size_t dim_ = 0;
  std::vector<Term> terms_;
};

/// Dense row-major matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  /// Column j of the result is cols[j].
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  Vec apply(const Vec& x) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Linear map stored by the (sparse) images of the domain basis vectors.
class LinearMap {
public:
  LinearMap() = default;
  LinearMap(std::size_t rows, std::size_t cols);
  LinearMap(std::size_t rows, std::vector<Vec> columns);

  static LinearMap identity(std::size_t n);
  static LinearMap from_matrix(const Matrix& m);
  Matrix to_matrix() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const Vec& column(std::size_t j) const { return columns_[j]; }
  const std::vector<Vec>& columns() const { return columns_; }
  void set_column(std::size_t j, Vec v);

  Vec apply(const Vec& x) const;
  /// Rows of the map, as sparse vectors over the domain.
  std::vector<Vec> row_vectors() const;

  /// (this ∘ other)
  LinearMap compose(const LinearMap& other) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

private:
  std::size_t rows_ = 0;
  std::vector<Vec> columns_;
};

/// Incrementally maintained reduced row echelon basis of a subspace.
///
/// Rows are normalised to 1 at their pivot and vanish at every other pivot,
/// so reduce() is a single pass and its result is the canonical
/// representative of the coset v + span.
class Subspace {
public:
  explicit Subspace(std::size_t dim) : dim_(dim) {}
  static Subspace span(std::size_t dim, std::span<const Vec> vectors);

  /// Returns true when v was not already in the span.
  bool insert(const Vec& v);
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).is_zero(); }
  bool contains_all(std::span<const Vec> vs) const;
  bool contains(const Subspace& other) const;

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::vector<Vec> basis() const;
  std::vector<std::size_t> pivots() const;
  /// Indices of the ambient coordinates that are not pivots, ascending.
  std::vector<std::size_t> free_columns() const;
  const std::map<std::size_t, Vec>& rows() const { return rows_; }

  friend bool operator==(const Subspace& a, const Subspace& b);

private:
  std::size_t dim_;
  std::map<std::size_t, Vec> rows_;
};

std::size_t rank(const LinearMap& m);
std::size_t rank(const Matrix& m);
std::vector<Vec> kernel_basis(const LinearMap& m);
std::vector<Vec> kernel_basis(const Matrix& m);
Subspace kernel(const LinearMap& m);
Subspace column_space(const LinearMap& m);
/// One solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve_linear(const LinearMap& m, const Vec& b);
std::optional<Vec> solve_linear(const Matrix& m, const Vec& b);
/// Exact inverse iff m is square with full rank.
std::optional<Matrix> invert(const Matrix& m);
std::optional<LinearMap> invert(const LinearMap& m);

}  // namespace wha

#endif  // WHA_LINALG_HPP
