#ifndef WHA_ALGEBRA_HPP
#define WHA_ALGEBRA_HPP

#include "wha/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace wha {

/// Raised when structure constants do not define a non-degenerate
/// associative algebra. what() carries the witness.
class StructureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Structure constants c with e_i e_j = sum_k c[i][j][k] e_k, stored sparsely.
class StructureConstants {
public:
  explicit StructureConstants(std::size_t dim) : dim_(dim), products_(dim * dim, Vec(dim)) {}

  std::size_t dim() const { return dim_; }
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  Scalar at(std::size_t i, std::size_t j, std::size_t k) const { return product(i, j)[k]; }
  const Vec& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  void set_product(std::size_t i, std::size_t j, Vec v);

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.dim_ == b.dim_ && a.products_ == b.products_;
  }

private:
  std::size_t dim_;
  std::vector<Vec> products_;
};

/// Finite-dimensional algebra given by structure constants on a named basis.
class Algebra {
public:
  /// Validates associativity and non-degeneracy; finds the unit if any.
  static Algebra load(StructureConstants c, std::vector<std::string> names = {});

  std::size_t dim() const { return c_.dim(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const StructureConstants& structure() const { return c_; }

  Vec basis(std::size_t i) const { return Vec::unit(dim(), i); }
  Vec zero() const { return Vec(dim()); }
  const Vec& basis_product(std::size_t i, std::size_t j) const { return c_.product(i, j); }
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec multiply(const Vec& a, const Vec& b, const Vec& c) const { return multiply(multiply(a, b), c); }

  bool has_unit() const { return unit_.has_value(); }
  /// Throws StructureError for non-unital algebras.
  const Vec& one() const;
  /// Two-sided inverse when it exists (requires a unit).
  std::optional<Vec> inverse(const Vec& a) const;

  LinearMap left_multiplication(const Vec& m) const;
  LinearMap right_multiplication(const Vec& m) const;
  bool is_central(const Vec& a) const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.c_ == b.c_; }

private:
  Algebra(StructureConstants c, std::vector<std::string> names) : c_(std::move(c)), names_(std::move(names)) {}

  StructureConstants c_;
  std::vector<std::string> names_;
  std::optional<Vec> unit_;
};

/// Element of M(A) as a compatible pair of left and right actions:
/// L(b) = m b and R(a) = a m.
struct MultiplierPair {
  LinearMap left;
  LinearMap right;

  friend bool operator==(const MultiplierPair& a, const MultiplierPair& b) {
    return a.left == b.left && a.right == b.right;
  }
};

/// Checks R(a) b = a L(b), L(ab) = L(a) b and R(ab) = a R(b) on basis elements.
bool is_multiplier(const Algebra& a, const MultiplierPair& m);
MultiplierPair multiplier_of(const Algebra& a, const Vec& element);

struct MultiplierAlgebra {
  Algebra algebra;                  ///< M(A) on the basis of solved pairs
  std::vector<MultiplierPair> pairs;  ///< pair for each basis element of M(A)
  LinearMap embedding;              ///< A -> M(A) coordinates, a -> (L_a, R_a)
};

/// Solves the pair system for all multipliers and returns M(A) with its
/// product (composition of pairs) and the canonical embedding.
MultiplierAlgebra multiplier_algebra(const Algebra& a);

Algebra opposite(const Algebra& a);

/// A ⊗ B on the row-major basis (i, j) -> i * dim(B) + j.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
/// Flip A ⊗ B -> B ⊗ A as a permutation map.
LinearMap flip_map(std::size_t dim_a, std::size_t dim_b);
/// x ⊗ 1 and 1 ⊗ y as multipliers of A ⊗ B.
MultiplierPair left_leg_multiplier(const Algebra& a, const Algebra& b, const Vec& x);
MultiplierPair right_leg_multiplier(const Algebra& a, const Algebra& b, const Vec& y);

/// Subspace of an algebra closed under the product, with an echelon basis.
class SubalgebraSpan {
public:
  SubalgebraSpan() : space_(0) {}
  SubalgebraSpan(std::size_t parent_dim, const std::vector<Vec>& spanning);

  std::size_t parent_dim() const { return space_.dim(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const Subspace& space() const { return space_; }
  bool contains(const Vec& x) const { return space_.contains(x); }
  /// Coordinates of x in basis(); requires contains(x).
  Vec coordinates(const Vec& x) const;
  Vec from_coordinates(const Vec& coords) const;

  friend bool operator==(const SubalgebraSpan& a, const SubalgebraSpan& b) {
    return a.space_ == b.space_;
  }

private:
  Subspace space_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subalgebra containing the given vectors.
SubalgebraSpan subalgebra_closure(const Algebra& a, const std::vector<Vec>& vectors);
bool is_closed_under_product(const Algebra& a, const SubalgebraSpan& s);

}  // namespace wha

#endif  // WHA_ALGEBRA_HPP
