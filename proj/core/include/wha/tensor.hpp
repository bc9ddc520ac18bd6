#ifndef WHA_TENSOR_HPP
#define WHA_TENSOR_HPP

#include "wha/algebra.hpp"

#include <vector>

// Elements of A^{⊗k} are plain Vecs of dimension n^k, indexed row-major
// (first leg most significant). Products are taken leg-wise on the fly, so
// the k-fold tensor algebra is never materialized.
namespace wha::tensor {

Vec kron(const Vec& x, const Vec& y);
Vec kron(const Vec& x, const Vec& y, const Vec& z);

/// Product in A^{⊗legs}.
Vec multiply(const Algebra& a, unsigned legs, const Vec& x, const Vec& y);
Vec multiply(const Algebra& a, unsigned legs, const Vec& x, const Vec& y, const Vec& z);

/// Applies f to the middle factor of an element of L ⊗ M ⊗ R where
/// dim L = left and dim R = right; dim M = f.cols().
Vec apply_leg(const LinearMap& f, const Vec& x, std::size_t left, std::size_t right);
/// (f ⊗ ι) and (ι ⊗ f) on A ⊗ A with dim A = n.
inline Vec apply_first(const LinearMap& f, const Vec& x, std::size_t n) { return apply_leg(f, x, 1, n); }
inline Vec apply_second(const LinearMap& f, const Vec& x, std::size_t n) { return apply_leg(f, x, n, 1); }

/// ζ: A ⊗ B -> B ⊗ A.
Vec flip(const Vec& x, std::size_t dim_a, std::size_t dim_b);
/// Multiplication map A ⊗ A -> A.
Vec contract(const Algebra& a, const Vec& x);
/// X_13 = Σ x_(1) ⊗ 1 ⊗ x_(2).
Vec leg13(const Algebra& a, const Vec& x);

/// Left legs Σ_i x_ij e_i (one per j) and right legs Σ_j x_ij e_j (one per i).
std::vector<Vec> left_legs(const Vec& x, std::size_t n);
std::vector<Vec> right_legs(const Vec& x, std::size_t n);

/// Linear map A ⊗ A -> A ⊗ A, basis pair (i, j) -> f(e_i, e_j).
template <class F>
LinearMap bilinear_map(std::size_t n, F&& f) {
  LinearMap m(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set_column(i * n + j, f(i, j));
  }
  return m;
}

}  // namespace wha::tensor

#endif  // WHA_TENSOR_HPP
