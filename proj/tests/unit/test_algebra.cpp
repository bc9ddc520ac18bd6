#include <doctest.h>

#include "wha/algebra.hpp"
#include "wha/tensor.hpp"

using namespace wha;

namespace {

// M_k(C) on the basis e_ij -> i*k + j.
Algebra matrix_units(std::size_t k) {
  StructureConstants c(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) c.add(i * k + j, j * k + l, i * k + l, Scalar(1));
  return Algebra::load(std::move(c));
}

Algebra diagonal(std::size_t k) {
  StructureConstants c(k);
  for (std::size_t i = 0; i < k; ++i) c.add(i, i, i, Scalar(1));
  return Algebra::load(std::move(c));
}

}  // namespace

TEST_CASE("matrix-unit algebra loads with the identity as unit") {
  Algebra m = matrix_units(2);
  REQUIRE(m.has_unit());
  CHECK(m.one() == Vec::unit(4, 0) + Vec::unit(4, 3));
  // e12 e21 = e11, e21 e12 = e22
  CHECK(m.multiply(m.basis(1), m.basis(2)) == m.basis(0));
  CHECK(m.multiply(m.basis(2), m.basis(1)) == m.basis(3));
  CHECK(m.multiply(m.basis(1), m.basis(1)).is_zero());
}

TEST_CASE("non-associative constants are rejected with a witness") {
  StructureConstants c(2);
  c.add(0, 0, 1, Scalar(1));  // e0 e0 = e1
  c.add(1, 0, 0, Scalar(1));  // e1 e0 = e0
  c.add(0, 1, 1, Scalar(1));
  CHECK_THROWS_AS(Algebra::load(std::move(c)), StructureError);
}

TEST_CASE("degenerate products are rejected") {
  StructureConstants c(2);
  c.add(0, 0, 0, Scalar(1));  // e1 annihilates everything
  CHECK_THROWS_AS(Algebra::load(std::move(c)), StructureError);
}

TEST_CASE("inverse and centrality") {
  Algebra m = matrix_units(2);
  Vec a = Scalar(2) * m.basis(0) + m.basis(1) + Scalar(3) * m.basis(3);
  auto inv = m.inverse(a);
  REQUIRE(inv);
  CHECK(m.multiply(a, *inv) == m.one());
  CHECK(m.multiply(*inv, a) == m.one());
  CHECK_FALSE(m.inverse(m.basis(0)));
  CHECK(m.is_central(Scalar(5) * m.one()));
  CHECK_FALSE(m.is_central(m.basis(0)));
}

TEST_CASE("multiplier algebra of a unital algebra is the algebra itself") {
  for (const Algebra& a : {matrix_units(2), diagonal(3)}) {
    MultiplierAlgebra ma = multiplier_algebra(a);
    CHECK(ma.algebra.dim() == a.dim());
    CHECK(rank(ma.embedding) == a.dim());
    for (const auto& p : ma.pairs) CHECK(is_multiplier(a, p));
  }
  Algebra m = matrix_units(2);
  CHECK(is_multiplier(m, multiplier_of(m, m.basis(1))));
  MultiplierPair bogus = multiplier_of(m, m.basis(1));
  bogus.right = LinearMap::identity(4);
  CHECK_FALSE(is_multiplier(m, bogus));
}

TEST_CASE("subalgebra closures") {
  Algebra m = matrix_units(2);
  CHECK(subalgebra_closure(m, {m.basis(0)}).dim() == 1);
  CHECK(subalgebra_closure(m, {m.basis(0), m.basis(3)}).dim() == 2);
  CHECK(subalgebra_closure(m, {m.basis(1), m.basis(2)}).dim() == 4);
  SubalgebraSpan diag = subalgebra_closure(m, {m.basis(0), m.basis(3)});
  CHECK(is_closed_under_product(m, diag));
  Vec x = Scalar(2) * m.basis(0) - m.basis(3);
  CHECK(diag.from_coordinates(diag.coordinates(x)) == x);
  CHECK(is_closed_under_product(m, SubalgebraSpan(4, {m.basis(1), m.basis(0)})));
  CHECK_FALSE(is_closed_under_product(m, SubalgebraSpan(4, {m.basis(1), m.basis(2)})));
}

TEST_CASE("opposite and tensor algebras") {
  Algebra m = matrix_units(2);
  Algebra op = opposite(m);
  CHECK(op.multiply(m.basis(1), m.basis(2)) == m.basis(3));
  Algebra d = diagonal(2);
  Algebra t = tensor_algebra(m, d);
  REQUIRE(t.dim() == 8);
  CHECK(t.one() == tensor::kron(m.one(), d.one()));
  Vec x = tensor::kron(m.basis(1), d.basis(0));
  Vec y = tensor::kron(m.basis(2), d.basis(0));
  CHECK(t.multiply(x, y) == tensor::kron(m.basis(0), d.basis(0)));
  CHECK(tensor::flip(tensor::kron(m.basis(1), d.basis(1)), 4, 2) == tensor::kron(d.basis(1), m.basis(1)));
  CHECK(flip_map(4, 2).apply(x) == tensor::flip(x, 4, 2));
}
