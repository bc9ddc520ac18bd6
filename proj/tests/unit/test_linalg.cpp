#include <doctest.h>

#include "wha/linalg.hpp"

using namespace wha;

namespace {

Matrix mat(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) {
    s.emplace_back();
    for (long x : r) s.back().emplace_back(x);
  }
  return Matrix::from_rows(s);
}

}  // namespace

TEST_CASE("invert(identity) is the identity") {
  auto inv = invert(Matrix::identity(3));
  REQUIRE(inv);
  CHECK(*inv == Matrix::identity(3));
}

TEST_CASE("rank of the all-ones 2x2 matrix is 1") { CHECK(rank(mat({{1, 1}, {1, 1}})) == 1); }

TEST_CASE("kernel of [[1,1],[2,2]] is spanned by a multiple of (1,-1)") {
  Matrix m = mat({{1, 1}, {2, 2}});
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(!k[0].is_zero());
  CHECK(m.apply(k[0]).is_zero());
}

TEST_CASE("solve, invert and rank agree") {
  Matrix m = mat({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  auto inv = invert(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(3));
  CHECK(rank(m) == 3);
  Vec b = Vec::from_dense(std::vector<Scalar>{Scalar(1), Scalar(2), Scalar(3)});
  auto x = solve_linear(m, b);
  REQUIRE(x);
  CHECK(m.apply(*x) == b);

  Matrix sing = mat({{1, 2}, {2, 4}});
  CHECK_FALSE(invert(sing));
  CHECK_FALSE(solve_linear(sing, Vec::from_dense(std::vector<Scalar>{Scalar(1), Scalar(0)})));
  CHECK_THROWS_AS(solve_linear(sing, Vec(3)), DimensionError);
}

TEST_CASE("subspace reduce gives canonical coset representatives") {
  Subspace s(3);
  CHECK(s.insert(Vec::from_dense(std::vector<Scalar>{Scalar(1), Scalar(1), Scalar(0)})));
  CHECK_FALSE(s.insert(Vec::from_dense(std::vector<Scalar>{Scalar(2), Scalar(2), Scalar(0)})));
  Vec a = Vec::from_dense(std::vector<Scalar>{Scalar(3), Scalar(0), Scalar(5)});
  Vec b = Vec::from_dense(std::vector<Scalar>{Scalar(0), Scalar(-3), Scalar(5)});
  CHECK(s.reduce(a) == s.reduce(b));
  CHECK(s.rank() == 1);
  CHECK(s.free_columns().size() == 2);
  Subspace t = Subspace::span(3, std::vector<Vec>{Vec::from_dense(std::vector<Scalar>{Scalar(-1), Scalar(-1), Scalar(0)})});
  CHECK(s == t);
}

TEST_CASE("linear maps compose like matrices") {
  Matrix a = mat({{1, 2}, {0, 1}, {3, 0}});
  Matrix b = mat({{0, 1, 1}, {1, 0, 2}});
  LinearMap la = LinearMap::from_matrix(a);
  LinearMap lb = LinearMap::from_matrix(b);
  CHECK(la.compose(lb).to_matrix() == a * b);
  CHECK(lb.compose(la).to_matrix() == b * a);
  CHECK(a.transpose().transpose() == a);
}
