#include <doctest.h>

#include "wha/groupoid.hpp"
#include "wha/tensor.hpp"
#include "wha/weak_hopf.hpp"

#include <algorithm>

using namespace wha;

namespace {

std::string failures(const Report& r) {
  std::string s;
  for (const auto& f : r.failed()) s += f + " ";
  return s;
}

void require_all_pass(const WeakHopfSpec& spec) {
  Report r = verify_weak_hopf(analyze(spec));
  INFO(r.to_text(false));
  CHECK(r.all_passed());
}

// e_ij on P2 sits at index 2i + j (zero-based).
Vec e(std::size_t i, std::size_t j) { return Vec::unit(4, 2 * (i - 1) + (j - 1)); }

}  // namespace

TEST_CASE("groupoid fixtures pass the full suite") {
  require_all_pass(groupoid_algebra(FiniteGroupoid::cyclic(2), "Z2"));
  require_all_pass(groupoid_algebra(FiniteGroupoid::pair(2), "P2"));
  require_all_pass(groupoid_algebra(FiniteGroupoid::pair(3), "P3"));
  require_all_pass(
      groupoid_algebra(FiniteGroupoid::disjoint_union(FiniteGroupoid::cyclic(2), FiniteGroupoid::pair(2)), "Z2+P2"));
  require_all_pass(groupoid_algebra(FiniteGroupoid::product(FiniteGroupoid::pair(2), FiniteGroupoid::cyclic(2)),
                                    "P2xZ2"));
}

TEST_CASE("non-cocommutative fixtures pass the full suite") {
  require_all_pass(groupoid_function_algebra(FiniteGroupoid::pair(2), "fun-P2"));
  require_all_pass(groupoid_function_algebra(
      FiniteGroupoid::disjoint_union(FiniteGroupoid::pair(2), FiniteGroupoid::cyclic(3)), "fun-P2+Z3"));
  require_all_pass(tensor_product(groupoid_algebra(FiniteGroupoid::pair(2), "P2"),
                                  groupoid_function_algebra(FiniteGroupoid::cyclic(2), "fun-Z2"), "P2*fun-Z2"));
}

TEST_CASE("pair groupoid P2: derived values") {
  WeakHopfData d = analyze(groupoid_algebra(FiniteGroupoid::pair(2), "P2"));
  CHECK(d.E == tensor::kron(e(1, 1), e(1, 1)) + tensor::kron(e(2, 2), e(2, 2)));
  CHECK(rank(d.T.T1) == 8);
  CHECK(kernel(d.T.T1).rank() == 8);
  CHECK(d.eps_s.apply(e(1, 2)) == e(2, 2));
  CHECK(d.eps_t.apply(e(1, 2)) == e(1, 1));
  SubalgebraSpan diag(4, {e(1, 1), e(2, 2)});
  CHECK(d.B == diag);
  CHECK(d.C == diag);
  REQUIRE(d.SB);
  CHECK(d.S_B(e(1, 1)) == e(1, 1));
  // Group algebra of Z2: E = 1⊗1 and the canonical maps are bijective.
  WeakHopfData z = analyze(groupoid_algebra(FiniteGroupoid::cyclic(2), "Z2"));
  CHECK(z.E == tensor::kron(z.one(), z.one()));
  CHECK(rank(z.T.T1) == 4);
  CHECK(z.B.dim() == 1);
}

TEST_CASE("corrupted idempotents are detected") {
  WeakHopfData d = analyze(groupoid_algebra(FiniteGroupoid::pair(2), "P2"));
  Vec bad = tensor::kron(e(1, 1), e(1, 1)) + tensor::kron(e(2, 2), e(2, 2)) + tensor::kron(e(1, 1), e(2, 2));
  CHECK(check_idempotent_comultiplicativity(d.algebra(), d.spec.coproduct, bad).has_value());
  CHECK_FALSE(check_idempotent_comultiplicativity(d.algebra(), d.spec.coproduct, d.E).has_value());
  CHECK(check_separability(d, tensor::kron(e(1, 1), e(1, 1))).has_value());
  CHECK_FALSE(check_separability(d, d.E).has_value());
}

TEST_CASE("known-bad inputs fail exactly one record") {
  const WeakHopfSpec good = groupoid_algebra(FiniteGroupoid::pair(2), "P2");

  SUBCASE("zero counit") {
    WeakHopfSpec s = good;
    s.counit = Vec(4);
    Report r = verify_weak_hopf(analyze(s));
    CHECK(failures(r) == "counit ");
  }
  SUBCASE("declared idempotent e11⊗e11") {
    WeakHopfSpec s = good;
    s.declared_idempotent = tensor::kron(e(1, 1), e(1, 1));
    Report r = verify_weak_hopf(analyze(s));
    CHECK(failures(r) == "idempotent.declared ");
  }
  SUBCASE("antipode that does not flip the coproduct") {
    WeakHopfSpec s = good;
    const Algebra& a = s.algebra;
    Vec p = e(1, 1) + e(1, 2) + e(2, 2);
    Vec p_inv = e(1, 1) - e(1, 2) + e(2, 2);
    std::vector<Vec> cols;
    for (std::size_t i = 1; i <= 2; ++i)
      for (std::size_t j = 1; j <= 2; ++j) cols.push_back(a.multiply(p, e(j, i), p_inv));
    s.antipode = LinearMap(4, cols);
    Report r = verify_weak_hopf(analyze(s));
    CHECK(failures(r) == "antipode.flips-coproduct ");
    CHECK_FALSE(r.all_passed());
  }
  SUBCASE("declared antipodal map that disagrees") {
    WeakHopfSpec s = good;
    LinearMap sb = LinearMap::identity(4);
    sb.set_column(0, e(2, 2));
    sb.set_column(3, e(1, 1));
    s.declared_antipodal_b = sb;
    Report r = verify_weak_hopf(analyze(s));
    CHECK(failures(r) == "base.antipodal-declared ");
  }
}

TEST_CASE("shape errors raise precondition errors") {
  WeakHopfSpec s = groupoid_algebra(FiniteGroupoid::pair(2), "P2");
  s.counit = Vec(3);
  CHECK_THROWS_AS(validate_shapes(s), PreconditionError);
}

TEST_CASE("random instances are deterministic and verified") {
  for (std::uint64_t seed : {1u, 2u, 3u, 17u}) {
    RandomInstance a = random_instance(seed);
    RandomInstance b = random_instance(seed);
    CHECK(a.data.n == b.data.n);
    CHECK(a.data.spec.coproduct == b.data.spec.coproduct);
    CHECK(a.twist.u == b.twist.u);
    CHECK(a.data.n <= 12);
    CHECK(verify_weak_hopf(a.data).all_passed());
  }
}
