#include <doctest.h>

#include "wha/groupoid.hpp"
#include "wha/tensor.hpp"
#include "wha/twist.hpp"

using namespace wha;

namespace {

Vec e(std::size_t i, std::size_t j) { return Vec::unit(4, 2 * (i - 1) + (j - 1)); }

std::string failures(const Report& r) {
  std::string s;
  for (const auto& f : r.failed()) s += f + " ";
  return s;
}

const Record& rec(const Report& r, const std::string& name) {
  const Record* p = r.find(name);
  REQUIRE(p != nullptr);
  return *p;
}

std::string fact(const Record& r, const std::string& k) {
  for (const auto& [key, v] : r.facts) {
    if (key == k) return v;
  }
  return "";
}

WeakHopfData p2() { return checked(groupoid_algebra(FiniteGroupoid::pair(2), "P2")); }

}  // namespace

TEST_CASE("P2 diagonal twist: hand-computed values") {
  WeakHopfData d = p2();
  const Algebra& a = d.algebra();
  Vec u = Scalar(2) * e(1, 1) + e(2, 2);
  Vec v = Scalar(1, 2) * e(1, 1) + e(2, 2);
  TwistPair p = check_twist_condition(d, u, v);
  TwistedData t = build_twist(d, p);
  CHECK(t.primed.spec.delta(e(1, 2)) == Scalar(2) * tensor::kron(e(1, 2), e(1, 2)));
  CHECK(t.primed.spec.epsilon(e(1, 2)) == Scalar(1, 2));
  CHECK(t.primed.S(e(1, 2)) == Scalar(1, 4) * e(2, 1));
  CHECK(t.E_prime == d.E);
  CHECK(t.primed.E == d.E);
  CHECK(kernel(t.primed.T.T1).rank() == 8);
  CHECK(kernel(t.primed.T.T1) == kernel(d.T.T1));
  // εs'(e12) recomputed from Δ' and S' agrees with u εs(u^{-1} e12)
  CHECK(t.primed.eps_s.apply(e(1, 2)) == a.multiply(u, d.eps_s.apply(a.multiply(p.v, e(1, 2)))));

  Report r = verify_twist(d, u, v);
  INFO(r.to_text(false));
  CHECK(r.all_passed());
  CHECK(fact(rec(r, "twist.rigidity"), "classification") == "distinct");
  CHECK(fact(rec(r, "twist.central-case"), "applies") == "yes");
  CHECK(fact(rec(r, "twist.antipode"), "oracle_rank") == "16");
  CHECK(rec(r, "twisted.counit").status == Status::pass);
}

TEST_CASE("lambda = (3, 5) gives Δ'(e12) = 3/5 e12⊗e12") {
  WeakHopfData d = p2();
  auto tw = diagonal_twist_pair(FiniteGroupoid::pair(2), {Scalar(3), Scalar(5)});
  TwistedData t = build_twist(d, check_twist_condition(d, tw.u, tw.v));
  CHECK(t.primed.spec.delta(e(1, 2)) == Scalar(3, 5) * tensor::kron(e(1, 2), e(1, 2)));
}

TEST_CASE("identity and central scalar twists are rigid") {
  WeakHopfData d = p2();
  Report r = verify_twist(d, d.one(), d.one());
  CHECK(r.all_passed());
  CHECK(fact(rec(r, "twist.rigidity"), "classification") == "identical");
  Report s = verify_twist(d, Scalar(3) * d.one(), Scalar(1, 3) * d.one());
  CHECK(s.all_passed());
  CHECK(fact(rec(s, "twist.rigidity"), "classification") == "identical");
}

TEST_CASE("a non-solution pair fails only the condition record") {
  WeakHopfData d = p2();
  Vec u = Scalar(2) * e(1, 1) + e(2, 2);
  Report r = verify_twist(d, u, u);
  CHECK(failures(r) == "twist.condition ");
  // E(vu⊗1)E - E = 3 e11⊗e11
  CHECK(rec(r, "twist.condition").witness == "E(vu⊗1)E - E = (3)e11⊗e11");
  CHECK(rec(r, "twist.theorem").status == Status::skipped);
  CHECK_THROWS_AS(check_twist_condition(d, u, u), TwistRejected);
}

TEST_CASE("twist elements outside M(B) or singular are preconditions") {
  WeakHopfData d = p2();
  CHECK_THROWS_AS(check_twist_condition(d, e(1, 2), d.one()), PreconditionError);
  CHECK_THROWS_AS(check_twist_condition(d, e(1, 1), d.one()), PreconditionError);
  Report r = verify_twist(d, e(1, 2), d.one());
  CHECK(failures(r) == "twist.condition ");
}

TEST_CASE("antipode oracle recovers S from Δ on untwisted fixtures") {
  for (const auto& spec : {groupoid_algebra(FiniteGroupoid::pair(2)), groupoid_algebra(FiniteGroupoid::cyclic(3)),
                           groupoid_function_algebra(FiniteGroupoid::pair(2))}) {
    AntipodeRecovery r = recover_antipode(spec.algebra, spec.coproduct);
    REQUIRE(r.antipode);
    CHECK(*r.antipode == spec.antipode);
  }
}

TEST_CASE("solver: only w = 1 on a one-dimensional base, consistent candidates elsewhere") {
  WeakHopfData z = checked(groupoid_algebra(FiniteGroupoid::cyclic(2), "Z2"));
  TwistSolutions s = solve_twist_pairs(z);
  CHECK(s.only_identity);
  CHECK(s.particular == z.one());
  REQUIRE_FALSE(s.candidates.empty());
  for (const auto& c : s.candidates) CHECK(z.algebra().multiply(c.v, c.u) == z.one());

  for (const auto& spec : {groupoid_algebra(FiniteGroupoid::pair(2), "P2"),
                           groupoid_function_algebra(FiniteGroupoid::pair(2), "fun-P2"),
                           tensor_product(groupoid_algebra(FiniteGroupoid::pair(2), "P2"),
                                          groupoid_function_algebra(FiniteGroupoid::cyclic(2), "fun-Z2"), "T")}) {
    WeakHopfData d = checked(spec);
    TwistSolutions sol = solve_twist_pairs(d);
    CHECK_FALSE(sol.candidates.empty());
    for (const auto& c : sol.candidates) {
      CHECK_NOTHROW(check_twist_condition(d, c.u, c.v));
      Report r = verify_twist(d, c.u, c.v);
      INFO(spec.name, " ", c.origin, "\n", r.to_text(false));
      CHECK(r.all_passed());
    }
  }
}

TEST_CASE("random instances: diagonal twists pass every record") {
  for (std::uint64_t seed : {0u, 5u, 9u}) {
    RandomInstance inst = random_instance(seed);
    Report r = verify_twist(inst.data, inst.twist.u, inst.twist.v);
    INFO(r.to_text(false));
    CHECK(r.all_passed());
  }
}
