#ifndef WHA_WEAK_HOPF_HPP
#define WHA_WEAK_HOPF_HPP

#include "wha/algebra.hpp"
#include "wha/report.hpp"

#include <optional>
#include <string>

namespace wha {

/// Raised when an input is outside the domain of an operation (wrong
/// dimension, element outside a required subalgebra, non-invertible ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raw input: an algebra with coproduct, counit and antipode. Nothing here
/// is trusted; analyze() and verify_weak_hopf() decide what holds.
struct WeakHopfSpec {
  std::string name;
  Algebra algebra;
  LinearMap coproduct;  ///< n^2 x n, column i = Δ(e_i)
  Vec counit;           ///< ε(e_i) at index i
  LinearMap antipode;   ///< n x n, column i = S(e_i)
  std::optional<Vec> declared_idempotent;
  std::optional<LinearMap> declared_antipodal_b;  ///< n x n; only its action on B is read

  std::size_t dim() const { return algebra.dim(); }
  Vec delta(const Vec& a) const { return coproduct.apply(a); }
  Scalar epsilon(const Vec& a) const;
  Vec S(const Vec& a) const { return antipode.apply(a); }
};

/// Checks shapes; throws PreconditionError. Requires a unital algebra.
void validate_shapes(const WeakHopfSpec& spec);

struct CanonicalMaps {
  LinearMap T1;  ///< a⊗b -> Δ(a)(1⊗b)
  LinearMap T2;  ///< a⊗b -> (a⊗1)Δ(b)
  LinearMap T3;  ///< a⊗b -> (1⊗b)Δ(a)
  LinearMap T4;  ///< a⊗b -> Δ(b)(a⊗1)
};

CanonicalMaps canonical_maps(const Algebra& a, const LinearMap& coproduct);

/// Maps x -> E(x⊗1)-style sandwiches of a fixed two-tensor X, as linear
/// maps A⊗A -> A⊗A:  kind 1: (a⊗1)X(1⊗b),  kind 3: (1⊗b)X(a⊗1).
LinearMap sandwich_map(const Algebra& a, const Vec& x, int kind);

/// Everything derivable from a spec. Fields that cannot be computed (for
/// example S_B when the defining system has no unique solution) stay empty;
/// verify_weak_hopf() reports why.
struct WeakHopfData {
  explicit WeakHopfData(WeakHopfSpec s) : spec(std::move(s)) {}

  WeakHopfSpec spec;
  std::size_t n = 0;
  Vec E;  ///< Δ(1)
  CanonicalMaps T;
  std::optional<LinearMap> antipode_inverse;
  LinearMap eps_s;  ///< a -> Σ S(a_(1)) a_(2)
  LinearMap eps_t;  ///< a -> Σ a_(1) S(a_(2))
  SubalgebraSpan B;   ///< closure of εs(A)
  SubalgebraSpan C;   ///< closure of εt(A)
  SubalgebraSpan MB;  ///< {x : Δ(x) = E(1⊗x)}
  SubalgebraSpan MC;  ///< {y : Δ(y) = (y⊗1)E}
  std::optional<LinearMap> SB;  ///< n x dim B, column k = S_B(B.basis()[k])
  std::optional<LinearMap> SC;  ///< n x dim C, column k = S_C(C.basis()[k])
  std::string antipodal_error;
  Vec F1, F2, F3, F4;  ///< F3, F4 stay empty without S^{-1}

  const Algebra& algebra() const { return spec.algebra; }
  const Vec& one() const { return spec.algebra.one(); }
  Vec S(const Vec& a) const { return spec.S(a); }
  Vec S_inv(const Vec& a) const;
  Vec S_B(const Vec& x) const;
  Vec S_C(const Vec& y) const;
  Vec S_B_inv(const Vec& y) const;
  Vec S_C_inv(const Vec& x) const;
  /// The antipodal map of the left quantum graph: the declared one when the
  /// spec carries it, the solved one otherwise.
  Vec S_B_graph(const Vec& x) const;
};

WeakHopfData analyze(WeakHopfSpec spec);

/// (Δ⊗ι)E = (E⊗1)(1⊗E) = (1⊗E)(E⊗1); returns a witness on failure.
std::optional<std::string> check_idempotent_comultiplicativity(const Algebra& a, const LinearMap& coproduct,
                                                               const Vec& e);
/// Separability of E in B⊗C with antipodal maps; returns a witness on failure.
std::optional<std::string> check_separability(const WeakHopfData& d, const Vec& e);

/// Solves E(1⊗y) = E(x⊗1) for y (S_B) or (x⊗1)E = (1⊗y)E for x (S_C)
/// over a span; nullopt when a column has no unique solution.
std::optional<LinearMap> solve_antipodal_b(const Algebra& a, const Vec& e, const SubalgebraSpan& b);
std::optional<LinearMap> solve_antipodal_c(const Algebra& a, const Vec& e, const SubalgebraSpan& c);

/// Generalized inverses R1..R4 of the canonical maps built from S.
struct GeneralizedInverses {
  LinearMap R1, R2, R3, R4;
};
GeneralizedInverses generalized_inverses(const WeakHopfData& d);

/// The full axiom suite. Total: every record is present in every run.
Report verify_weak_hopf(const WeakHopfData& d);

/// Record names of the suite whose failure makes S-dependent checks moot.
extern const std::vector<std::string> kAntipodeBasics;

std::string describe(const Vec& v, const std::vector<std::string>& names);
std::string describe(const Vec& v);

}  // namespace wha

#endif  // WHA_WEAK_HOPF_HPP
