#ifndef WHA_TWIST_HPP
#define WHA_TWIST_HPP

#include "wha/weak_hopf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wha {

/// A pair (u, v) that failed E(vu⊗1)E = E or one of its consequences.
class TwistRejected : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct TwistPair {
  Vec u, v;
  Vec u_inv, v_inv;
  Vec u_prime;  ///< S_C^{-1}(u): (u⊗1)E = (1⊗u')E
  Vec v_prime;  ///< S_B(v):      E(v⊗1) = E(1⊗v')
};

/// Membership and invertibility only; throws PreconditionError.
void require_twist_elements(const WeakHopfData& d, const Vec& u, const Vec& v);
/// E(vu⊗1)E - E, zero iff the twist condition holds.
Vec twist_residual(const WeakHopfData& d, const Vec& u, const Vec& v);
/// Both leg identities of the condition, multiplied with B resp. C; a
/// witness on failure.
std::optional<std::string> check_condition_legs(const WeakHopfData& d, const Vec& w);
/// Solves (u⊗1)E = (1⊗y)E resp. E(v⊗1) = E(1⊗y) for y in C; nullopt when
/// the solution is missing or not unique.
std::optional<Vec> solve_u_prime(const WeakHopfData& d, const Vec& u);
std::optional<Vec> solve_v_prime(const WeakHopfData& d, const Vec& v);

/// Full validation. Throws PreconditionError (u or v outside M(B), not
/// invertible) or TwistRejected (condition or a consequence fails).
TwistPair check_twist_condition(const WeakHopfData& d, const Vec& u, const Vec& v);

/// Everything about (A, Δ'). `primed` is the analysis of the spec with
/// Δ', ε', S' given by their closed formulas; the remaining fields are the
/// closed formulas for data that `primed` recomputes independently.
struct TwistedData {
  WeakHopfData base;
  TwistPair pair;
  WeakHopfData primed;
  Vec E_prime;               ///< (u⊗1)E(v⊗1)
  LinearMap SB_prime;        ///< n x dim B: x -> S_B(v x v^{-1})
  LinearMap SC_prime;        ///< n x dim C: y -> u S_C(y) u^{-1}
  Vec F1, F2, F3, F4;        ///< closed forms in terms of the original F's
  LinearMap eps_s_prime;     ///< a -> u εs(u^{-1} a)
  LinearMap eps_t_prime;     ///< a -> εt(a v'^{-1}) v'
};

/// Spec of (A, Δ') with Δ'(a) = (u⊗1)Δ(a)(v⊗1), ε'(a) = ε(u^{-1}av^{-1})
/// and S'(a) = uS(vav^{-1})u^{-1}.
WeakHopfSpec twisted_spec(const WeakHopfData& d, const TwistPair& p);
TwistedData build_twist(const WeakHopfData& d, const TwistPair& p);

/// Antipode recovered from Δ alone, through the generalized inverse R1 of
/// T1: the counit ε and F1 are solved from their defining equations
/// ((ε⊗ι)Δ = ι = (ι⊗ε)Δ and E13(F1⊗1) = E13(1⊗E)), R1 is fixed by
/// T1R1 = E· on the range of T1 and R1T1 = (·⊗1)F1(1⊗·), and
/// S(a) = (ε⊗ι)R1(a⊗1).
struct AntipodeRecovery {
  std::size_t counit_rank = 0;
  std::optional<Vec> counit;
  std::size_t unknowns = 0;  ///< entries of F1
  std::size_t rank = 0;      ///< rank of the F1 system
  std::optional<LinearMap> antipode;
};
AntipodeRecovery recover_antipode(const Algebra& a, const LinearMap& coproduct);

/// All twist records for (u, v) on a verified base. Total: a rejected pair
/// fails `twist.condition` and everything downstream is skipped.
Report verify_twist(const WeakHopfData& d, const Vec& u, const Vec& v, std::optional<TwistedData>* out = nullptr);

/// The records run on an already built twist (no condition records).
void verify_twist_theorem(const TwistedData& t, Report& rep, const std::vector<std::string>& deps);

struct TwistCandidate {
  Vec u, v;
  std::string origin;  ///< "w" (u = 1, v = w) or "v'u'=1"
};

struct TwistSolutions {
  Vec particular;            ///< one solution w (coordinates in the parent)
  std::vector<Vec> kernel;   ///< directions w + Σ t_k kernel[k]
  bool only_identity = false;  ///< w = 1 is the unique solution
  std::vector<TwistCandidate> candidates;
  std::size_t rejected = 0;  ///< proposals that failed the condition
};

/// Solves E(w⊗1)E = E for w in B and proposes factorizations; every
/// candidate returned has passed check_twist_condition.
TwistSolutions solve_twist_pairs(const WeakHopfData& d);
/// Solver output as a report: the solution space, then one record per
/// candidate re-running check_twist_condition.
Report solve_report(const WeakHopfData& d, TwistSolutions* out = nullptr);

}  // namespace wha

#endif  // WHA_TWIST_HPP
