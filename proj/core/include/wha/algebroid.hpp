#ifndef WHA_ALGEBROID_HPP
#define WHA_ALGEBROID_HPP

#include "wha/twist.hpp"

#include <optional>
#include <vector>

namespace wha {

/// Quotient of an ambient space by a relation span. Coordinates on the
/// quotient are the non-pivot ambient coordinates of the echelon basis of
/// the relations, so project() reads off the canonical representative and
/// lift() is the matching section (project(lift(q)) = q).
class BalancedQuotient {
public:
  BalancedQuotient() : relations_(0) {}
  BalancedQuotient(std::size_t ambient, const std::vector<Vec>& relations);

  std::size_t ambient() const { return relations_.dim(); }
  std::size_t dim() const { return coords_.size(); }
  const Subspace& relations() const { return relations_; }

  Vec project(const Vec& x) const;
  Vec lift(const Vec& q) const;
  LinearMap projection() const;
  LinearMap section() const;

private:
  Subspace relations_;
  std::vector<std::size_t> coords_;
};

/// A⊗_ℓA: xa⊗b = a⊗S_B(x)b for x in B, with the graph's S_B.
BalancedQuotient left_balanced(const WeakHopfData& d);
/// A⊗'_rA: a⊗by = aS'_C(y)⊗b for y in C.
BalancedQuotient right_balanced(const TwistedData& t);

/// The mixed algebroid: left side from (A, Δ), right side from (A, Δ').
struct AlgebroidData {
  BalancedQuotient left;   ///< A⊗_ℓA
  BalancedQuotient right;  ///< A⊗'_rA
  // Domains of the canonical maps, cut out by the module relations they
  // respect: ax⊗b = a⊗xb (T_ρ), ya⊗b = a⊗by (T_λ), ay⊗b = a⊗yb (_λT),
  // xa⊗b = a⊗bx (_ρT); x in B, y in C.
  BalancedQuotient dom_rho, dom_lambda, dom_lambda_prime, dom_rho_prime;
  LinearMap delta_B;        ///< a⊗b -> π_ℓ(Δ(a)(1⊗b))
  LinearMap delta_C_prime;  ///< c⊗a -> π'_r((c⊗1)Δ'(a))
  LinearMap T_rho, T_lambda, lambda_T, rho_T;  ///< quotient level, dom -> codomain
  LinearMap S_r;            ///< a -> uS(a)u^{-1}
  LinearMap eps_B;          ///< S^{-1}∘εt
  LinearMap eps_C;          ///< S^{-1}∘εs
  LinearMap eps_C_prime;    ///< a -> ε_C(u^{-1}au)
};

/// d carries the left graph (its declared S_B, if any); t the twist.
AlgebroidData build_algebroid(const WeakHopfData& d, const TwistedData& t);

/// Algebroid records after `deps`; with g == nullptr every record is
/// emitted as skipped (deps must then have failed).
void verify_algebroid(const WeakHopfData& d, const TwistedData* t, const AlgebroidData* g, Report& rep,
                      const std::vector<std::string>& deps);

/// Twist gate plus the algebroid records. The twist is verified on d with
/// any declared S_B set aside; the declared map only enters the left graph.
Report algebroid_report(const WeakHopfData& d, const Vec& u, const Vec& v);

}  // namespace wha

#endif  // WHA_ALGEBROID_HPP
