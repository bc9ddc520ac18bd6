#ifndef WHA_GROUPOID_HPP
#define WHA_GROUPOID_HPP

#include "wha/weak_hopf.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wha {

struct Arrow {
  std::string label;
  std::size_t src = 0;
  std::size_t tgt = 0;
};

/// Finite groupoid given by explicit tables. compose(f, g) is f∘g and is
/// defined exactly when src(f) = tgt(g).
class FiniteGroupoid {
public:
  /// Validates closure, associativity, identities and inverses; throws
  /// PreconditionError with the offending arrows.
  FiniteGroupoid(std::vector<std::string> objects, std::vector<Arrow> arrows,
                 std::vector<std::vector<std::optional<std::size_t>>> compose, std::vector<std::size_t> inverse);

  static FiniteGroupoid pair(std::size_t k);
  static FiniteGroupoid cyclic(std::size_t m);
  static FiniteGroupoid product(const FiniteGroupoid& g, const FiniteGroupoid& h);
  static FiniteGroupoid disjoint_union(const FiniteGroupoid& g, const FiniteGroupoid& h);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t size() const { return arrows_.size(); }
  std::optional<std::size_t> compose(std::size_t f, std::size_t g) const { return compose_[f][g]; }
  std::size_t inverse(std::size_t f) const { return inverse_[f]; }
  std::size_t identity(std::size_t object) const { return identity_[object]; }
  bool is_identity(std::size_t f) const;

private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::optional<std::size_t>>> compose_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> identity_;
};

/// Convolution algebra: Δ(g) = g⊗g, ε(g) = 1, S(g) = g^{-1}.
WeakHopfSpec groupoid_algebra(const FiniteGroupoid& g, std::string name = "groupoid");
/// Dual: functions on the arrows, Δ(δ_g) = Σ_{h∘k = g} δ_h⊗δ_k.
WeakHopfSpec groupoid_function_algebra(const FiniteGroupoid& g, std::string name = "groupoid-dual");
/// Tensor product of two weak Hopf algebras (legs ordered row-major).
WeakHopfSpec tensor_product(const WeakHopfSpec& x, const WeakHopfSpec& y, std::string name);

/// Runs the full suite and throws std::logic_error unless it passes.
WeakHopfData checked(WeakHopfSpec spec);

struct TwistElements {
  Vec u;
  Vec v;
};

/// u = Σ λ_e e over the identity arrows, v = u^{-1}. Throws
/// PreconditionError on a zero coefficient or a count mismatch.
TwistElements diagonal_twist_pair(const FiniteGroupoid& g, const std::vector<Scalar>& lambda);

struct RandomBounds {
  std::size_t max_objects = 3;
  std::size_t max_isotropy = 2;
  std::size_t max_dim = 12;
};

struct RandomInstance {
  FiniteGroupoid groupoid;
  WeakHopfData data;  ///< already through the full suite
  std::vector<Scalar> lambda;
  TwistElements twist;
};

/// Deterministic in the seed: a disjoint union of (pair groupoid) x (cyclic
/// isotropy) blocks and a nonzero rational (sometimes Gaussian) diagonal twist.
RandomInstance random_instance(std::uint64_t seed, const RandomBounds& bounds = {});

}  // namespace wha

#endif  // WHA_GROUPOID_HPP
