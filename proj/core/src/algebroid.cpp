#include "wha/algebroid.hpp"

#include "wha/tensor.hpp"

#include <algorithm>

namespace wha {

// ---------------------------------------------------------------- quotients

BalancedQuotient::BalancedQuotient(std::size_t ambient, const std::vector<Vec>& relations)
    : relations_(Subspace::span(ambient, relations)), coords_(relations_.free_columns()) {}

Vec BalancedQuotient::project(const Vec& x) const {
  Vec r = relations_.reduce(x);
  std::vector<Vec::Term> out;
  out.reserve(r.nnz());
  for (const auto& [k, c] : r.terms()) {
    auto it = std::lower_bound(coords_.begin(), coords_.end(), k);
    out.emplace_back(static_cast<std::size_t>(it - coords_.begin()), c);
  }
  return Vec::from_terms(dim(), std::move(out));
}

Vec BalancedQuotient::lift(const Vec& q) const {
  std::vector<Vec::Term> out;
  out.reserve(q.nnz());
  for (const auto& [k, c] : q.terms()) out.emplace_back(coords_[k], c);
  return Vec::from_terms(ambient(), std::move(out));
}

LinearMap BalancedQuotient::projection() const {
  LinearMap m(dim(), ambient());
  for (std::size_t k = 0; k < ambient(); ++k) m.set_column(k, project(Vec::unit(ambient(), k)));
  return m;
}

LinearMap BalancedQuotient::section() const {
  LinearMap m(ambient(), dim());
  for (std::size_t k = 0; k < dim(); ++k) m.set_column(k, Vec::unit(ambient(), coords_[k]));
  return m;
}

namespace {

Vec m2(const Algebra& a, const Vec& x, const Vec& y) { return tensor::multiply(a, 2, x, y); }
Vec m3(const Algebra& a, const Vec& x, const Vec& y) { return tensor::multiply(a, 3, x, y); }
Vec kron(const Vec& x, const Vec& y) { return tensor::kron(x, y); }

Vec sprime_c(const WeakHopfData& d, const TwistedData& t, const Vec& y) {
  return t.SC_prime.apply(d.C.coordinates(y));
}

// Relations f(x, a, b) - g(x, a, b) for x over a span basis, a, b over A.
template <class F>
std::vector<Vec> relations(const Algebra& a, const std::vector<Vec>& span, F&& f) {
  std::vector<Vec> out;
  const std::size_t n = a.dim();
  for (const auto& x : span) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vec r = f(x, a.basis(i), a.basis(j));
        if (!r.is_zero()) out.push_back(std::move(r));
      }
    }
  }
  return out;
}

// Quotient-level matrix of x -> cod.project(f(x)) on dom.
LinearMap induced(const BalancedQuotient& dom, const BalancedQuotient& cod, const LinearMap& f) {
  LinearMap m(cod.dim(), dom.dim());
  LinearMap s = dom.section();
  for (std::size_t k = 0; k < dom.dim(); ++k) m.set_column(k, cod.project(f.apply(s.column(k))));
  return m;
}

// Slices of X in A⊗A⊗A: first leg fixed (an element of A⊗A in legs 2, 3)
// or last leg fixed (legs 1, 2).
Vec slice_first(const Vec& x, std::size_t n, std::size_t p) {
  std::vector<Vec::Term> out;
  const std::size_t nn = n * n;
  for (const auto& [k, c] : x.terms()) {
    if (k / nn == p) out.emplace_back(k % nn, c);
  }
  return Vec::from_terms(nn, std::move(out));
}

Vec slice_last(const Vec& x, std::size_t n, std::size_t r) {
  std::vector<Vec::Term> out;
  for (const auto& [k, c] : x.terms()) {
    if (k % n == r) out.emplace_back(k / n, c);
  }
  return Vec::from_terms(n * n, std::move(out));
}

bool in_first_tensor(const Subspace& k, const Vec& x, std::size_t n) {  // x ∈ A⊗K
  for (std::size_t p = 0; p < n; ++p) {
    if (!k.contains(slice_first(x, n, p))) return false;
  }
  return true;
}

bool in_last_tensor(const Subspace& k, const Vec& x, std::size_t n) {  // x ∈ K⊗A
  for (std::size_t r = 0; r < n; ++r) {
    if (!k.contains(slice_last(x, n, r))) return false;
  }
  return true;
}

// K1⊗A + A⊗K2 inside A⊗A⊗A.
Subspace triple_relations(const Subspace& k1, const Subspace& k2, std::size_t n) {
  std::vector<Vec> gens;
  for (const auto& k : k1.basis()) {
    for (std::size_t r = 0; r < n; ++r) gens.push_back(kron(k, Vec::unit(n, r)));
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (const auto& k : k2.basis()) gens.push_back(kron(Vec::unit(n, p), k));
  }
  return Subspace::span(n * n * n, gens);
}

// Anti-isomorphism of spans: f maps the basis of `from` into `to`,
// reverses products and is injective. Returns a witness on failure.
template <class F>
std::optional<std::string> check_anti_iso(const Algebra& a, const SubalgebraSpan& from, const SubalgebraSpan& to, F&& f,
                                          const char* what) {
  const auto& names = a.basis_names();
  std::vector<Vec> images;
  for (const auto& x : from.basis()) {
    Vec fx = f(x);
    if (!to.contains(fx)) return std::string(what) + "(" + describe(x, names) + ") = " + describe(fx, names) + " is outside the target span";
    images.push_back(std::move(fx));
  }
  if (Subspace::span(a.dim(), images).rank() != from.dim() || from.dim() != to.dim()) {
    return std::string(what) + " is not a bijection between the spans";
  }
  for (const auto& x : from.basis()) {
    for (const auto& y : from.basis()) {
      if (f(a.multiply(x, y)) != a.multiply(f(y), f(x))) {
        return std::string(what) + " does not reverse the product of " + describe(x, names) + " and " + describe(y, names);
      }
    }
  }
  return std::nullopt;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

BalancedQuotient left_balanced(const WeakHopfData& d) {
  const Algebra& a = d.algebra();
  return BalancedQuotient(d.n * d.n, relations(a, d.B.basis(), [&](const Vec& x, const Vec& p, const Vec& q) {
                            return kron(a.multiply(x, p), q) - kron(p, a.multiply(d.S_B_graph(x), q));
                          }));
}

BalancedQuotient right_balanced(const TwistedData& t) {
  const WeakHopfData& d = t.base;
  const Algebra& a = d.algebra();
  return BalancedQuotient(d.n * d.n, relations(a, d.C.basis(), [&](const Vec& y, const Vec& p, const Vec& q) {
                            return kron(p, a.multiply(q, y)) - kron(a.multiply(p, sprime_c(d, t, y)), q);
                          }));
}

// ---------------------------------------------------------------- build

AlgebroidData build_algebroid(const WeakHopfData& d, const TwistedData& t) {
  const Algebra& a = d.algebra();
  const std::size_t n = d.n;
  const auto& B = d.B.basis();
  const auto& C = d.C.basis();
  AlgebroidData g;
  g.left = left_balanced(d);
  g.right = right_balanced(t);
  g.dom_rho = BalancedQuotient(n * n, relations(a, B, [&](const Vec& x, const Vec& p, const Vec& q) {
                                 return kron(a.multiply(p, x), q) - kron(p, a.multiply(x, q));
                               }));
  g.dom_lambda = BalancedQuotient(n * n, relations(a, C, [&](const Vec& y, const Vec& p, const Vec& q) {
                                    return kron(a.multiply(y, p), q) - kron(p, a.multiply(q, y));
                                  }));
  g.dom_lambda_prime = BalancedQuotient(n * n, relations(a, C, [&](const Vec& y, const Vec& p, const Vec& q) {
                                          return kron(a.multiply(p, y), q) - kron(p, a.multiply(y, q));
                                        }));
  g.dom_rho_prime = BalancedQuotient(n * n, relations(a, B, [&](const Vec& x, const Vec& p, const Vec& q) {
                                       return kron(a.multiply(x, p), q) - kron(p, a.multiply(q, x));
                                     }));
  const CanonicalMaps& T = d.T;
  const CanonicalMaps& Tp = t.primed.T;
  g.delta_B = g.left.projection().compose(T.T1);
  g.delta_C_prime = g.right.projection().compose(Tp.T2);
  g.T_rho = induced(g.dom_rho, g.left, T.T1);
  g.T_lambda = induced(g.dom_lambda, g.left, T.T4);
  g.lambda_T = induced(g.dom_lambda_prime, g.right, Tp.T2);
  g.rho_T = induced(g.dom_rho_prime, g.right, Tp.T3);

  const TwistPair& p = t.pair;
  std::vector<Vec> sr, eb, ec, ecp;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = a.basis(i);
    sr.push_back(a.multiply(p.u, d.S(e), p.u_inv));
    eb.push_back(d.S_inv(d.eps_t.apply(e)));
    ec.push_back(d.S_inv(d.eps_s.apply(e)));
    ecp.push_back(d.S_inv(d.eps_s.apply(a.multiply(p.u_inv, e, p.u))));
  }
  g.S_r = LinearMap(n, sr);
  g.eps_B = LinearMap(n, eb);
  g.eps_C = LinearMap(n, ec);
  g.eps_C_prime = LinearMap(n, ecp);
  return g;
}

// ---------------------------------------------------------------- records

void verify_algebroid(const WeakHopfData& d, const TwistedData* tp, const AlgebroidData* gp, Report& rep,
                      const std::vector<std::string>& deps) {
  const Algebra& a = d.algebra();
  const auto& names = a.basis_names();
  const std::size_t n = d.n;
  const std::size_t nn = n * n;
  const LinearMap& delta = d.spec.coproduct;
  const LinearMap* delta_p = tp != nullptr ? &tp->primed.spec.coproduct : nullptr;
  auto pair_name = [&](std::size_t i, std::size_t j) { return names[i] + "⊗" + names[j]; };
  auto triple_name = [&](std::size_t i, std::size_t j, std::size_t k) {
    return names[i] + ", " + names[j] + ", " + names[k];
  };

  rep.check("algebroid.left-quotient.well-defined",
            "S_B: B -> C is an anti-isomorphism with E(x⊗1) = E(1⊗S_B(x)); the relations xa⊗b - a⊗S_B(x)b are "
            "stable under Δ(A) and ι⊗Δ', Δ'⊗ι descend to A⊗_ℓA",
            deps, [&](Record& r) {
              const AlgebroidData& g = *gp;
              r.fact("dim", std::to_string(g.left.dim()));
              auto sb = [&](const Vec& x) { return d.S_B_graph(x); };
              if (auto w = check_anti_iso(a, d.B, d.C, sb, "S_B")) {
                r.fail(*w);
                return;
              }
              for (const auto& x : d.B.basis()) {
                if (!r.expect(m2(a, d.E, kron(x, a.one())) == m2(a, d.E, kron(a.one(), sb(x))),
                              "E(x⊗1) != E(1⊗S_B(x)) for x = " + describe(x, names)))
                  return;
              }
              const Subspace& k = g.left.relations();
              for (const auto& rel : k.basis()) {
                for (std::size_t c = 0; c < n; ++c) {
                  if (!r.expect(k.contains(m2(a, delta.column(c), rel)),
                                "Δ(" + names[c] + ") moves a relation out of the relation span"))
                    return;
                }
                // ι⊗Δ' lands in K_ℓ⊗A, Δ'⊗ι in A⊗K_ℓ
                if (!r.expect(in_last_tensor(k, tensor::apply_leg(*delta_p, rel, n, 1), n),
                              "ι⊗Δ' does not descend: relation " + describe(rel)))
                  return;
                if (!r.expect(in_first_tensor(k, tensor::apply_leg(*delta_p, rel, 1, n), n),
                              "Δ'⊗ι does not descend: relation " + describe(rel)))
                  return;
              }
            });
  rep.check("algebroid.right-quotient.well-defined",
            "S'_C: C -> B is an anti-isomorphism with (1⊗y)E' = (S'_C(y)⊗1)E'; the relations a⊗by - aS'_C(y)⊗b are "
            "stable under Δ'(A) and Δ⊗ι, ι⊗Δ descend to A⊗'_rA",
            deps, [&](Record& r) {
              const AlgebroidData& g = *gp;
              const TwistedData& t = *tp;
              r.fact("dim", std::to_string(g.right.dim()));
              auto scp = [&](const Vec& y) { return sprime_c(d, t, y); };
              if (auto w = check_anti_iso(a, d.C, d.B, scp, "S'_C")) {
                r.fail(*w);
                return;
              }
              for (const auto& y : d.C.basis()) {
                if (!r.expect(m2(a, kron(a.one(), y), t.E_prime) == m2(a, kron(scp(y), a.one()), t.E_prime),
                              "(1⊗y)E' != (S'_C(y)⊗1)E' for y = " + describe(y, names)))
                  return;
              }
              const Subspace& k = g.right.relations();
              for (const auto& rel : k.basis()) {
                for (std::size_t c = 0; c < n; ++c) {
                  if (!r.expect(k.contains(m2(a, rel, delta_p->column(c))),
                                "Δ'(" + names[c] + ") moves a relation out of the relation span"))
                    return;
                }
                if (!r.expect(in_first_tensor(k, tensor::apply_leg(delta, rel, 1, n), n),
                              "Δ⊗ι does not descend: relation " + describe(rel)))
                  return;
                if (!r.expect(in_last_tensor(k, tensor::apply_leg(delta, rel, n, 1), n),
                              "ι⊗Δ does not descend: relation " + describe(rel)))
                  return;
              }
            });
  const std::vector<std::string> q{"algebroid.left-quotient.well-defined", "algebroid.right-quotient.well-defined"};

  // The doubly balanced triple products, shared by the next two records.
  std::optional<Subspace> k3, k3m;
  auto ensure_triples = [&] {
    if (!k3) {
      k3 = triple_relations(gp->left.relations(), gp->right.relations(), n);
      k3m = triple_relations(gp->right.relations(), gp->left.relations(), n);
    }
  };

  rep.check("algebroid.projections-commute",
            "(π_ℓ⊗ι)(ι⊗π'_r) and (ι⊗π'_r)(π_ℓ⊗ι) induce the same map onto the doubly balanced product", q,
            [&](Record& r) {
              const AlgebroidData& g = *gp;
              ensure_triples();
              r.fact("dim", std::to_string(n * nn - k3->rank()));
              LinearMap pl = g.left.section().compose(g.left.projection());
              LinearMap pr = g.right.section().compose(g.right.projection());
              for (std::size_t k = 0; k < n * nn; ++k) {
                Vec z = Vec::unit(n * nn, k);
                Vec lr = tensor::apply_leg(pl, tensor::apply_leg(pr, z, n, 1), 1, n);
                Vec rl = tensor::apply_leg(pr, tensor::apply_leg(pl, z, 1, n), n, 1);
                if (!r.expect(k3->contains(lr - z) && k3->contains(rl - z),
                              "composites differ on " + triple_name(k / nn, k / n % n, k % n)))
                  return;
              }
            });

  rep.check("algebroid.coassociativity",
            "(Δ_B⊗ι)((1⊗b)Δ'_C(a))(c⊗1⊗1) = (1⊗1⊗b)(ι⊗Δ'_C)(Δ_B(a)(c⊗1)) and the mirrored identity", q,
            [&](Record& r) {
              const AlgebroidData& g = *gp;
              const CanonicalMaps& T = d.T;
              const CanonicalMaps& Tp = tp->primed.T;
              ensure_triples();
              for (std::size_t i = 0; i < n; ++i) {
                // Δ'_C and Δ_B are evaluated through their quotient classes
                // (a lift of the class), then expanded by Δ resp. Δ'.
                std::vector<Vec> l1(n), r1(n), l2(n), r2(n);
                for (std::size_t j = 0; j < n; ++j) {
                  Vec ab = Vec::unit(nn, i * n + j);  // e_i⊗e_j
                  Vec ji = Vec::unit(nn, j * n + i);  // e_j⊗e_i
                  l1[j] = tensor::apply_leg(delta, g.right.lift(g.right.project(Tp.T3.apply(ab))), 1, n);
                  r1[j] = tensor::apply_leg(*delta_p, g.left.lift(g.left.project(T.T4.apply(ji))), n, 1);
                  l2[j] = tensor::apply_leg(*delta_p, g.left.lift(g.left.project(T.T1.apply(ab))), 1, n);
                  r2[j] = tensor::apply_leg(delta, g.right.lift(g.right.project(Tp.T2.apply(ji))), n, 1);
                }
                for (std::size_t b = 0; b < n; ++b) {
                  for (std::size_t c = 0; c < n; ++c) {
                    Vec c11 = tensor::kron(a.basis(c), a.one(), a.one());
                    Vec b11 = tensor::kron(a.one(), a.one(), a.basis(b));
                    Vec lhs = m3(a, l1[b], c11);
                    Vec rhs = m3(a, b11, r1[c]);
                    if (!r.expect(k3->contains(lhs - rhs), "first identity fails for a, b, c = " + triple_name(i, b, c)))
                      return;
                    lhs = m3(a, c11, l2[b]);
                    rhs = m3(a, r2[c], b11);
                    if (!r.expect(k3m->contains(lhs - rhs), "mirrored identity fails for a, b, c = " + triple_name(i, b, c)))
                      return;
                  }
                }
              }
            });

  rep.check("algebroid.canonical-maps",
            "T_ρ, T_λ, _λT, _ρT are well defined on their balanced domains and bijective onto A⊗_ℓA resp. A⊗'_rA", q,
            [&](Record& r) {
              const AlgebroidData& g = *gp;
              const CanonicalMaps& T = d.T;
              const CanonicalMaps& Tp = tp->primed.T;
              struct Item {
                const char* name;
                const BalancedQuotient& dom;
                const BalancedQuotient& cod;
                const LinearMap& raw;
                const LinearMap& induced;
              };
              const Item items[] = {{"T_rho", g.dom_rho, g.left, T.T1, g.T_rho},
                                    {"T_lambda", g.dom_lambda, g.left, T.T4, g.T_lambda},
                                    {"lambda_T", g.dom_lambda_prime, g.right, Tp.T2, g.lambda_T},
                                    {"rho_T", g.dom_rho_prime, g.right, Tp.T3, g.rho_T}};
              for (const auto& it : items) {
                std::size_t rk = rank(it.induced);
                r.fact(std::string(it.name) + ".rank", std::to_string(rk) + " (" + std::to_string(it.dom.dim()) + " -> " +
                                                           std::to_string(it.cod.dim()) + ")");
                for (const auto& rel : it.dom.relations().basis()) {
                  if (!r.expect(it.cod.project(it.raw.apply(rel)).is_zero(),
                                std::string(it.name) + " does not vanish on its domain relations"))
                    return;
                }
                r.expect(rk == it.dom.dim() && rk == it.cod.dim(), std::string(it.name) + " is not bijective");
              }
            });

  rep.check("algebroid.antipode",
            "S_r(a) = uS(a)u^{-1} is an anti-isomorphism of A equal to S_B on B and to S'_C on C", q, [&](Record& r) {
              const AlgebroidData& g = *gp;
              for (std::size_t i = 0; i < n; ++i) r.fact("S_r(" + names[i] + ")", describe(g.S_r.column(i), names));
              if (!r.expect(invert(g.S_r).has_value(), "S_r is not bijective")) return;
              for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                  if (!r.expect(g.S_r.apply(a.basis_product(i, j)) == a.multiply(g.S_r.column(j), g.S_r.column(i)),
                                "S_r(ab) != S_r(b)S_r(a) for a, b = " + names[i] + ", " + names[j]))
                    return;
                }
              }
              for (const auto& x : d.B.basis()) {
                if (!r.expect(g.S_r.apply(x) == d.S_B_graph(x), "S_r != S_B at " + describe(x, names))) return;
              }
              for (const auto& y : d.C.basis()) {
                if (!r.expect(g.S_r.apply(y) == sprime_c(d, *tp, y), "S_r != S'_C at " + describe(y, names))) return;
              }
            });

  rep.check("algebroid.antipode.unquotiented",
            "T'2(S_r⊗ι)T4(a⊗b) = (S_r(a)⊗b)E' and T1(ι⊗S_r)T'3(a⊗b) = E(a⊗S_r(b))", {"algebroid.antipode"},
            [&](Record& r) {
              const AlgebroidData& g = *gp;
              const CanonicalMaps& T = d.T;
              const CanonicalMaps& Tp = tp->primed.T;
              for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                  Vec ab = Vec::unit(nn, i * n + j);
                  Vec lhs = Tp.T2.apply(tensor::apply_first(g.S_r, T.T4.apply(ab), n));
                  Vec rhs = m2(a, kron(g.S_r.column(i), a.basis(j)), tp->E_prime);
                  if (!r.expect(lhs == rhs, "first identity fails at " + pair_name(i, j))) return;
                  lhs = T.T1.apply(tensor::apply_second(g.S_r, Tp.T3.apply(ab), n));
                  rhs = m2(a, d.E, kron(a.basis(i), g.S_r.column(j)));
                  if (!r.expect(lhs == rhs, "second identity fails at " + pair_name(i, j))) return;
                }
              }
            });

  rep.check("algebroid.antipode.quotient",
            "_λT(S_r⊗ι)T_λ = S_r⊗ι and T_ρ(ι⊗S_r)_ρT = ι⊗S_r on the balanced products",
            {"algebroid.antipode", "algebroid.canonical-maps"}, [&](Record& r) {
              const AlgebroidData& g = *gp;
              const CanonicalMaps& T = d.T;
              const CanonicalMaps& Tp = tp->primed.T;
              for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                  Vec ab = Vec::unit(nn, i * n + j);
                  Vec w = tensor::apply_first(g.S_r, g.left.lift(g.left.project(T.T4.apply(ab))), n);
                  if (!r.expect(g.right.project(Tp.T2.apply(w)) == g.right.project(kron(g.S_r.column(i), a.basis(j))),
                                "_λT(S_r⊗ι)T_λ != S_r⊗ι at " + pair_name(i, j)))
                    return;
                  w = tensor::apply_second(g.S_r, g.right.lift(g.right.project(Tp.T3.apply(ab))), n);
                  if (!r.expect(g.left.project(T.T1.apply(w)) == g.left.project(kron(a.basis(i), g.S_r.column(j))),
                                "T_ρ(ι⊗S_r)_ρT != ι⊗S_r at " + pair_name(i, j)))
                    return;
                }
              }
            });

  rep.check("algebroid.counits",
            "ε_B = S^{-1}∘εt lands in B with S_B(ε_B(a)) = Σ u a_(1) v S_r(a_(2)) = εt(a); ε'_C(a) = ε_C(u^{-1}au) "
            "lands in C with S'_C(ε'_C(a)) = Σ S_r(a_(1)) a_(2)",
            {"algebroid.antipode"}, [&](Record& r) {
              const AlgebroidData& g = *gp;
              const TwistPair& p = tp->pair;
              for (std::size_t i = 0; i < n; ++i) {
                const Vec eb = g.eps_B.column(i);
                const Vec ecp = g.eps_C_prime.column(i);
                if (!r.expect(d.B.contains(eb), "ε_B(" + names[i] + ") is not in B")) return;
                if (!r.expect(d.C.contains(ecp), "ε'_C(" + names[i] + ") is not in C")) return;
                Vec left(n), right(n);
                for (const auto& [pq, c] : delta.column(i).terms()) {
                  Vec x = a.basis(pq / n);
                  Vec y = a.basis(pq % n);
                  left.axpy(c, a.multiply(a.multiply(p.u, x, p.v), g.S_r.apply(y)));
                  right.axpy(c, a.multiply(g.S_r.apply(x), y));
                }
                Vec sb = d.S_B_graph(eb);
                if (!r.expect(sb == left && left == d.eps_t.column(i),
                              "S_B(ε_B(a)), Σ u a_(1) v S_r(a_(2)) and εt(a) differ at a = " + names[i]))
                  return;
                if (!r.expect(sprime_c(d, *tp, ecp) == right, "S'_C(ε'_C(a)) != Σ S_r(a_(1)) a_(2) at a = " + names[i]))
                  return;
              }
            });

  rep.check("algebroid.counit-compatibility", "S_r(ε_B(a)) = ε'_C(S_r(a))", {"algebroid.counits"}, [&](Record& r) {
    const AlgebroidData& g = *gp;
    for (std::size_t i = 0; i < n; ++i) {
      if (!r.expect(g.S_r.apply(g.eps_B.column(i)) == g.eps_C_prime.apply(g.S_r.column(i)),
                    "differs at a = " + names[i]))
        return;
    }
  });

  // Identities of a putative two-coproduct structure; observed, not required.
  auto flip_check = [&](Record& r, const LinearMap& d1, const LinearMap& d2) {
    if (gp == nullptr) {
      r.fact("holds", "n/a");
      return;
    }
    const AlgebroidData& g = *gp;
    for (std::size_t i = 0; i < n; ++i) {
      Vec lhs = d1.apply(g.S_r.column(i));
      Vec rhs = tensor::flip(tensor::apply_first(g.S_r, tensor::apply_second(g.S_r, d2.column(i), n), n), n, n);
      if (lhs != rhs) {
        r.fact("holds", "no");
        r.fact("first-difference", names[i]);
        return;
      }
    }
    r.fact("holds", "yes");
  };
  rep.note("algebroid.open.flip-primed", "Δ(S_r(a)) = ζ(S_r⊗S_r)Δ'(a)",
           [&](Record& r) { flip_check(r, delta, delta_p != nullptr ? *delta_p : delta); });
  rep.note("algebroid.open.flip-unprimed", "Δ'(S_r(a)) = ζ(S_r⊗S_r)Δ(a)",
           [&](Record& r) { flip_check(r, delta_p != nullptr ? *delta_p : delta, delta); });
}

Report algebroid_report(const WeakHopfData& d, const Vec& u, const Vec& v) {
  Report rep(d.spec.name);
  WeakHopfData plain = d;
  plain.spec.declared_antipodal_b.reset();
  std::optional<TwistedData> t;
  Report tw = verify_twist(plain, u, v, &t);
  rep.check("algebroid.twist", "(u, v) is an accepted twist and (A, Δ') passes every twist check", {}, [&](Record& r) {
    std::size_t count = 0;
    for (const auto& rec : tw.records()) count += rec.status == Status::pass;
    r.fact("passed_records", std::to_string(count) + "/" + std::to_string(tw.records().size()));
    r.expect(tw.all_passed() && t.has_value(), "failing: " + join(tw.failed()));
  });
  std::optional<AlgebroidData> g;
  if (rep.passed("algebroid.twist")) g = build_algebroid(d, *t);
  verify_algebroid(d, t ? &*t : nullptr, g ? &*g : nullptr, rep, {"algebroid.twist"});
  return rep;
}

}  // namespace wha
