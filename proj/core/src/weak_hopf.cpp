#include "wha/weak_hopf.hpp"

#include "wha/tensor.hpp"

#include <sstream>

namespace wha {

const std::vector<std::string> kAntipodeBasics = {"antipode.bijective", "antipode.anti-homomorphism",
                                                  "antipode.flips-coproduct"};

// ---------------------------------------------------------------- printing

std::string describe(const Vec& v, const std::vector<std::string>& names) {
  if (v.is_zero()) return "0";
  const std::size_t n = names.size();
  unsigned legs = 0;
  for (std::size_t d = 1; n > 1 && d < v.dim(); d *= n) ++legs;
  if (legs == 0) legs = 1;
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c << ")";
    std::vector<std::size_t> digits(legs);
    std::size_t t = p;
    for (unsigned l = legs; l-- > 0;) {
      digits[l] = n > 0 ? t % n : 0;
      t = n > 0 ? t / n : 0;
    }
    for (unsigned l = 0; l < legs; ++l) {
      if (l > 0) os << "⊗";
      os << (digits[l] < n ? names[digits[l]] : "?");
    }
  }
  return os.str();
}

std::string describe(const Vec& v) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [i, c] : v.terms()) {
    if (!first) os << ", ";
    first = false;
    os << i << ":" << c;
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- spec

Scalar WeakHopfSpec::epsilon(const Vec& a) const {
  Scalar s;
  for (const auto& [i, c] : a.terms()) {
    const Scalar* e = counit.find(i);
    if (e != nullptr) s += c * *e;
  }
  return s;
}

void validate_shapes(const WeakHopfSpec& spec) {
  const std::size_t n = spec.dim();
  if (!spec.algebra.has_unit()) throw PreconditionError("algebra has no unit");
  if (spec.coproduct.rows() != n * n || spec.coproduct.cols() != n) {
    throw PreconditionError("coproduct must map dimension n to n^2");
  }
  if (spec.counit.dim() != n) throw PreconditionError("counit must have n entries");
  if (spec.antipode.rows() != n || spec.antipode.cols() != n) throw PreconditionError("antipode must be n x n");
  if (spec.declared_idempotent && spec.declared_idempotent->dim() != n * n) {
    throw PreconditionError("declared idempotent must have n^2 entries");
  }
  if (spec.declared_antipodal_b &&
      (spec.declared_antipodal_b->rows() != n || spec.declared_antipodal_b->cols() != n)) {
    throw PreconditionError("declared antipodal map must be n x n");
  }
}

// ---------------------------------------------------------------- helpers

namespace {

// e_i * v and v * e_j through the structure constants.
Vec lmul(const Algebra& a, std::size_t i, const Vec& v) {
  std::vector<Vec::Term> terms;
  for (const auto& [k, c] : v.terms()) {
    for (const auto& [m, s] : a.basis_product(i, k).terms()) terms.emplace_back(m, c * s);
  }
  return Vec::from_terms(a.dim(), std::move(terms));
}

Vec rmul(const Algebra& a, const Vec& v, std::size_t j) {
  std::vector<Vec::Term> terms;
  for (const auto& [k, c] : v.terms()) {
    for (const auto& [m, s] : a.basis_product(k, j).terms()) terms.emplace_back(m, c * s);
  }
  return Vec::from_terms(a.dim(), std::move(terms));
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// (e_l1 ⊗ e_l2) X (e_r1 ⊗ e_r2), kNone standing for the unit.
Vec leg_mul(const Algebra& a, const Vec& x, std::size_t l1, std::size_t r1, std::size_t l2, std::size_t r2) {
  const std::size_t n = a.dim();
  std::vector<Vec::Term> terms;
  for (const auto& [p, c] : x.terms()) {
    Vec u = Vec::unit(n, p / n);
    Vec w = Vec::unit(n, p % n);
    if (l1 != kNone) u = lmul(a, l1, u);
    if (r1 != kNone) u = rmul(a, u, r1);
    if (u.is_zero()) continue;
    if (l2 != kNone) w = lmul(a, l2, w);
    if (r2 != kNone) w = rmul(a, w, r2);
    for (const auto& [i, s] : u.terms()) {
      for (const auto& [j, t] : w.terms()) terms.emplace_back(i * n + j, c * s * t);
    }
  }
  return Vec::from_terms(n * n, std::move(terms));
}

Vec mul2(const Algebra& a, const Vec& x, const Vec& y) { return tensor::multiply(a, 2, x, y); }
Vec mul3(const Algebra& a, const Vec& x, const Vec& y) { return tensor::multiply(a, 3, x, y); }

std::string index_pair(const Algebra& a, std::size_t i, std::size_t j) {
  return a.basis_names()[i] + "⊗" + a.basis_names()[j];
}

LinearMap map_from(std::size_t rows, std::size_t cols, const std::function<Vec(std::size_t)>& f) {
  LinearMap m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) m.set_column(j, f(j));
  return m;
}

// First column where two maps differ, described for witnesses.
std::optional<std::size_t> first_difference(const LinearMap& x, const LinearMap& y) {
  for (std::size_t j = 0; j < x.cols(); ++j) {
    if (x.column(j) != y.column(j)) return j;
  }
  return std::nullopt;
}

}  // namespace

LinearMap sandwich_map(const Algebra& a, const Vec& x, int kind) {
  const std::size_t n = a.dim();
  return tensor::bilinear_map(n, [&](std::size_t i, std::size_t j) {
    return kind == 1 ? leg_mul(a, x, i, kNone, kNone, j) : leg_mul(a, x, kNone, i, j, kNone);
  });
}

CanonicalMaps canonical_maps(const Algebra& a, const LinearMap& coproduct) {
  const std::size_t n = a.dim();
  CanonicalMaps t;
  t.T1 = tensor::bilinear_map(n, [&](std::size_t i, std::size_t j) {
    return leg_mul(a, coproduct.column(i), kNone, kNone, kNone, j);
  });
  t.T2 = tensor::bilinear_map(n, [&](std::size_t i, std::size_t j) {
    return leg_mul(a, coproduct.column(j), i, kNone, kNone, kNone);
  });
  t.T3 = tensor::bilinear_map(n, [&](std::size_t i, std::size_t j) {
    return leg_mul(a, coproduct.column(i), kNone, kNone, j, kNone);
  });
  t.T4 = tensor::bilinear_map(n, [&](std::size_t i, std::size_t j) {
    return leg_mul(a, coproduct.column(j), kNone, i, kNone, kNone);
  });
  return t;
}

// ---------------------------------------------------------------- analysis

Vec WeakHopfData::S_inv(const Vec& a) const {
  if (!antipode_inverse) throw PreconditionError("antipode is not invertible");
  return antipode_inverse->apply(a);
}

Vec WeakHopfData::S_B(const Vec& x) const {
  if (!SB) throw PreconditionError("S_B is not available: " + antipodal_error);
  if (!B.contains(x)) throw PreconditionError("S_B applied outside B");
  return SB->apply(B.coordinates(x));
}

Vec WeakHopfData::S_C(const Vec& y) const {
  if (!SC) throw PreconditionError("S_C is not available: " + antipodal_error);
  if (!C.contains(y)) throw PreconditionError("S_C applied outside C");
  return SC->apply(C.coordinates(y));
}

Vec WeakHopfData::S_B_inv(const Vec& y) const {
  if (!SB) throw PreconditionError("S_B is not available: " + antipodal_error);
  auto x = solve_linear(*SB, y);
  if (!x) throw PreconditionError("S_B^{-1} applied outside S_B(B)");
  return B.from_coordinates(*x);
}

Vec WeakHopfData::S_C_inv(const Vec& x) const {
  if (!SC) throw PreconditionError("S_C is not available: " + antipodal_error);
  auto y = solve_linear(*SC, x);
  if (!y) throw PreconditionError("S_C^{-1} applied outside S_C(C)");
  return C.from_coordinates(*y);
}

Vec WeakHopfData::S_B_graph(const Vec& x) const {
  if (spec.declared_antipodal_b) return spec.declared_antipodal_b->apply(x);
  return S_B(x);
}

std::optional<LinearMap> solve_antipodal_b(const Algebra& a, const Vec& e, const SubalgebraSpan& b) {
  const std::size_t n = a.dim();
  // y -> E(1⊗y)
  LinearMap m = map_from(n * n, n, [&](std::size_t k) { return leg_mul(a, e, kNone, kNone, kNone, k); });
  if (!kernel_basis(m).empty()) return std::nullopt;
  LinearMap out(n, b.dim());
  for (std::size_t k = 0; k < b.dim(); ++k) {
    Vec rhs = mul2(a, e, tensor::kron(b.basis()[k], a.one()));
    auto y = solve_linear(m, rhs);
    if (!y) return std::nullopt;
    out.set_column(k, std::move(*y));
  }
  return out;
}

std::optional<LinearMap> solve_antipodal_c(const Algebra& a, const Vec& e, const SubalgebraSpan& c) {
  const std::size_t n = a.dim();
  // x -> (x⊗1)E
  LinearMap m = map_from(n * n, n, [&](std::size_t k) { return leg_mul(a, e, k, kNone, kNone, kNone); });
  if (!kernel_basis(m).empty()) return std::nullopt;
  LinearMap out(n, c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k) {
    Vec rhs = mul2(a, tensor::kron(a.one(), c.basis()[k]), e);
    auto x = solve_linear(m, rhs);
    if (!x) return std::nullopt;
    out.set_column(k, std::move(*x));
  }
  return out;
}

WeakHopfData analyze(WeakHopfSpec spec) {
  validate_shapes(spec);
  WeakHopfData d(std::move(spec));
  const Algebra& a = d.spec.algebra;
  const std::size_t n = a.dim();
  d.n = n;
  d.E = d.spec.delta(a.one());
  d.T = canonical_maps(a, d.spec.coproduct);
  d.antipode_inverse = invert(d.spec.antipode);

  d.eps_s = map_from(n, n, [&](std::size_t i) {
    return tensor::contract(a, tensor::apply_first(d.spec.antipode, d.spec.coproduct.column(i), n));
  });
  d.eps_t = map_from(n, n, [&](std::size_t i) {
    return tensor::contract(a, tensor::apply_second(d.spec.antipode, d.spec.coproduct.column(i), n));
  });
  d.B = subalgebra_closure(a, d.eps_s.columns());
  d.C = subalgebra_closure(a, d.eps_t.columns());

  LinearMap mb = map_from(n * n, n, [&](std::size_t k) {
    return d.spec.coproduct.column(k) - leg_mul(a, d.E, kNone, kNone, kNone, k);
  });
  LinearMap mc = map_from(n * n, n, [&](std::size_t k) {
    return d.spec.coproduct.column(k) - leg_mul(a, d.E, k, kNone, kNone, kNone);
  });
  d.MB = SubalgebraSpan(n, kernel_basis(mb));
  d.MC = SubalgebraSpan(n, kernel_basis(mc));

  d.SB = solve_antipodal_b(a, d.E, d.B);
  d.SC = solve_antipodal_c(a, d.E, d.C);
  if (!d.SB) d.antipodal_error = "E(x⊗1) = E(1⊗y) has no unique solution for some x in B";
  if (!d.SC) d.antipodal_error += (d.antipodal_error.empty() ? "" : "; ") +
                                  std::string("(1⊗y)E = (x⊗1)E has no unique solution for some y in C");

  d.F1 = tensor::apply_second(d.spec.antipode, d.E, n);
  d.F2 = tensor::apply_first(d.spec.antipode, d.E, n);
  if (d.antipode_inverse) {
    d.F3 = tensor::apply_second(*d.antipode_inverse, d.E, n);
    d.F4 = tensor::apply_first(*d.antipode_inverse, d.E, n);
  }
  return d;
}

// ---------------------------------------------------------------- checks

std::optional<std::string> check_idempotent_comultiplicativity(const Algebra& a, const LinearMap& coproduct,
                                                               const Vec& e) {
  const std::size_t n = a.dim();
  const Vec& one = a.one();
  Vec lhs = tensor::apply_leg(coproduct, e, 1, n);
  Vec e_1 = tensor::kron(e, one);
  Vec one_e = tensor::kron(one, e);
  Vec mid = mul3(a, e_1, one_e);
  Vec rev = mul3(a, one_e, e_1);
  if (lhs != mid) return "(Δ⊗ι)E - (E⊗1)(1⊗E) = " + describe(lhs - mid, a.basis_names());
  if (mid != rev) return "(E⊗1)(1⊗E) - (1⊗E)(E⊗1) = " + describe(mid - rev, a.basis_names());
  return std::nullopt;
}

std::optional<std::string> check_separability(const WeakHopfData& d, const Vec& e) {
  const Algebra& a = d.algebra();
  const std::size_t n = d.n;
  const Vec& one = a.one();
  auto in_bc = [&](const Vec& x) {
    for (const auto& l : tensor::left_legs(x, n)) {
      if (!d.B.contains(l)) return false;
    }
    for (const auto& r : tensor::right_legs(x, n)) {
      if (!d.C.contains(r)) return false;
    }
    return true;
  };
  if (!in_bc(e)) return std::string("E is not in B⊗C");
  Subspace left = Subspace::span(n, tensor::left_legs(e, n));
  Subspace right = Subspace::span(n, tensor::right_legs(e, n));
  if (left != d.B.space()) {
    return "left legs of E span a " + std::to_string(left.rank()) + "-dimensional space, B has dimension " +
           std::to_string(d.B.dim());
  }
  if (right != d.C.space()) {
    return "right legs of E span a " + std::to_string(right.rank()) + "-dimensional space, C has dimension " +
           std::to_string(d.C.dim());
  }
  for (const auto& x : d.B.basis()) {
    Vec x1 = tensor::kron(x, one);
    if (!in_bc(mul2(a, e, x1)) || !in_bc(mul2(a, x1, e))) {
      return "E(x⊗1) or (x⊗1)E leaves B⊗C for x = " + describe(x, a.basis_names());
    }
    if (d.SB) {
      Vec lhs = mul2(a, e, x1);
      Vec rhs = mul2(a, e, tensor::kron(one, d.S_B(x)));
      if (lhs != rhs) return "E(x⊗1) != E(1⊗S_B(x)) for x = " + describe(x, a.basis_names());
    }
  }
  for (const auto& y : d.C.basis()) {
    Vec y1 = tensor::kron(one, y);
    if (!in_bc(mul2(a, e, y1)) || !in_bc(mul2(a, y1, e))) {
      return "E(1⊗y) or (1⊗y)E leaves B⊗C for y = " + describe(y, a.basis_names());
    }
    if (d.SC) {
      Vec lhs = mul2(a, y1, e);
      Vec rhs = mul2(a, tensor::kron(d.S_C(y), one), e);
      if (lhs != rhs) return "(1⊗y)E != (S_C(y)⊗1)E for y = " + describe(y, a.basis_names());
    }
  }
  if (mul2(a, e, e) != e) return std::string("E is not idempotent");
  return std::nullopt;
}

GeneralizedInverses generalized_inverses(const WeakHopfData& d) {
  const Algebra& a = d.algebra();
  const std::size_t n = d.n;
  const LinearMap& S = d.spec.antipode;
  GeneralizedInverses g;
  // R1(a⊗b) = Σ a_(1) ⊗ S(a_(2)) b
  g.R1 = tensor::bilinear_map(n, [&](std::size_t i, std::size_t j) {
    Vec x = tensor::apply_second(S, d.spec.coproduct.column(i), n);
    return leg_mul(a, x, kNone, kNone, kNone, j);
  });
  // R2(a⊗b) = Σ a S(b_(1)) ⊗ b_(2)
  g.R2 = tensor::bilinear_map(n, [&](std::size_t i, std::size_t j) {
    Vec x = tensor::apply_first(S, d.spec.coproduct.column(j), n);
    return leg_mul(a, x, i, kNone, kNone, kNone);
  });
  if (d.antipode_inverse) {
    const LinearMap& Si = *d.antipode_inverse;
    // R3(a⊗b) = Σ a_(1) ⊗ b S^{-1}(a_(2))
    g.R3 = tensor::bilinear_map(n, [&](std::size_t i, std::size_t j) {
      Vec x = tensor::apply_second(Si, d.spec.coproduct.column(i), n);
      return leg_mul(a, x, kNone, kNone, j, kNone);
    });
    // R4(a⊗b) = Σ S^{-1}(b_(1)) a ⊗ b_(2)
    g.R4 = tensor::bilinear_map(n, [&](std::size_t i, std::size_t j) {
      Vec x = tensor::apply_first(Si, d.spec.coproduct.column(j), n);
      return leg_mul(a, x, kNone, i, kNone, kNone);
    });
  }
  return g;
}

namespace {

void check_coproduct(const WeakHopfData& d, Report& rep) {
  const Algebra& a = d.algebra();
  const std::size_t n = d.n;
  const auto& names = a.basis_names();

  rep.check("coproduct.homomorphism", "Δ(ab) = Δ(a)Δ(b)", {}, [&](Record& r) {
    for (std::size_t i = 0; i < n && r.passed(); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vec lhs = d.spec.delta(a.basis_product(i, j));
        Vec rhs = mul2(a, d.spec.coproduct.column(i), d.spec.coproduct.column(j));
        if (!r.expect(lhs == rhs, "Δ(ab) != Δ(a)Δ(b) at " + index_pair(a, i, j))) break;
      }
    }
  });

  rep.check("coproduct.coassociativity", "(Δ⊗ι)Δ = (ι⊗Δ)Δ", {}, [&](Record& r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& x = d.spec.coproduct.column(i);
      Vec lhs = tensor::apply_leg(d.spec.coproduct, x, 1, n);
      Vec rhs = tensor::apply_leg(d.spec.coproduct, x, n, 1);
      if (!r.expect(lhs == rhs, "coassociativity fails on " + names[i] + ": difference " +
                                    describe(lhs - rhs, names))) {
        break;
      }
    }
  });

  rep.check("coproduct.fullness", "legs of Δ(A)(1⊗A) and (A⊗1)Δ(A) span A", {}, [&](Record& r) {
    Subspace left(n);
    Subspace right(n);
    for (const auto& col : d.T.T1.columns()) {
      for (const auto& l : tensor::left_legs(col, n)) left.insert(l);
    }
    for (const auto& col : d.T.T2.columns()) {
      for (const auto& rl : tensor::right_legs(col, n)) right.insert(rl);
    }
    r.fact("left_leg_rank", std::to_string(left.rank()));
    r.fact("right_leg_rank", std::to_string(right.rank()));
    r.expect(left.rank() == n, "left legs of Δ(A)(1⊗A) span only " + std::to_string(left.rank()) + " dimensions");
    r.expect(right.rank() == n, "right legs of (A⊗1)Δ(A) span only " + std::to_string(right.rank()) + " dimensions");
  });
}

void check_counit(const WeakHopfData& d, Report& rep) {
  const Algebra& a = d.algebra();
  const std::size_t n = d.n;
  rep.check("counit", "(ε⊗ι)(Δ(a)(1⊗b)) = ab = (ι⊗ε)((a⊗1)Δ(b)), and the mirrored forms", {}, [&](Record& r) {
    // ε applied to one leg of a two-tensor.
    auto eps_first = [&](const Vec& x) {
      std::vector<Vec::Term> terms;
      for (const auto& [p, c] : x.terms()) {
        const Scalar* e = d.spec.counit.find(p / n);
        if (e != nullptr) terms.emplace_back(p % n, c * *e);
      }
      return Vec::from_terms(n, std::move(terms));
    };
    auto eps_second = [&](const Vec& x) {
      std::vector<Vec::Term> terms;
      for (const auto& [p, c] : x.terms()) {
        const Scalar* e = d.spec.counit.find(p % n);
        if (e != nullptr) terms.emplace_back(p / n, c * *e);
      }
      return Vec::from_terms(n, std::move(terms));
    };
    for (std::size_t i = 0; i < n && r.passed(); ++i) {
      for (std::size_t j = 0; j < n && r.passed(); ++j) {
        const Vec& ab = a.basis_product(i, j);
        const Vec& ba = a.basis_product(j, i);
        const std::string at = " at " + index_pair(a, i, j);
        r.expect(eps_first(d.T.T1.column(i * n + j)) == ab, "(ε⊗ι)(Δ(a)(1⊗b)) != ab" + at);
        r.expect(eps_second(d.T.T2.column(i * n + j)) == ab, "(ι⊗ε)((a⊗1)Δ(b)) != ab" + at);
        r.expect(eps_first(d.T.T3.column(i * n + j)) == ba, "(ε⊗ι)((1⊗b)Δ(a)) != ba" + at);
        r.expect(eps_second(d.T.T4.column(i * n + j)) == ba, "(ι⊗ε)(Δ(b)(a⊗1)) != ba" + at);
      }
    }
  });
}

void check_idempotent(const WeakHopfData& d, Report& rep) {
  const Algebra& a = d.algebra();
  const std::size_t n = d.n;
  const auto& names = a.basis_names();

  rep.check("idempotent", "E = Δ(1) is idempotent, EΔ(a) = Δ(a) = Δ(a)E, and E is the smallest such idempotent",
            {"coproduct.homomorphism"}, [&](Record& r) {
              r.fact("E", describe(d.E, names));
              r.expect(mul2(a, d.E, d.E) == d.E, "E² != E");
              for (std::size_t i = 0; i < n && r.passed(); ++i) {
                const Vec& x = d.spec.coproduct.column(i);
                r.expect(mul2(a, d.E, x) == x, "EΔ(a) != Δ(a) at " + names[i]);
                r.expect(mul2(a, x, d.E) == x, "Δ(a)E != Δ(a) at " + names[i]);
              }
              // Minimality against the idempotents produced along the way.
              std::vector<Vec> candidates{tensor::kron(a.one(), a.one()), d.E, d.F1, d.F2};
              for (const auto& e : candidates) {
                if (e.dim() != n * n || mul2(a, e, e) != e) continue;
                bool absorbs = true;
                for (std::size_t i = 0; i < n && absorbs; ++i) {
                  const Vec& x = d.spec.coproduct.column(i);
                  absorbs = mul2(a, e, x) == x && mul2(a, x, e) == x;
                }
                if (!absorbs) continue;
                r.expect(mul2(a, e, d.E) == d.E && mul2(a, d.E, e) == d.E,
                         "idempotent " + describe(e, names) + " absorbs Δ(A) but not E");
              }
            });

  if (d.spec.declared_idempotent) {
    rep.check("idempotent.declared", "declared canonical idempotent equals Δ(1)", {}, [&](Record& r) {
      const Vec& decl = *d.spec.declared_idempotent;
      r.expect(decl == d.E, "declared E - Δ(1) = " + describe(decl - d.E, names));
    });
  }

  rep.check("canonical-maps.ranges", "ranges of T1, T4 are E(A⊗A); ranges of T2, T3 are (A⊗A)E", {"idempotent"},
            [&](Record& r) {
              LinearMap left_e = tensor::bilinear_map(
                  n, [&](std::size_t i, std::size_t j) { return mul2(a, d.E, tensor::kron(a.basis(i), a.basis(j))); });
              LinearMap right_e = tensor::bilinear_map(
                  n, [&](std::size_t i, std::size_t j) { return mul2(a, tensor::kron(a.basis(i), a.basis(j)), d.E); });
              Subspace el = column_space(left_e);
              Subspace er = column_space(right_e);
              r.fact("rank_T1", std::to_string(rank(d.T.T1)));
              r.fact("rank_E_left", std::to_string(el.rank()));
              r.fact("rank_T2", std::to_string(rank(d.T.T2)));
              r.fact("rank_E_right", std::to_string(er.rank()));
              r.expect(column_space(d.T.T1) == el, "range(T1) != E(A⊗A)");
              r.expect(column_space(d.T.T2) == er, "range(T2) != (A⊗A)E");
              r.expect(column_space(d.T.T3) == er, "range(T3) != (A⊗A)E");
              r.expect(column_space(d.T.T4) == el, "range(T4) != E(A⊗A)");
            });

  rep.check("idempotent.comultiplicativity", "(Δ⊗ι)E = (E⊗1)(1⊗E) = (1⊗E)(E⊗1)",
            {"idempotent", "coproduct.coassociativity"}, [&](Record& r) {
              auto w = check_idempotent_comultiplicativity(a, d.spec.coproduct, d.E);
              if (w) r.fail(*w);
            });
}

void check_antipode_basics(const WeakHopfData& d, Report& rep) {
  const Algebra& a = d.algebra();
  const std::size_t n = d.n;
  const auto& names = a.basis_names();

  rep.check("antipode.bijective", "S is a linear bijection", {}, [&](Record& r) {
    r.expect(d.antipode_inverse.has_value(), "S is singular (rank " + std::to_string(rank(d.spec.antipode)) + ")");
  });
  rep.check("antipode.anti-homomorphism", "S(ab) = S(b)S(a)", {}, [&](Record& r) {
    for (std::size_t i = 0; i < n && r.passed(); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vec lhs = d.S(a.basis_product(i, j));
        Vec rhs = a.multiply(d.spec.antipode.column(j), d.spec.antipode.column(i));
        if (!r.expect(lhs == rhs, "S(ab) != S(b)S(a) at " + index_pair(a, i, j))) break;
      }
    }
  });
  rep.check("antipode.flips-coproduct", "Δ(S(a)) = ζ(S⊗S)Δ(a)", {}, [&](Record& r) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec lhs = d.spec.delta(d.spec.antipode.column(i));
      Vec ss = tensor::apply_second(d.spec.antipode,
                                    tensor::apply_first(d.spec.antipode, d.spec.coproduct.column(i), n), n);
      Vec rhs = tensor::flip(ss, n, n);
      if (!r.expect(lhs == rhs, "Δ(S(a)) - ζ(S⊗S)Δ(a) = " + describe(lhs - rhs, names) + " at " + names[i])) break;
    }
  });
}

void check_base(const WeakHopfData& d, Report& rep) {
  const Algebra& a = d.algebra();
  const std::size_t n = d.n;
  const auto& names = a.basis_names();
  std::vector<std::string> basics = kAntipodeBasics;

  rep.check("source-target.projections", "εs∘εs = εs and εt∘εt = εt", basics, [&](Record& r) {
    r.expect(d.eps_s.compose(d.eps_s) == d.eps_s, "εs is not idempotent");
    r.expect(d.eps_t.compose(d.eps_t) == d.eps_t, "εt is not idempotent");
  });

  std::vector<std::string> base_deps = basics;
  base_deps.insert(base_deps.end(), {"idempotent", "coproduct.coassociativity"});
  rep.check("base.algebras",
            "B = εs(A) and C = εt(A) are the leg spaces of E, equal M(B) and M(C), and commute",
            base_deps, [&](Record& r) {
              r.fact("dim_B", std::to_string(d.B.dim()));
              r.fact("dim_C", std::to_string(d.C.dim()));
              r.expect(column_space(d.eps_s) == d.B.space(), "εs(A) is not closed under the product");
              r.expect(column_space(d.eps_t) == d.C.space(), "εt(A) is not closed under the product");
              r.expect(Subspace::span(n, tensor::left_legs(d.E, n)) == d.B.space(), "left legs of E do not span B");
              r.expect(Subspace::span(n, tensor::right_legs(d.E, n)) == d.C.space(),
                       "right legs of E do not span C");
              r.expect(d.MB == d.B, "{x : Δ(x) = E(1⊗x)} != B");
              r.expect(d.MC == d.C, "{y : Δ(y) = (y⊗1)E} != C");
              const Vec& one = a.one();
              for (const auto& x : d.B.basis()) {
                r.expect(d.spec.delta(x) == mul2(a, tensor::kron(one, x), d.E),
                         "Δ(x) != (1⊗x)E for x = " + describe(x, names));
              }
              for (const auto& y : d.C.basis()) {
                r.expect(d.spec.delta(y) == mul2(a, d.E, tensor::kron(y, one)),
                         "Δ(y) != E(y⊗1) for y = " + describe(y, names));
              }
              for (const auto& x : d.B.basis()) {
                for (const auto& y : d.C.basis()) {
                  r.expect(a.multiply(x, y) == a.multiply(y, x),
                           "B and C do not commute: " + describe(x, names) + ", " + describe(y, names));
                }
              }
            });

  rep.check("base.antipodal-maps", "S_B: B -> C and S_C: C -> B are anti-isomorphisms given by S", {"base.algebras"},
            [&](Record& r) {
              if (!r.expect(d.SB && d.SC, d.antipodal_error)) return;
              r.expect(rank(*d.SB) == d.B.dim() && d.B.dim() == d.C.dim(), "S_B is not a bijection onto C");
              r.expect(rank(*d.SC) == d.C.dim(), "S_C is not a bijection onto B");
              for (const auto& x : d.B.basis()) {
                Vec sx = d.S_B(x);
                r.expect(d.C.contains(sx), "S_B(x) is not in C for x = " + describe(x, names));
                r.expect(sx == d.S(x), "S_B(x) != S(x) for x = " + describe(x, names));
                for (const auto& x2 : d.B.basis()) {
                  r.expect(d.S_B(a.multiply(x, x2)) == a.multiply(d.S_B(x2), sx), "S_B is not anti-multiplicative");
                }
              }
              for (const auto& y : d.C.basis()) {
                Vec sy = d.S_C(y);
                r.expect(d.B.contains(sy), "S_C(y) is not in B for y = " + describe(y, names));
                r.expect(sy == d.S(y), "S_C(y) != S(y) for y = " + describe(y, names));
                for (const auto& y2 : d.C.basis()) {
                  r.expect(d.S_C(a.multiply(y, y2)) == a.multiply(d.S_C(y2), sy), "S_C is not anti-multiplicative");
                }
              }
            });

  if (d.spec.declared_antipodal_b) {
    rep.check("base.antipodal-declared", "declared S_B agrees with the solved S_B on B", {"base.antipodal-maps"},
              [&](Record& r) {
                for (const auto& x : d.B.basis()) {
                  Vec decl = d.spec.declared_antipodal_b->apply(x);
                  r.expect(decl == d.S_B(x), "declared S_B(x) - S_B(x) = " + describe(decl - d.S_B(x), names) +
                                                 " for x = " + describe(x, names));
                }
              });
  }

  rep.check("separability", "E is a full separability idempotent in B⊗C with antipodal maps S_B, S_C",
            {"base.antipodal-maps"}, [&](Record& r) {
              auto w = check_separability(d, d.E);
              if (w) r.fail(*w);
            });
}

void check_f_and_kernels(const WeakHopfData& d, Report& rep) {
  const Algebra& a = d.algebra();
  const std::size_t n = d.n;
  const auto& names = a.basis_names();
  std::vector<std::string> deps = kAntipodeBasics;
  deps.push_back("idempotent");

  rep.check("f-multipliers", "F1..F4 satisfy their E13 characterizations", deps, [&](Record& r) {
    const Vec& one = a.one();
    Vec e13 = tensor::leg13(a, d.E);
    Vec e_1 = tensor::kron(d.E, one);
    Vec one_e = tensor::kron(one, d.E);
    r.fact("F1", describe(d.F1, names));
    r.expect(mul3(a, e13, tensor::kron(d.F1, one)) == mul3(a, e13, one_e), "E13(F1⊗1) != E13(1⊗E)");
    r.expect(mul3(a, tensor::kron(one, d.F2), e13) == mul3(a, e_1, e13), "(1⊗F2)E13 != (E⊗1)E13");
    r.expect(mul3(a, tensor::kron(d.F3, one), e13) == mul3(a, one_e, e13), "(F3⊗1)E13 != (1⊗E)E13");
    r.expect(mul3(a, e13, tensor::kron(one, d.F4)) == mul3(a, e13, e_1), "E13(1⊗F4) != E13(E⊗1)");
  });

  rep.check("antipode.generalized-inverses",
            "T1R1 = E·, R1T1 = (a⊗1)F1(1⊗b), T2R2 = ·E, R2T2 = (a⊗1)F2(1⊗b), and the T3/T4 forms", deps,
            [&](Record& r) {
              GeneralizedInverses g = generalized_inverses(d);
              LinearMap left_e = tensor::bilinear_map(
                  n, [&](std::size_t i, std::size_t j) { return mul2(a, d.E, tensor::kron(a.basis(i), a.basis(j))); });
              LinearMap right_e = tensor::bilinear_map(
                  n, [&](std::size_t i, std::size_t j) { return mul2(a, tensor::kron(a.basis(i), a.basis(j)), d.E); });
              auto cmp = [&](const LinearMap& x, const LinearMap& y, const std::string& what) {
                auto j = first_difference(x, y);
                r.expect(!j, what + " fails at " + (j ? index_pair(a, *j / n, *j % n) : std::string()));
              };
              cmp(d.T.T1.compose(g.R1), left_e, "T1R1 = E(a⊗b)");
              cmp(g.R1.compose(d.T.T1), sandwich_map(a, d.F1, 1), "R1T1 = (a⊗1)F1(1⊗b)");
              cmp(d.T.T2.compose(g.R2), right_e, "T2R2 = (a⊗b)E");
              cmp(g.R2.compose(d.T.T2), sandwich_map(a, d.F2, 1), "R2T2 = (a⊗1)F2(1⊗b)");
              cmp(d.T.T3.compose(g.R3), right_e, "T3R3 = (a⊗b)E");
              cmp(g.R3.compose(d.T.T3), sandwich_map(a, d.F3, 3), "R3T3 = (1⊗b)F3(a⊗1)");
              cmp(d.T.T4.compose(g.R4), left_e, "T4R4 = E(a⊗b)");
              cmp(g.R4.compose(d.T.T4), sandwich_map(a, d.F4, 3), "R4T4 = (1⊗b)F4(a⊗1)");
            });

  rep.check("canonical-maps.kernels",
            "Ker T1, Ker T2 = (A⊗1)(1-Fi)(1⊗A); Ker T3, Ker T4 = (1⊗A)(1-Fi)(A⊗1)", deps, [&](Record& r) {
              const LinearMap id = LinearMap::identity(n * n);
              const LinearMap* maps[4] = {&d.T.T1, &d.T.T2, &d.T.T3, &d.T.T4};
              const Vec* fs[4] = {&d.F1, &d.F2, &d.F3, &d.F4};
              for (int i = 0; i < 4; ++i) {
                LinearMap proj = sandwich_map(a, *fs[i], i < 2 ? 1 : 3);
                std::vector<Vec> gens;
                for (std::size_t k = 0; k < n * n; ++k) gens.push_back(id.column(k) - proj.column(k));
                Subspace expected = Subspace::span(n * n, gens);
                Subspace ker = kernel(*maps[i]);
                const std::string t = "T" + std::to_string(i + 1);
                r.fact("dim_ker_" + t, std::to_string(ker.rank()));
                r.expect(ker == expected, "Ker " + t + " (dim " + std::to_string(ker.rank()) +
                                              ") != F-multiplier span (dim " + std::to_string(expected.rank()) + ")");
              }
            });
}

}  // namespace

Report verify_weak_hopf(const WeakHopfData& d) {
  Report rep(d.spec.name);
  check_coproduct(d, rep);
  check_counit(d, rep);
  check_idempotent(d, rep);
  check_antipode_basics(d, rep);
  check_base(d, rep);
  check_f_and_kernels(d, rep);
  return rep;
}

}  // namespace wha
