#include "wha/algebra.hpp"

#include <sstream>

namespace wha {

// ---------------------------------------------------------------- constants

void StructureConstants::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionError("structure constant index out of range");
  products_[i * dim_ + j].axpy(c, Vec::unit(dim_, k));
}

void StructureConstants::set_product(std::size_t i, std::size_t j, Vec v) {
  if (v.dim() != dim_) throw DimensionError("structure constant vector has wrong dimension");
  products_.at(i * dim_ + j) = std::move(v);
}

// ---------------------------------------------------------------- Algebra

namespace {

std::string describe(const Vec& v) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& [i, c] : v.terms()) {
    if (!first) os << ", ";
    os << i << ": " << c;
    first = false;
  }
  os << ")";
  return os.str();
}

// Kernel of x -> (x e_0, ..., x e_{n-1}) (left == true) or (e_0 x, ...).
std::vector<Vec> annihilator(const StructureConstants& c, bool left) {
  const std::size_t n = c.dim();
  LinearMap m(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec::Term> terms;
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& p = left ? c.product(i, j) : c.product(j, i);
      for (const auto& [k, s] : p.terms()) terms.emplace_back(j * n + k, s);
    }
    m.set_column(i, Vec::from_terms(n * n, std::move(terms)));
  }
  return kernel_basis(m);
}

}  // namespace

Algebra Algebra::load(StructureConstants c, std::vector<std::string> names) {
  const std::size_t n = c.dim();
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }
  if (names.size() != n) throw StructureError("basis name count does not match dimension");

  Algebra alg(std::move(c), std::move(names));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        Vec lhs = alg.multiply(alg.basis_product(i, j), alg.basis(l));
        Vec rhs = alg.multiply(alg.basis(i), alg.basis_product(j, l));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "product is not associative: (e" << i << " e" << j << ") e" << l
             << " != e" << i << " (e" << j << " e" << l << ")";
          throw StructureError(os.str());
        }
      }
    }
  }
  for (bool left : {true, false}) {
    auto ker = annihilator(alg.c_, left);
    if (!ker.empty()) {
      throw StructureError(std::string("product is degenerate: ") + (left ? "x A = 0" : "A x = 0") +
                           " for x = " + describe(ker.front()));
    }
  }

  // Unit: u e_i = e_i = e_i u for all i.
  LinearMap sys(2 * n * n, n);
  std::vector<Vec::Term> rhs;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<Vec::Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [k, s] : alg.basis_product(u, i).terms()) terms.emplace_back(i * n + k, s);
      for (const auto& [k, s] : alg.basis_product(i, u).terms()) terms.emplace_back(n * n + i * n + k, s);
    }
    sys.set_column(u, Vec::from_terms(2 * n * n, std::move(terms)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    rhs.emplace_back(i * n + i, Scalar(1));
    rhs.emplace_back(n * n + i * n + i, Scalar(1));
  }
  alg.unit_ = solve_linear(sys, Vec::from_terms(2 * n * n, std::move(rhs)));
  return alg;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  if (a.dim() != dim() || b.dim() != dim()) throw DimensionError("algebra element has wrong dimension");
  std::vector<Vec::Term> terms;
  for (const auto& [i, x] : a.terms()) {
    for (const auto& [j, y] : b.terms()) {
      const Vec& p = c_.product(i, j);
      if (p.is_zero()) continue;
      Scalar xy = x * y;
      for (const auto& [k, s] : p.terms()) terms.emplace_back(k, xy * s);
    }
  }
  return Vec::from_terms(dim(), std::move(terms));
}

const Vec& Algebra::one() const {
  if (!unit_) throw StructureError("algebra has no unit");
  return *unit_;
}

std::optional<Vec> Algebra::inverse(const Vec& a) const {
  if (!unit_) return std::nullopt;
  auto x = solve_linear(left_multiplication(a), *unit_);
  if (!x) return std::nullopt;
  if (multiply(*x, a) != *unit_) return std::nullopt;
  return x;
}

LinearMap Algebra::left_multiplication(const Vec& m) const {
  LinearMap out(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) out.set_column(j, multiply(m, basis(j)));
  return out;
}

LinearMap Algebra::right_multiplication(const Vec& m) const {
  LinearMap out(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) out.set_column(j, multiply(basis(j), m));
  return out;
}

bool Algebra::is_central(const Vec& a) const {
  for (std::size_t j = 0; j < dim(); ++j) {
    if (multiply(a, basis(j)) != multiply(basis(j), a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- multipliers

bool is_multiplier(const Algebra& alg, const MultiplierPair& m) {
  const std::size_t n = alg.dim();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Vec ea = alg.basis(a);
      Vec eb = alg.basis(b);
      if (alg.multiply(m.right.column(a), eb) != alg.multiply(ea, m.left.column(b))) return false;
      const Vec& ab = alg.basis_product(a, b);
      if (m.left.apply(ab) != alg.multiply(m.left.column(a), eb)) return false;
      if (m.right.apply(ab) != alg.multiply(ea, m.right.column(b))) return false;
    }
  }
  return true;
}

MultiplierPair multiplier_of(const Algebra& a, const Vec& element) {
  return {a.left_multiplication(element), a.right_multiplication(element)};
}

MultiplierAlgebra multiplier_algebra(const Algebra& alg) {
  const std::size_t n = alg.dim();
  const std::size_t nn = n * n;
  // Unknown L_{pq} (coefficient of e_p in L(e_q)) sits at q*n+p, R_{pq} at nn+q*n+p.
  auto l_idx = [&](std::size_t p, std::size_t q) { return q * n + p; };
  auto r_idx = [&](std::size_t p, std::size_t q) { return nn + q * n + p; };

  std::vector<std::vector<Vec::Term>> rows;
  auto new_block = [&] {
    rows.resize(rows.size() + n);
    return rows.size() - n;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // R(e_a) e_b - e_a L(e_b) = 0
      std::size_t base = new_block();
      for (std::size_t p = 0; p < n; ++p) {
        for (const auto& [k, s] : alg.basis_product(p, b).terms()) rows[base + k].emplace_back(r_idx(p, a), s);
        for (const auto& [k, s] : alg.basis_product(a, p).terms()) rows[base + k].emplace_back(l_idx(p, b), -s);
      }
      // L(e_a e_b) - L(e_a) e_b = 0
      base = new_block();
      for (const auto& [q, c] : alg.basis_product(a, b).terms()) {
        for (std::size_t p = 0; p < n; ++p) rows[base + p].emplace_back(l_idx(p, q), c);
      }
      for (std::size_t p = 0; p < n; ++p) {
        for (const auto& [k, s] : alg.basis_product(p, b).terms()) rows[base + k].emplace_back(l_idx(p, a), -s);
      }
      // R(e_a e_b) - e_a R(e_b) = 0
      base = new_block();
      for (const auto& [q, c] : alg.basis_product(a, b).terms()) {
        for (std::size_t p = 0; p < n; ++p) rows[base + p].emplace_back(r_idx(p, q), c);
      }
      for (std::size_t p = 0; p < n; ++p) {
        for (const auto& [k, s] : alg.basis_product(a, p).terms()) rows[base + k].emplace_back(r_idx(p, b), -s);
      }
    }
  }
  Subspace rowspace(2 * nn);
  for (auto& r : rows) rowspace.insert(Vec::from_terms(2 * nn, std::move(r)));

  std::vector<Vec> solutions;
  for (std::size_t f : rowspace.free_columns()) {
    std::vector<Vec::Term> terms;
    terms.emplace_back(f, Scalar(1));
    for (const auto& [p, row] : rowspace.rows()) {
      const Scalar* c = row.find(f);
      if (c != nullptr) terms.emplace_back(p, -*c);
    }
    solutions.push_back(Vec::from_terms(2 * nn, std::move(terms)));
  }

  auto to_pair = [&](const Vec& sol) {
    MultiplierPair m{LinearMap(n, n), LinearMap(n, n)};
    std::vector<std::vector<Vec::Term>> lc(n);
    std::vector<std::vector<Vec::Term>> rc(n);
    for (const auto& [idx, c] : sol.terms()) {
      if (idx < nn) {
        lc[idx / n].emplace_back(idx % n, c);
      } else {
        rc[(idx - nn) / n].emplace_back((idx - nn) % n, c);
      }
    }
    for (std::size_t q = 0; q < n; ++q) {
      m.left.set_column(q, Vec::from_terms(n, std::move(lc[q])));
      m.right.set_column(q, Vec::from_terms(n, std::move(rc[q])));
    }
    return m;
  };
  auto flatten = [&](const MultiplierPair& m) {
    std::vector<Vec::Term> terms;
    for (std::size_t q = 0; q < n; ++q) {
      for (const auto& [p, c] : m.left.column(q).terms()) terms.emplace_back(l_idx(p, q), c);
      for (const auto& [p, c] : m.right.column(q).terms()) terms.emplace_back(r_idx(p, q), c);
    }
    return Vec::from_terms(2 * nn, std::move(terms));
  };

  const std::size_t dim_m = solutions.size();
  LinearMap basis_map(2 * nn, solutions);
  auto coords = [&](const MultiplierPair& m) {
    auto x = solve_linear(basis_map, flatten(m));
    if (!x) throw StructureError("multiplier product left the solution space");
    return *x;
  };

  std::vector<MultiplierPair> pairs;
  pairs.reserve(dim_m);
  for (const auto& s : solutions) pairs.push_back(to_pair(s));

  StructureConstants mc(dim_m);
  for (std::size_t i = 0; i < dim_m; ++i) {
    for (std::size_t j = 0; j < dim_m; ++j) {
      MultiplierPair prod{pairs[i].left.compose(pairs[j].left), pairs[j].right.compose(pairs[i].right)};
      mc.set_product(i, j, coords(prod));
    }
  }
  LinearMap embedding(dim_m, n);
  for (std::size_t a = 0; a < n; ++a) embedding.set_column(a, coords(multiplier_of(alg, alg.basis(a))));

  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim_m; ++i) names.push_back("m" + std::to_string(i));
  return MultiplierAlgebra{Algebra::load(std::move(mc), std::move(names)), std::move(pairs), std::move(embedding)};
}

// ---------------------------------------------------------------- constructions

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  StructureConstants c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c.set_product(i, j, a.basis_product(j, i));
  }
  return Algebra::load(std::move(c), a.basis_names());
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na * nb;
  StructureConstants c(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t k = 0; k < na; ++k) {
        const Vec& pa = a.basis_product(i, k);
        if (pa.is_zero()) continue;
        for (std::size_t l = 0; l < nb; ++l) {
          const Vec& pb = b.basis_product(j, l);
          if (pb.is_zero()) continue;
          std::vector<Vec::Term> terms;
          for (const auto& [p, x] : pa.terms()) {
            for (const auto& [q, y] : pb.terms()) terms.emplace_back(p * nb + q, x * y);
          }
          c.set_product(i * nb + j, k * nb + l, Vec::from_terms(n, std::move(terms)));
        }
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) names.push_back(a.basis_names()[i] + "⊗" + b.basis_names()[j]);
  }
  return Algebra::load(std::move(c), std::move(names));
}

LinearMap flip_map(std::size_t dim_a, std::size_t dim_b) {
  const std::size_t n = dim_a * dim_b;
  LinearMap out(n, n);
  for (std::size_t i = 0; i < dim_a; ++i) {
    for (std::size_t j = 0; j < dim_b; ++j) out.set_column(i * dim_b + j, Vec::unit(n, j * dim_a + i));
  }
  return out;
}

namespace {

Vec kron(const Vec& x, const Vec& y) {
  std::vector<Vec::Term> terms;
  terms.reserve(x.nnz() * y.nnz());
  for (const auto& [i, a] : x.terms()) {
    for (const auto& [j, b] : y.terms()) terms.emplace_back(i * y.dim() + j, a * b);
  }
  return Vec::from_terms(x.dim() * y.dim(), std::move(terms));
}

MultiplierPair leg_multiplier(const Algebra& a, const Algebra& b, const Vec& x, bool first) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  MultiplierPair m{LinearMap(na * nb, na * nb), LinearMap(na * nb, na * nb)};
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      Vec ei = a.basis(i);
      Vec ej = b.basis(j);
      if (first) {
        m.left.set_column(i * nb + j, kron(a.multiply(x, ei), ej));
        m.right.set_column(i * nb + j, kron(a.multiply(ei, x), ej));
      } else {
        m.left.set_column(i * nb + j, kron(ei, b.multiply(x, ej)));
        m.right.set_column(i * nb + j, kron(ei, b.multiply(ej, x)));
      }
    }
  }
  return m;
}

}  // namespace

MultiplierPair left_leg_multiplier(const Algebra& a, const Algebra& b, const Vec& x) {
  return leg_multiplier(a, b, x, true);
}

MultiplierPair right_leg_multiplier(const Algebra& a, const Algebra& b, const Vec& y) {
  return leg_multiplier(a, b, y, false);
}

// ---------------------------------------------------------------- subalgebras

SubalgebraSpan::SubalgebraSpan(std::size_t parent_dim, const std::vector<Vec>& spanning)
    : space_(Subspace::span(parent_dim, spanning)), basis_(space_.basis()), pivots_(space_.pivots()) {}

Vec SubalgebraSpan::coordinates(const Vec& x) const {
  std::vector<Vec::Term> terms;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Scalar* c = x.find(pivots_[k]);
    if (c != nullptr) terms.emplace_back(k, *c);
  }
  return Vec::from_terms(basis_.size(), std::move(terms));
}

Vec SubalgebraSpan::from_coordinates(const Vec& coords) const {
  Vec out(parent_dim());
  for (const auto& [k, c] : coords.terms()) out.axpy(c, basis_[k]);
  return out;
}

SubalgebraSpan subalgebra_closure(const Algebra& a, const std::vector<Vec>& vectors) {
  Subspace s = Subspace::span(a.dim(), vectors);
  bool grew = true;
  while (grew) {
    grew = false;
    auto basis = s.basis();
    for (const auto& x : basis) {
      for (const auto& y : basis) grew = s.insert(a.multiply(x, y)) || grew;
    }
  }
  return SubalgebraSpan(a.dim(), s.basis());
}

bool is_closed_under_product(const Algebra& a, const SubalgebraSpan& s) {
  for (const auto& x : s.basis()) {
    for (const auto& y : s.basis()) {
      if (!s.contains(a.multiply(x, y))) return false;
    }
  }
  return true;
}

}  // namespace wha
