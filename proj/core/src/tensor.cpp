#include "wha/tensor.hpp"

namespace wha::tensor {

Vec kron(const Vec& x, const Vec& y) {
  std::vector<Vec::Term> terms;
  terms.reserve(x.nnz() * y.nnz());
  for (const auto& [i, a] : x.terms()) {
    for (const auto& [j, b] : y.terms()) terms.emplace_back(i * y.dim() + j, a * b);
  }
  // Already sorted and zero-free.
  return Vec::from_terms(x.dim() * y.dim(), std::move(terms));
}

Vec kron(const Vec& x, const Vec& y, const Vec& z) { return kron(kron(x, y), z); }

namespace {

std::size_t ipow(std::size_t n, unsigned k) {
  std::size_t r = 1;
  while (k-- > 0) r *= n;
  return r;
}

}  // namespace

Vec multiply(const Algebra& a, unsigned legs, const Vec& x, const Vec& y) {
  const std::size_t n = a.dim();
  const std::size_t total = ipow(n, legs);
  if (x.dim() != total || y.dim() != total) throw DimensionError("tensor operand has wrong dimension");
  if (legs == 1) return a.multiply(x, y);

  std::vector<std::size_t> di(legs);
  std::vector<std::size_t> dj(legs);
  std::vector<Vec::Term> terms;
  for (const auto& [p, cx] : x.terms()) {
    std::size_t t = p;
    for (unsigned l = legs; l-- > 0;) {
      di[l] = t % n;
      t /= n;
    }
    for (const auto& [q, cy] : y.terms()) {
      t = q;
      for (unsigned l = legs; l-- > 0;) {
        dj[l] = t % n;
        t /= n;
      }
      // Leg-wise products, expanded as a Kronecker product of sparse vectors.
      std::vector<Vec::Term> acc{{0, cx * cy}};
      bool zero = false;
      for (unsigned l = 0; l < legs && !zero; ++l) {
        const Vec& pr = a.basis_product(di[l], dj[l]);
        if (pr.is_zero()) {
          zero = true;
          break;
        }
        std::vector<Vec::Term> next;
        next.reserve(acc.size() * pr.nnz());
        for (const auto& [idx, c] : acc) {
          for (const auto& [k, s] : pr.terms()) next.emplace_back(idx * n + k, c * s);
        }
        acc = std::move(next);
      }
      if (zero) continue;
      for (auto& term : acc) terms.push_back(std::move(term));
    }
  }
  return Vec::from_terms(total, std::move(terms));
}

Vec multiply(const Algebra& a, unsigned legs, const Vec& x, const Vec& y, const Vec& z) {
  return multiply(a, legs, multiply(a, legs, x, y), z);
}

Vec apply_leg(const LinearMap& f, const Vec& x, std::size_t left, std::size_t right) {
  const std::size_t mid = f.cols();
  const std::size_t out_mid = f.rows();
  if (x.dim() != left * mid * right) throw DimensionError("leg map applied to wrong dimension");
  std::vector<Vec::Term> terms;
  for (const auto& [p, c] : x.terms()) {
    const std::size_t r = p % right;
    const std::size_t m = (p / right) % mid;
    const std::size_t l = p / (right * mid);
    for (const auto& [k, s] : f.column(m).terms()) terms.emplace_back((l * out_mid + k) * right + r, c * s);
  }
  return Vec::from_terms(left * out_mid * right, std::move(terms));
}

Vec flip(const Vec& x, std::size_t dim_a, std::size_t dim_b) {
  if (x.dim() != dim_a * dim_b) throw DimensionError("flip applied to wrong dimension");
  std::vector<Vec::Term> terms;
  terms.reserve(x.nnz());
  for (const auto& [p, c] : x.terms()) terms.emplace_back((p % dim_b) * dim_a + p / dim_b, c);
  return Vec::from_terms(x.dim(), std::move(terms));
}

Vec contract(const Algebra& a, const Vec& x) {
  const std::size_t n = a.dim();
  if (x.dim() != n * n) throw DimensionError("contract applied to wrong dimension");
  std::vector<Vec::Term> terms;
  for (const auto& [p, c] : x.terms()) {
    for (const auto& [k, s] : a.basis_product(p / n, p % n).terms()) terms.emplace_back(k, c * s);
  }
  return Vec::from_terms(n, std::move(terms));
}

Vec leg13(const Algebra& a, const Vec& x) {
  const std::size_t n = a.dim();
  if (x.dim() != n * n) throw DimensionError("leg13 applied to wrong dimension");
  const Vec& one = a.one();
  std::vector<Vec::Term> terms;
  for (const auto& [p, c] : x.terms()) {
    const std::size_t i = p / n;
    const std::size_t j = p % n;
    for (const auto& [k, s] : one.terms()) terms.emplace_back((i * n + k) * n + j, c * s);
  }
  return Vec::from_terms(n * n * n, std::move(terms));
}

std::vector<Vec> left_legs(const Vec& x, std::size_t n) {
  std::vector<std::vector<Vec::Term>> cols(n);
  for (const auto& [p, c] : x.terms()) cols[p % n].emplace_back(p / n, c);
  std::vector<Vec> out;
  for (auto& col : cols) out.push_back(Vec::from_terms(n, std::move(col)));
  return out;
}

std::vector<Vec> right_legs(const Vec& x, std::size_t n) {
  std::vector<std::vector<Vec::Term>> rows(n);
  for (const auto& [p, c] : x.terms()) rows[p / n].emplace_back(p % n, c);
  std::vector<Vec> out;
  for (auto& row : rows) out.push_back(Vec::from_terms(n, std::move(row)));
  return out;
}

}  // namespace wha::tensor
