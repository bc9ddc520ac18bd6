#include "wha/linalg.hpp"

#include <algorithm>

namespace wha {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace

// ---------------------------------------------------------------- Vec

Vec Vec::unit(std::size_t dim, std::size_t index, Scalar coeff) {
  require(index < dim, "unit vector index out of range");
  Vec v(dim);
  if (!coeff.is_zero()) v.terms_.emplace_back(index, std::move(coeff));
  return v;
}

Vec Vec::from_dense(std::span<const Scalar> values) {
  Vec v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_zero()) v.terms_.emplace_back(i, values[i]);
  }
  return v;
}

Vec Vec::from_terms(std::size_t dim, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Vec v(dim);
  v.terms_.reserve(terms.size());
  for (auto& t : terms) {
    require(t.first < dim, "vector term index out of range");
    if (!v.terms_.empty() && v.terms_.back().first == t.first) {
      v.terms_.back().second += t.second;
      if (v.terms_.back().second.is_zero()) v.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

const Scalar* Vec::find(std::size_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.first < i; });
  if (it == terms_.end() || it->first != index) return nullptr;
  return &it->second;
}

Scalar Vec::operator[](std::size_t index) const {
  const Scalar* s = find(index);
  return s != nullptr ? *s : Scalar();
}

std::vector<Scalar> Vec::dense() const {
  std::vector<Scalar> out(dim_);
  for (const auto& [i, c] : terms_) out[i] = c;
  return out;
}

Vec& Vec::axpy(const Scalar& c, const Vec& x) {
  require(dim_ == x.dim_, "vector dimension mismatch");
  if (c.is_zero() || x.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + x.terms_.size());
  auto a = terms_.begin();
  auto b = x.terms_.begin();
  while (a != terms_.end() || b != x.terms_.end()) {
    if (b == x.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      Scalar s = c * b->second;
      merged.emplace_back(b->first, std::move(s));
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Vec& Vec::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require(rows[i].size() == c, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].dim() == rows, "column dimension mismatch");
    for (const auto& [i, c] : cols[j].terms()) m(i, j) = c;
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  std::vector<Vec::Term> terms;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, j).is_zero()) terms.emplace_back(i, (*this)(i, j));
  }
  return Vec::from_terms(rows_, std::move(terms));
}

Vec Matrix::row(std::size_t i) const {
  return Vec::from_dense(std::span<const Scalar>(data_.data() + i * cols_, cols_));
}

Vec Matrix::apply(const Vec& x) const {
  require(x.dim() == cols_, "matrix-vector dimension mismatch");
  std::vector<Scalar> out(rows_);
  for (const auto& [j, c] : x.terms()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& m = (*this)(i, j);
      if (!m.is_zero()) out[i] += m * c;
    }
  }
  return Vec::from_dense(out);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "matrix product dimension mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols, Vec(rows)) {}

LinearMap::LinearMap(std::size_t rows, std::vector<Vec> columns)
    : rows_(rows), columns_(std::move(columns)) {
  for (const auto& c : columns_) require(c.dim() == rows_, "linear map column dimension mismatch");
}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.columns_[j] = Vec::unit(n, j);
  return m;
}

LinearMap LinearMap::from_matrix(const Matrix& m) {
  LinearMap out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out.columns_[j] = m.column(j);
  return out;
}

Matrix LinearMap::to_matrix() const { return Matrix::from_columns(rows_, columns_); }

void LinearMap::set_column(std::size_t j, Vec v) {
  require(v.dim() == rows_, "linear map column dimension mismatch");
  columns_.at(j) = std::move(v);
}

Vec LinearMap::apply(const Vec& x) const {
  require(x.dim() == cols(), "linear map argument dimension mismatch");
  std::vector<Vec::Term> terms;
  for (const auto& [j, c] : x.terms()) {
    for (const auto& [i, m] : columns_[j].terms()) terms.emplace_back(i, m * c);
  }
  return Vec::from_terms(rows_, std::move(terms));
}

std::vector<Vec> LinearMap::row_vectors() const {
  std::vector<std::vector<Vec::Term>> rows(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, c] : columns_[j].terms()) rows[i].emplace_back(j, c);
  }
  std::vector<Vec> out;
  out.reserve(rows_);
  for (auto& r : rows) out.push_back(Vec::from_terms(cols(), std::move(r)));
  return out;
}

LinearMap LinearMap::compose(const LinearMap& other) const {
  require(cols() == other.rows(), "composition dimension mismatch");
  LinearMap out(rows_, other.cols());
  for (std::size_t j = 0; j < other.cols(); ++j) out.columns_[j] = apply(other.columns_[j]);
  return out;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t dim, std::span<const Vec> vectors) {
  Subspace s(dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  require(v.dim() == dim_, "subspace dimension mismatch");
  std::vector<Vec::Term> terms;
  bool touched = false;
  for (const auto& [i, c] : v.terms()) {
    auto it = rows_.find(i);
    if (it == rows_.end()) {
      terms.emplace_back(i, c);
      continue;
    }
    touched = true;
    for (const auto& [k, r] : it->second.terms()) {
      if (k == i) continue;
      terms.emplace_back(k, -(c * r));
    }
  }
  if (!touched) return v;
  return Vec::from_terms(dim_, std::move(terms));
}

bool Subspace::insert(const Vec& v) {
  Vec r = reduce(v);
  if (r.is_zero()) return false;
  std::size_t pivot = r.terms().front().first;
  Scalar lead = r.terms().front().second;
  if (!lead.is_one()) r *= lead.inverse();
  for (auto& [p, row] : rows_) {
    const Scalar* c = row.find(pivot);
    if (c != nullptr) {
      Scalar coeff = -*c;
      row.axpy(coeff, r);
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool Subspace::contains_all(std::span<const Vec> vs) const {
  return std::all_of(vs.begin(), vs.end(), [&](const Vec& v) { return contains(v); });
}

bool Subspace::contains(const Subspace& other) const {
  require(other.dim_ == dim_, "subspace dimension mismatch");
  for (const auto& [p, row] : other.rows_) {
    if (!contains(row)) return false;
  }
  return true;
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  out.reserve(dim_ - rows_.size());
  for (std::size_t j = 0; j < dim_; ++j) {
    if (rows_.find(j) == rows_.end()) out.push_back(j);
  }
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.dim_ == b.dim_ && a.rows_ == b.rows_;
}

// ---------------------------------------------------------------- kernels

Subspace column_space(const LinearMap& m) { return Subspace::span(m.rows(), m.columns()); }

std::size_t rank(const LinearMap& m) { return column_space(m).rank(); }

std::size_t rank(const Matrix& m) { return rank(LinearMap::from_matrix(m)); }

std::vector<Vec> kernel_basis(const LinearMap& m) {
  auto rows = m.row_vectors();
  Subspace rowspace = Subspace::span(m.cols(), rows);
  std::vector<Vec> out;
  for (std::size_t f : rowspace.free_columns()) {
    std::vector<Vec::Term> terms;
    terms.emplace_back(f, Scalar(1));
    for (const auto& [p, row] : rowspace.rows()) {
      const Scalar* c = row.find(f);
      if (c != nullptr) terms.emplace_back(p, -*c);
    }
    out.push_back(Vec::from_terms(m.cols(), std::move(terms)));
  }
  return out;
}

std::vector<Vec> kernel_basis(const Matrix& m) { return kernel_basis(LinearMap::from_matrix(m)); }

Subspace kernel(const LinearMap& m) {
  auto basis = kernel_basis(m);
  return Subspace::span(m.cols(), basis);
}

std::optional<Vec> solve_linear(const LinearMap& m, const Vec& b) {
  require(b.dim() == m.rows(), "right-hand side dimension mismatch");
  const std::size_t n = m.cols();
  auto rows = m.row_vectors();
  Subspace aug(n + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Vec::Term> terms(rows[i].terms().begin(), rows[i].terms().end());
    const Scalar* bi = b.find(i);
    if (bi != nullptr) terms.emplace_back(n, *bi);
    aug.insert(Vec::from_terms(n + 1, std::move(terms)));
  }
  if (aug.rows().count(n) != 0) return std::nullopt;
  std::vector<Vec::Term> x;
  for (const auto& [p, row] : aug.rows()) {
    const Scalar* c = row.find(n);
    if (c != nullptr) x.emplace_back(p, *c);
  }
  return Vec::from_terms(n, std::move(x));
}

std::optional<Vec> solve_linear(const Matrix& m, const Vec& b) {
  return solve_linear(LinearMap::from_matrix(m), b);
}

std::optional<Matrix> invert(const Matrix& m) {
  auto inv = invert(LinearMap::from_matrix(m));
  if (!inv) return std::nullopt;
  return inv->to_matrix();
}

std::optional<LinearMap> invert(const LinearMap& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  auto rows = m.row_vectors();
  Subspace aug(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec::Term> terms(rows[i].terms().begin(), rows[i].terms().end());
    terms.emplace_back(n + i, Scalar(1));
    aug.insert(Vec::from_terms(2 * n, std::move(terms)));
  }
  if (aug.rank() != n || aug.rows().rbegin()->first >= n) return std::nullopt;
  // Row with pivot p carries row p of the inverse in its right half.
  std::vector<std::vector<Vec::Term>> cols(n);
  for (const auto& [p, row] : aug.rows()) {
    for (const auto& [k, c] : row.terms()) {
      if (k >= n) cols[k - n].emplace_back(p, c);
    }
  }
  LinearMap out(n, n);
  for (std::size_t j = 0; j < n; ++j) out.set_column(j, Vec::from_terms(n, std::move(cols[j])));
  return out;
}

}  // namespace wha
