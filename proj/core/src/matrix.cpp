#include "leiblab/matrix.hpp"

namespace leiblab {

Matrix::Matrix(FieldDescriptor f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(FieldDescriptor f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(FieldDescriptor f, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].field() == f)) throw FieldMismatch("matrix entry field mismatch");
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

Matrix Matrix::pow(std::size_t k) const {
  if (!is_square()) throw std::invalid_argument("pow of non-square matrix");
  Matrix acc = identity(field_, rows_);
  Matrix b = *this;
  while (k > 0) {
    if (k & 1) acc = acc * b;
    b = b * b;
    k >>= 1;
  }
  return acc;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  Vec r = zero_vec(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) r[i] += at(i, j) * v[j];
  }
  return r;
}

Vec Matrix::row(std::size_t r) const {
  Vec v;
  v.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<Vec> Matrix::col_list() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

Scalar Matrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m = *this;
  std::size_t n = rows_;
  Scalar det = Scalar::one(field_);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m.at(piv, c).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(field_);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Scalar inv = m.at(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Scalar factor = m.at(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m.at(r, j) -= factor * m.at(c, j);
    }
  }
  return det;
}

std::vector<std::size_t> rref_rows(std::vector<Vec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Scalar inv = rows[rank][c].inverse();
    for (std::size_t j = c; j < ncols; ++j) rows[rank][j] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      Scalar factor = rows[r][c];
      for (std::size_t j = c; j < ncols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

std::vector<Vec> Matrix::kernel() const {
  std::vector<Vec> rows = row_list();
  std::vector<std::size_t> pivots = rref_rows(rows);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(field_, cols_);
    v[c] = Scalar::one(field_);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Polynomial char_poly(const Matrix& t) {
  if (!t.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  FieldDescriptor f = t.field();
  std::size_t n = t.rows();
  if (n == 0) return Polynomial::one(f);

  // Samuelson-Berkowitz over leading principal submatrices.
  // c holds coefficients from lambda^k down to the constant term.
  Vec c{Scalar::one(f), -t.at(0, 0)};
  for (std::size_t i = 1; i < n; ++i) {
    // toeplitz column: 1, -a, -(R S), -(R M S), ..., M the i x i leading block
    Vec tcol;
    tcol.push_back(Scalar::one(f));
    tcol.push_back(-t.at(i, i));
    Vec s;
    for (std::size_t r = 0; r < i; ++r) s.push_back(t.at(r, i));
    for (std::size_t j = 0; j + 1 <= i; ++j) {
      Scalar dot = Scalar::zero(f);
      for (std::size_t k = 0; k < i; ++k) dot += t.at(i, k) * s[k];
      tcol.push_back(-dot);
      if (j + 2 <= i) {
        Vec ns = zero_vec(f, i);
        for (std::size_t r = 0; r < i; ++r)
          for (std::size_t k = 0; k < i; ++k) ns[r] += t.at(r, k) * s[k];
        s = std::move(ns);
      }
    }
    Vec next = zero_vec(f, i + 2);
    for (std::size_t p = 0; p < i + 2; ++p)
      for (std::size_t q = 0; q < c.size() && q <= p; ++q)
        if (p - q < tcol.size()) next[p] += tcol[p - q] * c[q];
    c = std::move(next);
  }

  Vec coeffs(c.rbegin(), c.rend());  // constant term first
  return Polynomial(f, std::move(coeffs));
}

Matrix eval_poly_at(const Polynomial& p, const Matrix& t) {
  if (!t.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
  std::size_t n = t.rows();
  Matrix acc(t.field(), n, n);
  const Vec& cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    acc = acc * t;
    for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += cs[i];
  }
  return acc;
}

bool is_nilpotent_operator(const Matrix& t) {
  if (!t.is_square()) throw std::invalid_argument("nilpotency of non-square matrix");
  return t.pow(t.rows()).is_zero();
}

namespace {

// Solve [cols] x = target exactly; cols are independent length-n vectors.
std::optional<Vec> solve_in_span(const std::vector<Vec>& cols, const Vec& target, FieldDescriptor f) {
  std::size_t n = target.size(), m = cols.size();
  std::vector<Vec> aug;
  for (std::size_t r = 0; r < n; ++r) {
    Vec row = zero_vec(f, m + 1);
    for (std::size_t c = 0; c < m; ++c) row[c] = cols[c][r];
    row[m] = target[r];
    aug.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots = rref_rows(aug);
  for (std::size_t c : pivots)
    if (c == m) return std::nullopt;  // inconsistent
  Vec x = zero_vec(f, m);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][m];
  return x;
}

}  // namespace

std::optional<KrylovResult> companion_basis(const Matrix& t, const Vec& seed, bool require_cyclic) {
  if (!t.is_square()) throw std::invalid_argument("companion_basis: non-square matrix");
  if (seed.size() != t.cols()) throw std::invalid_argument("companion_basis: seed length mismatch");
  if (is_zero_vec(seed)) throw std::invalid_argument("companion_basis: zero seed");

  FieldDescriptor f = t.field();
  std::vector<Vec> chain{seed};
  Vec cur = seed;
  while (true) {
    cur = t.apply(cur);
    auto coeffs = solve_in_span(chain, cur, f);
    if (coeffs) {
      KrylovResult res;
      res.basis = chain;
      res.dependence = *coeffs;
      res.spans_all = chain.size() == t.rows();
      if (require_cyclic && !res.spans_all) return std::nullopt;
      return res;
    }
    chain.push_back(cur);
  }
}

}  // namespace leiblab
