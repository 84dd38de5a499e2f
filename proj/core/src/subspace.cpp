#include "leiblab/subspace.hpp"

namespace leiblab {

Subspace::Subspace(FieldDescriptor f, std::size_t ambient_dim)
    : field_(f), ambient_(ambient_dim) {}

Subspace Subspace::span(FieldDescriptor f, std::size_t ambient_dim, const std::vector<Vec>& rows) {
  Subspace s(f, ambient_dim);
  std::vector<Vec> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != ambient_dim)
      throw std::invalid_argument("span: row length " + std::to_string(r.size()) +
                                  " does not match ambient dimension " + std::to_string(ambient_dim));
    for (const auto& x : r)
      if (!(x.field() == f)) throw FieldMismatch("span: mixed fields");
    work.push_back(r);
  }
  s.pivots_ = rref_rows(work);
  work.resize(s.pivots_.size());  // drop zero rows
  s.basis_ = std::move(work);
  return s;
}

Subspace Subspace::full(FieldDescriptor f, std::size_t ambient_dim) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(unit_vec(f, ambient_dim, i));
  return span(f, ambient_dim, rows);
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t c : pivots_) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!is_pivot[c]) out.push_back(c);
  return out;
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("reduce: length mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar factor = c;  // basis rows have unit pivots
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= factor * basis_[i][j];
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  if (ambient_ != o.ambient_) return false;
  for (const auto& b : o.basis_)
    if (!contains(b)) return false;
  return true;
}

bool membership(const Subspace& u, const Vec& v) { return u.contains(v); }

Subspace Subspace::operator+(const Subspace& o) const {
  if (!(field_ == o.field_) || ambient_ != o.ambient_)
    throw std::invalid_argument("subspace sum: ambient mismatch");
  std::vector<Vec> rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return span(field_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (!(field_ == o.field_) || ambient_ != o.ambient_)
    throw std::invalid_argument("subspace intersection: ambient mismatch");
  if (is_zero() || o.is_zero()) return zero(field_, ambient_);
  // coefficients (x, y) with sum_i x_i u_i + sum_j y_j v_j = 0;
  // the first block then parameterizes the intersection
  std::size_t a = dim(), b = o.dim();
  Matrix m(field_, ambient_, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m.at(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m.at(r, a + j) = o.basis_[j][r];
  std::vector<Vec> rows;
  for (const Vec& k : m.kernel()) {
    Vec w = zero_vec(field_, ambient_);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t r = 0; r < ambient_; ++r) w[r] += k[i] * basis_[i][r];
    rows.push_back(std::move(w));
  }
  return span(field_, ambient_, rows);
}

FittingSplit fitting_split(const Matrix& t) {
  if (!t.is_square()) throw std::invalid_argument("fitting_split: non-square matrix");
  std::size_t n = t.rows();
  Matrix tn = t.pow(n);
  FittingSplit out{Subspace::span(t.field(), n, tn.kernel()),
                   Subspace::span(t.field(), n, tn.col_list())};
  return out;
}

}  // namespace leiblab
