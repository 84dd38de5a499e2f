#include "leiblab/algebra.hpp"

#include <sstream>

namespace leiblab {

std::string LeibnizViolation::str() const {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

std::vector<std::size_t> SeriesReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

LeibnizAlgebra::LeibnizAlgebra(FieldDescriptor f, std::size_t dim)
    : field_(f), dim_(dim), table_(dim * dim), nonzero_(dim * dim, false) {}

LeibnizAlgebra::LeibnizAlgebra(FieldDescriptor f, std::size_t dim,
                               std::vector<std::string> labels, const ProductTable& products)
    : LeibnizAlgebra(f, dim) {
  if (dim == 0) throw std::invalid_argument("algebra dimension must be positive");
  if (labels.empty())
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  if (labels.size() != dim) throw std::invalid_argument("label count does not match dimension");
  labels_ = std::move(labels);
  for (std::size_t i = 0; i < dim * dim; ++i) table_[i] = zero_vec(f, dim);
  for (const auto& [key, row] : products) {
    auto [i, j] = key;
    if (i >= dim || j >= dim) throw std::invalid_argument("product index out of range");
    if (row.size() != dim) throw std::invalid_argument("product row length mismatch");
    for (const auto& c : row)
      if (!(c.field() == f)) throw FieldMismatch("product coefficient field mismatch");
    table_[i * dim + j] = row;
    nonzero_[i * dim + j] = !is_zero_vec(row);
  }
}

LeibnizAlgebra LeibnizAlgebra::checked(FieldDescriptor f, std::size_t dim,
                                       std::vector<std::string> labels,
                                       const ProductTable& products) {
  LeibnizAlgebra a(f, dim, std::move(labels), products);
  if (auto w = a.validate())
    throw std::invalid_argument("Leibniz identity fails at basis triple " + w->str());
  return a;
}

LeibnizAlgebra::ProductTable LeibnizAlgebra::sparse_table() const {
  ProductTable out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (nonzero_[i * dim_ + j]) out[{i, j}] = table_[i * dim_ + j];
  return out;
}

std::optional<LeibnizViolation> LeibnizAlgebra::validate() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec ei = unit_vec(field_, dim_, i);
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vec& eij = table(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        // e_i (e_j e_k) = (e_i e_j) e_k + e_j (e_i e_k)
        Vec lhs = bracket(ei, table(j, k));
        Vec rhs = add(bracket(eij, unit_vec(field_, dim_, k)),
                      bracket(unit_vec(field_, dim_, j), table(i, k)));
        if (!(lhs == rhs)) return LeibnizViolation{i, j, k};
      }
    }
  }
  return std::nullopt;
}

bool LeibnizAlgebra::is_lie() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (nonzero_[i * dim_ + i]) return false;
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!(table(i, j) == scale(-Scalar::one(field_), table(j, i)))) return false;
  }
  return true;
}

Vec LeibnizAlgebra::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != dim_ || v.size() != dim_)
    throw std::invalid_argument("bracket: element length does not match algebra dimension");
  Vec r = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    if (!(u[i].field() == field_)) throw FieldMismatch("bracket: element field mismatch");
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero() || !nonzero_[i * dim_ + j]) continue;
      Scalar c = u[i] * v[j];
      const Vec& row = table_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!row[k].is_zero()) r[k] += c * row[k];
    }
  }
  return r;
}

Matrix LeibnizAlgebra::left_mult_matrix(const Vec& u) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = bracket(u, unit_vec(field_, dim_, j));
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix LeibnizAlgebra::right_mult_matrix(const Vec& u) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = bracket(unit_vec(field_, dim_, j), u);
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Subspace LeibnizAlgebra::product_space(const Subspace& u, const Subspace& v) const {
  if (u.ambient_dim() != dim_ || v.ambient_dim() != dim_)
    throw std::invalid_argument("product_space: ambient mismatch");
  std::vector<Vec> rows;
  for (const Vec& a : u.basis())
    for (const Vec& b : v.basis()) rows.push_back(bracket(a, b));
  return Subspace::span(field_, dim_, rows);
}

Subspace LeibnizAlgebra::subalgebra_closure(const std::vector<Vec>& gens) const {
  if (gens.empty()) throw std::invalid_argument("closure of empty generating set");
  Subspace c = Subspace::span(field_, dim_, gens);
  while (true) {
    Subspace next = c + product_space(c, c);
    if (next.dim() == c.dim()) return c;
    c = next;
  }
}

Subspace LeibnizAlgebra::ideal_closure(const std::vector<Vec>& gens) const {
  if (gens.empty()) throw std::invalid_argument("closure of empty generating set");
  Subspace c = Subspace::span(field_, dim_, gens);
  while (true) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < dim_; ++i) {
      Vec ei = unit_vec(field_, dim_, i);
      for (const Vec& b : c.basis()) {
        rows.push_back(bracket(ei, b));
        rows.push_back(bracket(b, ei));
      }
    }
    Subspace next = c + Subspace::span(field_, dim_, rows);
    if (next.dim() == c.dim()) return c;
    c = next;
  }
}

bool LeibnizAlgebra::is_subalgebra(const Subspace& s) const {
  for (const Vec& a : s.basis())
    for (const Vec& b : s.basis())
      if (!s.contains(bracket(a, b))) return false;
  return true;
}

bool LeibnizAlgebra::is_ideal(const Subspace& s) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec ei = unit_vec(field_, dim_, i);
    for (const Vec& b : s.basis()) {
      if (!s.contains(bracket(ei, b))) return false;
      if (!s.contains(bracket(b, ei))) return false;
    }
  }
  return true;
}

SeriesReport LeibnizAlgebra::series(SeriesKind kind, const std::optional<Subspace>& within) const {
  Subspace start = within ? *within : full_space();
  if (within && !is_subalgebra(*within))
    throw std::invalid_argument("series: `within` is not closed under the bracket");
  SeriesReport rep;
  rep.kind = kind;
  rep.terms.push_back(start);
  while (true) {
    const Subspace& last = rep.terms.back();
    Subspace next = kind == SeriesKind::LowerCentral ? product_space(start, last)
                                                     : product_space(last, last);
    if (next == last) {
      rep.stabilized_at = rep.terms.size() - 1;
      rep.terminates_at_zero = last.is_zero();
      return rep;
    }
    rep.terms.push_back(next);
    if (next.is_zero()) {
      rep.stabilized_at = rep.terms.size() - 1;
      rep.terminates_at_zero = true;
      return rep;
    }
  }
}

bool LeibnizAlgebra::is_nilpotent(const std::optional<Subspace>& within) const {
  return series(SeriesKind::LowerCentral, within).terminates_at_zero;
}

bool LeibnizAlgebra::is_solvable(const std::optional<Subspace>& within) const {
  return series(SeriesKind::Derived, within).terminates_at_zero;
}

Subspace LeibnizAlgebra::leibniz_kernel() const {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim_; ++i) {
    rows.push_back(table(i, i));
    for (std::size_t j = i + 1; j < dim_; ++j) rows.push_back(add(table(i, j), table(j, i)));
  }
  return Subspace::span(field_, dim_, rows);
}

Subspace LeibnizAlgebra::normalizer(const Subspace& s) const {
  if (!is_subalgebra(s)) throw std::invalid_argument("normalizer: input is not a subalgebra");
  if (s.is_zero()) return full_space();
  // linear conditions on v: [v, b] and [b, v] reduce to zero mod S
  std::vector<Vec> rows;  // constraint matrix rows, one per coordinate
  for (const Vec& b : s.basis()) {
    Matrix rb = right_mult_matrix(b);  // v |-> [v, b]
    Matrix lb = left_mult_matrix(b);   // v |-> [b, v]
    for (const Matrix* m : {&rb, &lb}) {
      // rows of (reduce o m) as functions of v
      std::vector<Vec> cols;
      for (std::size_t j = 0; j < dim_; ++j) cols.push_back(s.reduce(m->col(j)));
      for (std::size_t r = 0; r < dim_; ++r) {
        Vec row = zero_vec(field_, dim_);
        bool any = false;
        for (std::size_t j = 0; j < dim_; ++j) {
          row[j] = cols[j][r];
          any = any || !row[j].is_zero();
        }
        if (any) rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return full_space();
  Matrix constraints = Matrix::from_rows(field_, rows, dim_);
  return Subspace::span(field_, dim_, constraints.kernel());
}

LeibnizAlgebra::Quotient LeibnizAlgebra::quotient(const Subspace& ideal) const {
  if (!is_ideal(ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
  std::vector<std::size_t> rest = ideal.non_pivots();
  std::size_t m = rest.size();
  if (m == 0) throw std::invalid_argument("quotient by the whole algebra is empty");

  Matrix proj(field_, m, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec w = ideal.reduce(unit_vec(field_, dim_, j));
    for (std::size_t r = 0; r < m; ++r) proj.at(r, j) = w[rest[r]];
  }
  Matrix sect(field_, dim_, m);
  for (std::size_t c = 0; c < m; ++c) sect.at(rest[c], c) = Scalar::one(field_);

  std::vector<std::string> labels;
  for (std::size_t c : rest) labels.push_back(labels_[c]);

  ProductTable products;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec w = proj.apply(bracket(unit_vec(field_, dim_, rest[a]), unit_vec(field_, dim_, rest[b])));
      if (!is_zero_vec(w)) products[{a, b}] = w;
    }
  LeibnizAlgebra q(field_, m, std::move(labels), products);
  return Quotient{std::move(q), std::move(proj), std::move(sect)};
}

LeibnizAlgebra LeibnizAlgebra::restrict_to(const Subspace& s) const {
  if (!is_subalgebra(s)) throw std::invalid_argument("restrict_to: subspace is not a subalgebra");
  std::size_t d = s.dim();
  if (d == 0) throw std::invalid_argument("restrict_to: zero subspace");
  ProductTable products;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec w = bracket(s.basis()[i], s.basis()[j]);
      // coordinates w.r.t. the RREF basis are read off at the pivots
      Vec coords = zero_vec(field_, d);
      bool any = false;
      for (std::size_t r = 0; r < d; ++r) {
        coords[r] = w[s.pivots()[r]];
        any = any || !coords[r].is_zero();
      }
      if (any) products[{i, j}] = coords;
    }
  return LeibnizAlgebra(field_, d, {}, products);
}

}  // namespace leiblab
