#pragma once

#include <vector>

#include "leiblab/matrix.hpp"

namespace leiblab {

/// Subspace of the coefficient space F^n, held in canonical form: the
/// basis rows are the RREF of any spanning set with zero rows dropped.
/// Equality of subspaces is therefore representation equality.
class Subspace {
 public:
  Subspace(FieldDescriptor f, std::size_t ambient_dim);  // zero subspace

  /// Canonical span of the given rows (each of length ambient_dim).
  static Subspace span(FieldDescriptor f, std::size_t ambient_dim, const std::vector<Vec>& rows);
  static Subspace zero(FieldDescriptor f, std::size_t ambient_dim) { return Subspace(f, ambient_dim); }
  static Subspace full(FieldDescriptor f, std::size_t ambient_dim);

  const FieldDescriptor& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return dim() == ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> non_pivots() const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Residue of v after eliminating against the basis; zero iff v is a member.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

 private:
  FieldDescriptor field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;   // RREF rows, no zero rows
  std::vector<std::size_t> pivots_;
};

/// Membership of a single vector, exact.
bool membership(const Subspace& u, const Vec& v);

/// Fitting decomposition of a square matrix: kernel and image of T^n.
/// The two components are T-invariant, meet trivially, and sum to the
/// ambient space; T restricted to the image component is invertible.
struct FittingSplit {
  Subspace null_component;
  Subspace one_component;
};
FittingSplit fitting_split(const Matrix& t);

}  // namespace leiblab
