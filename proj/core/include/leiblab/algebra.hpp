#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leiblab/subspace.hpp"

namespace leiblab {

/// Basis triple (i,j,k) violating a(bc) = (ab)c + b(ac).
struct LeibnizViolation {
  std::size_t i = 0, j = 0, k = 0;
  std::string str() const;
};

enum class SeriesKind { LowerCentral, Derived };

/// Trace of a descending series, stopped at the first repeat or at zero.
struct SeriesReport {
  SeriesKind kind = SeriesKind::LowerCentral;
  std::vector<Subspace> terms;     // terms[0] is the starting space
  std::size_t stabilized_at = 0;   // index of the first stable term
  bool terminates_at_zero = false;
  std::vector<std::size_t> dims() const;
};

/// Finite-dimensional Leibniz algebra presented by structure constants:
/// table(i,j) is the coefficient row of [e_i, e_j]; missing products are
/// zero.  Immutable after construction; validate() checks the Leibniz
/// identity on all basis triples, which suffices by trilinearity.
class LeibnizAlgebra {
 public:
  using ProductTable = std::map<std::pair<std::size_t, std::size_t>, Vec>;

  LeibnizAlgebra(FieldDescriptor f, std::size_t dim, std::vector<std::string> labels,
                 const ProductTable& products);

  /// Constructs and throws std::invalid_argument on a Leibniz violation.
  static LeibnizAlgebra checked(FieldDescriptor f, std::size_t dim,
                                std::vector<std::string> labels, const ProductTable& products);

  const FieldDescriptor& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& table(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  bool product_nonzero(std::size_t i, std::size_t j) const { return nonzero_[i * dim_ + j]; }

  /// Sparse view of the table (nonzero products only, key-ordered).
  ProductTable sparse_table() const;

  std::optional<LeibnizViolation> validate() const;
  bool is_lie() const;

  Vec bracket(const Vec& u, const Vec& v) const;
  Matrix left_mult_matrix(const Vec& u) const;   // v |-> [u, v]
  Matrix right_mult_matrix(const Vec& u) const;  // v |-> [v, u]

  Subspace full_space() const { return Subspace::full(field_, dim_); }
  Subspace zero_space() const { return Subspace::zero(field_, dim_); }

  /// Span of [u, v] over basis pairs of U and V.
  Subspace product_space(const Subspace& u, const Subspace& v) const;

  Subspace subalgebra_closure(const std::vector<Vec>& gens) const;
  Subspace ideal_closure(const std::vector<Vec>& gens) const;

  bool is_subalgebra(const Subspace& s) const;
  bool is_ideal(const Subspace& s) const;

  /// Lower central (S, [S,S], [S,[S,S]], ...) or derived series of the
  /// whole algebra or of a subalgebra.  Throws if `within` is not closed.
  SeriesReport series(SeriesKind kind, const std::optional<Subspace>& within = {}) const;
  bool is_nilpotent(const std::optional<Subspace>& within = {}) const;
  bool is_solvable(const std::optional<Subspace>& within = {}) const;

  /// Span of all squares [v,v]; an ideal, and the quotient by it is Lie.
  Subspace leibniz_kernel() const;

  /// { v : [v,S] and [S,v] lie in S }; S must be a subalgebra.
  Subspace normalizer(const Subspace& s) const;

  /// Quotient by an ideal, on the non-pivot coordinates of its basis.
  struct Quotient;
  Quotient quotient(const Subspace& ideal) const;

  /// The subalgebra S as an algebra on the rows of its canonical basis.
  LeibnizAlgebra restrict_to(const Subspace& s) const;

 private:
  FieldDescriptor field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Vec> table_;      // dense dim*dim rows
  std::vector<bool> nonzero_;

  LeibnizAlgebra(FieldDescriptor f, std::size_t dim);
};

struct LeibnizAlgebra::Quotient {
  LeibnizAlgebra algebra;
  Matrix projection;  // (dim - dim I) x dim, a bracket homomorphism
  Matrix section;     // dim x (dim - dim I), picks coset representatives
};

}  // namespace leiblab
