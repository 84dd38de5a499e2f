#pragma once

#include <optional>
#include <vector>

#include "leiblab/field.hpp"
#include "leiblab/polynomial.hpp"

namespace leiblab {

/// Dense exact matrix over a single field.
class Matrix {
 public:
  Matrix(FieldDescriptor f, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldDescriptor f, std::size_t n);
  static Matrix from_rows(FieldDescriptor f, const std::vector<Vec>& rows, std::size_t cols);

  const FieldDescriptor& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool operator==(const Matrix& o) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix pow(std::size_t k) const;

  /// Matrix-vector product; v has length cols().
  Vec apply(const Vec& v) const;

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> row_list() const;
  std::vector<Vec> col_list() const;

  /// Exact determinant by Gaussian elimination (square only).
  Scalar determinant() const;

  /// Basis of { v : Av = 0 }.
  std::vector<Vec> kernel() const;

 private:
  FieldDescriptor field_;
  std::size_t rows_, cols_;
  Vec e_;
};

/// In-place reduced row echelon form; returns pivot column indices.
/// Zero rows are moved to the bottom but not removed.
std::vector<std::size_t> rref_rows(std::vector<Vec>& rows);

/// Monic characteristic polynomial det(lambda I - T), division-free
/// (Samuelson-Berkowitz), valid over any of the supported fields.
Polynomial char_poly(const Matrix& t);

/// p(T) by Horner substitution.
Matrix eval_poly_at(const Polynomial& p, const Matrix& t);

/// True iff T^n = 0 for n = dim.
bool is_nilpotent_operator(const Matrix& t);

/// Krylov data for (T, seed): basis seed, T seed, ..., T^k seed (maximal
/// independent prefix) plus the coefficients c expressing T^{k+1} seed in
/// that basis.  spans_all marks whether the chain exhausts the ambient space.
struct KrylovResult {
  std::vector<Vec> basis;
  Vec dependence;  // c_0..c_k with T^{k+1} s = sum c_i T^i s
  bool spans_all = false;
};

/// Seed must be nonzero.  With require_cyclic, returns nullopt when the
/// Krylov space is proper.
std::optional<KrylovResult> companion_basis(const Matrix& t, const Vec& seed,
                                            bool require_cyclic = false);

}  // namespace leiblab
