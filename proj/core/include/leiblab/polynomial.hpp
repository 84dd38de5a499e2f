#pragma once

#include <optional>
#include <string>
#include <utility>

#include "leiblab/field.hpp"

namespace leiblab {

/// Dense univariate polynomial, coefficients constant-term first.
/// The zero polynomial has an empty coefficient list; otherwise the
/// leading coefficient is nonzero.
class Polynomial {
 public:
  explicit Polynomial(FieldDescriptor f) : field_(f) {}
  Polynomial(FieldDescriptor f, Vec coeffs);

  static Polynomial zero(FieldDescriptor f) { return Polynomial(f); }
  static Polynomial one(FieldDescriptor f) { return constant(Scalar::one(f)); }
  static Polynomial constant(const Scalar& c);
  static Polynomial monomial(FieldDescriptor f, std::size_t deg, const Scalar& c);
  /// lambda - c
  static Polynomial linear_root(const Scalar& c);

  const FieldDescriptor& field() const { return field_; }
  const Vec& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coeff(std::size_t i) const;
  Scalar lead() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }

  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar eval(const Scalar& x) const;

  std::string str() const;  // comma-separated coefficients, constant first
  static Polynomial parse(const std::string& text, FieldDescriptor f);

 private:
  FieldDescriptor field_;
  Vec coeffs_;
  void trim();
};

/// Monic gcd; gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// base^e mod m, e given as a nonnegative big integer.
Polynomial poly_powmod(const Polynomial& base, const mpz_class& e, const Polynomial& m);

enum class IrreducibleOutcome { Irreducible, Reducible, Inconclusive };

struct IrreducibilityResult {
  IrreducibleOutcome outcome = IrreducibleOutcome::Inconclusive;
  std::optional<Polynomial> factor;  // verified proper divisor when Reducible
  std::string method;
};

/// Exact over GF(p).  Over Q and Q(i): degree <= 3 decided by root search,
/// higher degrees attempted by mod-q certificates and a bounded
/// coefficient-box factor search (degree <= 8); Inconclusive otherwise.
/// Input must have degree >= 1.
IrreducibilityResult poly_irreducible(const Polynomial& p);

}  // namespace leiblab
