#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace leiblab {

/// Thrown when operands of an exact operation live over different fields.
struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class FieldKind { Rationals, GaussianRationals, PrimeField };

/// Tag describing the coefficient field: Q, Q(i), or GF(p) with p prime.
struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t characteristic = 0;  // 0 in characteristic zero, p for GF(p)

  static FieldDescriptor rationals() { return {FieldKind::Rationals, 0}; }
  static FieldDescriptor gaussian_rationals() { return {FieldKind::GaussianRationals, 0}; }
  static FieldDescriptor prime_field(std::uint64_t p);

  bool finite() const { return kind == FieldKind::PrimeField; }
  bool operator==(const FieldDescriptor&) const = default;
  std::string name() const;
};

/// True for 2 <= p < 2^31 and p prime (trial division; inputs are small).
bool is_small_prime(std::uint64_t p);

struct GaussianRational {
  mpq_class re, im;
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
};

/// Exact field element. Representation by field kind:
///   Q      -- canonical mpq (lowest terms, positive denominator)
///   Q(i)   -- pair of canonical mpq, re + im*i
///   GF(p)  -- residue in [0, p)
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(FieldDescriptor f);  // zero of f

  static Scalar from_int(FieldDescriptor f, long n);
  static Scalar from_rational(const mpq_class& q);                 // over Q
  static Scalar from_gaussian(const mpq_class& re, const mpq_class& im);
  static Scalar from_residue(std::uint64_t p, std::uint64_t r);

  static Scalar zero(FieldDescriptor f) { return Scalar(f); }
  static Scalar one(FieldDescriptor f) { return from_int(f, 1); }

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Text form used by every file format; see parse() for the grammar.
  std::string str() const;

  /// Q: "n" or "p/q".  Q(i): "a/b+c/di" with either part omissible, "i"
  /// meaning 1i.  GF(p): decimal residue (sign accepted, reduced mod p).
  static Scalar parse(const std::string& text, FieldDescriptor f);

  // Representation accessors (valid only for the matching kind).
  const mpq_class& rational() const;
  const GaussianRational& gaussian() const;
  std::uint64_t residue() const;

 private:
  FieldDescriptor field_{};
  std::variant<std::uint64_t, mpq_class, GaussianRational> v_{std::uint64_t{0}};

  void check_same_field(const Scalar& o) const;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(FieldDescriptor f, std::size_t n);
Vec unit_vec(FieldDescriptor f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);

}  // namespace leiblab
