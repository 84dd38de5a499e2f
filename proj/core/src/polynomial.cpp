#include "leiblab/polynomial.hpp"

#include <sstream>

namespace leiblab {

Polynomial::Polynomial(FieldDescriptor f, Vec coeffs) : field_(f), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == field_)) throw FieldMismatch("polynomial coefficient field mismatch");
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) {
  return Polynomial(c.field(), Vec{c});
}

Polynomial Polynomial::monomial(FieldDescriptor f, std::size_t deg, const Scalar& c) {
  Vec v = zero_vec(f, deg + 1);
  v[deg] = c;
  return Polynomial(f, std::move(v));
}

Polynomial Polynomial::linear_root(const Scalar& c) {
  return Polynomial(c.field(), Vec{-c, Scalar::one(c.field())});
}

Scalar Polynomial::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return Scalar::zero(field_);
}

Scalar Polynomial::lead() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomial field mismatch");
  Vec v = zero_vec(field_, std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomial field mismatch");
  Vec v = zero_vec(field_, std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomial field mismatch");
  if (is_zero() || o.is_zero()) return zero(field_);
  Vec v = zero_vec(field_, coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(field_, std::move(v));
}

bool Polynomial::operator==(const Polynomial& o) const {
  return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (!(field_ == d.field_)) throw FieldMismatch("polynomial field mismatch");
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial q = zero(field_);
  Polynomial r = *this;
  Scalar inv_lead = d.lead().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
    Scalar c = r.lead() * inv_lead;
    Polynomial t = monomial(field_, shift, c);
    q = q + t;
    r = r - t * d;
  }
  return {q, r};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Scalar inv = lead().inverse();
  Vec v = coeffs_;
  for (auto& c : v) c *= inv;
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return zero(field_);
  Vec v;
  v.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    Scalar k = Scalar::from_int(field_, static_cast<long>(i));
    v.push_back(coeffs_[i] * k);
  }
  return Polynomial(field_, std::move(v));
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << coeffs_[i].str();
  }
  return os.str();
}

Polynomial Polynomial::parse(const std::string& text, FieldDescriptor f) {
  Vec v;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) v.push_back(Scalar::parse(tok, f));
  return Polynomial(f, std::move(v));
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

Polynomial poly_powmod(const Polynomial& base, const mpz_class& e, const Polynomial& m) {
  if (e < 0) throw std::domain_error("negative exponent");
  Polynomial acc = Polynomial::one(base.field());
  acc = acc % m;
  Polynomial b = base % m;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = (acc * b) % m;
    b = (b * b) % m;
    k >>= 1;
  }
  return acc;
}

}  // namespace leiblab
