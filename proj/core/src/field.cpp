#include "leiblab/field.hpp"

#include <cctype>

namespace leiblab {

bool is_small_prime(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31)) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  if (!is_small_prime(p))
    throw std::invalid_argument("prime_field: modulus must be a prime < 2^31, got " + std::to_string(p));
  return {FieldKind::PrimeField, p};
}

std::string FieldDescriptor::name() const {
  switch (kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::GaussianRationals: return "Q(i)";
    case FieldKind::PrimeField: return "GF(" + std::to_string(characteristic) + ")";
  }
  return "?";
}

namespace {

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p) s -= p;
  return s;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("inverse of 0 in GF(p)");
  // extended Euclid on signed 128-bit to avoid wrap
  __int128 t = 0, newt = 1, r = static_cast<__int128>(p), newr = static_cast<__int128>(a);
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt;
    t = newt; newt = tmp;
    tmp = r - q * newr;
    r = newr; newr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

mpq_class canon(mpq_class q) {
  q.canonicalize();
  return q;
}

}  // namespace

Scalar::Scalar(FieldDescriptor f) : field_(f) {
  switch (f.kind) {
    case FieldKind::PrimeField: v_ = std::uint64_t{0}; break;
    case FieldKind::Rationals: v_ = mpq_class(0); break;
    case FieldKind::GaussianRationals: v_ = GaussianRational{mpq_class(0), mpq_class(0)}; break;
  }
}

Scalar Scalar::from_int(FieldDescriptor f, long n) {
  Scalar s(f);
  switch (f.kind) {
    case FieldKind::PrimeField: {
      std::uint64_t p = f.characteristic;
      long r = n % static_cast<long>(p);
      if (r < 0) r += static_cast<long>(p);
      s.v_ = static_cast<std::uint64_t>(r);
      break;
    }
    case FieldKind::Rationals: s.v_ = mpq_class(n); break;
    case FieldKind::GaussianRationals: s.v_ = GaussianRational{mpq_class(n), mpq_class(0)}; break;
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& q) {
  Scalar s(FieldDescriptor::rationals());
  s.v_ = canon(q);
  return s;
}

Scalar Scalar::from_gaussian(const mpq_class& re, const mpq_class& im) {
  Scalar s(FieldDescriptor::gaussian_rationals());
  s.v_ = GaussianRational{canon(re), canon(im)};
  return s;
}

Scalar Scalar::from_residue(std::uint64_t p, std::uint64_t r) {
  Scalar s(FieldDescriptor::prime_field(p));
  s.v_ = r % p;
  return s;
}

bool Scalar::is_zero() const {
  switch (field_.kind) {
    case FieldKind::PrimeField: return std::get<std::uint64_t>(v_) == 0;
    case FieldKind::Rationals: return std::get<mpq_class>(v_) == 0;
    case FieldKind::GaussianRationals: {
      const auto& g = std::get<GaussianRational>(v_);
      return g.re == 0 && g.im == 0;
    }
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("scalar arithmetic across fields: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r(field_);
  switch (field_.kind) {
    case FieldKind::PrimeField:
      r.v_ = addmod(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), field_.characteristic);
      break;
    case FieldKind::Rationals:
      r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
      break;
    case FieldKind::GaussianRationals: {
      const auto& a = std::get<GaussianRational>(v_);
      const auto& b = std::get<GaussianRational>(o.v_);
      r.v_ = GaussianRational{mpq_class(a.re + b.re), mpq_class(a.im + b.im)};
      break;
    }
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  switch (field_.kind) {
    case FieldKind::PrimeField: {
      std::uint64_t a = std::get<std::uint64_t>(v_);
      r.v_ = a == 0 ? 0 : field_.characteristic - a;
      break;
    }
    case FieldKind::Rationals:
      r.v_ = mpq_class(-std::get<mpq_class>(v_));
      break;
    case FieldKind::GaussianRationals: {
      const auto& a = std::get<GaussianRational>(v_);
      r.v_ = GaussianRational{mpq_class(-a.re), mpq_class(-a.im)};
      break;
    }
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r(field_);
  switch (field_.kind) {
    case FieldKind::PrimeField:
      r.v_ = mulmod(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), field_.characteristic);
      break;
    case FieldKind::Rationals:
      r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
      break;
    case FieldKind::GaussianRationals: {
      const auto& a = std::get<GaussianRational>(v_);
      const auto& b = std::get<GaussianRational>(o.v_);
      r.v_ = GaussianRational{mpq_class(a.re * b.re - a.im * b.im),
                              mpq_class(a.re * b.im + a.im * b.re)};
      break;
    }
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r(field_);
  switch (field_.kind) {
    case FieldKind::PrimeField:
      r.v_ = invmod(std::get<std::uint64_t>(v_), field_.characteristic);
      break;
    case FieldKind::Rationals:
      r.v_ = canon(mpq_class(1) / std::get<mpq_class>(v_));
      break;
    case FieldKind::GaussianRationals: {
      const auto& a = std::get<GaussianRational>(v_);
      mpq_class n = a.re * a.re + a.im * a.im;
      r.v_ = GaussianRational{canon(a.re / n), canon(-a.im / n)};
      break;
    }
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return v_ == o.v_;
}

const mpq_class& Scalar::rational() const {
  if (field_.kind != FieldKind::Rationals) throw std::logic_error("not a rational scalar");
  return std::get<mpq_class>(v_);
}

const GaussianRational& Scalar::gaussian() const {
  if (field_.kind != FieldKind::GaussianRationals) throw std::logic_error("not a Gaussian scalar");
  return std::get<GaussianRational>(v_);
}

std::uint64_t Scalar::residue() const {
  if (field_.kind != FieldKind::PrimeField) throw std::logic_error("not a prime-field scalar");
  return std::get<std::uint64_t>(v_);
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// imaginary part rendered as "i", "-i", or "<rat>i"
std::string imag_str(const mpq_class& q) {
  if (q == 1) return "i";
  if (q == -1) return "-i";
  return rat_str(q) + "i";
}

mpq_class parse_rat(const std::string& s_in) {
  std::string s = s_in;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);  // gmp rejects a leading plus
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              (c == '-' && i == 0);
    if (!ok) throw std::invalid_argument("bad rational syntax: '" + s_in + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational syntax: '" + s_in + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s_in + "'");
  q.canonicalize();
  return q;
}

}  // namespace

std::string Scalar::str() const {
  switch (field_.kind) {
    case FieldKind::PrimeField:
      return std::to_string(std::get<std::uint64_t>(v_));
    case FieldKind::Rationals:
      return rat_str(std::get<mpq_class>(v_));
    case FieldKind::GaussianRationals: {
      const auto& g = std::get<GaussianRational>(v_);
      if (g.im == 0) return rat_str(g.re);
      if (g.re == 0) return imag_str(g.im);
      std::string tail = g.im > 0 ? "+" + imag_str(g.im) : imag_str(g.im);
      return rat_str(g.re) + tail;
    }
  }
  return "?";
}

Scalar Scalar::parse(const std::string& text, FieldDescriptor f) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty scalar");

  switch (f.kind) {
    case FieldKind::PrimeField: {
      mpq_class q = parse_rat(s);
      if (q.get_den() != 1)
        throw std::invalid_argument("GF(" + std::to_string(f.characteristic) + ") scalar must be an integer residue: '" + text + "'");
      mpz_class r = q.get_num() % static_cast<long>(f.characteristic);
      if (r < 0) r += static_cast<long>(f.characteristic);
      return from_residue(f.characteristic, r.get_ui());
    }
    case FieldKind::Rationals:
      return from_rational(parse_rat(s));
    case FieldKind::GaussianRationals: {
      bool has_i = s.back() == 'i';
      if (!has_i) return from_gaussian(parse_rat(s), 0);
      std::string body = s.substr(0, s.size() - 1);
      // split at the last interior sign; signs only occur at the front of a part
      std::size_t split = std::string::npos;
      for (std::size_t i = 1; i < body.size(); ++i)
        if (body[i] == '+' || body[i] == '-') split = i;
      auto imag_of = [](const std::string& t) -> mpq_class {
        if (t.empty() || t == "+") return 1;
        if (t == "-") return -1;
        return parse_rat(t);
      };
      if (split == std::string::npos) return from_gaussian(0, imag_of(body));
      return from_gaussian(parse_rat(body.substr(0, split)), imag_of(body.substr(split)));
    }
  }
  throw std::invalid_argument("unknown field");
}

Vec zero_vec(FieldDescriptor f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(FieldDescriptor f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

}  // namespace leiblab
