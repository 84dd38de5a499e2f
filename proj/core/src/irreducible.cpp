#include <algorithm>
#include <array>
#include <random>

#include "leiblab/polynomial.hpp"

namespace leiblab {

namespace {

constexpr std::array<std::uint64_t, 25> kCertificatePrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

constexpr std::uint64_t kBoxSearchBudget = 5'000'000;

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------- GF(p) ----

Polynomial x_poly(FieldDescriptor f) {
  return Polynomial::monomial(f, 1, Scalar::one(f));
}

bool rabin_irreducible(const Polynomial& f) {
  FieldDescriptor fd = f.field();
  mpz_class p(static_cast<unsigned long>(fd.characteristic));
  std::size_t n = static_cast<std::size_t>(f.degree());
  Polynomial x = x_poly(fd) % f;

  std::vector<Polynomial> frob;  // frob[k] = x^(p^(k+1)) mod f
  Polynomial h = x;
  for (std::size_t k = 1; k <= n; ++k) {
    h = poly_powmod(h, p, f);
    frob.push_back(h);
  }
  if (!(frob[n - 1] == x)) return false;
  for (std::size_t q : prime_divisors(n)) {
    Polynomial g = poly_gcd(frob[n / q - 1] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

Polynomial random_poly(FieldDescriptor fd, std::size_t max_deg, std::mt19937_64& rng) {
  Vec v;
  std::uniform_int_distribution<std::uint64_t> dist(0, fd.characteristic - 1);
  for (std::size_t i = 0; i <= max_deg; ++i) v.push_back(Scalar::from_residue(fd.characteristic, dist(rng)));
  return Polynomial(fd, std::move(v));
}

// split a squarefree product of m >= 2 irreducibles of equal degree d
Polynomial equal_degree_split(const Polynomial& g, std::size_t d) {
  FieldDescriptor fd = g.field();
  mpz_class p(static_cast<unsigned long>(fd.characteristic));
  std::mt19937_64 rng(0x5eed0051u);
  for (std::uint64_t attempt = 0;; ++attempt) {
    Polynomial r = random_poly(fd, 2 * d - 1, rng);
    if (r.degree() < 1) continue;
    Polynomial w0 = poly_gcd(r, g);
    if (w0.degree() > 0 && w0.degree() < g.degree()) return w0;
    Polynomial s(fd);
    if (fd.characteristic == 2) {
      // trace map r + r^2 + r^4 + ... (2^(d-1) term)
      Polynomial acc = r % g;
      Polynomial term = acc;
      for (std::size_t j = 1; j < d; ++j) {
        term = (term * term) % g;
        acc = acc + term;
      }
      s = acc;
    } else {
      mpz_class e;
      mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      s = poly_powmod(r, e, g) - Polynomial::one(fd);
    }
    Polynomial w = poly_gcd(s, g);
    if (w.degree() > 0 && w.degree() < g.degree()) return w;
    if (attempt > 256) throw std::logic_error("equal-degree splitting failed to converge");
  }
}

// proper monic factor of a reducible monic f over GF(p)
Polynomial gf_find_factor(const Polynomial& f) {
  FieldDescriptor fd = f.field();
  std::uint64_t p = fd.characteristic;
  Polynomial df = f.derivative();
  if (df.is_zero()) {
    // f(x) = u(x^p) = (u*(x))^p over GF(p); the p-th root is a proper factor
    Vec v;
    for (std::size_t i = 0; i * p <= static_cast<std::size_t>(f.degree()); ++i)
      v.push_back(f.coeff(i * p));
    return Polynomial(fd, std::move(v)).monic();
  }
  Polynomial g = poly_gcd(f, df);
  if (g.degree() > 0 && g.degree() < f.degree()) return g;

  // squarefree: distinct-degree sieve, then equal-degree splitting
  mpz_class pz(static_cast<unsigned long>(p));
  Polynomial x = x_poly(fd) % f;
  Polynomial h = x;
  std::size_t n = static_cast<std::size_t>(f.degree());
  for (std::size_t d = 1; d <= n / 2; ++d) {
    h = poly_powmod(h, pz, f);
    Polynomial gd = poly_gcd(h - x, f);
    if (gd.degree() == 0) continue;
    if (gd.degree() < f.degree()) return gd;
    return equal_degree_split(f, d);
  }
  throw std::logic_error("gf_find_factor called on an irreducible polynomial");
}

IrreducibilityResult irreducible_gf(const Polynomial& p) {
  Polynomial f = p.monic();
  if (f.degree() == 1) return {IrreducibleOutcome::Irreducible, std::nullopt, "degree-1"};
  if (rabin_irreducible(f)) return {IrreducibleOutcome::Irreducible, std::nullopt, "frobenius-gcd"};
  Polynomial w = gf_find_factor(f);
  if (!(f % w).is_zero() || w.degree() <= 0 || w.degree() >= f.degree())
    throw std::logic_error("factor extraction produced a non-divisor");
  return {IrreducibleOutcome::Reducible, w, "frobenius-gcd"};
}

// ------------------------------------------------------- integer helpers ----

struct DivisorSet {
  std::vector<mpz_class> divisors;  // positive divisors
  bool complete = true;
};

DivisorSet integer_divisors(const mpz_class& n_in) {
  DivisorSet out;
  mpz_class n = abs(n_in);
  if (n == 0) {
    out.complete = false;
    return out;
  }
  if (n > mpz_class("1000000000000000")) {
    out.complete = false;
    return out;
  }
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.divisors.push_back(d);
      if (d * d != n) out.divisors.push_back(n / d);
    }
  }
  std::sort(out.divisors.begin(), out.divisors.end());
  return out;
}

struct GaussInt {
  mpz_class re, im;
  mpz_class norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
  GaussInt operator*(const GaussInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
  bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
};

bool gauss_divides(const GaussInt& d, const GaussInt& z) {
  mpz_class nd = d.norm();
  if (nd == 0) return false;
  mpz_class a = z.re * d.re + z.im * d.im;
  mpz_class b = z.im * d.re - z.re * d.im;
  return a % nd == 0 && b % nd == 0;
}

struct GaussDivisorSet {
  std::vector<GaussInt> divisors;
  bool complete = true;
};

GaussDivisorSet gauss_divisors(const GaussInt& z) {
  GaussDivisorSet out;
  mpz_class n = z.norm();
  if (n == 0 || n > mpz_class("1000000000000")) {
    out.complete = false;
    return out;
  }
  DivisorSet norms = integer_divisors(n);
  if (!norms.complete) {
    out.complete = false;
    return out;
  }
  for (const mpz_class& m : norms.divisors) {
    mpz_class u = 0;
    for (; u * u * 2 <= m; ++u) {
      mpz_class v2 = m - u * u;
      mpz_class v = sqrt(v2);
      if (v * v != v2) continue;
      std::vector<GaussInt> cands = {{u, v}, {u, -v}, {-u, v}, {-u, -v}, {v, u}, {v, -u}, {-v, u}, {-v, -u}};
      for (const auto& d : cands) {
        if (d.is_zero()) continue;
        if (!gauss_divides(d, z)) continue;
        if (std::find(out.divisors.begin(), out.divisors.end(), d) == out.divisors.end())
          out.divisors.push_back(d);
      }
    }
  }
  return out;
}

// -------------------------------------------------------------- Q / Q(i) ----

// coefficients of the denominator-cleared, content-free integer polynomial
std::vector<mpz_class> clear_to_integers(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.rational().get_den());
  std::vector<mpz_class> out;
  for (const auto& c : p.coeffs()) out.push_back(mpz_class(c.rational() * l));
  mpz_class g = 0;
  for (const auto& c : out) g = gcd(g, c);
  if (g > 1)
    for (auto& c : out) c /= g;
  return out;
}

std::vector<GaussInt> clear_to_gauss_integers(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    l = lcm(l, c.gaussian().re.get_den());
    l = lcm(l, c.gaussian().im.get_den());
  }
  std::vector<GaussInt> out;
  for (const auto& c : p.coeffs())
    out.push_back(GaussInt{mpz_class(c.gaussian().re * l), mpz_class(c.gaussian().im * l)});
  mpz_class g = 0;
  for (const auto& c : out) {
    g = gcd(g, c.re);
    g = gcd(g, c.im);
  }
  if (g > 1)
    for (auto& c : out) {
      c.re /= g;
      c.im /= g;
    }
  return out;
}

Polynomial int_poly_to_field(const std::vector<mpz_class>& f) {
  Vec v;
  for (const auto& c : f) v.push_back(Scalar::from_rational(mpq_class(c)));
  return Polynomial(FieldDescriptor::rationals(), std::move(v));
}

Polynomial gauss_poly_to_field(const std::vector<GaussInt>& f) {
  Vec v;
  for (const auto& c : f) v.push_back(Scalar::from_gaussian(mpq_class(c.re), mpq_class(c.im)));
  return Polynomial(FieldDescriptor::gaussian_rationals(), std::move(v));
}

// reduction of an integer polynomial mod q, nullopt when the degree drops
std::optional<Polynomial> reduce_mod_q(const std::vector<mpz_class>& f, std::uint64_t q) {
  FieldDescriptor fd = FieldDescriptor::prime_field(q);
  Vec v;
  for (const auto& c : f) {
    mpz_class r = c % static_cast<long>(q);
    if (r < 0) r += static_cast<long>(q);
    v.push_back(Scalar::from_residue(q, r.get_ui()));
  }
  Polynomial out(fd, std::move(v));
  if (out.degree() != static_cast<int>(f.size()) - 1) return std::nullopt;
  return out;
}

// ring map Z[i] -> GF(q) with i |-> s, s^2 = -1 mod q (q = 1 mod 4)
std::optional<Polynomial> reduce_gauss_mod_q(const std::vector<GaussInt>& f, std::uint64_t q,
                                             std::uint64_t s) {
  FieldDescriptor fd = FieldDescriptor::prime_field(q);
  Vec v;
  for (const auto& c : f) {
    mpz_class r = (c.re + c.im * static_cast<long>(s)) % static_cast<long>(q);
    if (r < 0) r += static_cast<long>(q);
    v.push_back(Scalar::from_residue(q, r.get_ui()));
  }
  Polynomial out(fd, std::move(v));
  if (out.degree() != static_cast<int>(f.size()) - 1) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> sqrt_of_minus_one(std::uint64_t q) {
  for (std::uint64_t s = 2; s < q; ++s)
    if ((static_cast<unsigned __int128>(s) * s) % q == q - 1) return s;
  return std::nullopt;
}

// 2-norm ceiling for the Mignotte factor bound
mpz_class norm2_ceiling(const std::vector<mpz_class>& f) {
  mpz_class s = 0;
  for (const auto& c : f) s += c * c;
  return sqrt(s) + 1;
}

mpz_class gauss_norm2_ceiling(const std::vector<GaussInt>& f) {
  mpz_class s = 0;
  for (const auto& c : f) s += c.norm();
  return sqrt(s) + 1;
}

mpz_class eval_int_poly(const std::vector<mpz_class>& f, long x) {
  mpz_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

GaussInt eval_gauss_poly(const std::vector<GaussInt>& f, long x) {
  GaussInt acc{0, 0};
  for (std::size_t i = f.size(); i-- > 0;) {
    acc.re = acc.re * x + f[i].re;
    acc.im = acc.im * x + f[i].im;
  }
  return acc;
}

// bounded search for a rational factor of degree 2..deg/2; outcome:
//   factor found | completed with none | budget exhausted
enum class BoxOutcome { Found, Complete, Exhausted };

BoxOutcome box_search_q(const std::vector<mpz_class>& f, const Polynomial& field_poly,
                        Polynomial* factor_out) {
  std::size_t deg = f.size() - 1;
  mpz_class b2 = norm2_ceiling(f);
  DivisorSet lead_divs = integer_divisors(f.back());
  DivisorSet const_divs = integer_divisors(f.front());
  if (!lead_divs.complete || !const_divs.complete) return BoxOutcome::Exhausted;
  mpz_class f1 = eval_int_poly(f, 1), fm1 = eval_int_poly(f, -1);

  std::uint64_t spent = 0;
  for (std::size_t r = 2; 2 * r <= deg; ++r) {
    mpz_class bound_z = b2;
    for (std::size_t i = 0; i < r; ++i) bound_z *= 2;
    if (bound_z > 1'000'000) return BoxOutcome::Exhausted;
    long bound = static_cast<long>(bound_z.get_si());

    std::size_t interior = r - 1;  // g_1..g_{r-1} free
    mpz_class combos = 1;
    for (std::size_t i = 0; i < interior; ++i) combos *= 2 * bound_z + 1;
    mpz_class total = combos * static_cast<long>(lead_divs.divisors.size()) *
                      static_cast<long>(const_divs.divisors.size()) * 2;
    if (total + spent > kBoxSearchBudget) return BoxOutcome::Exhausted;

    for (const mpz_class& lead : lead_divs.divisors) {
      for (const mpz_class& c0a : const_divs.divisors) {
        for (int sign = 0; sign < 2; ++sign) {
          mpz_class c0 = sign ? -c0a : c0a;
          std::vector<long> mid(interior, -bound);
          bool done = interior == 0;
          bool first = true;
          while (first || !done) {
            first = false;
            ++spent;
            std::vector<mpz_class> g(r + 1);
            g[0] = c0;
            for (std::size_t i = 0; i < interior; ++i) g[i + 1] = mid[i];
            g[r] = lead;
            mpz_class g1 = eval_int_poly(g, 1), gm1 = eval_int_poly(g, -1);
            bool plausible = true;
            if (f1 != 0 && (g1 == 0 || f1 % g1 != 0)) plausible = false;
            if (plausible && fm1 != 0 && (gm1 == 0 || fm1 % gm1 != 0)) plausible = false;
            if (plausible) {
              Polynomial cand = int_poly_to_field(g);
              if (cand.degree() == static_cast<int>(r) && (field_poly % cand).is_zero()) {
                *factor_out = cand;
                return BoxOutcome::Found;
              }
            }
            // odometer
            std::size_t pos = 0;
            for (; pos < interior; ++pos) {
              if (mid[pos] < bound) {
                ++mid[pos];
                for (std::size_t z = 0; z < pos; ++z) mid[z] = -bound;
                break;
              }
            }
            if (pos == interior) done = true;
            if (interior == 0) done = true;
          }
        }
      }
    }
  }
  return BoxOutcome::Complete;
}

BoxOutcome box_search_qi(const std::vector<GaussInt>& f, const Polynomial& field_poly,
                         Polynomial* factor_out) {
  std::size_t deg = f.size() - 1;
  mpz_class b2 = gauss_norm2_ceiling(f);
  GaussDivisorSet lead_divs = gauss_divisors(f.back());
  GaussDivisorSet const_divs = gauss_divisors(f.front());
  if (!lead_divs.complete || !const_divs.complete) return BoxOutcome::Exhausted;
  GaussInt f1 = eval_gauss_poly(f, 1);

  std::uint64_t spent = 0;
  for (std::size_t r = 2; 2 * r <= deg; ++r) {
    mpz_class bound_z = b2;
    for (std::size_t i = 0; i < r; ++i) bound_z *= 2;
    if (bound_z > 1000) return BoxOutcome::Exhausted;
    long bound = static_cast<long>(bound_z.get_si());

    std::size_t interior = r - 1;
    mpz_class cell = (2 * bound_z + 1) * (2 * bound_z + 1);
    mpz_class combos = 1;
    for (std::size_t i = 0; i < interior; ++i) combos *= cell;
    // leading coefficient up to units: keep representatives with re > 0, im >= 0
    std::vector<GaussInt> leads;
    for (const auto& d : lead_divs.divisors)
      if (d.re > 0 && d.im >= 0) leads.push_back(d);
    mpz_class total = combos * static_cast<long>(leads.size()) *
                      static_cast<long>(const_divs.divisors.size());
    if (total + spent > kBoxSearchBudget) return BoxOutcome::Exhausted;

    for (const GaussInt& lead : leads) {
      for (const GaussInt& c0 : const_divs.divisors) {
        std::vector<long> mid(2 * interior, -bound);
        bool done = false;
        bool first = true;
        while (first || !done) {
          first = false;
          ++spent;
          std::vector<GaussInt> g(r + 1);
          g[0] = c0;
          for (std::size_t i = 0; i < interior; ++i)
            g[i + 1] = GaussInt{mid[2 * i], mid[2 * i + 1]};
          g[r] = lead;
          GaussInt g1 = eval_gauss_poly(g, 1);
          bool plausible = f1.is_zero() || (!g1.is_zero() && gauss_divides(g1, f1));
          if (plausible) {
            Polynomial cand = gauss_poly_to_field(g);
            if (cand.degree() == static_cast<int>(r) && (field_poly % cand).is_zero()) {
              *factor_out = cand;
              return BoxOutcome::Found;
            }
          }
          std::size_t pos = 0;
          for (; pos < mid.size(); ++pos) {
            if (mid[pos] < bound) {
              ++mid[pos];
              for (std::size_t z = 0; z < pos; ++z) mid[z] = -bound;
              break;
            }
          }
          if (pos == mid.size()) done = true;
          if (mid.empty()) done = true;
        }
      }
    }
  }
  return BoxOutcome::Complete;
}

IrreducibilityResult irreducible_q(const Polynomial& p) {
  std::size_t deg = static_cast<std::size_t>(p.degree());
  if (deg == 1) return {IrreducibleOutcome::Irreducible, std::nullopt, "degree-1"};
  std::vector<mpz_class> f = clear_to_integers(p);

  if (f.front() == 0) {
    Polynomial x = Polynomial::monomial(p.field(), 1, Scalar::one(p.field()));
    return {IrreducibleOutcome::Reducible, x, "zero-constant-term"};
  }

  // rational root search: roots r/s with r | f(0), s | lead
  DivisorSet rs = integer_divisors(f.front());
  DivisorSet ss = integer_divisors(f.back());
  bool roots_complete = rs.complete && ss.complete;
  if (roots_complete) {
    for (const mpz_class& r : rs.divisors)
      for (const mpz_class& s : ss.divisors)
        for (int sign = 0; sign < 2; ++sign) {
          mpq_class root(sign ? -r : r, s);
          root.canonicalize();
          if (p.eval(Scalar::from_rational(root)).is_zero()) {
            Polynomial w = Polynomial::linear_root(Scalar::from_rational(root));
            return {IrreducibleOutcome::Reducible, w, "rational-root"};
          }
        }
    if (deg <= 3) return {IrreducibleOutcome::Irreducible, std::nullopt, "root-search"};
  }

  for (std::uint64_t q : kCertificatePrimes) {
    if (f.back() % static_cast<long>(q) == 0) continue;
    auto fq = reduce_mod_q(f, q);
    if (!fq) continue;
    if (fq->degree() == 1 || rabin_irreducible(fq->monic()))
      return {IrreducibleOutcome::Irreducible, std::nullopt, "mod-" + std::to_string(q) + "-certificate"};
  }

  if (deg <= 8 && roots_complete) {
    Polynomial factor = Polynomial::zero(p.field());
    BoxOutcome r = box_search_q(f, p, &factor);
    if (r == BoxOutcome::Found) return {IrreducibleOutcome::Reducible, factor, "bounded-factor-search"};
    if (r == BoxOutcome::Complete)
      return {IrreducibleOutcome::Irreducible, std::nullopt, "bounded-factor-search"};
  }
  return {IrreducibleOutcome::Inconclusive, std::nullopt, "out-of-range"};
}

IrreducibilityResult irreducible_qi(const Polynomial& p) {
  std::size_t deg = static_cast<std::size_t>(p.degree());
  if (deg == 1) return {IrreducibleOutcome::Irreducible, std::nullopt, "degree-1"};
  std::vector<GaussInt> f = clear_to_gauss_integers(p);

  if (f.front().is_zero()) {
    Polynomial x = Polynomial::monomial(p.field(), 1, Scalar::one(p.field()));
    return {IrreducibleOutcome::Reducible, x, "zero-constant-term"};
  }

  GaussDivisorSet rs = gauss_divisors(f.front());
  GaussDivisorSet ss = gauss_divisors(f.back());
  bool roots_complete = rs.complete && ss.complete;
  if (roots_complete) {
    for (const GaussInt& r : rs.divisors)
      for (const GaussInt& s : ss.divisors) {
        mpq_class ns(s.norm());
        mpq_class re((r.re * s.re + r.im * s.im));
        mpq_class im((r.im * s.re - r.re * s.im));
        Scalar root = Scalar::from_gaussian(re / ns, im / ns);
        if (p.eval(root).is_zero()) {
          Polynomial w = Polynomial::linear_root(root);
          return {IrreducibleOutcome::Reducible, w, "gaussian-root"};
        }
      }
    if (deg <= 3) return {IrreducibleOutcome::Irreducible, std::nullopt, "root-search"};
  }

  for (std::uint64_t q : kCertificatePrimes) {
    if (q % 4 != 1) continue;
    auto s0 = sqrt_of_minus_one(q);
    if (!s0) continue;
    for (std::uint64_t s : {*s0, q - *s0}) {
      auto fq = reduce_gauss_mod_q(f, q, s);
      if (!fq) continue;
      if (fq->degree() == 1 || rabin_irreducible(fq->monic()))
        return {IrreducibleOutcome::Irreducible, std::nullopt, "mod-" + std::to_string(q) + "-certificate"};
    }
  }

  if (deg <= 8 && roots_complete) {
    Polynomial factor = Polynomial::zero(p.field());
    BoxOutcome r = box_search_qi(f, p, &factor);
    if (r == BoxOutcome::Found) return {IrreducibleOutcome::Reducible, factor, "bounded-factor-search"};
    if (r == BoxOutcome::Complete)
      return {IrreducibleOutcome::Irreducible, std::nullopt, "bounded-factor-search"};
  }
  return {IrreducibleOutcome::Inconclusive, std::nullopt, "out-of-range"};
}

}  // namespace

IrreducibilityResult poly_irreducible(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 1)
    throw std::domain_error("poly_irreducible: degree must be at least 1");
  switch (p.field().kind) {
    case FieldKind::PrimeField: return irreducible_gf(p);
    case FieldKind::Rationals: return irreducible_q(p);
    case FieldKind::GaussianRationals: return irreducible_qi(p);
  }
  throw std::logic_error("unknown field kind");
}

}  // namespace leiblab
