#include "leiblab/classify.hpp"

#include <sstream>

#include "json_util.hpp"

namespace leiblab {

StandardAlgebra construct_standard(FieldDescriptor f, const Vec& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("construct_standard: empty coefficient list");
  for (const auto& c : coeffs)
    if (!(c.field() == f)) throw FieldMismatch("construct_standard: coefficient field mismatch");
  if (coeffs.front().is_zero())
    throw std::invalid_argument("construct_standard: c_0 must be nonzero");

  std::size_t k = coeffs.size() - 1;
  std::size_t dim = k + 2;
  std::vector<std::string> labels{"x"};
  for (std::size_t i = 0; i <= k; ++i) labels.push_back("a" + std::to_string(i));

  LeibnizAlgebra::ProductTable t;
  for (std::size_t i = 0; i < k; ++i) t[{0, 1 + i}] = unit_vec(f, dim, 2 + i);
  Vec last = zero_vec(f, dim);
  for (std::size_t i = 0; i <= k; ++i) last[1 + i] = coeffs[i];
  t[{0, 1 + k}] = last;

  LeibnizAlgebra a = LeibnizAlgebra::checked(f, dim, labels, t);

  Vec pc = zero_vec(f, k + 2);
  for (std::size_t i = 0; i <= k; ++i) pc[i] = -coeffs[i];
  pc[k + 1] = Scalar::one(f);
  return {std::move(a), Polynomial(f, std::move(pc))};
}

LeibnizAlgebra construct_chain(FieldDescriptor f, std::size_t j, std::size_t k) {
  if (j < 1 || k < 1) throw std::invalid_argument("construct_chain: j and k must be at least 1");
  if (f.finite() && f.characteristic <= k)
    throw std::invalid_argument("construct_chain: requires characteristic 0 or p > k");

  std::size_t dim = j + k;
  std::vector<std::string> labels;
  labels.push_back("x");
  for (std::size_t i = 2; i <= j; ++i) labels.push_back("x^" + std::to_string(i));
  labels.push_back("a");
  for (std::size_t i = 2; i <= k; ++i) labels.push_back("a^" + std::to_string(i));

  auto xi = [&](std::size_t i) { return i - 1; };      // index of x^i
  auto ai = [&](std::size_t i) { return j + i - 1; };  // index of a^i

  LeibnizAlgebra::ProductTable t;
  for (std::size_t i = 1; i < j; ++i) t[{xi(1), xi(i)}] = unit_vec(f, dim, xi(i + 1));
  for (std::size_t i = 1; i < k; ++i) t[{ai(1), ai(i)}] = unit_vec(f, dim, ai(i + 1));
  t[{xi(1), ai(1)}] = unit_vec(f, dim, ai(1));
  t[{ai(1), xi(1)}] = scale(-Scalar::one(f), unit_vec(f, dim, ai(1)));
  for (std::size_t i = 2; i <= k; ++i)
    t[{xi(1), ai(i)}] = scale(Scalar::from_int(f, static_cast<long>(i)), unit_vec(f, dim, ai(i)));

  return LeibnizAlgebra::checked(f, dim, labels, t);
}

CyclicConstruction construct_cyclic(FieldDescriptor f, std::size_t d, const Vec& top) {
  if (d < 1) throw std::invalid_argument("construct_cyclic: dimension must be at least 1");
  if (top.size() != d)
    throw std::invalid_argument("construct_cyclic: expected " + std::to_string(d) + " top coefficients");
  std::vector<std::string> labels{"z"};
  for (std::size_t i = 2; i <= d; ++i) labels.push_back("z^" + std::to_string(i));

  LeibnizAlgebra::ProductTable t;
  for (std::size_t i = 0; i + 1 < d; ++i) t[{0, i}] = unit_vec(f, d, i + 1);
  Vec last = top;
  for (const auto& c : last)
    if (!(c.field() == f)) throw FieldMismatch("construct_cyclic: coefficient field mismatch");
  t[{0, d - 1}] = last;

  LeibnizAlgebra a(f, d, labels, t);
  return {a, a.validate()};
}

namespace {

// Stages below kFirstClaimStage are x-selection degeneracies: the proof's
// Engel step admits another x, so the candidate loop moves on.  From
// kFirstClaimStage up the pipeline is checking the theorem's clauses for a
// structurally valid x, and a failure there is the verdict.
constexpr int kFirstClaimStage = 8;

struct Attempt {
  bool ok = false;
  MinNonCertificate cert;
  VerifyFailure failure;
  bool claim_reached() const { return failure.stage_index >= kFirstClaimStage; }
};

std::string dims_str(const Subspace& s) { return "dim " + std::to_string(s.dim()); }

Attempt fail(int index, const std::string& stage, const std::string& detail) {
  Attempt at;
  at.failure = {stage, detail, index};
  return at;
}

Attempt attempt_certificate(const LeibnizAlgebra& a, const Vec& x, std::uint64_t seed) {
  FieldDescriptor f = a.field();
  std::size_t n = a.dim();

  // Fitting split for l_x; the one-component carries the cyclic action
  FittingPair fp = fitting_wrt(a, x);
  const Subspace& w = fp.one_component;

  // N = W^2 + <x>^2, the core ideal of the decomposition
  Subspace xcl = a.subalgebra_closure({x});
  Subspace N = a.product_space(w, w) + a.product_space(xcl, xcl);
  if (!a.is_ideal(N))
    return fail(3, "N-ideal", "candidate core W^2 + <x>^2 (" + dims_str(N) + ") is not an ideal");

  Subspace A = N + w;
  if (A.dim() + 1 != n)
    return fail(4, "A-codim1",
                "N + L1 has dimension " + std::to_string(A.dim()) + " in dimension " +
                    std::to_string(n) + "; expected codimension 1");
  NilradicalCertificate nr = is_nilradical_codim1(a, A);
  if (!nr.certified)
    return fail(5, "nilradical",
                std::string("codimension-1 candidate is not certified: ") +
                    (nr.is_ideal ? (nr.ideal_nilpotent ? "algebra nilpotent" : "ideal not nilpotent")
                                 : "not an ideal"));

  // companion chain of the induced action on A/N
  LeibnizAlgebra::Quotient q = a.quotient(N);
  Vec xbar = q.projection.apply(x);
  std::vector<Vec> abar_rows;
  for (const Vec& b : A.basis()) abar_rows.push_back(q.projection.apply(b));
  Subspace abar = Subspace::span(f, q.algebra.dim(), abar_rows);
  if (abar.dim() == 0)
    return fail(6, "companion", "A/N is zero; no cyclic vector exists");

  Matrix r = restriction_matrix(q.algebra, xbar, abar);
  std::optional<KrylovResult> chain;
  for (const Vec& s : candidate_rows(f, abar.dim(), seed, true)) {
    if (is_zero_vec(s)) continue;
    chain = companion_basis(r, s, true);
    if (chain) break;
  }
  if (!chain)
    return fail(6, "companion", "no cyclic vector found for the action on A/N (" + dims_str(abar) + ")");

  // lift the chain back to ambient coordinates
  std::vector<Vec> companion;
  for (const Vec& coords : chain->basis) {
    Vec qv = zero_vec(f, q.algebra.dim());
    for (std::size_t i = 0; i < abar.dim(); ++i) qv = add(qv, scale(coords[i], abar.basis()[i]));
    companion.push_back(q.section.apply(qv));
  }

  std::size_t k1 = chain->basis.size();  // k+1
  Vec pc = zero_vec(f, k1 + 1);
  for (std::size_t i = 0; i < k1; ++i) pc[i] = -chain->dependence[i];
  pc[k1] = Scalar::one(f);
  Polynomial p(f, std::move(pc));

  if (chain->dependence[0].is_zero())
    return fail(7, "c0", "constant companion coefficient vanishes; l_x is not invertible on A/N");

  IrreducibilityResult ir = poly_irreducible(p);
  if (ir.outcome == IrreducibleOutcome::Reducible)
    return fail(8, "irreducibility",
                "p = " + p.str() + " factors (witness " + ir.factor->str() + ") by " + ir.method);

  Subspace leib = a.leibniz_kernel();
  Subspace a2 = a.product_space(A, A);
  Subspace a3 = a.product_space(A, a2);
  if (!leib.contains(a3))
    return fail(9, "A-cubed", "A^3 (" + dims_str(a3) + ") is not contained in Leib(L)");

  if (!N.contains(a.bracket(x, x)))
    return fail(10, "x-squared", "x^2 does not lie in N");

  Subspace acl = a.subalgebra_closure(companion);
  Subspace n_stmt = a.product_space(xcl, xcl) + a.product_space(acl, acl);
  if (!(n_stmt == N))
    return fail(11, "N-formula",
                "<x>^2 + <a_0..a_k>^2 (" + dims_str(n_stmt) + ") differs from N (" + dims_str(N) + ")");

  // L1: canonical complement of N inside A, lifted through the section
  std::vector<Vec> l1_rows;
  for (const Vec& b : abar.basis()) l1_rows.push_back(q.section.apply(b));
  Subspace l1 = Subspace::span(f, n, l1_rows);
  if (!a.product_space(N, l1).is_zero())
    return fail(12, "N-L1-product", "[N, L1] is nonzero");

  Subspace F = Subspace::span(f, n, {x});
  bool dims_ok = N.dim() + l1.dim() + F.dim() == n;
  bool span_ok = (N + l1 + F).is_full();
  bool meets_ok = N.intersect(l1).is_zero() && (N + l1).intersect(F).is_zero();
  if (!dims_ok || !span_ok || !meets_ok)
    return fail(13, "decomposition", "L is not the direct sum of N, L1 and F");

  Dichotomy dich;
  std::optional<Vec> gen;
  if (N.contains(leib)) {
    dich = Dichotomy::LeibInN;
  } else {
    CyclicSearch cy = is_cyclic(a, seed);
    if (!cy.generator)
      return fail(14, "dichotomy",
                  std::string("Leib(L) is not contained in N and no generator was found") +
                      (cy.exhaustive ? " (search exhaustive: the algebra is not cyclic)" : " (bounded search)"));
    dich = Dichotomy::Cyclic;
    gen = cy.generator;
  }

  Attempt at;
  at.ok = true;
  MinNonCertificate& c = at.cert;
  c.field = f;
  c.dim = n;
  c.x = x;
  c.x_squared_in_N = true;
  c.N = N;
  c.L1 = l1;
  c.F = F;
  c.A = A;
  c.companion = companion;
  c.p = p;
  c.c0_nonzero = true;
  c.p_irreducible = ir.outcome;
  c.N_formula_holds = true;
  c.A_is_nilradical = true;
  c.A_cubed_in_leib = true;
  c.dichotomy = dich;
  c.generator = gen;
  c.decomposition_ok = true;
  return at;
}

}  // namespace

VerifyResult verify_theorem(const LeibnizAlgebra& a, std::uint64_t seed) {
  if (auto w = a.validate())
    return VerifyFailure{"hypothesis", "Leibniz identity fails at triple " + w->str(), 0};
  if (!a.is_solvable()) return VerifyFailure{"hypothesis", "algebra is not solvable", 0};
  if (a.is_nilpotent()) return VerifyFailure{"hypothesis", "algebra is nilpotent", 0};

  bool saw_candidate = false;
  std::optional<VerifyFailure> best;
  for (const Vec& x : candidate_elements(a, seed, true)) {
    if (is_zero_vec(x)) continue;
    if (is_nilpotent_operator(a.left_mult_matrix(x))) continue;
    saw_candidate = true;
    Attempt at = attempt_certificate(a, x, seed);
    if (at.ok) return at.cert;
    if (at.claim_reached()) return at.failure;
    if (!best || at.failure.stage_index > best->stage_index) best = at.failure;
  }
  if (!saw_candidate)
    return VerifyFailure{"find-x", "no element with nonnilpotent left multiplication found", 1};
  return *best;
}

bool check_remark_products(const LeibnizAlgebra& a, const MinNonCertificate& cert) {
  Subspace leib = a.leibniz_kernel();
  for (const Vec& ai : cert.companion) {
    Vec sym = add(a.bracket(ai, cert.x), a.bracket(cert.x, ai));
    if (!leib.contains(sym)) return false;
  }
  for (const Vec& ai : cert.companion)
    for (const Vec& aj : cert.companion)
      if (!cert.N.contains(a.bracket(ai, aj))) return false;
  return true;
}

std::string dichotomy_name(Dichotomy d) {
  switch (d) {
    case Dichotomy::Cyclic: return "cyclic";
    case Dichotomy::LeibInN: return "leib_in_N";
    case Dichotomy::Violated: return "violated";
  }
  return "?";
}

std::string irreducible_outcome_name(IrreducibleOutcome o) {
  switch (o) {
    case IrreducibleOutcome::Irreducible: return "irreducible";
    case IrreducibleOutcome::Reducible: return "reducible";
    case IrreducibleOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string certificate_to_json(const MinNonCertificate& cert, int indent) {
  using detail::json;
  json j;
  j["schema"] = "minnon-cert/1";
  j["field"] = detail::field_to_json(cert.field);
  j["dim"] = cert.dim;
  j["x"] = detail::vec_to_json(cert.x);
  j["x_squared_in_N"] = cert.x_squared_in_N;
  j["N"] = detail::subspace_to_json(cert.N);
  j["L1"] = detail::subspace_to_json(cert.L1);
  j["F"] = detail::subspace_to_json(cert.F);
  j["A"] = detail::subspace_to_json(cert.A);
  json comp = json::array();
  for (const auto& v : cert.companion) comp.push_back(detail::vec_to_json(v));
  j["companion_basis"] = comp;
  json pc = json::array();
  for (const auto& c : cert.p.coeffs()) pc.push_back(c.str());
  j["p"] = pc;
  j["c0_nonzero"] = cert.c0_nonzero;
  j["p_irreducible"] = irreducible_outcome_name(cert.p_irreducible);
  j["N_formula_holds"] = cert.N_formula_holds;
  j["A_is_nilradical"] = cert.A_is_nilradical;
  j["A_cubed_in_leib"] = cert.A_cubed_in_leib;
  json dich;
  dich["kind"] = dichotomy_name(cert.dichotomy);
  if (cert.generator) dich["generator"] = detail::vec_to_json(*cert.generator);
  j["dichotomy"] = dich;
  j["decomposition_ok"] = cert.decomposition_ok;
  return j.dump(indent);
}

MinNonCertificate certificate_from_json(const std::string& text) {
  using detail::json;
  json j = json::parse(text);
  if (!j.contains("schema") || j["schema"] != "minnon-cert/1")
    throw std::invalid_argument("certificate: missing or unknown schema");
  MinNonCertificate c;
  c.field = detail::field_from_json(j.at("field"));
  c.dim = j.at("dim").get<std::size_t>();
  c.x = detail::vec_from_json(j.at("x"), c.field);
  c.x_squared_in_N = j.at("x_squared_in_N").get<bool>();
  c.N = detail::subspace_from_json(j.at("N"), c.field, c.dim);
  c.L1 = detail::subspace_from_json(j.at("L1"), c.field, c.dim);
  c.F = detail::subspace_from_json(j.at("F"), c.field, c.dim);
  c.A = detail::subspace_from_json(j.at("A"), c.field, c.dim);
  for (const auto& v : j.at("companion_basis")) c.companion.push_back(detail::vec_from_json(v, c.field));
  Vec pc;
  for (const auto& s : j.at("p")) pc.push_back(Scalar::parse(s.get<std::string>(), c.field));
  c.p = Polynomial(c.field, pc);
  c.c0_nonzero = j.at("c0_nonzero").get<bool>();
  std::string irr = j.at("p_irreducible").get<std::string>();
  c.p_irreducible = irr == "irreducible" ? IrreducibleOutcome::Irreducible
                    : irr == "reducible" ? IrreducibleOutcome::Reducible
                                         : IrreducibleOutcome::Inconclusive;
  c.N_formula_holds = j.at("N_formula_holds").get<bool>();
  c.A_is_nilradical = j.at("A_is_nilradical").get<bool>();
  c.A_cubed_in_leib = j.at("A_cubed_in_leib").get<bool>();
  std::string kind = j.at("dichotomy").at("kind").get<std::string>();
  c.dichotomy = kind == "cyclic" ? Dichotomy::Cyclic
                : kind == "leib_in_N" ? Dichotomy::LeibInN
                                      : Dichotomy::Violated;
  if (j.at("dichotomy").contains("generator"))
    c.generator = detail::vec_from_json(j.at("dichotomy").at("generator"), c.field);
  c.decomposition_ok = j.at("decomposition_ok").get<bool>();
  return c;
}

}  // namespace leiblab
