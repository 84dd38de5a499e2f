#pragma once

#include <variant>

#include "leiblab/structure.hpp"

namespace leiblab {

enum class Dichotomy { Cyclic, LeibInN, Violated };

/// Full structural decomposition of a verified minimal-nonnilpotent
/// candidate: the distinguished element x, the core ideal N, the Fitting
/// complement L1, the line F = span{x}, the codimension-1 nilradical A,
/// the cyclic chain a_0..a_k with its minimal polynomial p, and the
/// per-clause verification flags.  Serializes as schema "minnon-cert/1".
struct MinNonCertificate {
  FieldDescriptor field;
  std::size_t dim = 0;
  Vec x;
  bool x_squared_in_N = false;
  Subspace N, L1, F, A;
  std::vector<Vec> companion;  // a_0 .. a_k, ambient coordinates
  Polynomial p;
  bool c0_nonzero = false;
  IrreducibleOutcome p_irreducible = IrreducibleOutcome::Inconclusive;
  bool N_formula_holds = false;
  bool A_is_nilradical = false;
  bool A_cubed_in_leib = false;
  Dichotomy dichotomy = Dichotomy::Violated;
  std::optional<Vec> generator;  // present when dichotomy == Cyclic
  bool decomposition_ok = false;

  MinNonCertificate()
      : field(FieldDescriptor::rationals()), N(field, 0), L1(field, 0), F(field, 0),
        A(field, 0), p(field) {}
};

struct VerifyFailure {
  std::string stage;
  std::string detail;
  int stage_index = 0;
};

using VerifyResult = std::variant<MinNonCertificate, VerifyFailure>;

/// Checks the structural conclusions of the classification on a
/// nonnilpotent solvable algebra and assembles the certificate, or
/// reports the earliest failing stage.  Success certifies the necessary
/// structure only; over infinite fields it does not decide minimality.
VerifyResult verify_theorem(const LeibnizAlgebra& a, std::uint64_t seed = 0);

struct StandardAlgebra {
  LeibnizAlgebra algebra;
  Polynomial p;  // lambda^{k+1} - c_k lambda^k - ... - c_0
};

/// Basis {x, a_0..a_k} with x a_i = a_{i+1} for i < k and
/// x a_k = c_0 a_0 + ... + c_k a_k; requires c_0 != 0.
StandardAlgebra construct_standard(FieldDescriptor f, const Vec& coeffs);

/// Basis {x,..,x^j, a,..,a^k} with the two power chains, xa = a = -ax and
/// x a^i = i a^i; requires characteristic 0 or p > k.
LeibnizAlgebra construct_chain(FieldDescriptor f, std::size_t j, std::size_t k);

struct CyclicConstruction {
  LeibnizAlgebra algebra;
  std::optional<LeibnizViolation> violation;  // not every top row is Leibniz
};

/// Basis {z, z^2,..,z^d} with z z^i = z^{i+1} for i < d and z z^d given
/// by `top` (coefficients of z^1..z^d).  The Leibniz check outcome is
/// reported, not thrown.
CyclicConstruction construct_cyclic(FieldDescriptor f, std::size_t d, const Vec& top);

/// Remark checks: [a_i, x] + [x, a_i] in Leib(L) and [a_i, a_j] in N.
bool check_remark_products(const LeibnizAlgebra& a, const MinNonCertificate& cert);

std::string dichotomy_name(Dichotomy d);
std::string irreducible_outcome_name(IrreducibleOutcome o);

std::string certificate_to_json(const MinNonCertificate& cert, int indent = 2);
MinNonCertificate certificate_from_json(const std::string& text);

}  // namespace leiblab
