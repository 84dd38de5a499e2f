#pragma once

#include "leiblab/algebra.hpp"

namespace leiblab {

/// Fitting decomposition of the ambient space with respect to left
/// multiplication by a single element.
struct FittingPair {
  Vec element;
  Subspace null_component;  // generalized kernel; left mult nilpotent here
  Subspace one_component;   // image component; left mult invertible here
};

FittingPair fitting_wrt(const LeibnizAlgebra& a, const Vec& x);

/// Largest ideal of the algebra contained in the subalgebra M, by the
/// decreasing fixed-point iteration I_{k+1} = { v in I_k : [L,v] and
/// [v,L] lie in I_k }.  Throws if M is not a subalgebra.
Subspace core_of(const LeibnizAlgebra& a, const Subspace& m);

/// Deterministic candidate rows: unit vectors, pairwise sums, optionally
/// pairwise differences, then seeded pseudo-random rows with entries in
/// {0, +-1, +-2} lifted to the field.
std::vector<Vec> candidate_rows(FieldDescriptor f, std::size_t n, std::uint64_t seed,
                                bool with_differences = false, std::size_t random_count = 200);

std::vector<Vec> candidate_elements(const LeibnizAlgebra& a, std::uint64_t seed,
                                    bool with_differences = false, std::size_t random_count = 200);

/// First candidate whose left multiplication is not nilpotent; nullopt
/// when the bounded search exhausts (correct for nilpotent algebras).
std::optional<Vec> find_nonnilpotent_element(const LeibnizAlgebra& a, std::uint64_t seed = 0);

struct CartanSearch {
  std::optional<Subspace> cartan;  // nilpotent self-normalizing subalgebra
  std::string note;                // failure reason when empty
};

/// Verify-after-guess heuristic: null component of a nonnilpotent left
/// multiplication, checked to be a nilpotent self-normalizing subalgebra.
CartanSearch find_cartan(const LeibnizAlgebra& a, std::uint64_t seed = 0);

struct NilradicalCertificate {
  bool certified = false;
  bool is_ideal = false;
  bool ideal_nilpotent = false;
  bool algebra_nonnilpotent = false;
  std::string justification;
};

/// Certifies that a codimension-1 subspace is the nilradical: it must be
/// a nilpotent ideal of a nonnilpotent algebra, and maximality is then
/// forced by the codimension.  Throws unless codim I = 1.
NilradicalCertificate is_nilradical_codim1(const LeibnizAlgebra& a, const Subspace& i);

struct CyclicSearch {
  std::optional<Vec> generator;  // closure of {generator} is the whole algebra
  bool exhaustive = false;       // candidate set covered every element
};

/// Bounded generator search; `none` means "not found", and only means
/// "not cyclic" when exhaustive is set (small prime fields).
CyclicSearch is_cyclic(const LeibnizAlgebra& a, std::uint64_t seed = 0);

/// Irreducibility of the characteristic polynomial of left multiplication
/// by x restricted to the invariant subspace W.  Inconclusive propagates.
IrreducibleOutcome action_irreducible(const LeibnizAlgebra& a, const Vec& x, const Subspace& w);

/// Matrix of v |-> [x, v] on W in the coordinates of W's basis.
/// Throws if W is not invariant.
Matrix restriction_matrix(const LeibnizAlgebra& a, const Vec& x, const Subspace& w);

}  // namespace leiblab
