#pragma once

#include <functional>

#include "leiblab/algebra.hpp"

namespace leiblab::oracle {

struct EnumerationBudget {
  std::uint64_t max_subspaces = 10'000'000;
};

/// Raised when the subspace count of an enumeration exceeds the budget.
struct BudgetExceeded : std::runtime_error {
  mpz_class required;
  std::uint64_t budget;
  BudgetExceeded(mpz_class req, std::uint64_t b)
      : std::runtime_error("subspace enumeration needs " + req.get_str() +
                           " subspaces, budget is " + std::to_string(b)),
        required(std::move(req)), budget(b) {}
};

/// Sum of Gaussian binomials: the number of subspaces of GF(p)^n.
mpz_class count_subspaces(std::uint64_t p, std::size_t n);

/// Visits every subspace of GF(p)^n exactly once, by dimension ascending
/// and then lexicographically by RREF pivot pattern.  The visitor returns
/// false to stop early.  Throws BudgetExceeded before visiting anything
/// when the total count exceeds the budget.
void for_each_subspace(std::uint64_t p, std::size_t n, const EnumerationBudget& budget,
                       const std::function<bool(const Subspace&)>& visit);

std::vector<Subspace> enumerate_subspaces(std::uint64_t p, std::size_t n,
                                          const EnumerationBudget& budget = {});

/// All bracket-closed subspaces, including 0 and the whole space.
std::vector<Subspace> enumerate_subalgebras(const LeibnizAlgebra& a,
                                            const EnumerationBudget& budget = {});

/// All two-sided ideals, including 0 and the whole space.
std::vector<Subspace> enumerate_ideals(const LeibnizAlgebra& a,
                                       const EnumerationBudget& budget = {});

/// Nilpotency by the normalizer criterion: nilpotent iff no proper
/// subalgebra is self-normalizing.  Finite fields only.
bool is_nilpotent_normalizer(const LeibnizAlgebra& a, const EnumerationBudget& budget = {});

struct MinimalityOutcome {
  enum class Kind { Pass, Fail, HypothesisFail };
  Kind kind = Kind::Pass;
  std::optional<Subspace> witness;  // a nonnilpotent proper subalgebra
  std::string note;
  std::uint64_t subspaces = 0;
  std::uint64_t subalgebras = 0;
  std::uint64_t nilpotent_subalgebras = 0;
  bool pass() const { return kind == Kind::Pass; }
};

/// Decides "every proper subalgebra is nilpotent" by full enumeration.
/// The algebra must be nonnilpotent and solvable (hypothesis gate).
MinimalityOutcome minimality_check(const LeibnizAlgebra& a, const EnumerationBudget& budget = {});

/// Maximum-dimension ideal of the algebra contained in the subalgebra M.
Subspace bruteforce_largest_ideal(const LeibnizAlgebra& a, const Subspace& m,
                                  const EnumerationBudget& budget = {});

/// Intersection of all maximal proper subalgebras, then its core.
Subspace frattini_ideal(const LeibnizAlgebra& a, const EnumerationBudget& budget = {});

/// All nonzero ideals that are minimal under inclusion.
std::vector<Subspace> minimal_ideals(const LeibnizAlgebra& a, const EnumerationBudget& budget = {});

/// Sum of all nilpotent ideals; the result is verified nilpotent.
Subspace bruteforce_nilradical(const LeibnizAlgebra& a, const EnumerationBudget& budget = {});

/// In the quotient by N: part1 must be an ideal, part2 a subalgebra,
/// their intersection zero and their sum everything.  Parts are given in
/// quotient coordinates.
bool semidirect_check(const LeibnizAlgebra& a, const Subspace& n, const Subspace& part1,
                      const Subspace& part2);

}  // namespace leiblab::oracle
