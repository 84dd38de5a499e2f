#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "leiblab/oracle.hpp"

#include "fixtures.hpp"

using namespace leiblab;
using namespace fixtures;
namespace orc = leiblab::oracle;

namespace {

// independent Gaussian-binomial oracle with plain integer arithmetic
unsigned long long gaussian_count(unsigned long long q, unsigned n) {
  auto qpow = [&](unsigned e) {
    unsigned long long r = 1;
    while (e--) r *= q;
    return r;
  };
  unsigned long long total = 0;
  for (unsigned d = 0; d <= n; ++d) {
    unsigned long long num = 1, den = 1;
    for (unsigned i = 0; i < d; ++i) {
      num *= qpow(n - i) - 1;
      den *= qpow(i + 1) - 1;
    }
    total += num / den;
  }
  return total;
}

}  // namespace

TEST_CASE("subspace counts match the Gaussian-binomial sums") {
  CHECK((orc::count_subspaces(2, 2) == 5));   // 1 + 3 + 1
  CHECK((orc::count_subspaces(3, 3) == 28));  // 1 + 13 + 13 + 1
  for (std::uint64_t p : {2ull, 3ull, 5ull})
    for (std::size_t n = 1; n <= 4; ++n) {
      unsigned long long expected = gaussian_count(p, static_cast<unsigned>(n));
      CHECK((orc::count_subspaces(p, n) == mpz_class(static_cast<unsigned long>(expected))));
      CHECK(orc::enumerate_subspaces(p, n).size() == expected);
    }
}

TEST_CASE("enumeration produces each subspace exactly once") {
  std::set<std::string> seen;
  for (const Subspace& s : orc::enumerate_subspaces(3, 3)) {
    std::string key;
    for (const auto& row : s.basis())
      for (const auto& c : row) key += c.str() + ",";
    key += "|" + std::to_string(s.dim());
    CHECK(seen.insert(key).second);
  }
  CHECK(seen.size() == 28);
}

TEST_CASE("budget refusal") {
  CHECK_THROWS_AS(orc::enumerate_subspaces(5, 10), orc::BudgetExceeded);
  // and the refusal happens before any work: a tiny budget rejects even GF(2)^2
  orc::EnumerationBudget tiny{3};
  CHECK_THROWS_AS(orc::enumerate_subspaces(2, 2, tiny), orc::BudgetExceeded);
  CHECK_THROWS_AS(orc::enumerate_subalgebras(example1(GF(2)), tiny), orc::BudgetExceeded);
}

TEST_CASE("minimality of the small corpus") {
  // 2-dim cyclic algebra over GF(5): 8 subspaces, all proper subalgebras nilpotent
  orc::MinimalityOutcome m1 = orc::minimality_check(example1(GF(5)));
  CHECK(m1.pass());
  CHECK(m1.subspaces == 8);

  orc::MinimalityOutcome m2 =
      orc::minimality_check(construct_standard(GF(3), vec(GF(3), {2, 0})).algebra);
  CHECK(m2.pass());
  CHECK(m2.subspaces == 28);

  // hypothesis gate
  CHECK(orc::minimality_check(zero_algebra(GF(3), 2)).kind ==
        orc::MinimalityOutcome::Kind::HypothesisFail);

  // the j=2,k=3 chain over GF(5) has a nonnilpotent proper subalgebra
  orc::MinimalityOutcome m3 = orc::minimality_check(example2_j2k3(GF(5)));
  REQUIRE(m3.kind == orc::MinimalityOutcome::Kind::Fail);
  REQUIRE(m3.witness);
  LeibnizAlgebra a5 = example2_j2k3(GF(5));
  CHECK(a5.is_subalgebra(*m3.witness));
  CHECK_FALSE(m3.witness->is_full());
  CHECK_FALSE(a5.is_nilpotent(*m3.witness));

  CHECK_THROWS_AS(orc::minimality_check(example1()), std::invalid_argument);
}

TEST_CASE("bruteforce_largest_ideal") {
  LeibnizAlgebra a = example1(GF(5));
  CHECK(orc::bruteforce_largest_ideal(a, span_of(GF(5), 2, {{1, -1}})).is_zero());
  CHECK(orc::bruteforce_largest_ideal(a, a.full_space()).is_full());

  LeibnizAlgebra ch = construct_chain(GF(5), 1, 1);
  auto cartan = find_cartan(ch);
  REQUIRE(cartan.cartan);
  CHECK(orc::bruteforce_largest_ideal(ch, *cartan.cartan) == core_of(ch, *cartan.cartan));
}

TEST_CASE("frattini ideal") {
  // 2-dim cyclic algebra over GF(5): maximal subalgebras intersect trivially
  CHECK(orc::frattini_ideal(example1(GF(5))).is_zero());
  CHECK(orc::frattini_ideal(construct_standard(GF(3), vec(GF(3), {2, 0})).algebra).is_zero());
  CHECK(orc::frattini_ideal(zero_algebra(GF(3), 1)).is_zero());
}

TEST_CASE("minimal ideals") {
  // quadratic standard algebra over GF(3): unique minimal ideal = A
  LeibnizAlgebra st = construct_standard(GF(3), vec(GF(3), {2, 0})).algebra;
  auto mins = orc::minimal_ideals(st);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0] == span_of(GF(3), 3, {{0, 1, 0}, {0, 0, 1}}));

  // abelian plane over GF(2): every line is a minimal ideal
  auto lines = orc::minimal_ideals(zero_algebra(GF(2), 2));
  CHECK(lines.size() == 3);
  for (const auto& l : lines) CHECK(l.dim() == 1);

  // 1-dim zero algebra: the unique minimal ideal is the algebra itself
  auto one = orc::minimal_ideals(zero_algebra(GF(5), 1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_full());
}

TEST_CASE("bruteforce nilradical") {
  CHECK(orc::bruteforce_nilradical(construct_standard(GF(3), vec(GF(3), {2, 0})).algebra) ==
        span_of(GF(3), 3, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(orc::bruteforce_nilradical(zero_algebra(GF(3), 2)).is_full());
  CHECK(orc::bruteforce_nilradical(example1(GF(5))) == span_of(GF(5), 2, {{0, 1}}));
}

TEST_CASE("semidirect_check") {
  LeibnizAlgebra a = example1(GF(5));
  Subspace zero = a.zero_space();
  Subspace A = span_of(GF(5), 2, {{0, 1}});
  Subspace M = span_of(GF(5), 2, {{1, -1}});
  CHECK(orc::semidirect_check(a, zero, A, M));
  // roles swapped: M is not an ideal
  CHECK_FALSE(orc::semidirect_check(a, zero, M, A));

  LeibnizAlgebra ab = zero_algebra(GF(3), 2);
  CHECK(orc::semidirect_check(ab, ab.zero_space(), span_of(GF(3), 2, {{1, 0}}),
                              span_of(GF(3), 2, {{0, 1}})));

  CHECK_THROWS_AS(orc::semidirect_check(a, M, A, M), std::invalid_argument);  // M not an ideal
}

TEST_CASE("normalizer nilpotency criterion agrees with the series on a corpus") {
  std::vector<LeibnizAlgebra> corpus;
  for (std::uint64_t p : {2ull, 3ull}) {
    corpus.push_back(example1(GF(p)));
    corpus.push_back(zero_algebra(GF(p), 3));
    corpus.push_back(construct_standard(GF(p), vec(GF(p), {1})).algebra);
    corpus.push_back(construct_chain(GF(p), 1, 1));
  }
  corpus.push_back(construct_standard(GF(3), vec(GF(3), {2, 0})).algebra);
  for (const auto& a : corpus) {
    CHECK(a.is_nilpotent() == orc::is_nilpotent_normalizer(a));
    // also on every materialized subalgebra
    for (const Subspace& s : orc::enumerate_subalgebras(a)) {
      if (s.is_zero()) continue;
      LeibnizAlgebra sub = a.restrict_to(s);
      CHECK(sub.is_nilpotent() == orc::is_nilpotent_normalizer(sub));
    }
  }
}
