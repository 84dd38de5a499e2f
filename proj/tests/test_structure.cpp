#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leiblab/oracle.hpp"

#include "fixtures.hpp"

using namespace leiblab;
using namespace fixtures;

TEST_CASE("core_of") {
  LeibnizAlgebra a = example1();
  CHECK(core_of(a, span_of(Q(), 2, {{1, -1}})).is_zero());
  CHECK(core_of(a, a.full_space()).is_full());

  // M = F + N in the chain algebra has core N
  LeibnizAlgebra ex2 = example2_j2k3();
  Subspace M = span_of(Q(), 5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  Subspace N = span_of(Q(), 5, {{0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  CHECK(core_of(ex2, M) == N);

  CHECK_THROWS_AS(core_of(a, span_of(Q(), 2, {{1, 0}})), std::invalid_argument);
}

TEST_CASE("core_of equals the brute-force largest ideal on a finite corpus") {
  std::vector<LeibnizAlgebra> corpus;
  corpus.push_back(example1(GF(2)));
  corpus.push_back(example1(GF(3)));
  corpus.push_back(construct_standard(GF(3), vec(GF(3), {2, 0})).algebra);
  corpus.push_back(construct_chain(GF(5), 1, 1));
  corpus.push_back(construct_chain(GF(3), 2, 1));
  corpus.push_back(zero_algebra(GF(2), 3));
  for (const auto& a : corpus) {
    for (const Subspace& m : oracle::enumerate_subalgebras(a)) {
      Subspace fast = core_of(a, m);
      Subspace brute = oracle::bruteforce_largest_ideal(a, m);
      CHECK(fast == brute);
      CHECK(a.is_ideal(fast));
      CHECK(m.contains(fast));
    }
  }
}

TEST_CASE("find_nonnilpotent_element") {
  LeibnizAlgebra a = example1();
  auto x = find_nonnilpotent_element(a);
  REQUIRE(x);
  CHECK(*x == vec(Q(), {1, 0}));  // z, found among basis vectors
  CHECK_FALSE(find_nonnilpotent_element(zero_algebra(Q(), 3)).has_value());
  auto y = find_nonnilpotent_element(standard_q_2_0());
  REQUIRE(y);
  CHECK(*y == vec(Q(), {1, 0, 0}));
}

TEST_CASE("fitting_wrt") {
  LeibnizAlgebra a = example1();
  FittingPair fp = fitting_wrt(a, vec(Q(), {1, -1}));
  CHECK(fp.null_component == span_of(Q(), 2, {{1, -1}}));
  CHECK(fp.one_component == span_of(Q(), 2, {{0, 1}}));

  LeibnizAlgebra z = zero_algebra(Q(), 2);
  CHECK(fitting_wrt(z, vec(Q(), {1, 0})).one_component.is_zero());

  FittingPair fs = fitting_wrt(standard_q_2_0(), vec(Q(), {1, 0, 0}));
  CHECK(fs.one_component == span_of(Q(), 3, {{0, 1, 0}, {0, 0, 1}}));

  // invariance and invertibility on the one-component
  for (const LeibnizAlgebra& b : {example1(), example2_j2k3(), standard_q_2_0()}) {
    auto xb = find_nonnilpotent_element(b);
    REQUIRE(xb);
    FittingPair f = fitting_wrt(b, *xb);
    Matrix lx = b.left_mult_matrix(*xb);
    for (const Vec& v : f.null_component.basis())
      CHECK(f.null_component.contains(lx.apply(v)));
    for (const Vec& v : f.one_component.basis())
      CHECK(f.one_component.contains(lx.apply(v)));
    CHECK_FALSE(restriction_matrix(b, *xb, f.one_component).determinant().is_zero());
  }
}

TEST_CASE("find_cartan") {
  auto c1 = find_cartan(example1());
  REQUIRE(c1.cartan);
  CHECK(*c1.cartan == span_of(Q(), 2, {{1, -1}}));

  // chain algebra: the nilpotent self-normalizing subalgebra found is span{x, x^2};
  // the larger span{x, x^2, a^2, a^3} is self-normalizing but NOT nilpotent
  LeibnizAlgebra ex2 = example2_j2k3();
  auto c2 = find_cartan(ex2);
  REQUIRE(c2.cartan);
  CHECK(*c2.cartan == span_of(Q(), 5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}));
  Subspace fn = span_of(Q(), 5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  CHECK(ex2.normalizer(fn) == fn);
  CHECK_FALSE(ex2.is_nilpotent(fn));

  CHECK_FALSE(find_cartan(zero_algebra(Q(), 2)).cartan.has_value());

  // outputs always pass their three defining checks
  for (const LeibnizAlgebra& b : {example1(), ex2, standard_q_2_0()}) {
    auto c = find_cartan(b);
    REQUIRE(c.cartan);
    CHECK(b.is_subalgebra(*c.cartan));
    CHECK(b.is_nilpotent(*c.cartan));
    CHECK(b.normalizer(*c.cartan) == *c.cartan);
  }
}

TEST_CASE("is_nilradical_codim1") {
  LeibnizAlgebra a = example1();
  auto cert = is_nilradical_codim1(a, span_of(Q(), 2, {{0, 1}}));
  CHECK(cert.certified);

  LeibnizAlgebra ex2 = example2_j2k3();
  Subspace A = span_of(Q(), 5, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  CHECK(is_nilradical_codim1(ex2, A).certified);

  // a non-ideal hyperplane is rejected
  auto bad = is_nilradical_codim1(a, span_of(Q(), 2, {{1, 0}}));
  CHECK_FALSE(bad.certified);
  CHECK_FALSE(bad.is_ideal);

  CHECK_THROWS_AS(is_nilradical_codim1(a, a.full_space()), std::invalid_argument);

  // certification implies: adjoining any outside basis vector generates L
  for (std::size_t v = 0; v < a.dim(); ++v) {
    Subspace I = span_of(Q(), 2, {{0, 1}});
    Vec ev = unit_vec(Q(), 2, v);
    if (I.contains(ev)) continue;
    std::vector<Vec> gens = I.basis();
    gens.push_back(ev);
    CHECK(a.ideal_closure(gens).is_full());
  }
}

TEST_CASE("is_cyclic") {
  auto c1 = is_cyclic(example1());
  REQUIRE(c1.generator);
  CHECK(example1().subalgebra_closure({*c1.generator}).is_full());

  // the chain algebra is not cyclic; over GF(5) the search is exhaustive
  CHECK_FALSE(is_cyclic(example2_j2k3()).generator.has_value());
  auto c5 = is_cyclic(example2_j2k3(GF(5)));
  CHECK_FALSE(c5.generator.has_value());
  CHECK(c5.exhaustive);

  auto z1 = is_cyclic(zero_algebra(Q(), 1));
  REQUIRE(z1.generator);
  CHECK(*z1.generator == vec(Q(), {1}));

  // the Gaussian counterexample is cyclic with generator z
  auto cg = is_cyclic(counterexample());
  REQUIRE(cg.generator);
  CHECK(counterexample().subalgebra_closure({*cg.generator}).is_full());
}

TEST_CASE("action_irreducible") {
  LeibnizAlgebra a = example1();
  CHECK(action_irreducible(a, vec(Q(), {1, -1}), span_of(Q(), 2, {{0, 1}})) ==
        IrreducibleOutcome::Irreducible);

  LeibnizAlgebra st = standard_q_2_0();
  Subspace L1 = span_of(Q(), 3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(action_irreducible(st, vec(Q(), {1, 0, 0}), L1) == IrreducibleOutcome::Irreducible);

  // over GF(7), 3^2 = 2, so lambda^2 - 2 factors and the action is reducible
  LeibnizAlgebra st7 = construct_standard(GF(7), vec(GF(7), {2, 0})).algebra;
  Subspace L17 = span_of(GF(7), 3, {{0, 1, 0}, {0, 0, 1}});
  CHECK(action_irreducible(st7, vec(GF(7), {1, 0, 0}), L17) == IrreducibleOutcome::Reducible);

  // W not invariant
  CHECK_THROWS_AS(action_irreducible(st, vec(Q(), {1, 0, 0}), span_of(Q(), 3, {{0, 1, 0}})),
                  std::invalid_argument);
}
