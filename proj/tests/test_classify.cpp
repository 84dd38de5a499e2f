#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace leiblab;
using namespace fixtures;

namespace {

MinNonCertificate expect_cert(const VerifyResult& v) {
  if (std::holds_alternative<VerifyFailure>(v)) {
    const auto& f = std::get<VerifyFailure>(v);
    FAIL("expected certificate, got failure at stage ", f.stage, ": ", f.detail);
  }
  return std::get<MinNonCertificate>(v);
}

}  // namespace

TEST_CASE("construct_standard") {
  // k = 0, c_0 = 1: the x,a presentation of the 2-dim cyclic algebra
  StandardAlgebra s1 = construct_standard(Q(), vec(Q(), {1}));
  CHECK(s1.algebra.dim() == 2);
  CHECK(s1.algebra.table(0, 1) == vec(Q(), {0, 1}));  // x a0 = a0
  CHECK(s1.p == Polynomial::parse("-1,1", Q()));
  CHECK_FALSE(s1.algebra.validate());

  StandardAlgebra s2 = construct_standard(Q(), vec(Q(), {2, 0}));
  CHECK(s2.algebra.dim() == 3);
  CHECK(s2.p == Polynomial::parse("-2,0,1", Q()));

  StandardAlgebra s3 = construct_standard(GF(3), vec(GF(3), {2, 0}));
  CHECK_FALSE(s3.algebra.validate());
  CHECK(s3.algebra.field().characteristic == 3);

  CHECK_THROWS_AS(construct_standard(Q(), vec(Q(), {0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(construct_standard(Q(), {}), std::invalid_argument);
}

TEST_CASE("construct_chain") {
  LeibnizAlgebra a = construct_chain(Q(), 2, 3);
  CHECK(a.dim() == 5);
  CHECK_FALSE(a.validate());
  // N = Leib(L) = span{x^2, a^2, a^3}
  CHECK(a.leibniz_kernel() ==
        span_of(Q(), 5, {{0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  // A^3 = span{a^3} is nonzero and sits inside Leib(L)
  Subspace A = span_of(Q(), 5, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  Subspace A3 = a.product_space(A, a.product_space(A, A));
  CHECK(A3 == span_of(Q(), 5, {{0, 0, 0, 0, 1}}));
  CHECK(a.leibniz_kernel().contains(A3));

  CHECK_FALSE(construct_chain(GF(5), 1, 1).validate());
  CHECK(construct_chain(GF(5), 1, 1).dim() == 2);  // basis {x, a}

  CHECK_THROWS_AS(construct_chain(GF(3), 1, 3), std::invalid_argument);  // p <= k collapses
  CHECK_THROWS_AS(construct_chain(Q(), 0, 1), std::invalid_argument);
}

TEST_CASE("construct_cyclic") {
  CyclicConstruction c1 = construct_cyclic(Q(), 2, vec(Q(), {0, 1}));
  CHECK_FALSE(c1.violation);
  CHECK(c1.algebra.sparse_table() == example1().sparse_table());

  Vec top{Scalar::zero(Qi()), Scalar::one(Qi()), Scalar::from_gaussian(0, 2)};
  CyclicConstruction c2 = construct_cyclic(Qi(), 3, top);
  CHECK_FALSE(c2.violation);

  CyclicConstruction c3 = construct_cyclic(Q(), 2, vec(Q(), {0, 0}));
  CHECK_FALSE(c3.violation);
  CHECK(c3.algebra.is_nilpotent());

  // a top row with t_1 != 0 breaks the identity; reported, not thrown
  CyclicConstruction c4 = construct_cyclic(Q(), 3, vec(Q(), {1, 0, 0}));
  CHECK(c4.violation.has_value());
}

TEST_CASE("verify_theorem on the 2-dim cyclic algebra") {
  LeibnizAlgebra a = example1();
  MinNonCertificate c = expect_cert(verify_theorem(a));
  CHECK(c.N.is_zero());
  CHECK(c.L1 == span_of(Q(), 2, {{0, 1}}));
  CHECK(c.F == span_of(Q(), 2, {{1, -1}}));
  CHECK(c.A == span_of(Q(), 2, {{0, 1}}));
  CHECK(c.p == Polynomial::parse("-1,1", Q()));
  CHECK(c.p_irreducible == IrreducibleOutcome::Irreducible);
  CHECK(c.dichotomy == Dichotomy::Cyclic);
  REQUIRE(c.generator);
  CHECK(a.subalgebra_closure({*c.generator}).is_full());
  // Leib(L) is not inside N here, so the cyclic branch really was exercised
  CHECK_FALSE(c.N.contains(a.leibniz_kernel()));
}

TEST_CASE("verify_theorem on the j=2,k=3 chain algebra") {
  LeibnizAlgebra a = example2_j2k3();
  MinNonCertificate c = expect_cert(verify_theorem(a));
  Subspace N = span_of(Q(), 5, {{0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  CHECK(c.N == N);
  CHECK(a.leibniz_kernel() == N);
  CHECK(c.L1 == span_of(Q(), 5, {{0, 0, 1, 0, 0}}));
  CHECK(c.A == span_of(Q(), 5, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  CHECK(c.p == Polynomial::parse("-1,1", Q()));
  CHECK(c.dichotomy == Dichotomy::LeibInN);
  CHECK(c.A_is_nilradical);
  CHECK(c.A_cubed_in_leib);
  CHECK(c.N_formula_holds);
  CHECK(c.x_squared_in_N);
}

TEST_CASE("verify_theorem on the quadratic standard algebra, both fields") {
  MinNonCertificate c = expect_cert(verify_theorem(standard_q_2_0()));
  CHECK(c.p == Polynomial::parse("-2,0,1", Q()));
  CHECK(c.L1.dim() == 2);
  CHECK(c.N.is_zero());
  CHECK(c.dichotomy == Dichotomy::Cyclic);

  // identical constants over GF(7): lambda^2 - 2 factors, and that is the verdict
  VerifyResult v7 = verify_theorem(construct_standard(GF(7), vec(GF(7), {2, 0})).algebra);
  REQUIRE(std::holds_alternative<VerifyFailure>(v7));
  CHECK(std::get<VerifyFailure>(v7).stage == "irreducibility");
}

TEST_CASE("structure match does not imply minimality: the Gaussian counterexample") {
  // The cyclic algebra z z^3 = z^2 + 2i z^3 satisfies every structural
  // conclusion (via x = z + z^3, p = lambda - i), yet it has a
  // nonnilpotent proper subalgebra, so it is not minimal nonnilpotent.
  LeibnizAlgebra a = counterexample();
  MinNonCertificate c = expect_cert(verify_theorem(a));
  CHECK(c.p == Polynomial(Qi(), Vec{Scalar::from_gaussian(0, -1), Scalar::one(Qi())}));
  CHECK(c.N == Subspace::span(Qi(), 3, {Vec{Scalar::zero(Qi()), Scalar::one(Qi()),
                                            Scalar::from_gaussian(0, 1)}}));
  CHECK(c.dichotomy == Dichotomy::Cyclic);
  // ... while M = span{iz - z^2, z^2 + i z^3} is a nonnilpotent witness
  Vec m1{Scalar::from_gaussian(0, 1), Scalar::from_gaussian(-1, 0), Scalar::zero(Qi())};
  Vec m2{Scalar::zero(Qi()), Scalar::one(Qi()), Scalar::from_gaussian(0, 1)};
  Subspace M = a.subalgebra_closure({m1, m2});
  CHECK(M.dim() == 2);
  CHECK_FALSE(a.is_nilpotent(M));
}

TEST_CASE("verify_theorem rejects bad hypotheses") {
  VerifyResult nil = verify_theorem(zero_algebra(Q(), 2));
  REQUIRE(std::holds_alternative<VerifyFailure>(nil));
  CHECK(std::get<VerifyFailure>(nil).stage == "hypothesis");

  // nilpotent cyclic construction is rejected by the gate
  VerifyResult z = verify_theorem(construct_cyclic(Q(), 3, vec(Q(), {0, 0, 0})).algebra);
  REQUIRE(std::holds_alternative<VerifyFailure>(z));
  CHECK(std::get<VerifyFailure>(z).stage == "hypothesis");
}

TEST_CASE("certificate invariants on successful runs") {
  for (const LeibnizAlgebra& a : {example1(), example2_j2k3(), standard_q_2_0(),
                                  construct_standard(Q(), vec(Q(), {1, 1, 0})).algebra}) {
    MinNonCertificate c = expect_cert(verify_theorem(a));
    CHECK(c.F.dim() == 1);
    CHECK(c.N.intersect(c.L1).is_zero());
    CHECK((c.N + c.L1 + c.F).is_full());
    CHECK(c.N.dim() + c.L1.dim() + c.F.dim() == a.dim());
    CHECK(c.A == c.N + c.L1);
    CHECK(a.is_ideal(c.A));
    CHECK(is_nilradical_codim1(a, c.A).certified);
    CHECK(a.product_space(c.N, c.L1).is_zero());
    if (c.p_irreducible == IrreducibleOutcome::Irreducible)
      CHECK(action_irreducible(a, c.x, c.L1) == IrreducibleOutcome::Irreducible);
    CHECK(check_remark_products(a, c));
  }
}

TEST_CASE("round trip: verify(construct_standard) recovers p exactly") {
  std::vector<std::vector<long>> coeff_sets = {{1}, {-2}, {2, 0}, {1, 1}, {-1, -1},
                                               {2, 0, 0}, {1, 1, 0}, {2, 0, 0, 0}};
  for (const auto& cs : coeff_sets) {
    Vec coeffs;
    for (long c : cs) coeffs.push_back(sc(Q(), c));
    StandardAlgebra st = construct_standard(Q(), coeffs);
    REQUIRE(poly_irreducible(st.p).outcome == IrreducibleOutcome::Irreducible);
    MinNonCertificate cert = expect_cert(verify_theorem(st.algebra));
    CHECK(cert.p == st.p);
    CHECK(cert.dichotomy == Dichotomy::Cyclic);  // x + a_0 generates
  }
}

TEST_CASE("check_remark_products") {
  LeibnizAlgebra a = example1();
  CHECK(check_remark_products(a, expect_cert(verify_theorem(a))));
  LeibnizAlgebra st = standard_q_2_0();
  CHECK(check_remark_products(st, expect_cert(verify_theorem(st))));
  LeibnizAlgebra ex2 = example2_j2k3();
  CHECK(check_remark_products(ex2, expect_cert(verify_theorem(ex2))));
}

TEST_CASE("certificate JSON round trip is lossless") {
  for (const LeibnizAlgebra& a : {example1(), example2_j2k3(), standard_q_2_0()}) {
    MinNonCertificate c = expect_cert(verify_theorem(a));
    MinNonCertificate back = certificate_from_json(certificate_to_json(c));
    CHECK(back.field == c.field);
    CHECK(back.dim == c.dim);
    CHECK(back.x == c.x);
    CHECK(back.N == c.N);
    CHECK(back.L1 == c.L1);
    CHECK(back.F == c.F);
    CHECK(back.A == c.A);
    CHECK(back.companion == c.companion);
    CHECK(back.p == c.p);
    CHECK(back.p_irreducible == c.p_irreducible);
    CHECK(back.dichotomy == c.dichotomy);
    CHECK(back.generator.has_value() == c.generator.has_value());
    if (c.generator) CHECK(*back.generator == *c.generator);
    CHECK(back.x_squared_in_N == c.x_squared_in_N);
    CHECK(back.N_formula_holds == c.N_formula_holds);
    CHECK(back.A_is_nilradical == c.A_is_nilradical);
    CHECK(back.A_cubed_in_leib == c.A_cubed_in_leib);
    CHECK(back.decomposition_ok == c.decomposition_ok);
  }
  CHECK_THROWS(certificate_from_json("{\"schema\":\"bogus\"}"));
}
