#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "leiblab/io.hpp"

#include "fixtures.hpp"

using namespace leiblab;
using namespace fixtures;

namespace {

std::string data_path(const std::string& name) {
  return std::string(LEIBLAB_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("loading the shipped two-dimensional cyclic algebra") {
  LeibnizAlgebra a = load_algebra(data_path("ex1.json"));
  CHECK(a.dim() == 2);
  CHECK(a.field() == Q());
  CHECK(a.labels() == std::vector<std::string>{"z", "z^2"});
  CHECK(a.sparse_table() == example1().sparse_table());
}

TEST_CASE("every shipped algebra file loads and validates") {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(LEIBLAB_DATA_DIR)) {
    if (entry.path().extension() != ".json") continue;
    LeibnizAlgebra a = load_algebra(entry.path().string());
    CHECK_FALSE(a.validate());
    ++count;
  }
  CHECK(count >= 6);
}

TEST_CASE("load errors carry positions and reasons") {
  CHECK_THROWS_WITH_AS(algebra_from_json_text("{", "f"),
                       doctest::Contains("JSON parse error"), LoadError);
  // Gaussian coefficient under field Q
  std::string wrong_field = R"({"field":"Q","dim":2,"products":[
    {"left":0,"right":0,"result":{"1":"2i"}}]})";
  CHECK_THROWS_WITH_AS(algebra_from_json_text(wrong_field, "f"),
                       doctest::Contains("invalid over Q"), LoadError);
  // index out of range
  std::string bad_index = R"({"field":"Q","dim":3,"products":[
    {"left":0,"right":5,"result":{"0":"1"}}]})";
  CHECK_THROWS_WITH_AS(algebra_from_json_text(bad_index, "f"),
                       doctest::Contains("out of range"), LoadError);
  // dimension zero
  CHECK_THROWS_WITH_AS(algebra_from_json_text(R"({"field":"Q","dim":0})", "f"),
                       doctest::Contains("dimension 0"), LoadError);
  // violation of the identity is a load error with a witness triple
  std::string not_leibniz = R"({"field":"Q","dim":2,"products":[
    {"left":0,"right":0,"result":{"1":"1"}},
    {"left":0,"right":1,"result":{"0":"1"}}]})";
  CHECK_THROWS_WITH_AS(algebra_from_json_text(not_leibniz, "f"),
                       doctest::Contains("Leibniz identity fails"), LoadError);
  // duplicate products
  std::string dup = R"({"field":"Q","dim":1,"products":[
    {"left":0,"right":0,"result":{}},{"left":0,"right":0,"result":{}}]})";
  CHECK_THROWS_WITH_AS(algebra_from_json_text(dup, "f"), doctest::Contains("duplicate"), LoadError);
}

TEST_CASE("serialization round trip is the identity on canonical files") {
  for (const auto& entry : std::filesystem::directory_iterator(LEIBLAB_DATA_DIR)) {
    if (entry.path().extension() != ".json") continue;
    LeibnizAlgebra a = load_algebra(entry.path().string());
    std::string once = algebra_to_json_text(a);
    LeibnizAlgebra b = algebra_from_json_text(once, "round-trip");
    CHECK(algebra_to_json_text(b) == once);
    CHECK(b.sparse_table() == a.sparse_table());
    CHECK(b.labels() == a.labels());
  }
}

TEST_CASE("transplant") {
  LeibnizAlgebra a5 = transplant_to_gf(example1(), 5);
  CHECK(a5.field() == GF(5));
  CHECK_FALSE(a5.validate());
  CHECK(a5.table(0, 0) == vec(GF(5), {0, 1}));

  // denominators must be units mod p
  LeibnizAlgebra::ProductTable t;
  t[{0, 0}] = Vec{Scalar::zero(Q()), Scalar::parse("1/3", Q())};
  t[{0, 1}] = Vec{Scalar::zero(Q()), Scalar::parse("1/3", Q())};
  LeibnizAlgebra frac = LeibnizAlgebra::checked(Q(), 2, {}, t);
  CHECK_THROWS_WITH_AS(transplant_to_gf(frac, 3), doctest::Contains("not a unit"), LoadError);
  CHECK(transplant_to_gf(frac, 5).table(0, 0)[1].residue() == 2);  // 3^-1 = 2 mod 5

  // only Q-algebras transplant
  CHECK_THROWS_AS(transplant_to_gf(counterexample(), 5), LoadError);
  CHECK_THROWS_AS(transplant_to_gf(example1(GF(3)), 5), LoadError);
}

TEST_CASE("row parsing") {
  auto rows = parse_rows("1,0;0,1", Q(), 2);
  CHECK(rows.size() == 2);
  CHECK(rows[0] == vec(Q(), {1, 0}));
  CHECK_THROWS(parse_rows("1,0,0", Q(), 2));
  CHECK_THROWS(parse_rows("", Q(), 2));
  CHECK(parse_scalar_list("2,0", Q()).size() == 2);
}

TEST_CASE("digest is stable") {
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("leibniz") == fnv1a64_hex("leibniz"));
  CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
}

TEST_CASE("analysis reports are deterministic") {
  LeibnizAlgebra a = load_algebra(data_path("ex1.json"));
  AnalysisReport r1 = analyze_algebra(a, "deadbeef", 0);
  AnalysisReport r2 = analyze_algebra(a, "deadbeef", 0);
  CHECK(report_to_json(r1) == report_to_json(r2));
  CHECK(report_to_text(r1) == report_to_text(r2));
  CHECK(report_to_json(r1).find("minnon-cert/1") != std::string::npos);
  // report mentions the certificate outcome
  CHECK(report_to_text(r1).find("theorem check: SUCCESS") != std::string::npos);
}
