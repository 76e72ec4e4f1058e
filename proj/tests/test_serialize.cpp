#include <random>

#include "doctest.h"
#include "neutro/serialize.hpp"
#include "neutro/service.hpp"

using namespace neutro;

TEST_CASE("scalar json round trip is bit-exact") {
  BaseRing z = BaseRing::integers();
  NeutroScalar big{z, be_parse(z, "123456789012345678901234567890"),
                   be_parse(z, "-98765432109876543210")};
  Json j = scalar_to_json(big);
  CHECK(j["ring"] == "Z");
  CHECK(scalar_from_json(j) == big);

  BaseRing q = BaseRing::rationals();
  NeutroScalar frac{q, be_parse(q, "22/7"), be_parse(q, "-3/4")};
  CHECK(scalar_from_json(scalar_to_json(frac)) == frac);

  BaseRing z12 = BaseRing::mod(12);
  Json jz = scalar_to_json(ns_make(z12, 7, 5));
  CHECK(jz["ring"]["Zn"] == 12);
  CHECK(scalar_from_json(jz) == ns_make(z12, 7, 5));

  SUBCASE("random round trips") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int k = 0; k < 200; ++k) {
      NeutroScalar s = ns_make(z, d(rng), d(rng));
      REQUIRE(scalar_from_json(scalar_to_json(s)) == s);
    }
  }
}

TEST_CASE("magma json and csv") {
  FiniteMagma m = neutrosophify_tagged(build_cyclic(3));
  Json j = magma_to_json(m);
  CHECK(j["elements"].size() == 6);
  CHECK(j["identity"] == 0);
  FiniteMagma back = magma_from_json(j);
  CHECK(back.size() == m.size());
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b) REQUIRE(back.op(a, b) == m.op(a, b));
  CHECK(back.element(4).neutro);

  std::string csv = magma_to_csv(build_cyclic(2));
  CHECK(csv == "*,1,g\n1,1,g\ng,g,1\n");
}

TEST_CASE("ring json") {
  CHECK(finite_ring_to_json(FiniteRing::parametric(5)) == Json{{"parametric", 5}});
}

TEST_CASE("polynomial json round trip") {
  BaseRing z = BaseRing::integers();
  NeutroPoly p = poly_parse(z, "(2-I) + (7+5I)x - 8I x^2");
  Json j = poly_to_json(p);
  CHECK(j.is_array());
  CHECK(poly_from_json(z, j) == p);
  NeutroPoly m = poly_parse(z, "x1 x2 + (1+I)x2");
  CHECK(poly_from_json(z, poly_to_json(m)) == m);
}

TEST_CASE("matrix json round trip") {
  BaseRing z2 = BaseRing::mod(2);
  NeutroMatrix m = matrix_from_json(z2, Json::parse(R"([["1+I","0"],["1","I"]])"));
  CHECK(m.at(0, 0) == ns_make(z2, 1, 1));
  CHECK(matrix_from_json(z2, matrix_to_json(m)) == m);
}

TEST_CASE("formal sum json round trip") {
  AlgebraPtr a = make_algebra(ScalarRing{ScalarKind::Neutro, BaseRing::mod(4)},
                              neutrosophify_tagged(build_cyclic(2)));
  FormalSum f = fs_parse(a, "1 + 2I*g + 3*gI");
  Json j = formal_sum_to_json(f, "m0");
  CHECK(j["magma_ref"] == "m0");
  CHECK(formal_sum_from_json(a, j) == f);
}

TEST_CASE("service reports carry the schema version and stable ordering") {
  Json res = run_command(Json{{"cmd", "ring.analyze"}, {"ring", {{"zn", 5}}}});
  CHECK(res["schema_version"] == kSchemaVersion);
  CHECK(res["ok"] == true);
  const Json& body = res["result"];
  CHECK(body["order"] == 25);
  CHECK(body["characteristic"] == 5);
  int pseudo = 0, neutro = 0;
  for (const auto& rec : body["ideals"]) {
    if (rec["kind"] == "PseudoNeutrosophicIdeal") ++pseudo;
    if (rec["kind"] == "NeutrosophicIdeal") ++neutro;
  }
  CHECK(pseudo == 1);
  CHECK(neutro == 0);
  // identical invocations yield byte-identical output
  Json again = run_command(Json{{"cmd", "ring.analyze"}, {"ring", {{"zn", 5}}}});
  CHECK(res.dump() == again.dump());
}

TEST_CASE("service errors carry usable codes") {
  CHECK_THROWS_AS(run_command(Json{{"cmd", "nope"}}), ServiceError);
  try {
    run_command(Json{{"cmd", "ring.analyze"}, {"ring", {{"zn", 1}}}});
    FAIL("expected an error");
  } catch (const ServiceError& e) {
    CHECK(e.code == 1);
  }
}
