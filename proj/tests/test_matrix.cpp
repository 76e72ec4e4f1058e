#include <random>

#include "doctest.h"
#include "neutro/matrix.hpp"

using namespace neutro;

namespace {

const BaseRing Z2 = BaseRing::mod(2);

NeutroMatrix M2(const BaseRing& r, std::initializer_list<const char*> es) {
  std::vector<NeutroScalar> v;
  for (const char* e : es) v.push_back(ns_parse(r, e));
  return mat_make(r, 2, v);
}

}  // namespace

TEST_CASE("worked non-commuting product") {
  NeutroMatrix x = M2(Z2, {"I", "0", "1", "I"});
  NeutroMatrix y = M2(Z2, {"1", "I", "I", "0"});
  CHECK(mat_mul(x, y) == M2(Z2, {"I", "I", "1+I", "I"}));
  CHECK(mat_mul(y, x) == M2(Z2, {"0", "I", "I", "0"}));
  CHECK(mat_mul(x, mat_identity(Z2, 2)) == x);
}

TEST_CASE("one-sided zero divisors from the worked example") {
  NeutroMatrix x = M2(Z2, {"1+I", "0", "0", "0"});
  NeutroMatrix y = M2(Z2, {"0", "1+I", "0", "0"});
  CHECK(mat_mul(x, y) == M2(Z2, {"0", "1+I", "0", "0"}));
  CHECK(mat_is_zero(mat_mul(y, x)));

  NeutroMatrix a = M2(Z2, {"1", "0", "0", "0"});
  CHECK(mat_is_zero(mat_mul(y, a)));
  CHECK(mat_mul(a, y) == M2(Z2, {"0", "1+I", "0", "0"}));

  SUBCASE("the search finds a one-sided witness") {
    auto rep = one_sided_zero_divisor_search(x, /*right=*/false);
    REQUIRE(rep.outcome == SearchOutcome::Found);
    REQUIRE(rep.witness.has_value());
    CHECK(mat_is_zero(mat_mul(*rep.witness, x)));
  }
  SUBCASE("invertible matrices have no witness") {
    auto rep = one_sided_zero_divisor_search(mat_identity(Z2, 2), true);
    CHECK(rep.outcome == SearchOutcome::NotFound);
  }
}

TEST_CASE("idempotent report") {
  CHECK(idempotent_report(M2(Z2, {"1+I", "0", "0", "0"})).idempotent);
  CHECK(idempotent_report(M2(Z2, {"1+I", "0", "0", "0"})).neutrosophic);
  CHECK(idempotent_report(M2(Z2, {"1", "0", "0", "0"})).idempotent);
  CHECK_FALSE(idempotent_report(M2(Z2, {"1", "0", "0", "0"})).neutrosophic);
  CHECK(idempotent_report(mat_identity(Z2, 2)).idempotent);
}

TEST_CASE("determinant") {
  CHECK(determinant(mat_identity(Z2, 2)) == ns_one(Z2));
  CHECK(determinant(M2(Z2, {"I", "0", "1", "I"})) == ns_indeterminate(Z2));
  SUBCASE("multiplicative on random pairs") {
    BaseRing z5 = BaseRing::mod(5);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::int64_t> d(0, 4);
    for (int k = 0; k < 1000; ++k) {
      NeutroMatrix x = mat_zero(z5, 2), y = mat_zero(z5, 2);
      for (auto& e : x.entries) e = ns_make(z5, d(rng), d(rng));
      for (auto& e : y.entries) e = ns_make(z5, d(rng), d(rng));
      REQUIRE(determinant(mat_mul(x, y)) == ns_mul(determinant(x), determinant(y)));
    }
  }
}

TEST_CASE("split oracle for matrices") {
  BaseRing z6 = BaseRing::mod(6);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> d(0, 5);
  for (int k = 0; k < 1000; ++k) {
    NeutroMatrix x = mat_zero(z6, 2), y = mat_zero(z6, 2);
    for (auto& e : x.entries) e = ns_make(z6, d(rng), d(rng));
    for (auto& e : y.entries) e = ns_make(z6, d(rng), d(rng));
    SplitMatrix sx = mat_split(x), sy = mat_split(y), sp = mat_split(mat_mul(x, y));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        BaseElement u = be_zero(z6), v = be_zero(z6);
        for (int t = 0; t < 2; ++t) {
          u = be_add(u, be_mul(sx.u[i * 2 + t], sy.u[t * 2 + j]));
          v = be_add(v, be_mul(sx.v[i * 2 + t], sy.v[t * 2 + j]));
        }
        REQUIRE(sp.u[i * 2 + j] == u);
        REQUIRE(sp.v[i * 2 + j] == v);
      }
    REQUIRE(mat_is_invertible(x) ==
            (ns_is_unit(determinant(x))));
  }
}

TEST_CASE("matrix rings are non-commutative from dim 2") {
  for (std::int64_t n : {2, 3, 5}) {
    BaseRing zn = BaseRing::mod(n);
    NeutroMatrix e12 = mat_zero(zn, 2), e21 = mat_zero(zn, 2);
    e12.at(0, 1) = ns_one(zn);
    e21.at(1, 0) = ns_one(zn);
    CHECK_FALSE(mat_mul(e12, e21) == mat_mul(e21, e12));
  }
}

TEST_CASE("unit-determinant magma over <Z2 u I>") {
  FiniteMagma m = invertible_matrices_magma(Z2, 2);
  CHECK(m.size() == 36);  // pairs of invertible classical images
  CHECK(predicates(m).is_group);
}

TEST_CASE("mod-3 matrix family is non-commutative") {
  BaseRing z3 = BaseRing::mod(3);
  // entries drawn from {0, 1, 2, I, 2I}
  NeutroMatrix x = M2(z3, {"0", "1", "1", "0"});
  NeutroMatrix y = M2(z3, {"I", "0", "0", "1"});
  CHECK_FALSE(mat_mul(x, y) == mat_mul(y, x));
}

TEST_CASE("upper-row matrices are a right ideal but not a left ideal") {
  // the containment pattern of the worked 2x2 example over <Z2 u I>
  auto upper = [&](const NeutroScalar& p, const NeutroScalar& q) {
    return mat_make(Z2, 2, {p, q, ns_zero(Z2), ns_zero(Z2)});
  };
  auto scalars = enumerate_scalars(Z2);
  for (const auto& p : scalars)
    for (const auto& q : scalars) {
      NeutroMatrix u = upper(p, q);
      for (const auto& a : scalars)
        for (const auto& b : scalars)
          for (const auto& c : scalars)
            for (const auto& d : scalars) {
              NeutroMatrix g = mat_make(Z2, 2, {a, b, c, d});
              NeutroMatrix right = mat_mul(u, g);
              REQUIRE(ns_is_zero(right.at(1, 0)));
              REQUIRE(ns_is_zero(right.at(1, 1)));
            }
    }
  // one witness breaks left absorption
  NeutroMatrix g = mat_make(Z2, 2, {ns_zero(Z2), ns_zero(Z2), ns_one(Z2), ns_zero(Z2)});
  NeutroMatrix u = upper(ns_one(Z2), ns_zero(Z2));
  NeutroMatrix left = mat_mul(g, u);
  CHECK_FALSE(ns_is_zero(left.at(1, 0)));
}
