#include <random>

#include "doctest.h"
#include "neutro/scalar.hpp"

using namespace neutro;

namespace {

NeutroScalar sc(const BaseRing& r, std::int64_t a, std::int64_t b) { return ns_make(r, a, b); }

NeutroScalar random_scalar(const BaseRing& ring, std::mt19937_64& rng) {
  switch (ring.kind) {
    case RingKind::Integers: {
      std::uniform_int_distribution<int> d(-40, 40);
      return ns_make(ring, d(rng), d(rng));
    }
    case RingKind::Rationals: {
      std::uniform_int_distribution<int> n(-30, 30);
      std::uniform_int_distribution<int> den(1, 12);
      return {ring, be_make_rat(ring, n(rng), den(rng)), be_make_rat(ring, n(rng), den(rng))};
    }
    case RingKind::Mod: {
      std::uniform_int_distribution<std::int64_t> d(0, ring.modulus - 1);
      return ns_make(ring, d(rng), d(rng));
    }
  }
  throw std::logic_error("bad ring");
}

const std::vector<BaseRing> kRings{BaseRing::integers(), BaseRing::rationals(), BaseRing::mod(7),
                                   BaseRing::mod(12)};

}  // namespace

TEST_CASE("addition matches the worked cases") {
  BaseRing z2 = BaseRing::mod(2);
  CHECK(ns_add(sc(z2, 1, 1), sc(z2, 1, 1)) == ns_zero(z2));  // characteristic 2
  BaseRing z = BaseRing::integers();
  NeutroScalar x = sc(z, 3, -4);
  CHECK(ns_add(x, ns_zero(z)) == x);
  BaseRing z7 = BaseRing::mod(7);
  CHECK(ns_add(sc(z7, 2, 3), sc(z7, 5, 9)) == sc(z7, 0, 5));
}

TEST_CASE("multiplication matches the worked cases") {
  BaseRing z3 = BaseRing::mod(3);
  CHECK(ns_mul(sc(z3, 0, 2), sc(z3, 0, 2)) == ns_indeterminate(z3));  // (2I)^2 = I mod 3
  BaseRing z = BaseRing::integers();
  CHECK(ns_is_zero(ns_mul(sc(z, 8, -8), sc(z, 0, 5))));  // (8-8I) * 5I = 0
  BaseRing z4 = BaseRing::mod(4);
  CHECK(ns_is_zero(ns_mul(sc(z4, 2, 2), sc(z4, 2, 2))));  // (2+2I)^2 = 0
}

TEST_CASE("split and unsplit") {
  BaseRing z = BaseRing::integers();
  SplitPair p = split(sc(z, 2, 1));
  CHECK(be_to_string(p.u) == "2");
  CHECK(be_to_string(p.v) == "3");
  BaseRing z2 = BaseRing::mod(2);
  CHECK(unsplit({be_make(z2, 0), be_make(z2, 1)}, z2) == ns_indeterminate(z2));
  // split of a product is the componentwise product: (2-I)(7+I) = 14-6I -> (14, 8)
  NeutroScalar prod = ns_mul(sc(z, 2, -1), sc(z, 7, 1));
  CHECK(prod == sc(z, 14, -6));
  SplitPair sp = split(prod);
  CHECK(be_to_string(sp.u) == "14");
  CHECK(be_to_string(sp.v) == "8");
  SplitPair a = split(sc(z, 2, -1)), b = split(sc(z, 7, 1));
  CHECK(be_mul(a.u, b.u) == sp.u);
  CHECK(be_mul(a.v, b.v) == sp.v);
}

TEST_CASE("units") {
  BaseRing z3 = BaseRing::mod(3);
  auto inv = classify_unit(sc(z3, 1, 1));
  REQUIRE(inv.has_value());
  CHECK(*inv == sc(z3, 1, 1));  // (1+I)(1+I) = 1 mod 3
  CHECK(*classify_unit(ns_one(z3)) == ns_one(z3));
  auto inv2 = classify_unit(sc(z3, 2, 2));
  REQUIRE(inv2.has_value());
  CHECK(*inv2 == sc(z3, 2, 2));  // (2+2I)^2 = 1 mod 3
  for (const auto& r : kRings) CHECK_FALSE(classify_unit(ns_indeterminate(r)).has_value());
  BaseRing z = BaseRing::integers();
  CHECK(*classify_unit(sc(z, 1, -2)) == sc(z, 1, -2));  // (1-2I)^2 = 1
}

TEST_CASE("idempotents") {
  for (const auto& r : kRings) {
    CHECK(ns_is_idempotent(ns_indeterminate(r)));
    CHECK(ns_is_idempotent(ns_zero(r)));
    CHECK(ns_is_idempotent(ns_one(r)));
  }
  BaseRing z3 = BaseRing::mod(3);
  CHECK(ns_is_idempotent(sc(z3, 1, 2)));  // (1+2I)^2 = 1+2I
}

TEST_CASE("zero divisor classification") {
  BaseRing z4 = BaseRing::mod(4);
  SUBCASE("per-element, deterministic witness") {
    ZeroDivisorClass c = classify_zero_divisor(sc(z4, 2, 3));
    CHECK(c.tag == ZeroDivisorTag::Neutrosophic);
    REQUIRE(c.witness.has_value());
    CHECK(*c.witness == sc(z4, 2, 2));  // the only nonzero annihilator
    ZeroDivisorClass t = classify_zero_divisor(sc(z4, 2, 2));
    CHECK(t.tag == ZeroDivisorTag::TrivialNeutrosophic);
    REQUIRE(t.witness.has_value());
    CHECK(*t.witness == ns_indeterminate(z4));
  }
  SUBCASE("units are never zero divisors") {
    BaseRing z5 = BaseRing::mod(5);
    CHECK(classify_zero_divisor(ns_one(z5)).tag == ZeroDivisorTag::None);
  }
  SUBCASE("pair taxonomy") {
    CHECK(classify_zero_divisor_pair(sc(z4, 2, 2), sc(z4, 0, 1)) ==
          ZeroDivisorTag::TrivialNeutrosophic);
    CHECK(classify_zero_divisor_pair(sc(z4, 2, 2), sc(z4, 2, 2)) == ZeroDivisorTag::Neutrosophic);
    CHECK(classify_zero_divisor_pair(sc(z4, 2, 3), sc(z4, 2, 2)) == ZeroDivisorTag::Neutrosophic);
    CHECK(classify_zero_divisor_pair(sc(z4, 2, 2), sc(z4, 2, 0)) ==
          ZeroDivisorTag::SemiNeutrosophic);
    CHECK(classify_zero_divisor_pair(sc(z4, 2, 0), sc(z4, 2, 0)) == ZeroDivisorTag::Plain);
  }
  SUBCASE("integral-domain bases use the split pattern") {
    BaseRing z = BaseRing::integers();
    ZeroDivisorClass c = classify_zero_divisor(sc(z, 8, -8));
    CHECK(c.tag == ZeroDivisorTag::TrivialNeutrosophic);
    CHECK(classify_zero_divisor(sc(z, 3, 1)).tag == ZeroDivisorTag::None);
  }
}

TEST_CASE("ring axioms hold on random triples") {
  std::mt19937_64 rng(7);
  for (const auto& r : kRings) {
    for (int k = 0; k < 10000; ++k) {
      NeutroScalar x = random_scalar(r, rng), y = random_scalar(r, rng),
                   z = random_scalar(r, rng);
      REQUIRE(ns_add(x, y) == ns_add(y, x));
      REQUIRE(ns_mul(x, y) == ns_mul(y, x));
      REQUIRE(ns_add(ns_add(x, y), z) == ns_add(x, ns_add(y, z)));
      REQUIRE(ns_mul(ns_mul(x, y), z) == ns_mul(x, ns_mul(y, z)));
      REQUIRE(ns_mul(x, ns_add(y, z)) == ns_add(ns_mul(x, y), ns_mul(x, z)));
    }
  }
}

TEST_CASE("split is a ring homomorphism on random pairs") {
  std::mt19937_64 rng(11);
  for (const auto& r : kRings) {
    for (int k = 0; k < 10000; ++k) {
      NeutroScalar x = random_scalar(r, rng), y = random_scalar(r, rng);
      SplitPair sx = split(x), sy = split(y);
      SplitPair s = split(ns_add(x, y));
      REQUIRE(s.u == be_add(sx.u, sy.u));
      REQUIRE(s.v == be_add(sx.v, sy.v));
      SplitPair p = split(ns_mul(x, y));
      REQUIRE(p.u == be_mul(sx.u, sy.u));
      REQUIRE(p.v == be_mul(sx.v, sy.v));
      REQUIRE(unsplit(p, r) == ns_mul(x, y));
    }
  }
}

TEST_CASE("oracle agreement is exhaustive for n <= 12") {
  for (std::int64_t n = 2; n <= 12; ++n) {
    BaseRing zn = BaseRing::mod(n);
    auto all = enumerate_scalars(zn);
    REQUIRE(all.size() == static_cast<size_t>(n * n));  // o(<Zn u I>) = n^2
    for (const auto& x : all) {
      SplitPair s = split(x);
      REQUIRE(classify_unit(x).has_value() == (be_is_unit(s.u) && be_is_unit(s.v)));
      REQUIRE(ns_is_idempotent(x) == (be_is_idempotent(s.u) && be_is_idempotent(s.v)));
      bool witness = !ns_is_zero(x) && !zero_divisor_witnesses(x).empty();
      REQUIRE(ns_is_zero_divisor(x) == witness);
    }
  }
}

TEST_CASE("scalar parsing and printing") {
  BaseRing z = BaseRing::integers();
  CHECK(ns_parse(z, "2-5I") == sc(z, 2, -5));
  CHECK(ns_parse(z, "-8I") == sc(z, 0, -8));
  CHECK(ns_parse(z, "I") == ns_indeterminate(z));
  CHECK(ns_parse(z, "7") == sc(z, 7, 0));
  CHECK(ns_to_string(sc(z, 2, -5)) == "2 - 5I");
  CHECK(ns_to_string(sc(z, 0, 1)) == "I");
  BaseRing q = BaseRing::rationals();
  NeutroScalar h = ns_parse(q, "1/2+3/4I");
  CHECK(be_to_string(h.a) == "1/2");
  CHECK(be_to_string(h.b) == "3/4");
  BaseRing z7 = BaseRing::mod(7);
  CHECK(ns_parse(z7, "9+10I") == sc(z7, 2, 3));
}
