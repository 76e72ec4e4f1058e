#include "doctest.h"
#include "neutro/semigroup_analysis.hpp"

using namespace neutro;

namespace {

Subset by_labels(const FiniteMagma& m, std::initializer_list<const char*> ls) {
  std::vector<std::string> v(ls.begin(), ls.end());
  return subset_from_labels(m, v);
}

FiniteMagma full_mult_ambient(std::int64_t n) {
  BaseRing zn = BaseRing::mod(n);
  return neutrosophify_ambient(zn, false, ambient_generators_all(zn));
}

}  // namespace

TEST_CASE("subsemigroup classification") {
  SUBCASE("Z12 sits inside <Z12 u I> as a plain subsemigroup") {
    FiniteMagma m = full_mult_ambient(12);
    CHECK(m.size() == 144);
    Subset z12(m.size());
    for (int i = 0; i < m.size(); ++i)
      if (!m.element(i).neutro) z12.add(i);
    CHECK(z12.count() == 12);
    CHECK(classify_subsemigroup(m, z12) == SubsemigroupKind::PlainSubsemigroup);
  }
  SUBCASE("the all-idempotent subset of the mod-3 carrier") {
    FiniteMagma m = full_mult_ambient(3);
    Subset p = by_labels(m, {"0", "1", "I", "1 + 2I"});
    CHECK(is_closed(m, p));
    for (int i : p.indices()) REQUIRE(m.op(i, i) == i);
    // neutro elements + plain subsemigroup {0,1} + ambient identity inside
    CHECK(classify_subsemigroup(m, p) == SubsemigroupKind::NeutrosophicSubmonoid);
  }
  SUBCASE("singleton identity") {
    FiniteMagma m = full_mult_ambient(3);
    CHECK(classify_subsemigroup(m, by_labels(m, {"1"})) == SubsemigroupKind::PlainSubsemigroup);
  }
  SUBCASE("enumeration on the mod-3 carrier is exhaustive") {
    FiniteMagma m = full_mult_ambient(3);
    auto en = subsemigroups(m);
    CHECK(en.exhaustive);
    bool found = false;
    Subset p = by_labels(m, {"0", "1", "I", "1 + 2I"});
    for (const auto& rec : en.subsemigroups)
      if (rec.subset == p) found = true;
    CHECK(found);
  }
}

TEST_CASE("semigroup ideals") {
  SUBCASE("left-zero semigroup has one-sided ideals") {
    FiniteMagma lz = build_custom({"a", "b"}, {false, false}, {0, 0, 1, 1}, "*");
    auto en = semigroup_ideals(lz);
    bool right_only = false;
    for (const auto& rec : en.ideals)
      if (rec.sided == IdealSide::Right && rec.order == 1) right_only = true;
    CHECK(right_only);  // {a}: {a}*S = {a} but S*{a} = {a,b}
  }
  SUBCASE("{0} is a two-sided minimal ideal in a magma with zero") {
    FiniteMagma m = full_mult_ambient(3);
    auto en = semigroup_ideals(m);
    bool found = false;
    for (const auto& rec : en.ideals)
      if (rec.order == 1 && rec.subset.contains(*m.zero())) {
        found = true;
        CHECK(rec.sided == IdealSide::TwoSided);
        CHECK(rec.minimal);
      }
    REQUIRE(found);
  }
  SUBCASE("principal ideals match their definition") {
    FiniteMagma m = build_zn_mul(6);
    for (int g = 0; g < m.size(); ++g) {
      Subset p = principal_semigroup_ideal(m, g);
      // {g} u gS u Sg u SgS by brute force
      Subset expect(m.size());
      expect.add(g);
      for (int x = 0; x < m.size(); ++x) {
        expect.add(m.op(g, x));
        expect.add(m.op(x, g));
        for (int y = 0; y < m.size(); ++y) expect.add(m.op(m.op(x, g), y));
      }
      REQUIRE(p == closure(m, expect));
    }
  }
}

TEST_CASE("idempotent semigroup classification") {
  CHECK(idempotent_semigroup_classify(full_mult_ambient(2)) ==
        IdempotentSemigroupKind::Idempotent);
  CHECK(idempotent_semigroup_classify(full_mult_ambient(3)) ==
        IdempotentSemigroupKind::WeaklyIdempotent);
  CHECK(idempotent_semigroup_classify(build_cyclic(2)) == IdempotentSemigroupKind::Neither);
}

TEST_CASE("zero divisors and invertibles per element") {
  FiniteMagma m = full_mult_ambient(3);
  auto recs = zero_divisors_and_units(m);
  auto at = [&](const char* l) { return recs[*m.index_of(l)]; };

  // (2+I)I = 0 and (2+I)2I = 0 (mod 3)
  auto zd = at("2 + I").zero_divisor_witnesses;
  auto has = [&](const char* l) {
    return std::find(zd.begin(), zd.end(), *m.index_of(l)) != zd.end();
  };
  CHECK(has("I"));
  CHECK(has("2I"));

  CHECK(*at("1").inverse == *m.index_of("1"));
  CHECK(*at("2 + 2I").inverse == *m.index_of("2 + 2I"));  // (2+2I)^2 = 1
  CHECK(*at("1 + I").inverse == *m.index_of("1 + I"));    // (1+I)^2 = 1
  CHECK_FALSE(at("I").inverse.has_value());
}

TEST_CASE("union of two neutrosophic subsemigroups need not be closed") {
  BaseRing z12 = BaseRing::mod(12);
  FiniteMagma m = neutrosophify_ambient(z12, true, ambient_generators_determinate(z12));
  REQUIRE(m.size() == 144);
  // additive analogues of <2Z u I> and <3Z u I>
  Subset p1(m.size()), p2(m.size());
  for (int i = 0; i < m.size(); ++i) {
    const NeutroScalar& v = m.ambient->values[i];
    std::int64_t a = std::get<std::int64_t>(v.a.v);
    if (a % 2 == 0) p1.add(i);
    if (a % 3 == 0) p2.add(i);
  }
  CHECK(is_closed(m, p1));
  CHECK(is_closed(m, p2));
  CHECK_FALSE(is_closed(m, p1.unite(p2)));  // 2 + 3 = 5 escapes
}

TEST_CASE("non-associative input is rejected") {
  FiniteMagma na = build_custom({"a", "b"}, {false, false}, {1, 1, 1, 0}, "*");
  CHECK_THROWS_AS(subsemigroups(na), std::invalid_argument);
  CHECK_THROWS_AS(semigroup_ideals(na), std::invalid_argument);
}
