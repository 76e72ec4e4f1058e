#include "doctest.h"
#include "neutro/group_analysis.hpp"

using namespace neutro;

namespace {

Subset by_labels(const FiniteMagma& m, std::initializer_list<const char*> ls) {
  std::vector<std::string> v(ls.begin(), ls.end());
  return subset_from_labels(m, v);
}

FiniteMagma additive_ambient(std::int64_t n) {
  BaseRing zn = BaseRing::mod(n);
  return neutrosophify_ambient(zn, true, ambient_generators_determinate(zn));
}

// independent oracle: classify every subset of a small carrier by brute force
std::vector<SubstructureClass> brute_force_substructures(const FiniteMagma& m) {
  std::vector<SubstructureClass> out;
  REQUIRE(m.size() <= 16);
  for (int mask = 1; mask < (1 << m.size()) - 1; ++mask) {
    Subset s(m.size());
    for (int i = 0; i < m.size(); ++i)
      if (mask & (1 << i)) s.add(i);
    if (!is_closed(m, s)) continue;
    out.push_back({s, classify_substructure(m, s), static_cast<int>(s.count())});
  }
  return out;
}

}  // namespace

TEST_CASE("substructure classification on the additive fixtures") {
  FiniteMagma m2 = additive_ambient(2);  // {0, 1, I, 1+I}
  CHECK(classify_substructure(m2, by_labels(m2, {"0", "I"})) ==
        SubstructureKind::PseudoNeutrosophicSubgroup);
  CHECK(classify_substructure(m2, by_labels(m2, {"0", "1 + I"})) ==
        SubstructureKind::PseudoNeutrosophicSubgroup);
  CHECK(classify_substructure(m2, by_labels(m2, {"0", "1"})) == SubstructureKind::PlainSubgroup);

  FiniteMagma m4 = additive_ambient(4);
  CHECK(classify_substructure(m4, by_labels(m4, {"0", "2", "2 + 2I", "2I"})) ==
        SubstructureKind::NeutrosophicSubgroup);
  CHECK(classify_substructure(m4, by_labels(m4, {"0", "2I"})) ==
        SubstructureKind::PseudoNeutrosophicSubgroup);

  SUBCASE("enumeration is proper-only and matches brute force") {
    auto en = enumerate_substructures(m2);
    CHECK(en.exhaustive);
    auto oracle = brute_force_substructures(m2);
    CHECK(en.substructures.size() == oracle.size());
    for (const auto& o : oracle) {
      bool found = false;
      for (const auto& s : en.substructures)
        if (s.subset == o.subset && s.kind == o.kind) found = true;
      REQUIRE(found);
    }
  }
}

TEST_CASE("Lagrange classification") {
  SUBCASE("order-8 multiplicative magma fails Lagrange") {
    BaseRing z5 = BaseRing::mod(5);
    FiniteMagma m = neutrosophify_ambient(z5, false, ambient_generators_units(z5));
    auto rep = group_analyze(m);
    CHECK(rep.order == 8);
    Subset p = by_labels(m, {"1", "4", "I", "2I", "3I", "4I"});
    bool found = false;
    for (const auto& s : rep.substructures)
      if (s.subset == p) {
        found = true;
        CHECK(s.kind == SubstructureKind::NeutrosophicSubgroup);
        CHECK(s.order == 6);
      }
    REQUIRE(found);
    CHECK(rep.lagrange == LagrangeKind::WeaklyLagrange);  // {1,4,I,4I} has order 4 | 8
  }
  SUBCASE("order-4 magma fails pseudo-Lagrange via {1, I, 2I}") {
    BaseRing z3 = BaseRing::mod(3);
    FiniteMagma m = neutrosophify_ambient(z3, false, {ns_make(z3, 1, 0), ns_make(z3, 2, 0)});
    auto rep = group_analyze(m);
    Subset p = by_labels(m, {"1", "I", "2I"});
    bool found = false;
    for (const auto& s : rep.substructures)
      if (s.subset == p) {
        found = true;
        CHECK(s.kind == SubstructureKind::PseudoNeutrosophicSubgroup);
      }
    REQUIRE(found);
    CHECK(rep.pseudo_lagrange != LagrangeKind::Lagrange);
  }
  SUBCASE("additive <Z4 u I> is Lagrange") {
    auto rep = group_analyze(additive_ambient(4));
    CHECK(rep.lagrange == LagrangeKind::Lagrange);
  }
}

TEST_CASE("Cauchy classification") {
  SUBCASE("mod-7 neutrosophic exponents") {
    BaseRing z7 = BaseRing::mod(7);
    FiniteMagma m = neutrosophify_ambient(z7, false, ambient_generators_units(z7));
    auto recs = cauchy_elements(m);
    auto at = [&](const char* l) { return recs[*m.index_of(l)]; };
    CHECK(*at("3I").neutro_exponent == 6);
    CHECK(*at("4I").neutro_exponent == 3);
    CHECK(*at("6I").neutro_exponent == 2);
  }
  SUBCASE("order-9 magma has no Cauchy elements") {
    BaseRing z5 = BaseRing::mod(5);
    FiniteMagma m = neutrosophify_ambient(z5, false, ambient_generators_determinate(z5));
    CHECK(m.size() == 9);  // {0,...,4, I,...,4I} under multiplication
    auto recs = cauchy_elements(m);
    auto at = [&](const char* l) { return recs[*m.index_of(l)]; };
    CHECK(*at("4").torsion_exponent == 2);
    CHECK_FALSE(at("4").cauchy);  // 2 does not divide 9
    CHECK(*at("3I").neutro_exponent == 4);
    CHECK_FALSE(at("3I").cauchy_neutrosophic);  // 4 does not divide 9
    CHECK(cauchy_classify(m) == CauchyKind::Neither);
  }
  SUBCASE("{1,2,I,2I} mod 3 is strong Cauchy") {
    BaseRing z3 = BaseRing::mod(3);
    FiniteMagma m = neutrosophify_ambient(z3, false, {ns_make(z3, 1, 0), ns_make(z3, 2, 0)});
    CHECK(cauchy_classify(m) == CauchyKind::StrongCauchy);
  }
}

TEST_CASE("Sylow classification") {
  SUBCASE("computed against brute force on the order-8 magma") {
    BaseRing z5 = BaseRing::mod(5);
    FiniteMagma m = neutrosophify_ambient(z5, false, ambient_generators_units(z5));
    auto subs = brute_force_substructures(m);
    auto recs = sylow_classify(m, subs);
    REQUIRE(recs.size() == 1);  // p = 2, 2^3 || 8
    CHECK(recs[0].prime == 2);
    CHECK(recs[0].exponent == 3);
    // brute-force expectation: any (pseudo) neutrosophic subgroup of order 8
    bool neutro8 = false, pseudo8 = false;
    for (const auto& s : subs) {
      if (s.order != 8) continue;
      neutro8 = neutro8 || s.kind == SubstructureKind::NeutrosophicSubgroup;
      pseudo8 = pseudo8 || s.kind == SubstructureKind::PseudoNeutrosophicSubgroup;
    }
    CHECK(recs[0].has_neutrosophic == neutro8);
    CHECK(recs[0].has_pseudo == pseudo8);
  }
  SUBCASE("prime-order plain group is Sylow free") {
    FiniteMagma c5 = build_cyclic(5);
    auto rep = group_analyze(c5);
    CHECK(rep.sylow_kind == SylowKind::SylowFree);
    CHECK(rep.pseudo_sylow_kind == SylowKind::SylowFree);
  }
  SUBCASE("trivial group is vacuously Sylow") {
    auto rep = group_analyze(build_cyclic(1));
    CHECK(rep.sylow_kind == SylowKind::Sylow);
  }
}

TEST_CASE("cosets") {
  SUBCASE("whole carrier gives a single coset") {
    FiniteMagma c4 = build_cyclic(4);
    auto rep = cosets(c4, Subset::full(4), true);
    CHECK(rep.cosets.size() == 1);
    CHECK(rep.partitions);
  }
  SUBCASE("plain subgroup of a plain group partitions it") {
    FiniteMagma c6 = build_cyclic(6);
    Subset h = by_labels(c6, {"1", "g^3"});
    auto rep = cosets(c6, h, true);
    CHECK(rep.partitions);
    CHECK(rep.cosets.size() == 3);
  }
  SUBCASE("worked non-partition example") {
    BaseRing z5 = BaseRing::mod(5);
    FiniteMagma m = neutrosophify_ambient(z5, false, ambient_generators_units(z5));
    Subset h = by_labels(m, {"1", "4", "I", "4I"});
    auto rep = cosets(m, h, true);
    CHECK_FALSE(rep.partitions);
    CHECK(rep.cosets.size() == 4);
  }
}

TEST_CASE("conjugacy") {
  SUBCASE("additive mod-6 example with the listed witness") {
    FiniteMagma m = additive_ambient(6);
    Subset p = by_labels(m, {"0", "3", "3I", "3 + 3I"});
    Subset k = by_labels(m, {"0", "2", "4", "2 + 2I", "4 + 4I", "2I", "4I"});
    auto w = conjugate_check(m, p, k);
    REQUIRE(w.has_value());
    // the witness pair (2, 3) sends both sides to {0} under the ring product
    Subset zero = by_labels(m, {"0"});
    CHECK(act_left(m, *m.index_of("2"), p) == zero);
    CHECK(act_right(m, k, *m.index_of("3")) == zero);
    CHECK(act_left(m, w->first, p) == act_right(m, k, w->second));
  }
  SUBCASE("a subset is conjugate to itself") {
    FiniteMagma c4 = build_cyclic(4);
    Subset p = by_labels(c4, {"1", "g^2"});
    CHECK(conjugate_check(c4, p, p).has_value());
  }
  SUBCASE("sets of different coset sizes are not conjugate in a group") {
    FiniteMagma c4 = build_cyclic(4);
    Subset e = by_labels(c4, {"1"});
    Subset h = by_labels(c4, {"1", "g^2"});
    CHECK_FALSE(conjugate_check(c4, e, h).has_value());
  }
}

TEST_CASE("normality readings") {
  SUBCASE("mod-8 multiplicative H = {1,7,I,7I}") {
    BaseRing z8 = BaseRing::mod(8);
    FiniteMagma m = neutrosophify_ambient(z8, false, ambient_generators_determinate(z8));
    CHECK(m.size() == 15);  // {0..7, I..7I}
    Subset h = by_labels(m, {"1", "7", "I", "7I"});
    NormalityRecord rec = normality_of(m, h);
    CHECK_FALSE(rec.forall_normal);  // the worked verdict: not normal
    CHECK(rec.exists_normal);        // e.g. 1 * H * 7 = H as a set
  }
  SUBCASE("classical group: identity and carrier normal under both readings") {
    FiniteMagma c4 = build_cyclic(4);
    Subset e(c4.size());
    e.add(*c4.identity());
    NormalityRecord r1 = normality_of(c4, e);
    CHECK(r1.exists_normal);
    CHECK(r1.forall_normal);
    NormalityRecord r2 = normality_of(c4, Subset::full(4));
    CHECK(r2.exists_normal);
    CHECK(r2.forall_normal);
  }
  SUBCASE("abelian tagged cyclic(3): every closed subset exists-normal") {
    FiniteMagma m = neutrosophify_tagged(build_cyclic(3));
    auto closed = enumerate_closed_subsets(m);
    for (const Subset& s : closed.sets) REQUIRE(normality_of(m, s).exists_normal);
  }
}

TEST_CASE("center") {
  FiniteMagma c6 = build_cyclic(6);
  CHECK(center(c6).count() == 6);  // commutative

  FiniteMagma d3 = neutrosophify_tagged(build_dihedral(3));
  Subset z = center(d3);
  CHECK(z.contains(*d3.identity()));
  CHECK(z == by_labels(d3, {"1", "I"}));
}

TEST_CASE("every neutrosophic subgroup contains a plain subgroup") {
  BaseRing z5 = BaseRing::mod(5);
  FiniteMagma m = neutrosophify_ambient(z5, false, ambient_generators_units(z5));
  auto en = enumerate_substructures(m);
  for (const auto& s : en.substructures) {
    if (s.kind != SubstructureKind::NeutrosophicSubgroup) continue;
    bool plain_grp = false;
    for (int mask = 1; mask < (1 << m.size()); ++mask) {
      Subset t(m.size());
      bool sub = true, plain = true;
      for (int i = 0; i < m.size(); ++i)
        if (mask & (1 << i)) {
          t.add(i);
          if (!s.subset.contains(i)) sub = false;
          if (m.element(i).neutro) plain = false;
        }
      if (sub && plain && t.count() >= 2 && is_group_like(m, t)) plain_grp = true;
    }
    REQUIRE(plain_grp);
  }
}

TEST_CASE("tagged embedding keeps the plain subgroups") {
  FiniteMagma base = build_cyclic(4);
  FiniteMagma m = neutrosophify_tagged(base);
  auto en = enumerate_substructures(m);
  // {1, g^2} and {1, g, g^2, g^3} reappear as plain subgroups
  int plain_count = 0;
  for (const auto& s : en.substructures)
    if (s.kind == SubstructureKind::PlainSubgroup) ++plain_count;
  CHECK(plain_count >= 3);  // {1}, {1,g^2}, C4
}
