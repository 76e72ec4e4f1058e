#include "doctest.h"
#include "neutro/ring_analysis.hpp"

using namespace neutro;

namespace {

Subset by_values(const ParametricRing& r, std::initializer_list<std::pair<int, int>> vals) {
  Subset s(r.size());
  BaseRing zn = BaseRing::mod(r.modulus());
  for (auto [a, b] : vals) s.add(r.index_of(ns_make(zn, a, b)));
  return s;
}

std::shared_ptr<TabularRing> pure_i_ring(std::int64_t n) {
  // {0, I, 2I, ..., (n-1)I} under addition and multiplication mod n
  std::vector<std::string> labels;
  std::vector<int> addt(n * n), mult(n * n);
  std::vector<bool> nf(n, true), pf(n, true);
  nf[0] = pf[0] = false;
  for (std::int64_t b = 0; b < n; ++b)
    labels.push_back(b == 0 ? "0" : (b == 1 ? "I" : std::to_string(b) + "I"));
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y) {
      addt[x * n + y] = static_cast<int>((x + y) % n);
      mult[x * n + y] = static_cast<int>((x * y) % n);
    }
  std::optional<int> one;  // I acts as the unit: I * bI = bI
  auto t = std::make_shared<TabularRing>(labels, addt, mult, 0, 1, nf, pf, 1);
  t->verify_axioms();
  return t;
}

}  // namespace

TEST_CASE("characteristic") {
  CHECK(characteristic(*FiniteRing::parametric(4).view) == 4);
  CHECK(characteristic(*FiniteRing::parametric(5).view) == 5);
  CHECK(BaseRing::rationals().characteristic() == 0);  // <Q u I> is symbolic
}

TEST_CASE("subring taxonomy over <Z12 u I>") {
  FiniteRing ring = FiniteRing::parametric(12);
  const auto& pr = static_cast<const ParametricRing&>(*ring.view);
  SubringTaxonomy tax = subring_taxonomy(pr);
  auto kind_of = [&](const Subset& s) {
    for (const auto& rec : tax.subrings)
      if (rec.subset == s) return rec.kind;
    throw std::logic_error("subset not enumerated");
  };
  // closure({0,6} u {I}) = {a + bI : a in {0,6}}
  Subset p(pr.size());
  for (int a : {0, 6})
    for (int b = 0; b < 12; ++b) p.add(pr.index_of(ns_make(BaseRing::mod(12), a, b)));
  CHECK(kind_of(p) == SubringKind::NeutrosophicSubring);

  Subset p2 = by_values(pr, {{0, 0}, {6, 6}});
  CHECK(kind_of(p2) == SubringKind::JustSubring);

  Subset t = by_values(pr, {{0, 0}, {0, 2}, {0, 4}, {0, 6}, {0, 8}, {0, 10}});
  CHECK(kind_of(t) == SubringKind::PseudoNeutrosophicSubring);
}

TEST_CASE("ideal census of parametric rings") {
  SUBCASE("prime moduli up to 13") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
      auto ideals = ring_ideals(FiniteRing::parametric(p));
      int neutro = 0, pseudo = 0;
      for (const auto& rec : ideals) {
        if (rec.order <= 1 || rec.order == static_cast<int>(p * p)) continue;
        if (rec.kind == IdealKind::NeutrosophicIdeal) ++neutro;
        if (rec.kind == IdealKind::PseudoNeutrosophicIdeal) {
          ++pseudo;
          CHECK(rec.order == p);
        }
      }
      CHECK(neutro == 0);
      CHECK(pseudo == 1);
    }
  }
  SUBCASE("<Z4 u I> has both kinds") {
    FiniteRing ring = FiniteRing::parametric(4);
    const auto& pr = static_cast<const ParametricRing&>(*ring.view);
    auto ideals = ring_ideals(ring);
    auto kind_of = [&](const Subset& s) {
      for (const auto& rec : ideals)
        if (rec.subset == s) return rec.kind;
      throw std::logic_error("not an ideal");
    };
    CHECK(kind_of(by_values(pr, {{0, 0}, {2, 0}, {0, 2}, {2, 2}})) ==
          IdealKind::NeutrosophicIdeal);
    CHECK(kind_of(by_values(pr, {{0, 0}, {0, 1}, {0, 2}, {0, 3}})) ==
          IdealKind::PseudoNeutrosophicIdeal);
  }
  SUBCASE("<Z6 u I> orders: the worked list, with o(P) = 4 not 3") {
    FiniteRing ring = FiniteRing::parametric(6);
    const auto& pr = static_cast<const ParametricRing&>(*ring.view);
    auto ideals = ring_ideals(ring);
    auto find = [&](const Subset& s) -> const RingIdealRecord* {
      for (const auto& rec : ideals)
        if (rec.subset == s) return &rec;
      return nullptr;
    };
    const auto* p = find(by_values(pr, {{0, 0}, {3, 0}, {0, 3}, {3, 3}}));
    REQUIRE(p);
    CHECK(p->kind == IdealKind::NeutrosophicIdeal);
    CHECK(p->order == 4);  // the printed "o(P) = 3" miscounts its own 4-element list
    const auto* s6 = find(by_values(pr, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}));
    REQUIRE(s6);
    CHECK(s6->kind == IdealKind::PseudoNeutrosophicIdeal);
    CHECK(s6->order == 6);
    // T = 2Z6 x 2Z6 has 9 elements; L = 3Z6 x Z6 has 12
    int t_count = 0, l_count = 0;
    for (const auto& rec : ideals) {
      if (rec.order == 9 && rec.kind == IdealKind::NeutrosophicIdeal) ++t_count;
      if (rec.order == 12 && rec.kind == IdealKind::NeutrosophicIdeal) ++l_count;
    }
    CHECK(t_count == 1);
    CHECK(l_count == 1);
  }
  SUBCASE("every enumerated ideal absorbs both-sided products") {
    FiniteRing ring = FiniteRing::parametric(6);
    const FiniteRingView& v = *ring.view;
    for (const auto& rec : ring_ideals(ring))
      for (int p : rec.subset.indices())
        for (int r = 0; r < v.size(); ++r) {
          REQUIRE(rec.subset.contains(v.mul(r, p)));
          REQUIRE(rec.subset.contains(v.mul(p, r)));
        }
  }
}

TEST_CASE("quotients") {
  SUBCASE("all-I quotient is a false pseudo quotient isomorphic to Zn") {
    for (std::int64_t n : {6, 7}) {
      FiniteRing ring = FiniteRing::parametric(n);
      const auto& pr = static_cast<const ParametricRing&>(*ring.view);
      QuotientResult q = quotient(ring, all_indeterminate_ideal(pr));
      CHECK(q.quotient->size() == n);
      CHECK(q.kind == QuotientKind::FalsePseudoQuotientNeutrosophic);
      CHECK(quotient_isomorphic_to_zn(q, n));
    }
  }
  SUBCASE("worked order-25 neutrosophic quotient") {
    FiniteRing ring = FiniteRing::parametric(10);
    const auto& pr = static_cast<const ParametricRing&>(*ring.view);
    QuotientResult q = quotient(ring, by_values(pr, {{0, 0}, {5, 0}, {0, 5}, {5, 5}}));
    CHECK(q.quotient->size() == 25);
    CHECK(q.kind == QuotientKind::NeutrosophicQuotient);
  }
  SUBCASE("false neutrosophic quotient of <Z12 u I>") {
    FiniteRing ring = FiniteRing::parametric(12);
    const auto& pr = static_cast<const ParametricRing&>(*ring.view);
    // P = {a + bI : a in {0,6}}: 24 elements, quotient of order 6 with I + P = P
    Subset p(pr.size());
    for (int a : {0, 6})
      for (int b = 0; b < 12; ++b) p.add(pr.index_of(ns_make(BaseRing::mod(12), a, b)));
    QuotientResult q = quotient(ring, p);
    CHECK(q.quotient->size() == 6);
    CHECK(q.kind == QuotientKind::FalseNeutrosophicQuotient);
  }
  SUBCASE("pseudo quotient that stays neutrosophic") {
    FiniteRing ring = FiniteRing::parametric(12);
    const auto& pr = static_cast<const ParametricRing&>(*ring.view);
    Subset j = by_values(pr, {{0, 0}, {0, 2}, {0, 4}, {0, 6}, {0, 8}, {0, 10}});
    QuotientResult q = quotient(ring, j);
    CHECK(q.quotient->size() == 24);
    CHECK(q.kind == QuotientKind::PseudoQuotientNeutrosophic);
  }
  SUBCASE("non-ideal input is rejected") {
    FiniteRing ring = FiniteRing::parametric(4);
    const auto& pr = static_cast<const ParametricRing&>(*ring.view);
    CHECK_THROWS_AS(quotient(ring, by_values(pr, {{0, 0}, {1, 0}})), std::invalid_argument);
  }
}

TEST_CASE("homomorphism verification") {
  SUBCASE("identity map") {
    FiniteRing ring = FiniteRing::parametric(4);
    std::vector<int> id;
    for (int i = 0; i < ring.view->size(); ++i) id.push_back(i);
    auto rep = verify_homomorphism(*ring.view, *ring.view, id);
    CHECK(rep.ok);
    CHECK(rep.kernel.count() == 1);
    CHECK_FALSE(rep.kernel_is_neutrosophic_subring);
  }
  SUBCASE("determinate projection drops I") {
    FiniteRing ring = FiniteRing::parametric(3);
    std::int64_t n = 3;
    std::vector<int> map;
    for (int x = 0; x < ring.view->size(); ++x) map.push_back(static_cast<int>((x / n) * n));
    auto rep = verify_homomorphism(*ring.view, *ring.view, map);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violated == "phi(I)");
  }
  SUBCASE("symbol-wise Z2 to Z4 is not additive") {
    FiniteRing src = FiniteRing::parametric(2);
    const auto& ps = static_cast<const ParametricRing&>(*src.view);
    FiniteRing dst = FiniteRing::parametric(4);
    const auto& pd = static_cast<const ParametricRing&>(*dst.view);
    std::vector<int> map(ps.size());
    for (int x = 0; x < ps.size(); ++x) {
      NeutroScalar v = ps.value(x);
      map[x] = pd.index_of(ns_make(BaseRing::mod(4), std::get<std::int64_t>(v.a.v),
                                   std::get<std::int64_t>(v.b.v)));
    }
    auto rep = verify_homomorphism(*src.view, *dst.view, map);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violated == "additivity");
  }
}

TEST_CASE("radical and related predicates") {
  SUBCASE("<Z2 u I> is not an integral domain") {
    auto rep = radical_and_semisimplicity(FiniteRing::parametric(2));
    CHECK_FALSE(rep.integral_domain);
  }
  SUBCASE("pure-I mod 7 ring is a domain; mod 6 is not") {
    auto r7 = radical_and_semisimplicity(FiniteRing::tabular(pure_i_ring(7)));
    CHECK(r7.integral_domain);
    auto r6 = radical_and_semisimplicity(FiniteRing::tabular(pure_i_ring(6)));
    CHECK_FALSE(r6.integral_domain);  // 2I * 3I = 0 (mod 6)
  }
  SUBCASE("Jacobson radical of <Z4 u I>") {
    auto rep = radical_and_semisimplicity(FiniteRing::parametric(4));
    const auto& pr = static_cast<const ParametricRing&>(*FiniteRing::parametric(4).view);
    CHECK(rep.jacobson == by_values(pr, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
    CHECK_FALSE(rep.semisimple);
    CHECK_FALSE(rep.semiprime);  // (2+2I)^2 = 0 spans a square-zero ideal
  }
  SUBCASE("<Z6 u I> is semisimple but not prime") {
    auto rep = radical_and_semisimplicity(FiniteRing::parametric(6));
    CHECK(rep.semisimple);
    CHECK(rep.semiprime);
    CHECK_FALSE(rep.prime);
  }
  SUBCASE("(k - kI) * mI = 0 exists for every n") {
    for (std::int64_t n = 2; n <= 12; ++n) {
      BaseRing zn = BaseRing::mod(n);
      NeutroScalar x = ns_make(zn, 1, n - 1);  // 1 - I
      NeutroScalar y = ns_indeterminate(zn);
      CHECK(ns_is_zero(ns_mul(x, y)));
      CHECK_FALSE(ns_is_zero(x));
      CHECK_FALSE(ns_is_zero(y));
    }
  }
}

TEST_CASE("the integer-ring quotient reduces to the parametric ring") {
  FiniteRing q = integer_ring_quotient(3);
  CHECK(q.view->size() == 9);  // nine cosets a + bI + 3<Z u I>
  auto ideals = ring_ideals(q);
  CHECK(!ideals.empty());
}

TEST_CASE("field predicates") {
  SUBCASE("<Z7 u I> is a prime neutrosophic field of characteristic 7") {
    FiniteRing ring = FiniteRing::parametric(7);
    auto rep = field_predicates(ring);
    CHECK(rep.is_neutrosophic_field);
    CHECK(rep.prime_neutrosophic_field);
    CHECK(characteristic(*ring.view) == 7);
  }
  SUBCASE("<Z4 u I> is not a neutrosophic field") {
    CHECK_FALSE(field_predicates(FiniteRing::parametric(4)).is_neutrosophic_field);
  }
  SUBCASE("<Z2 u I> is a neutrosophic field yet has zero divisors") {
    FiniteRing ring = FiniteRing::parametric(2);
    CHECK(field_predicates(ring).is_neutrosophic_field);
    CHECK_FALSE(radical_and_semisimplicity(ring).integral_domain);
  }
}
