#include "neutro/semigroup_analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace neutro {

namespace {

bool has_neutro(const FiniteMagma& m, const Subset& s) {
  for (int i : s.indices())
    if (m.element(i).neutro) return true;
  return false;
}

// nonempty all-plain closed subset inside s
bool contains_plain_subsemigroup(const FiniteMagma& m, const Subset& s) {
  for (int a : s.indices()) {
    if (m.element(a).neutro) continue;
    Subset seed(m.size());
    seed.add(a);
    Subset c = closure(m, seed);
    bool ok = true;
    for (int i : c.indices())
      if (m.element(i).neutro || !s.contains(i)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace

SubsemigroupKind classify_subsemigroup(const FiniteMagma& m, const Subset& s) {
  if (s.empty() || !is_closed(m, s)) return SubsemigroupKind::OtherClosed;
  bool neutro = has_neutro(m, s);
  if (!neutro) return SubsemigroupKind::PlainSubsemigroup;
  if (!contains_plain_subsemigroup(m, s)) return SubsemigroupKind::OtherClosed;
  if (m.identity() && s.contains(*m.identity())) return SubsemigroupKind::NeutrosophicSubmonoid;
  return SubsemigroupKind::NeutrosophicSubsemigroup;
}

SubsemigroupEnumeration subsemigroups(const FiniteMagma& m, int carrier_cap) {
  if (!m.is_associative()) throw std::invalid_argument("magma is not associative");
  SubsemigroupEnumeration out;
  ClosedSetEnumeration closed = enumerate_closed_subsets(m, carrier_cap);
  out.exhaustive = closed.exhaustive;
  for (const Subset& s : closed.sets) {
    if (static_cast<int>(s.count()) == m.size()) continue;
    out.subsemigroups.push_back({s, classify_subsemigroup(m, s), static_cast<int>(s.count())});
  }
  return out;
}

namespace {

bool absorbs(const FiniteMagma& m, const Subset& s, bool left) {
  for (int p : s.indices())
    for (int x = 0; x < m.size(); ++x) {
      int z = left ? m.op(x, p) : m.op(p, x);
      if (!s.contains(z)) return false;
    }
  return true;
}

}  // namespace

Subset principal_semigroup_ideal(const FiniteMagma& m, int g) {
  // {g} u gS u Sg u SgS, closed under the table
  Subset s(m.size());
  s.add(g);
  for (int x = 0; x < m.size(); ++x) {
    s.add(m.op(g, x));
    s.add(m.op(x, g));
    for (int y = 0; y < m.size(); ++y) s.add(m.op(m.op(x, g), y));
  }
  return closure(m, s);
}

SemigroupIdealEnumeration semigroup_ideals(const FiniteMagma& m, int carrier_cap) {
  if (!m.is_associative()) throw std::invalid_argument("magma is not associative");
  SemigroupIdealEnumeration out;
  ClosedSetEnumeration closed = enumerate_closed_subsets(m, carrier_cap);
  out.exhaustive = closed.exhaustive;
  std::vector<SemigroupIdealRecord> recs;
  for (const Subset& s : closed.sets) {
    if (static_cast<int>(s.count()) == m.size() || s.empty()) continue;
    bool l = absorbs(m, s, true);
    bool r = absorbs(m, s, false);
    if (!l && !r) continue;
    SemigroupIdealRecord rec;
    rec.subset = s;
    rec.sided = l && r ? IdealSide::TwoSided : (l ? IdealSide::Left : IdealSide::Right);
    rec.order = static_cast<int>(s.count());
    rec.neutrosophic = has_neutro(m, s);
    for (int g : s.indices())
      if (principal_semigroup_ideal(m, g) == s) {
        rec.principal = true;
        rec.generator = g;
        break;
      }
    recs.push_back(std::move(rec));
  }
  // maximal / minimal within proper ideals of matching sidedness
  auto comparable = [](const SemigroupIdealRecord& a, const SemigroupIdealRecord& b) {
    return a.sided == b.sided || a.sided == IdealSide::TwoSided || b.sided == IdealSide::TwoSided;
  };
  for (auto& a : recs) {
    a.maximal = true;
    a.minimal = true;
    for (const auto& b : recs) {
      if (&a == &b || !comparable(a, b)) continue;
      if (a.subset.is_subset_of(b.subset) && !(a.subset == b.subset)) a.maximal = false;
      if (b.subset.is_subset_of(a.subset) && !(b.subset == a.subset) && !b.subset.empty())
        a.minimal = false;
    }
  }
  out.ideals = std::move(recs);
  return out;
}

IdempotentSemigroupKind idempotent_semigroup_classify(const FiniteMagma& m, int carrier_cap) {
  if (!m.is_associative()) throw std::invalid_argument("magma is not associative");
  bool all = true;
  for (int x = 0; x < m.size(); ++x)
    if (m.op(x, x) != x) {
      all = false;
      break;
    }
  if (all) return IdempotentSemigroupKind::Idempotent;
  auto en = subsemigroups(m, carrier_cap);
  for (const auto& rec : en.subsemigroups) {
    if (rec.kind != SubsemigroupKind::NeutrosophicSubsemigroup &&
        rec.kind != SubsemigroupKind::NeutrosophicSubmonoid)
      continue;
    bool idem = true;
    for (int x : rec.subset.indices())
      if (m.op(x, x) != x) {
        idem = false;
        break;
      }
    if (idem) return IdempotentSemigroupKind::WeaklyIdempotent;
  }
  return IdempotentSemigroupKind::Neither;
}

std::vector<ElementArithmeticRecord> zero_divisors_and_units(const FiniteMagma& m) {
  std::vector<ElementArithmeticRecord> out;
  auto zero = m.zero();
  auto e = m.identity();
  for (int x = 0; x < m.size(); ++x) {
    ElementArithmeticRecord rec;
    rec.element = x;
    rec.idempotent = m.op(x, x) == x;
    if (zero && x != *zero) {
      for (int y = 0; y < m.size(); ++y) {
        if (y == *zero) continue;
        if (m.op(x, y) == *zero) rec.zero_divisor_witnesses.push_back(y);
      }
    }
    if (e) {
      for (int y = 0; y < m.size(); ++y)
        if (m.op(x, y) == *e && m.op(y, x) == *e) {
          rec.inverse = y;
          break;
        }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace neutro
