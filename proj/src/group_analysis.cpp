#include "neutro/group_analysis.hpp"

#include <algorithm>
#include <map>

namespace neutro {

namespace {

bool has_neutro_element(const FiniteMagma& m, const Subset& s) {
  for (int i : s.indices())
    if (m.element(i).neutro) return true;
  return false;
}

// nontrivial subgroup consisting of plain elements only, inside s
bool contains_plain_subgroup(const FiniteMagma& m, const Subset& s) {
  std::vector<int> plain;
  for (int i : s.indices())
    if (!m.element(i).neutro) plain.push_back(i);
  if (plain.size() < 2) return false;
  // search closures of plain seeds (1 or 2 generators cover abelian cases and
  // all desk-scale fixtures; fall back to the full plain subset)
  auto try_set = [&](const Subset& cand) {
    if (cand.count() < 2) return false;
    for (int i : cand.indices())
      if (m.element(i).neutro || !s.contains(i)) return false;
    return is_group_like(m, cand);
  };
  for (int a : plain) {
    Subset seed(m.size());
    seed.add(a);
    if (try_set(closure(m, seed))) return true;
  }
  for (size_t i = 0; i < plain.size(); ++i)
    for (size_t j = i + 1; j < plain.size(); ++j) {
      Subset seed(m.size());
      seed.add(plain[i]);
      seed.add(plain[j]);
      if (try_set(closure(m, seed))) return true;
    }
  Subset all(m.size());
  for (int i : plain) all.add(i);
  return try_set(all);
}

}  // namespace

SubstructureKind classify_substructure(const FiniteMagma& m, const Subset& s) {
  if (!is_closed(m, s) || s.empty()) return SubstructureKind::ClosedNonGroup;
  bool neutro = has_neutro_element(m, s);
  if (!neutro) {
    return is_group_like(m, s) ? SubstructureKind::PlainSubgroup
                               : SubstructureKind::ClosedNonGroup;
  }
  if (contains_plain_subgroup(m, s)) return SubstructureKind::NeutrosophicSubgroup;
  if (local_identity(m, s)) return SubstructureKind::PseudoNeutrosophicSubgroup;
  return SubstructureKind::ClosedNonGroup;
}

SubstructureEnumeration enumerate_substructures(const FiniteMagma& m, int carrier_cap) {
  SubstructureEnumeration out;
  ClosedSetEnumeration closed = enumerate_closed_subsets(m, carrier_cap);
  out.exhaustive = closed.exhaustive;
  for (const Subset& s : closed.sets) {
    if (static_cast<int>(s.count()) == m.size()) continue;  // proper subsets only
    out.substructures.push_back(
        {s, classify_substructure(m, s), static_cast<int>(s.count())});
  }
  return out;
}

LagrangeKind lagrange_classify(int order, const std::vector<SubstructureClass>& subs,
                               SubstructureKind kind) {
  bool any = false, all = true, some = false;
  for (const auto& sc : subs) {
    if (sc.kind != kind) continue;
    any = true;
    if (order % sc.order == 0) some = true;
    else all = false;
  }
  if (!any) return LagrangeKind::LagrangeFree;
  if (all) return LagrangeKind::Lagrange;
  return some ? LagrangeKind::WeaklyLagrange : LagrangeKind::LagrangeFree;
}

std::vector<CauchyElementRecord> cauchy_elements(const FiniteMagma& m) {
  std::vector<CauchyElementRecord> out;
  const int order = m.size();
  for (int x = 0; x < m.size(); ++x) {
    CauchyElementRecord rec;
    rec.element = x;
    int cur = x;
    for (int k = 1; k <= m.size() + 1; ++k) {
      if (m.identity() && cur == *m.identity() && !rec.torsion_exponent) rec.torsion_exponent = k;
      if (m.indeterminate() && cur == *m.indeterminate() && !rec.neutro_exponent)
        rec.neutro_exponent = k;
      cur = m.op(cur, x);
    }
    rec.cauchy = rec.torsion_exponent && order % *rec.torsion_exponent == 0;
    rec.cauchy_neutrosophic = rec.neutro_exponent && order % *rec.neutro_exponent == 0;
    out.push_back(rec);
  }
  return out;
}

CauchyKind cauchy_classify(const FiniteMagma& m) {
  auto recs = cauchy_elements(m);
  bool strong = true;
  bool all_torsion_cauchy = true;
  for (const auto& r : recs) {
    if (!r.cauchy && !r.cauchy_neutrosophic) strong = false;
    if (r.torsion_exponent && !r.cauchy) all_torsion_cauchy = false;
    if (r.neutro_exponent && !r.cauchy_neutrosophic) all_torsion_cauchy = false;
  }
  if (strong) return CauchyKind::StrongCauchy;
  return all_torsion_cauchy ? CauchyKind::Cauchy : CauchyKind::Neither;
}

std::vector<SylowPrimeRecord> sylow_classify(const FiniteMagma& m,
                                             const std::vector<SubstructureClass>& subs) {
  std::vector<SylowPrimeRecord> out;
  int n = m.size();
  for (std::int64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    SylowPrimeRecord rec;
    rec.prime = p;
    std::int64_t pa = 1;
    int e = 0;
    while (n % (pa * p) == 0) {
      pa *= p;
      ++e;
    }
    rec.exponent = e;
    for (const auto& sc : subs) {
      if (sc.order != pa) continue;
      if (sc.kind == SubstructureKind::NeutrosophicSubgroup && !rec.has_neutrosophic) {
        rec.has_neutrosophic = true;
        rec.neutrosophic_witness = sc.subset;
      }
      if (sc.kind == SubstructureKind::PseudoNeutrosophicSubgroup && !rec.has_pseudo) {
        rec.has_pseudo = true;
        rec.pseudo_witness = sc.subset;
      }
    }
    out.push_back(rec);
  }
  return out;
}

namespace {

SylowKind aggregate_sylow(const std::vector<SylowPrimeRecord>& recs, bool pseudo) {
  bool all = true, some = false;
  for (const auto& r : recs) {
    bool has = pseudo ? r.has_pseudo : r.has_neutrosophic;
    if (has) some = true;
    else all = false;
  }
  if (recs.empty() || all) return SylowKind::Sylow;  // vacuously Sylow
  return some ? SylowKind::WeaklySylow : SylowKind::SylowFree;
}

}  // namespace

GroupReport group_analyze(const FiniteMagma& m, int carrier_cap) {
  GroupReport rep;
  rep.order = m.size();
  auto en = enumerate_substructures(m, carrier_cap);
  rep.substructures = en.substructures;
  rep.exhaustive = en.exhaustive;
  rep.lagrange = lagrange_classify(rep.order, rep.substructures,
                                   SubstructureKind::NeutrosophicSubgroup);
  rep.pseudo_lagrange = lagrange_classify(rep.order, rep.substructures,
                                          SubstructureKind::PseudoNeutrosophicSubgroup);
  rep.cauchy = cauchy_classify(m);
  rep.cauchy_elements = cauchy_elements(m);
  rep.sylow = sylow_classify(m, rep.substructures);
  rep.sylow_kind = aggregate_sylow(rep.sylow, false);
  rep.pseudo_sylow_kind = aggregate_sylow(rep.sylow, true);
  rep.center = center(m);
  return rep;
}

CosetReport cosets(const FiniteMagma& m, const Subset& h, bool right_side) {
  CosetReport rep;
  Subset covered(m.size());
  for (int n = 0; n < m.size(); ++n) {
    Subset c(m.size());
    for (int x : h.indices()) c.add(right_side ? m.op(x, n) : m.op(n, x));
    if (std::find(rep.cosets.begin(), rep.cosets.end(), c) == rep.cosets.end())
      rep.cosets.push_back(c);
  }
  rep.partitions = true;
  Subset acc(m.size());
  for (const Subset& c : rep.cosets) {
    if (!acc.intersect(c).empty()) rep.partitions = false;
    acc = acc.unite(c);
  }
  if (acc.count() != static_cast<size_t>(m.size())) rep.partitions = false;
  return rep;
}

std::optional<std::pair<int, int>> conjugate_check(const FiniteMagma& m, const Subset& p,
                                                   const Subset& k) {
  for (int x = 0; x < m.size(); ++x) {
    Subset xp = act_left(m, x, p);
    for (int y = 0; y < m.size(); ++y) {
      if (act_right(m, k, y) == xp) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

NormalityRecord normality_of(const FiniteMagma& m, const Subset& h) {
  NormalityRecord rec;
  rec.subset = h;
  auto e = m.identity();
  // exists reading: some (x, y) != (e, e) with xHy = H
  for (int x = 0; x < m.size() && !rec.exists_normal; ++x) {
    Subset xh = act_left(m, x, h);
    for (int y = 0; y < m.size(); ++y) {
      if (e && x == *e && y == *e) continue;
      if (act_right(m, xh, y) == h) {
        rec.exists_normal = true;
        rec.witness = {x, y};
        break;
      }
    }
  }
  // forall reading: for every x some y with xHy = H
  rec.forall_normal = true;
  for (int x = 0; x < m.size() && rec.forall_normal; ++x) {
    Subset xh = act_left(m, x, h);
    bool any = false;
    for (int y = 0; y < m.size(); ++y)
      if (act_right(m, xh, y) == h) {
        any = true;
        break;
      }
    rec.forall_normal = any;
  }
  return rec;
}

SimplicityReport normality_and_simplicity(const FiniteMagma& m, int carrier_cap) {
  SimplicityReport rep;
  auto en = enumerate_substructures(m, carrier_cap);
  rep.simple = true;
  rep.pseudo_simple = true;
  for (const auto& sc : en.substructures) {
    bool neutro_kind = sc.kind == SubstructureKind::NeutrosophicSubgroup;
    bool pseudo_kind = sc.kind == SubstructureKind::PseudoNeutrosophicSubgroup;
    if (!neutro_kind && !pseudo_kind) continue;
    NormalityRecord rec = normality_of(m, sc.subset);
    bool trivial_subset =
        sc.order <= 1 || static_cast<int>(sc.subset.count()) == m.size();
    if (rec.exists_normal && !trivial_subset) {
      if (neutro_kind) rep.simple = false;
      if (pseudo_kind) rep.pseudo_simple = false;
    }
    rep.normality.push_back(std::move(rec));
  }
  return rep;
}

Subset center(const FiniteMagma& m) {
  Subset c(m.size());
  for (int x = 0; x < m.size(); ++x) {
    bool central = true;
    for (int a = 0; a < m.size(); ++a)
      if (m.op(a, x) != m.op(x, a)) {
        central = false;
        break;
      }
    if (central) c.add(x);
  }
  return c;
}

}  // namespace neutro
