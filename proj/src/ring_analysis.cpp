#include "neutro/ring_analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace neutro {

bool FiniteRingView::is_commutative() const {
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

bool FiniteRingView::is_unit(int x) const {
  auto e = one();
  if (!e) return false;
  for (int y = 0; y < size(); ++y)
    if (mul(x, y) == *e && mul(y, x) == *e) return true;
  return false;
}

ParametricRing::ParametricRing(std::int64_t n) : n_(n) {
  if (n < 2) throw std::invalid_argument("modulus must be >= 2");
  if (n > 64) throw std::invalid_argument("parametric ring capped at n <= 64 (4096 elements)");
}

int ParametricRing::add(int x, int y) const {
  std::int64_t ax = x / n_, bx = x % n_, ay = y / n_, by = y % n_;
  return static_cast<int>(((ax + ay) % n_) * n_ + (bx + by) % n_);
}

int ParametricRing::mul(int x, int y) const {
  std::int64_t ax = x / n_, bx = x % n_, ay = y / n_, by = y % n_;
  std::int64_t a = (ax * ay) % n_;
  std::int64_t b = (ax * by + bx * ay + bx * by) % n_;
  return static_cast<int>(a * n_ + b);
}

int ParametricRing::neg(int x) const {
  std::int64_t ax = x / n_, bx = x % n_;
  return static_cast<int>(((n_ - ax) % n_) * n_ + (n_ - bx) % n_);
}

std::string ParametricRing::label(int x) const { return ns_to_string(value(x)); }

NeutroScalar ParametricRing::value(int x) const {
  return ns_make(BaseRing::mod(n_), x / n_, x % n_);
}

int ParametricRing::index_of(const NeutroScalar& s) const {
  return static_cast<int>(std::get<std::int64_t>(s.a.v) * n_ + std::get<std::int64_t>(s.b.v));
}

TabularRing::TabularRing(std::vector<std::string> labels, std::vector<int> add_table,
                         std::vector<int> mul_table, int zero, std::optional<int> one,
                         std::vector<bool> neutro_flags, std::vector<bool> pure_i_flags,
                         std::optional<int> i_elem)
    : labels_(std::move(labels)), add_(std::move(add_table)), mul_(std::move(mul_table)),
      zero_(zero), one_(one), neutro_(std::move(neutro_flags)), pure_i_(std::move(pure_i_flags)),
      i_elem_(i_elem) {
  const size_t n = labels_.size();
  if (add_.size() != n * n || mul_.size() != n * n) throw std::invalid_argument("table shape");
  if (neutro_.size() != n) neutro_.assign(n, false);
  if (pure_i_.size() != n) pure_i_.assign(n, false);
  neg_.assign(n, -1);
  for (size_t x = 0; x < n; ++x) {
    for (size_t y = 0; y < n; ++y)
      if (add(static_cast<int>(x), static_cast<int>(y)) == zero_) neg_[x] = static_cast<int>(y);
    if (neg_[x] < 0) throw std::invalid_argument("element without additive inverse");
  }
}

void TabularRing::verify_axioms() const {
  const int n = size();
  for (int a = 0; a < n; ++a) {
    if (add(zero_, a) != a || add(a, zero_) != a) throw std::invalid_argument("bad zero");
    for (int b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) throw std::invalid_argument("addition not commutative");
      for (int c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c)))
          throw std::invalid_argument("addition not associative");
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("multiplication not associative");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw std::invalid_argument("left distributivity fails");
        if (mul(add(b, c), a) != add(mul(b, a), mul(c, a)))
          throw std::invalid_argument("right distributivity fails");
      }
    }
  }
}

FiniteRing FiniteRing::parametric(std::int64_t n) {
  FiniteRing r;
  r.view = std::make_shared<ParametricRing>(n);
  r.parametric_n = n;
  return r;
}

FiniteRing FiniteRing::tabular(std::shared_ptr<TabularRing> t) {
  FiniteRing r;
  r.view = std::move(t);
  return r;
}

std::int64_t characteristic(const FiniteRingView& r) {
  std::int64_t ch = 1;
  for (int x = 0; x < r.size(); ++x) {
    int cur = x;
    std::int64_t k = 1;
    while (cur != r.zero()) {
      cur = r.add(cur, x);
      ++k;
    }
    ch = std::lcm(ch, k);
  }
  return ch;
}

// ---- subgroup / subring enumeration ---------------------------------------

namespace {

Subset additive_closure(const FiniteRingView& r, const Subset& s) {
  Subset cur = s;
  cur.add(r.zero());
  std::vector<int> work = cur.indices();
  std::vector<int> all = work;
  while (!work.empty()) {
    std::vector<int> next;
    for (int x : work)
      for (int y : all) {
        int z = r.add(x, y);
        if (!cur.contains(z)) {
          cur.add(z);
          next.push_back(z);
        }
      }
    for (int x : next) all.push_back(x);
    work = std::move(next);
  }
  return cur;
}

Subset ring_closure(const FiniteRingView& r, const Subset& s) {
  Subset cur = additive_closure(r, s);
  while (true) {
    Subset next = cur;
    auto idx = cur.indices();
    for (int x : idx)
      for (int y : idx) next.add(r.mul(x, y));
    next = additive_closure(r, next);
    if (next == cur) return cur;
    cur = next;
  }
}

bool mult_closed(const FiniteRingView& r, const Subset& s) {
  auto idx = s.indices();
  for (int x : idx)
    for (int y : idx)
      if (!s.contains(r.mul(x, y))) return false;
  return true;
}

bool is_two_sided_ideal(const FiniteRingView& r, const Subset& s) {
  auto idx = s.indices();
  for (int p : idx)
    for (int x = 0; x < r.size(); ++x)
      if (!s.contains(r.mul(x, p)) || !s.contains(r.mul(p, x))) return false;
  return true;
}

}  // namespace

namespace {

// closure(S u {x}) for S already a subgroup: the union of cosets S + kx
Subset extend_subgroup(const FiniteRingView& r, const Subset& s, int x) {
  Subset cur = s;
  int kx = x;
  while (!s.contains(kx)) {
    for (int y : s.indices()) cur.add(r.add(y, kx));
    kx = r.add(kx, x);
  }
  return cur;
}

}  // namespace

std::vector<Subset> additive_subgroups(const FiniteRingView& r) {
  std::unordered_set<Subset, SubsetHash> found;
  std::vector<Subset> frontier;
  {
    Subset z(r.size());
    z.add(r.zero());
    found.insert(z);
    frontier.push_back(z);
  }
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const Subset& s : frontier)
      for (int i = 0; i < r.size(); ++i) {
        if (s.contains(i)) continue;
        Subset c = extend_subgroup(r, s, i);
        if (found.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  std::vector<Subset> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

namespace {

// closure(S u {kI}) for every nonzero all-plain subring S and k >= 1
std::vector<Subset> neutrosophic_forms(const FiniteRingView& r,
                                       const std::vector<Subset>& subrings) {
  std::vector<Subset> forms;
  auto i_elem = r.indeterminate();
  if (!i_elem) return forms;
  std::int64_t ch = characteristic(r);
  for (const Subset& s : subrings) {
    bool plain = true;
    for (int i : s.indices())
      if (r.neutro(i)) {
        plain = false;
        break;
      }
    if (!plain) continue;
    if (s.count() == 1 && s.contains(r.zero())) continue;  // S must be nonzero
    int ki = *i_elem;
    for (std::int64_t k = 1; k <= ch; ++k) {
      if (ki != r.zero()) {
        Subset seed = s;
        seed.add(ki);
        forms.push_back(ring_closure(r, seed));
      }
      ki = r.add(ki, *i_elem);
    }
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

SubringKind classify_subring_subset(const FiniteRingView& r, const Subset& s,
                                    const std::vector<Subset>& forms) {
  bool has_neutro = false, all_pure = true;
  for (int i : s.indices()) {
    if (r.neutro(i)) has_neutro = true;
    if (i != r.zero() && !r.pure_indeterminate(i)) all_pure = false;
  }
  if (has_neutro) {
    if (std::binary_search(forms.begin(), forms.end(), s)) return SubringKind::NeutrosophicSubring;
    if (all_pure) return SubringKind::PseudoNeutrosophicSubring;
  }
  return SubringKind::JustSubring;
}

}  // namespace

SubringTaxonomy subring_taxonomy(const FiniteRingView& r, int size_cap) {
  if (r.size() > size_cap) throw std::domain_error("subring taxonomy capped at " +
                                                   std::to_string(size_cap) + " elements");
  SubringTaxonomy out;
  std::vector<Subset> groups = additive_subgroups(r);
  std::vector<Subset> subrings;
  for (const Subset& g : groups)
    if (mult_closed(r, g)) subrings.push_back(g);
  std::vector<Subset> forms = neutrosophic_forms(r, subrings);
  for (const Subset& s : subrings) {
    if (static_cast<int>(s.count()) == r.size()) continue;  // proper only
    out.subrings.push_back({s, classify_subring_subset(r, s, forms),
                            static_cast<int>(s.count())});
  }
  return out;
}

namespace {

Subset principal_ideal(const FiniteRingView& r, int x, bool commutative) {
  if (commutative) {
    // (x) = xR; additively closed since xr + xs = x(r+s)
    Subset cur(r.size());
    for (int s = 0; s < r.size(); ++s) cur.add(r.mul(x, s));
    return cur;
  }
  Subset cur(r.size());
  cur.add(r.zero());
  cur.add(x);
  std::vector<int> work{x};
  while (!work.empty()) {
    std::vector<int> next;
    auto push = [&](int z) {
      if (!cur.contains(z)) {
        cur.add(z);
        next.push_back(z);
      }
    };
    for (int y : work) {
      for (int t : cur.indices()) push(r.add(y, t));
      for (int s = 0; s < r.size(); ++s) {
        push(r.mul(s, y));
        push(r.mul(y, s));
      }
    }
    work = std::move(next);
  }
  while (true) {
    Subset nxt = additive_closure(r, cur);
    if (nxt == cur) break;
    cur = nxt;
  }
  return cur;
}

// ideal sum: both contain 0 and are additively closed, so A+B suffices
Subset ideal_sum(const FiniteRingView& r, const Subset& a, const Subset& b) {
  Subset out(r.size());
  for (int x : a.indices())
    for (int y : b.indices()) out.add(r.add(x, y));
  return out;
}

std::vector<Subset> enumerate_ideals_generic(const FiniteRingView& r) {
  if (r.size() > 1024) throw std::domain_error("ideal enumeration capped at 1024 elements");
  bool comm = r.is_commutative();
  std::set<Subset> found;
  for (int x = 0; x < r.size(); ++x) found.insert(principal_ideal(r, x, comm));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subset> cur(found.begin(), found.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Subset join = ideal_sum(r, cur[i], cur[j]);
        if (found.insert(join).second) grew = true;
      }
  }
  return {found.begin(), found.end()};
}

std::vector<Subset> enumerate_ideals_parametric(const ParametricRing& r) {
  // split coordinates: every ideal is dZ_n x eZ_n; this is exactly the
  // principal+join lattice computed in closed form
  std::int64_t n = r.modulus();
  std::vector<std::int64_t> divs;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<Subset> out;
  for (std::int64_t d : divs)
    for (std::int64_t e : divs) {
      Subset s(r.size());
      for (std::int64_t u = 0; u < n; u += d)
        for (std::int64_t v = 0; v < n; v += e) {
          // unsplit (u, v) = u + (v-u) I
          std::int64_t b = ((v - u) % n + n) % n;
          s.add(static_cast<int>(u * n + b));
        }
      out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<RingIdealRecord> ring_ideals(const FiniteRing& r) {
  const FiniteRingView& v = *r.view;
  std::vector<Subset> ideals;
  if (r.parametric_n) {
    ideals = enumerate_ideals_parametric(static_cast<const ParametricRing&>(v));
  } else {
    if (v.size() > 256) throw std::domain_error("tabular ideal enumeration capped at 256");
    ideals = enumerate_ideals_generic(v);
  }
  // absorption re-verified post-enumeration (sampled beyond 1024 elements)
  if (v.size() <= 1024) {
    for (const Subset& s : ideals)
      if (!is_two_sided_ideal(v, s)) throw std::logic_error("enumerated non-ideal");
  }

  std::vector<Subset> forms;
  if (r.parametric_n) {
    // closure(dZ_n u {kI}) in split coordinates is d'Z_n x eZ_n with e | d',
    // d' < n; enumerate those directly
    const auto& pr = static_cast<const ParametricRing&>(v);
    std::int64_t n = pr.modulus();
    for (std::int64_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      for (std::int64_t e = 1; e < n; ++e) {
        if (n % e != 0 || d % e != 0) continue;
        Subset s(v.size());
        for (std::int64_t u = 0; u < n; u += d)
          for (std::int64_t vv = 0; vv < n; vv += e) {
            std::int64_t b = ((vv - u) % n + n) % n;
            s.add(static_cast<int>(u * n + b));
          }
        forms.push_back(s);
      }
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  } else {
    if (v.size() > 256) throw std::domain_error("tabular ideal classification capped at 256");
    std::vector<Subset> groups = additive_subgroups(v);
    std::vector<Subset> subrings;
    for (const Subset& g : groups)
      if (mult_closed(v, g)) subrings.push_back(g);
    forms = neutrosophic_forms(v, subrings);
  }

  std::vector<RingIdealRecord> out;
  for (const Subset& s : ideals) {
    SubringKind k = classify_subring_subset(v, s, forms);
    IdealKind ik = k == SubringKind::NeutrosophicSubring ? IdealKind::NeutrosophicIdeal
                   : k == SubringKind::PseudoNeutrosophicSubring
                       ? IdealKind::PseudoNeutrosophicIdeal
                       : IdealKind::JustIdeal;
    out.push_back({s, ik, static_cast<int>(s.count())});
  }
  std::sort(out.begin(), out.end(), [](const RingIdealRecord& a, const RingIdealRecord& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.subset < b.subset;
  });
  return out;
}

QuotientResult quotient(const FiniteRing& r, const Subset& ideal) {
  const FiniteRingView& v = *r.view;
  if (!is_two_sided_ideal(v, ideal)) throw std::invalid_argument("subset is not a two-sided ideal");

  std::vector<int> coset_of(v.size(), -1);
  std::vector<Subset> cosets;
  std::vector<int> reps;
  for (int x = 0; x < v.size(); ++x) {
    if (coset_of[x] >= 0) continue;
    Subset c(v.size());
    for (int p : ideal.indices()) c.add(v.add(x, p));
    int id = static_cast<int>(cosets.size());
    int rep = v.size();
    for (int y : c.indices()) {
      coset_of[y] = id;
      rep = std::min(rep, y);
    }
    cosets.push_back(c);
    reps.push_back(rep);
  }
  const int q = static_cast<int>(cosets.size());
  std::vector<int> addt(static_cast<size_t>(q) * q), mult(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      addt[static_cast<size_t>(i) * q + j] = coset_of[v.add(reps[i], reps[j])];
      mult[static_cast<size_t>(i) * q + j] = coset_of[v.mul(reps[i], reps[j])];
    }
  // the coset of I is "neutrosophic" iff it differs from the coset of every
  // non-neutro element
  bool neutro_bearing = false;
  if (auto ie = v.indeterminate()) {
    neutro_bearing = true;
    for (int x = 0; x < v.size(); ++x)
      if (!v.neutro(x) && coset_of[x] == coset_of[*ie]) {
        neutro_bearing = false;
        break;
      }
  }
  std::vector<std::string> labels;
  std::vector<bool> nf(q, false), pf(q, false);
  for (int i = 0; i < q; ++i) {
    labels.push_back("[" + v.label(reps[i]) + "]");
    nf[i] = v.neutro(reps[i]);
    pf[i] = v.pure_indeterminate(reps[i]);
  }
  std::optional<int> one;
  if (auto e = v.one()) one = coset_of[*e];
  std::optional<int> ie;
  if (auto i0 = v.indeterminate(); i0 && neutro_bearing) ie = coset_of[*i0];

  auto tab = std::make_shared<TabularRing>(labels, addt, mult, coset_of[v.zero()], one, nf, pf, ie);

  // classify the ideal: neutrosophic vs pseudo (taxonomy over the parent)
  IdealKind ik = IdealKind::JustIdeal;
  for (const auto& rec : ring_ideals(r))
    if (rec.subset == ideal) {
      ik = rec.kind;
      break;
    }
  QuotientKind kind;
  if (ik == IdealKind::PseudoNeutrosophicIdeal)
    kind = neutro_bearing ? QuotientKind::PseudoQuotientNeutrosophic
                          : QuotientKind::FalsePseudoQuotientNeutrosophic;
  else
    kind = neutro_bearing ? QuotientKind::NeutrosophicQuotient
                          : QuotientKind::FalseNeutrosophicQuotient;

  QuotientResult res;
  res.quotient = tab;
  res.kind = kind;
  res.cosets = cosets;
  res.representatives = reps;
  return res;
}

bool quotient_isomorphic_to_zn(const QuotientResult& q, std::int64_t n) {
  const TabularRing& t = *q.quotient;
  if (t.size() != n) return false;
  // canonical representative map: coset i -> determinate part of its minimal
  // representative, which must hit each residue exactly once
  ParametricRing parent(n);
  std::vector<int> img(t.size(), -1);
  std::vector<bool> used(n, false);
  for (int i = 0; i < t.size(); ++i) {
    int rep = q.representatives[i];
    int a = rep / static_cast<int>(n);
    if (used[a]) return false;
    used[a] = true;
    img[i] = a;
  }
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j) {
      if ((img[i] + img[j]) % n != img[t.add(i, j)]) return false;
      if ((static_cast<std::int64_t>(img[i]) * img[j]) % n != img[t.mul(i, j)]) return false;
    }
  return true;
}

HomomorphismReport verify_homomorphism(const FiniteRingView& src, const FiniteRingView& dst,
                                       const std::vector<int>& map) {
  HomomorphismReport rep;
  rep.kernel = Subset(src.size());
  if (map.size() != static_cast<size_t>(src.size()))
    throw std::invalid_argument("map must be total on the source ring");
  for (int x = 0; x < src.size(); ++x)
    for (int y = 0; y < src.size(); ++y) {
      if (map[src.add(x, y)] != dst.add(map[x], map[y])) {
        rep.violated = "additivity";
        rep.witness = {x, y};
        return rep;
      }
      if (map[src.mul(x, y)] != dst.mul(map[x], map[y])) {
        rep.violated = "multiplicativity";
        rep.witness = {x, y};
        return rep;
      }
    }
  if (auto is = src.indeterminate()) {
    auto id = dst.indeterminate();
    if (!id || map[*is] != *id) {
      rep.violated = "phi(I)";
      rep.witness = {*is, map[*is]};
      return rep;
    }
  }
  rep.ok = true;
  for (int x = 0; x < src.size(); ++x)
    if (map[x] == dst.zero()) {
      rep.kernel.add(x);
      if (src.neutro(x)) rep.kernel_contains_neutro = true;
    }
  if (src.size() <= 256) {
    auto groups = additive_subgroups(src);
    std::vector<Subset> subrings;
    for (const Subset& g : groups)
      if (mult_closed(src, g)) subrings.push_back(g);
    auto forms = neutrosophic_forms(src, subrings);
    rep.kernel_is_neutrosophic_subring =
        classify_subring_subset(src, rep.kernel, forms) == SubringKind::NeutrosophicSubring;
  }
  return rep;
}

RadicalReport radical_and_semisimplicity(const FiniteRing& r) {
  const FiniteRingView& v = *r.view;
  RadicalReport rep;
  rep.commutative = v.is_commutative();
  rep.jacobson = Subset(v.size());

  std::vector<bool> unit(v.size(), false);
  for (int x = 0; x < v.size(); ++x) unit[x] = v.is_unit(x);

  auto e = v.one();
  for (int x = 0; x < v.size(); ++x) {
    bool in_rad = true;
    if (!e) {
      in_rad = false;
    } else {
      for (int s = 0; s < v.size() && in_rad; ++s) {
        int t = v.add(*e, v.neg(v.mul(s, x)));
        if (!unit[t]) in_rad = false;
      }
    }
    if (in_rad) rep.jacobson.add(x);
  }
  rep.semisimple = rep.jacobson.count() == 1 && rep.jacobson.contains(v.zero());

  bool has_zero_divisor = false;
  for (int x = 0; x < v.size() && !has_zero_divisor; ++x) {
    if (x == v.zero()) continue;
    for (int y = 0; y < v.size(); ++y) {
      if (y == v.zero()) continue;
      if (v.mul(x, y) == v.zero()) {
        has_zero_divisor = true;
        break;
      }
    }
  }
  rep.integral_domain = rep.commutative && !has_zero_divisor && v.one().has_value();
  bool all_units = true;
  for (int x = 0; x < v.size(); ++x)
    if (x != v.zero() && !unit[x]) {
      all_units = false;
      break;
    }
  rep.division_ring = all_units && v.one().has_value() && v.size() > 1;

  // semiprime / prime by ideal scan
  std::vector<Subset> ideals;
  if (r.parametric_n)
    ideals = enumerate_ideals_parametric(static_cast<const ParametricRing&>(v));
  else
    ideals = enumerate_ideals_generic(v);
  auto ideal_product_is_zero = [&](const Subset& a, const Subset& b) {
    for (int x : a.indices())
      for (int y : b.indices())
        if (v.mul(x, y) != v.zero()) return false;
    return true;
  };
  rep.semiprime = true;
  rep.prime = true;
  for (const Subset& a : ideals) {
    if (a.count() == 1) continue;  // {0}
    if (ideal_product_is_zero(a, a)) rep.semiprime = false;
    for (const Subset& b : ideals) {
      if (b.count() == 1) continue;
      if (ideal_product_is_zero(a, b)) rep.prime = false;
    }
  }
  return rep;
}

FieldReport field_predicates(const FiniteRing& r) {
  const FiniteRingView& v = *r.view;
  FieldReport rep;
  if (!v.indeterminate() || !v.one()) return rep;
  // plain part must be a field: every nonzero plain element invertible inside
  // the plain part
  std::vector<int> plain;
  for (int x = 0; x < v.size(); ++x)
    if (!v.neutro(x)) plain.push_back(x);
  bool field = true;
  for (int x : plain) {
    if (x == v.zero()) continue;
    bool inv = false;
    for (int y : plain)
      if (v.mul(x, y) == *v.one() && v.mul(y, x) == *v.one()) {
        inv = true;
        break;
      }
    if (!inv) {
      field = false;
      break;
    }
  }
  rep.is_neutrosophic_field = field && plain.size() >= 2;
  if (!rep.is_neutrosophic_field) return rep;

  if (v.size() <= 256) {
    auto groups = additive_subgroups(v);
    std::vector<Subset> subrings;
    for (const Subset& g : groups)
      if (mult_closed(v, g)) subrings.push_back(g);
    auto forms = neutrosophic_forms(v, subrings);
    for (const Subset& s : subrings) {
      if (static_cast<int>(s.count()) == v.size()) continue;
      if (classify_subring_subset(v, s, forms) != SubringKind::NeutrosophicSubring) continue;
      // neutrosophic subfield: the plain part of s is a field with its own unit
      std::vector<int> sp;
      for (int i : s.indices())
        if (!v.neutro(i)) sp.push_back(i);
      if (sp.size() < 2) continue;
      std::optional<int> unit;
      for (int e : sp) {
        bool ok = true;
        for (int x : sp)
          if (v.mul(e, x) != x || v.mul(x, e) != x) {
            ok = false;
            break;
          }
        if (ok) {
          unit = e;
          break;
        }
      }
      if (!unit) continue;
      bool subfield = true;
      for (int x : sp) {
        if (x == v.zero()) continue;
        bool inv = false;
        for (int y : sp)
          if (v.mul(x, y) == *unit) {
            inv = true;
            break;
          }
        if (!inv) {
          subfield = false;
          break;
        }
      }
      if (subfield) rep.neutrosophic_subfields.push_back(s);
    }
  }
  rep.prime_neutrosophic_field = rep.neutrosophic_subfields.empty();
  return rep;
}

std::string ring_subset_to_string(const FiniteRingView& r, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ", ";
    out += r.label(i);
    first = false;
  }
  return out + "}";
}

Subset ring_subset_from_labels(const FiniteRingView& r, const std::vector<std::string>& labels) {
  Subset s(r.size());
  for (const auto& l : labels) {
    bool found = false;
    for (int i = 0; i < r.size(); ++i)
      if (r.label(i) == l) {
        s.add(i);
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("no ring element labelled '" + l + "'");
  }
  return s;
}

Subset all_indeterminate_ideal(const ParametricRing& r) {
  Subset s(r.size());
  for (std::int64_t b = 0; b < r.modulus(); ++b) s.add(static_cast<int>(b));
  return s;
}

FiniteRing integer_ring_quotient(std::int64_t m) { return FiniteRing::parametric(m); }

}  // namespace neutro
