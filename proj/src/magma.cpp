#include "neutro/magma.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace neutro {

namespace {

std::optional<int> find_identity(const std::vector<int>& table, int n) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[static_cast<size_t>(e) * n + x] == x && table[static_cast<size_t>(x) * n + e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<int> find_zero(const std::vector<int>& table, int n) {
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[static_cast<size_t>(z) * n + x] == z && table[static_cast<size_t>(x) * n + z] == z;
    if (ok) return z;
  }
  return std::nullopt;
}

}  // namespace

FiniteMagma::FiniteMagma(std::vector<Element> elems, std::vector<int> table,
                         std::optional<int> identity, std::string op_name)
    : elems_(std::move(elems)), table_(std::move(table)), identity_(identity),
      op_name_(std::move(op_name)) {
  const int n = static_cast<int>(elems_.size());
  if (table_.size() != static_cast<size_t>(n) * n) throw std::invalid_argument("table shape");
  for (int v : table_)
    if (v < 0 || v >= n) throw std::invalid_argument("table entry out of carrier");
  for (int i = 0; i < n; ++i) elems_[i].index = i;
  {
    std::set<std::string> labels;
    for (const auto& e : elems_)
      if (!labels.insert(e.label).second) throw std::invalid_argument("duplicate label " + e.label);
  }
  if (!identity_) identity_ = find_identity(table_, n);
  if (identity_) {
    int e = *identity_;
    for (int x = 0; x < n; ++x)
      if (op(e, x) != x || op(x, e) != x) throw std::invalid_argument("bad identity");
  }
  zero_ = find_zero(table_, n);
  if (identity_ && zero_ && *identity_ == *zero_ && n > 1) zero_.reset();
  for (int i = 0; i < n; ++i)
    if (elems_[i].label == "I") i_elem_ = i;
}

std::optional<int> FiniteMagma::index_of(const std::string& label) const {
  for (const auto& e : elems_)
    if (e.label == label) return e.index;
  return std::nullopt;
}

bool FiniteMagma::is_associative() const {
  if (assoc_) return *assoc_;
  const int n = size();
  bool ok = true;
  for (int a = 0; a < n && ok; ++a)
    for (int b = 0; b < n && ok; ++b) {
      int ab = op(a, b);
      for (int c = 0; c < n; ++c)
        if (op(ab, c) != op(a, op(b, c))) {
          ok = false;
          break;
        }
    }
  assoc_ = ok;
  return ok;
}

bool FiniteMagma::is_commutative() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

// ---- builders -------------------------------------------------------------

FiniteMagma build_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic order must be >= 1");
  std::vector<Element> es;
  for (int i = 0; i < n; ++i) {
    std::string l = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    es.push_back({i, l, false});
  }
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
  FiniteMagma m(std::move(es), std::move(t), 0, "*");
  m.provenance = MagmaProvenance::Standard;
  return m;
}

FiniteMagma build_dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
  // elements a^e b^k, e in {0,1}, k in [0,n); b a = a b^{-1}
  const int sz = 2 * n;
  auto idx = [&](int e, int k) { return e * n + k; };
  std::vector<Element> es;
  for (int e = 0; e < 2; ++e)
    for (int k = 0; k < n; ++k) {
      std::string l;
      if (e == 0) l = k == 0 ? "1" : (k == 1 ? "b" : "b^" + std::to_string(k));
      else l = k == 0 ? "a" : (k == 1 ? "ab" : "ab^" + std::to_string(k));
      es.push_back({idx(e, k), l, false});
    }
  std::vector<int> t(static_cast<size_t>(sz) * sz);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int k2 = 0; k2 < n; ++k2) {
          // (a^e1 b^k1)(a^e2 b^k2) = a^(e1+e2) b^(k2 + (e2 ? -k1 : k1))
          int e = (e1 + e2) % 2;
          int k = ((e2 ? -k1 : k1) + k2) % n;
          if (k < 0) k += n;
          t[static_cast<size_t>(idx(e1, k1)) * sz + idx(e2, k2)] = idx(e, k);
        }
  FiniteMagma m(std::move(es), std::move(t), 0, "*");
  m.provenance = MagmaProvenance::Standard;
  return m;
}

namespace {

std::vector<std::vector<int>> all_maps(int n, bool bijective) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  while (true) {
    bool ok = true;
    if (bijective) {
      std::vector<bool> seen(n, false);
      for (int v : cur) {
        if (seen[v]) {
          ok = false;
          break;
        }
        seen[v] = true;
      }
    }
    if (ok) out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == n - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

int moved_points(const std::vector<int>& f) {
  int c = 0;
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] != static_cast<int>(i)) ++c;
  return c;
}

FiniteMagma build_mapping_magma(int n, bool bijective, const std::string& prefix) {
  auto maps = all_maps(n, bijective);
  std::vector<int> order(maps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    int mx = moved_points(maps[x]), my = moved_points(maps[y]);
    if (mx != my) return mx < my;
    return maps[x] < maps[y];
  });
  std::vector<std::vector<int>> sorted;
  for (int i : order) sorted.push_back(maps[i]);
  std::map<std::vector<int>, int> pos;
  for (size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);

  const int sz = static_cast<int>(sorted.size());
  std::vector<Element> es;
  for (int i = 0; i < sz; ++i)
    es.push_back({i, i == 0 ? "1" : prefix + std::to_string(i), false});
  std::vector<int> t(static_cast<size_t>(sz) * sz);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      // left-to-right action: (f*g)(x) = g(f(x))
      std::vector<int> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = sorted[b][sorted[a][x]];
      t[static_cast<size_t>(a) * sz + b] = pos[comp];
    }
  FiniteMagma m(std::move(es), std::move(t), 0, "*");
  m.provenance = MagmaProvenance::Standard;
  return m;
}

}  // namespace

FiniteMagma build_symmetric(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("symmetric group supported for n <= 5");
  return build_mapping_magma(n, true, "p");
}

FiniteMagma build_transformation(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("transformation semigroup supported for n <= 4");
  return build_mapping_magma(n, false, "t");
}

namespace {

FiniteMagma build_zn(std::int64_t n, bool add) {
  BaseRing r = BaseRing::mod(n);
  std::vector<Element> es;
  for (std::int64_t i = 0; i < n; ++i)
    es.push_back({static_cast<int>(i), std::to_string(i), false});
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      t[static_cast<size_t>(a) * n + b] = static_cast<int>(add ? (a + b) % n : (a * b) % n);
  FiniteMagma m(std::move(es), std::move(t), add ? 0 : 1, add ? "+" : "*");
  m.provenance = MagmaProvenance::Standard;
  AmbientData amb{r, {}, add};
  for (std::int64_t i = 0; i < n; ++i) amb.values.push_back(ns_make(r, i, 0));
  m.ambient = amb;
  return m;
}

}  // namespace

FiniteMagma build_zn_add(std::int64_t n) { return build_zn(n, true); }
FiniteMagma build_zn_mul(std::int64_t n) { return build_zn(n, false); }

FiniteMagma build_custom(std::vector<std::string> labels, std::vector<bool> neutro,
                         std::vector<int> table, std::string op_name) {
  std::vector<Element> es;
  for (size_t i = 0; i < labels.size(); ++i)
    es.push_back({static_cast<int>(i), labels[i], i < neutro.size() && neutro[i]});
  return FiniteMagma(std::move(es), std::move(table), std::nullopt, std::move(op_name));
}

FiniteMagma neutrosophify_tagged(const FiniteMagma& m) {
  const int n = m.size();
  std::vector<Element> es;
  for (int i = 0; i < n; ++i) es.push_back({i, m.element(i).label, m.element(i).neutro});
  for (int i = 0; i < n; ++i) {
    std::string l = m.element(i).label == "1" ? "I" : m.element(i).label + "I";
    es.push_back({n + i, l, true});
  }
  const int sz = 2 * n;
  std::vector<int> t(static_cast<size_t>(sz) * sz);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      int base = m.op(a % n, b % n);
      bool tag = a >= n || b >= n;
      t[static_cast<size_t>(a) * sz + b] = tag ? base + n : base;
    }
  FiniteMagma out(std::move(es), std::move(t), m.identity(), m.op_name());
  out.provenance = MagmaProvenance::Tagged;
  out.tagged = true;
  return out;
}

std::vector<NeutroScalar> ambient_generators_all(const BaseRing& zn) {
  return enumerate_scalars(zn);
}

std::vector<NeutroScalar> ambient_generators_determinate(const BaseRing& zn) {
  std::vector<NeutroScalar> out;
  for (std::int64_t a = 0; a < zn.modulus; ++a) out.push_back(ns_make(zn, a, 0));
  return out;
}

std::vector<NeutroScalar> ambient_generators_units(const BaseRing& zn) {
  std::vector<NeutroScalar> out;
  for (std::int64_t a = 1; a < zn.modulus; ++a)
    if (std::gcd(a, zn.modulus) == 1) out.push_back(ns_make(zn, a, 0));
  return out;
}

FiniteMagma neutrosophify_ambient(const BaseRing& zn, bool op_is_add,
                                  const std::vector<NeutroScalar>& generators) {
  if (zn.kind != RingKind::Mod) throw std::invalid_argument("ambient closure needs Z_n");
  auto key = [&](const NeutroScalar& s) {
    return std::get<std::int64_t>(s.a.v) * zn.modulus + std::get<std::int64_t>(s.b.v);
  };
  auto combine = [&](const NeutroScalar& x, const NeutroScalar& y) {
    return op_is_add ? ns_add(x, y) : ns_mul(x, y);
  };
  std::map<std::int64_t, NeutroScalar> seen;
  std::vector<NeutroScalar> work = generators;
  work.push_back(ns_indeterminate(zn));
  for (const auto& g : work) seen.emplace(key(g), g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<NeutroScalar> cur;
    cur.reserve(seen.size());
    for (auto& [k, v] : seen) cur.push_back(v);
    for (const auto& x : cur)
      for (const auto& y : cur) {
        NeutroScalar z = combine(x, y);
        if (seen.emplace(key(z), z).second) grew = true;
      }
  }
  // canonical order: lexicographic (a, b), which the key encodes
  std::vector<NeutroScalar> carrier;
  for (auto& [k, v] : seen) carrier.push_back(v);
  std::vector<Element> es;
  for (size_t i = 0; i < carrier.size(); ++i)
    es.push_back({static_cast<int>(i), ns_to_string(carrier[i]), ns_is_neutrosophic(carrier[i])});
  std::map<std::int64_t, int> pos;
  for (size_t i = 0; i < carrier.size(); ++i) pos[key(carrier[i])] = static_cast<int>(i);
  const int sz = static_cast<int>(carrier.size());
  std::vector<int> t(static_cast<size_t>(sz) * sz);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b)
      t[static_cast<size_t>(a) * sz + b] = pos.at(key(combine(carrier[a], carrier[b])));
  FiniteMagma out(std::move(es), std::move(t), std::nullopt, op_is_add ? "+" : "*");
  out.provenance = MagmaProvenance::Ambient;
  out.ambient = AmbientData{zn, carrier, op_is_add};
  return out;
}

FiniteMagma direct_product(const std::vector<const FiniteMagma*>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty factor list");
  std::vector<int> sizes;
  long long total = 1;
  for (auto* f : factors) {
    sizes.push_back(f->size());
    total *= f->size();
    if (total > 1 << 20) throw std::invalid_argument("direct product too large");
  }
  const int sz = static_cast<int>(total);
  auto decode = [&](int x) {
    std::vector<int> c(factors.size());
    for (size_t i = factors.size(); i-- > 0;) {
      c[i] = x % sizes[i];
      x /= sizes[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int x = 0;
    for (size_t i = 0; i < c.size(); ++i) x = x * sizes[i] + c[i];
    return x;
  };
  std::vector<Element> es;
  bool has_identity = true;
  for (auto* f : factors) has_identity = has_identity && f->identity().has_value();
  for (int i = 0; i < sz; ++i) {
    auto c = decode(i);
    std::string l = "(";
    bool neutro = false;
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) l += ",";
      l += factors[k]->element(c[k]).label;
      neutro = neutro || factors[k]->element(c[k]).neutro;
    }
    l += ")";
    es.push_back({i, l, neutro});
  }
  std::vector<int> t(static_cast<size_t>(sz) * sz);
  for (int a = 0; a < sz; ++a) {
    auto ca = decode(a);
    for (int b = 0; b < sz; ++b) {
      auto cb = decode(b);
      std::vector<int> cc(ca.size());
      for (size_t k = 0; k < ca.size(); ++k) cc[k] = factors[k]->op(ca[k], cb[k]);
      t[static_cast<size_t>(a) * sz + b] = encode(cc);
    }
  }
  std::optional<int> ident;
  if (has_identity) {
    std::vector<int> c;
    for (auto* f : factors) c.push_back(*f->identity());
    ident = encode(c);
  }
  FiniteMagma out(std::move(es), std::move(t), ident, factors[0]->op_name());
  out.provenance = MagmaProvenance::Product;
  return out;
}

// ---- operations -----------------------------------------------------------

Subset closure(const FiniteMagma& m, const Subset& s) {
  Subset cur = s;
  std::vector<int> work = s.indices();
  std::vector<int> all = work;
  while (!work.empty()) {
    std::vector<int> next;
    for (int x : work)
      for (int y : all) {
        for (int z : {m.op(x, y), m.op(y, x)}) {
          if (!cur.contains(z)) {
            cur.add(z);
            next.push_back(z);
          }
        }
      }
    for (int x : next) all.push_back(x);
    work = std::move(next);
  }
  return cur;
}

bool is_closed(const FiniteMagma& m, const Subset& s) {
  auto idx = s.indices();
  for (int x : idx)
    for (int y : idx)
      if (!s.contains(m.op(x, y))) return false;
  return true;
}

namespace {

OrderRecord element_order(const FiniteMagma& m, int x) {
  OrderRecord rec;
  rec.element = x;
  std::vector<int> seq;
  std::unordered_map<int, int> seen;  // value -> position (1-based power)
  int cur = x;
  int k = 1;
  while (!seen.count(cur)) {
    seen[cur] = k;
    if (m.identity() && cur == *m.identity() && !rec.order) rec.order = k;
    if (m.indeterminate() && cur == *m.indeterminate() && !rec.neutro_exponent)
      rec.neutro_exponent = k;
    cur = m.op(cur, x);
    ++k;
  }
  rec.cycle_length = k - seen[cur];
  return rec;
}

}  // namespace

MagmaPredicates predicates(const FiniteMagma& m) {
  MagmaPredicates p;
  p.is_semigroup = m.is_associative();
  p.is_commutative = m.is_commutative();
  p.is_monoid = p.is_semigroup && m.identity().has_value();
  if (p.is_monoid) {
    bool inv = true;
    int e = *m.identity();
    for (int x = 0; x < m.size() && inv; ++x) {
      bool found = false;
      for (int y = 0; y < m.size(); ++y)
        if (m.op(x, y) == e && m.op(y, x) == e) {
          found = true;
          break;
        }
      inv = found;
    }
    p.is_group = inv;
  }
  for (int x = 0; x < m.size(); ++x)
    if (m.op(x, x) == x) p.idempotent_elements.push_back(x);
  for (int x = 0; x < m.size(); ++x) p.element_orders.push_back(element_order(m, x));

  // S-semigroup: a proper subset that is a nontrivial group under the table.
  // Scan closures of small generator sets, smallest first.
  p.is_s_semigroup = false;
  const int n = m.size();
  auto check = [&](const Subset& c) {
    if (static_cast<int>(c.count()) >= n || c.count() < 2) return false;
    return is_group_like(m, c);
  };
  for (int a = 0; a < n && !p.is_s_semigroup; ++a) {
    Subset s(n);
    s.add(a);
    Subset c = closure(m, s);
    if (check(c)) {
      p.is_s_semigroup = true;
      p.s_semigroup_witness = c;
    }
  }
  for (int a = 0; a < n && !p.is_s_semigroup; ++a)
    for (int b = a + 1; b < n && !p.is_s_semigroup; ++b) {
      Subset s(n);
      s.add(a);
      s.add(b);
      Subset c = closure(m, s);
      if (check(c)) {
        p.is_s_semigroup = true;
        p.s_semigroup_witness = c;
      }
    }
  return p;
}

std::optional<int> unique_product_check(const FiniteMagma& m, const Subset& a, const Subset& b) {
  if (a.empty() || b.empty()) return std::nullopt;
  std::vector<int> counts(m.size(), 0);
  for (int x : a.indices())
    for (int y : b.indices()) ++counts[m.op(x, y)];
  for (int i = 0; i < m.size(); ++i)
    if (counts[i] == 1) return i;
  return std::nullopt;
}

namespace {

// ring product for ambient additive magmas; -1 when the product leaves the
// carrier (possible for proper ambient closures)
int ambient_mul(const FiniteMagma& m, int x, int y) {
  const AmbientData& amb = *m.ambient;
  NeutroScalar z = ns_mul(amb.values[x], amb.values[y]);
  for (size_t i = 0; i < amb.values.size(); ++i)
    if (amb.values[i] == z) return static_cast<int>(i);
  return -1;
}

}  // namespace

Subset act_left(const FiniteMagma& m, int x, const Subset& s) {
  Subset out(m.size());
  bool scalar = m.ambient.has_value() && m.ambient->op_is_add;
  for (int y : s.indices()) {
    int z = scalar ? ambient_mul(m, x, y) : m.op(x, y);
    if (z >= 0) out.add(z);
  }
  return out;
}

Subset act_right(const FiniteMagma& m, const Subset& s, int x) {
  Subset out(m.size());
  bool scalar = m.ambient.has_value() && m.ambient->op_is_add;
  for (int y : s.indices()) {
    int z = scalar ? ambient_mul(m, y, x) : m.op(y, x);
    if (z >= 0) out.add(z);
  }
  return out;
}

ClosedSetEnumeration enumerate_closed_subsets(const FiniteMagma& m, int carrier_cap,
                                              int max_generators) {
  ClosedSetEnumeration out;
  const int n = m.size();
  std::unordered_set<Subset, SubsetHash> found;
  if (n <= carrier_cap) {
    // lattice walk: every closed set is reachable by repeatedly adding one
    // element to a smaller closed set and closing
    std::vector<Subset> frontier;
    for (int i = 0; i < n; ++i) {
      Subset s(n);
      s.add(i);
      Subset c = closure(m, s);
      if (found.insert(c).second) frontier.push_back(c);
    }
    while (!frontier.empty()) {
      std::vector<Subset> next;
      for (const Subset& s : frontier)
        for (int i = 0; i < n; ++i) {
          if (s.contains(i)) continue;
          Subset t = s;
          t.add(i);
          Subset c = closure(m, t);
          if (found.insert(c).second) next.push_back(c);
        }
      frontier = std::move(next);
    }
  } else {
    out.exhaustive = false;
    std::vector<std::vector<int>> seeds;
    for (int a = 0; a < n; ++a) seeds.push_back({a});
    if (max_generators >= 2)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) seeds.push_back({a, b});
    if (max_generators >= 3 && n <= 64)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c) seeds.push_back({a, b, c});
    for (const auto& seed : seeds) {
      Subset s(n);
      for (int i : seed) s.add(i);
      found.insert(closure(m, s));
    }
  }
  out.sets.assign(found.begin(), found.end());
  std::sort(out.sets.begin(), out.sets.end(), [](const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

std::optional<int> local_identity(const FiniteMagma& m, const Subset& s) {
  auto idx = s.indices();
  for (int e : idx) {
    bool ok = true;
    for (int x : idx)
      if (m.op(e, x) != x || m.op(x, e) != x) {
        ok = false;
        break;
      }
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_group_like(const FiniteMagma& m, const Subset& s) {
  if (s.empty() || !is_closed(m, s)) return false;
  auto e = local_identity(m, s);
  if (!e) return false;
  auto idx = s.indices();
  // associativity restricted to s (ambient may be non-associative)
  for (int a : idx)
    for (int b : idx)
      for (int c : idx)
        if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c))) return false;
  for (int x : idx) {
    bool inv = false;
    for (int y : idx)
      if (m.op(x, y) == *e && m.op(y, x) == *e) {
        inv = true;
        break;
      }
    if (!inv) return false;
  }
  return true;
}

std::string subset_to_string(const FiniteMagma& m, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ", ";
    out += m.element(i).label;
    first = false;
  }
  return out + "}";
}

Subset subset_from_labels(const FiniteMagma& m, const std::vector<std::string>& labels) {
  Subset s(m.size());
  for (const auto& l : labels) {
    auto i = m.index_of(l);
    if (!i) throw std::invalid_argument("no element labelled '" + l + "'");
    s.add(*i);
  }
  return s;
}

}  // namespace neutro
