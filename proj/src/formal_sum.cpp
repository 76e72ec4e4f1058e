#include "neutro/formal_sum.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "neutro/expr.hpp"
#include "neutro/group_analysis.hpp"

namespace neutro {

std::string algebra_kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::GroupRing: return "group ring";
    case AlgebraKind::NeutrosophicGroupRing: return "neutrosophic group ring";
    case AlgebraKind::SemigroupRing: return "semigroup ring";
    case AlgebraKind::NeutrosophicSemigroupRing: return "neutrosophic semigroup ring";
    case AlgebraKind::GroupNeutrosophicRing: return "group neutrosophic ring";
    case AlgebraKind::SemigroupNeutrosophicRing: return "semigroup neutrosophic ring";
    case AlgebraKind::SSemigroupNeutrosophicRing: return "S-semigroup neutrosophic ring";
    case AlgebraKind::NeutrosophicGroupNeutrosophicRing:
      return "neutrosophic group neutrosophic ring";
    case AlgebraKind::NeutrosophicSemigroupNeutrosophicRing:
      return "neutrosophic semigroup neutrosophic ring";
    case AlgebraKind::SNeutrosophicSemigroupNeutrosophicRing:
      return "S-neutrosophic semigroup neutrosophic ring";
  }
  return "?";
}

namespace {

// proper subset that is a nontrivial group under the table; pairs scanned
// only at desk scale
std::optional<Subset> find_group_subset(const FiniteMagma& m) {
  const int n = m.size();
  auto check = [&](const Subset& c) {
    return static_cast<int>(c.count()) < n && c.count() >= 2 && is_group_like(m, c);
  };
  for (int a = 0; a < n; ++a) {
    Subset s(n);
    s.add(a);
    Subset c = closure(m, s);
    if (check(c)) return c;
  }
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Subset s(n);
        s.add(a);
        s.add(b);
        Subset c = closure(m, s);
        if (check(c)) return c;
      }
  }
  return std::nullopt;
}

Subset plain_part(const FiniteMagma& m) {
  Subset s(m.size());
  for (int i = 0; i < m.size(); ++i)
    if (!m.element(i).neutro) s.add(i);
  return s;
}

}  // namespace

Algebra::Algebra(ScalarRing scalars, std::shared_ptr<const FiniteMagma> magma)
    : scalars_(scalars), magma_(std::move(magma)) {
  if (scalars_.kind == ScalarKind::Neutro && scalars_.base.kind == RingKind::Integers) {
    // fine: <Z u I> scalars, symbolic
  }
  neu_magma_ = magma_->tagged || magma_->indeterminate().has_value();
  Subset gpart = neu_magma_ ? plain_part(*magma_) : Subset::full(magma_->size());
  group_ = is_group_like(*magma_, gpart) && !gpart.empty();
  group_witness_ = find_group_subset(*magma_);
  s_semigroup_ = group_witness_.has_value();

  bool neu_scalars = scalars_.kind == ScalarKind::Neutro;
  if (!neu_scalars) {
    if (neu_magma_)
      kind_ = group_ ? AlgebraKind::NeutrosophicGroupRing : AlgebraKind::NeutrosophicSemigroupRing;
    else
      kind_ = group_ ? AlgebraKind::GroupRing : AlgebraKind::SemigroupRing;
  } else {
    if (neu_magma_) {
      if (group_) kind_ = AlgebraKind::NeutrosophicGroupNeutrosophicRing;
      else
        kind_ = s_semigroup_ ? AlgebraKind::SNeutrosophicSemigroupNeutrosophicRing
                             : AlgebraKind::NeutrosophicSemigroupNeutrosophicRing;
    } else {
      if (group_) kind_ = AlgebraKind::GroupNeutrosophicRing;
      else
        kind_ = s_semigroup_ ? AlgebraKind::SSemigroupNeutrosophicRing
                             : AlgebraKind::SemigroupNeutrosophicRing;
    }
  }
}

NeutroScalar Algebra::check_scalar(const NeutroScalar& c) const {
  if (c.ring != scalars_.base) throw RingMismatch();
  if (scalars_.kind == ScalarKind::Plain && !be_is_zero(c.b))
    throw std::invalid_argument("plain coefficient ring rejects I-parts");
  return c;
}

std::optional<double> Algebra::order() const {
  if (scalars_.base.kind != RingKind::Mod) return std::nullopt;
  double ns = static_cast<double>(scalars_.base.modulus);
  if (scalars_.kind == ScalarKind::Neutro) ns *= static_cast<double>(scalars_.base.modulus);
  return std::pow(ns, magma_->size());
}

AlgebraPtr make_algebra(ScalarRing scalars, FiniteMagma magma) {
  return std::make_shared<Algebra>(scalars, std::make_shared<FiniteMagma>(std::move(magma)));
}

AlgebraPtr make_algebra(ScalarRing scalars, std::shared_ptr<const FiniteMagma> magma) {
  return std::make_shared<Algebra>(scalars, std::move(magma));
}

// ---- basic arithmetic -------------------------------------------------------

FormalSum fs_zero(const AlgebraPtr& a) { return {a, {}}; }

FormalSum fs_one(const AlgebraPtr& a) {
  auto e = a->magma().identity();
  if (!e) throw std::domain_error("magma has no identity");
  return fs_element(a, *e);
}

FormalSum fs_element(const AlgebraPtr& a, int index) {
  FormalSum f{a, {}};
  f.coeffs[index] = ns_one(a->scalars().base);
  return f;
}

FormalSum fs_term(const AlgebraPtr& a, const NeutroScalar& c, int index) {
  FormalSum f{a, {}};
  NeutroScalar v = a->check_scalar(c);
  if (!ns_is_zero(v)) f.coeffs[index] = v;
  return f;
}

FormalSum fs_scalar(const AlgebraPtr& a, const NeutroScalar& c) {
  auto e = a->magma().identity();
  if (!e) throw std::domain_error("magma has no identity");
  return fs_term(a, c, *e);
}

FormalSum fs_add(const FormalSum& x, const FormalSum& y) {
  if (x.alg != y.alg) throw std::invalid_argument("formal sums from different algebras");
  FormalSum r = x;
  for (const auto& [i, c] : y.coeffs) {
    auto it = r.coeffs.find(i);
    if (it == r.coeffs.end()) r.coeffs.emplace(i, c);
    else {
      NeutroScalar s = ns_add(it->second, c);
      if (ns_is_zero(s)) r.coeffs.erase(it);
      else it->second = s;
    }
  }
  return r;
}

FormalSum fs_neg(const FormalSum& x) {
  FormalSum r = x;
  for (auto& [i, c] : r.coeffs) c = ns_neg(c);
  return r;
}

FormalSum fs_sub(const FormalSum& x, const FormalSum& y) { return fs_add(x, fs_neg(y)); }

FormalSum fs_mul(const FormalSum& x, const FormalSum& y) {
  if (x.alg != y.alg) throw std::invalid_argument("formal sums from different algebras");
  const FiniteMagma& m = x.alg->magma();
  FormalSum r = fs_zero(x.alg);
  for (const auto& [i, ci] : x.coeffs)
    for (const auto& [j, cj] : y.coeffs) {
      int k = m.op(i, j);
      NeutroScalar c = ns_mul(ci, cj);
      auto it = r.coeffs.find(k);
      if (it == r.coeffs.end()) {
        if (!ns_is_zero(c)) r.coeffs.emplace(k, c);
      } else {
        NeutroScalar s = ns_add(it->second, c);
        if (ns_is_zero(s)) r.coeffs.erase(it);
        else it->second = s;
      }
    }
  return r;
}

FormalSum fs_scale(const FormalSum& x, const NeutroScalar& c) {
  NeutroScalar v = x.alg->check_scalar(c);
  FormalSum r = fs_zero(x.alg);
  for (const auto& [i, ci] : x.coeffs) {
    NeutroScalar s = ns_mul(ci, v);
    if (!ns_is_zero(s)) r.coeffs.emplace(i, s);
  }
  return r;
}

bool fs_is_zero(const FormalSum& x) { return x.coeffs.empty(); }

bool fs_support_has_neutro(const FormalSum& x) {
  for (const auto& [i, c] : x.coeffs)
    if (x.alg->magma().element(i).neutro) return true;
  return false;
}

bool fs_coeff_has_neutro(const FormalSum& x) {
  for (const auto& [i, c] : x.coeffs)
    if (ns_is_neutrosophic(c)) return true;
  return false;
}

bool fs_is_neutrosophic(const FormalSum& x) {
  return fs_support_has_neutro(x) || fs_coeff_has_neutro(x);
}

std::string fs_to_string(const FormalSum& x) {
  if (fs_is_zero(x)) return "0";
  const FiniteMagma& m = x.alg->magma();
  std::string out;
  for (const auto& [i, c] : x.coeffs) {
    std::string cs = ns_to_string(c);
    bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    bool negative = !composite && !cs.empty() && cs[0] == '-';
    std::string join = out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (negative) cs = cs.substr(1);
    bool is_identity = m.identity() && i == *m.identity();
    std::string body;
    if (is_identity) body = composite ? "(" + cs + ")" : cs;
    else if (cs == "1") body = m.element(i).label;
    else if (composite) body = "(" + cs + ")*" + m.element(i).label;
    else body = cs + "*" + m.element(i).label;
    out += join + body;
  }
  return out;
}

namespace {

struct FsAlgebraEval : ExprAlgebra<FormalSum> {
  AlgebraPtr a;
  explicit FsAlgebraEval(AlgebraPtr alg) : a(std::move(alg)) {}

  FormalSum number(const std::string& text) override {
    return fs_scalar(a, ns_from_base(be_parse(a->scalars().base, text)));
  }
  FormalSum atom(const std::string& name, bool bracketed) override {
    auto idx = a->magma().index_of(name);
    if (idx) return fs_element(a, *idx);
    if (!bracketed && name == "I" && a->scalars().kind == ScalarKind::Neutro)
      return fs_scalar(a, ns_indeterminate(a->scalars().base));
    throw std::invalid_argument("unknown element '" + name + "'");
  }
  FormalSum add(const FormalSum& x, const FormalSum& y) override { return fs_add(x, y); }
  FormalSum sub(const FormalSum& x, const FormalSum& y) override { return fs_sub(x, y); }
  FormalSum neg(const FormalSum& x) override { return fs_neg(x); }
  FormalSum mul(const FormalSum& x, const FormalSum& y) override { return fs_mul(x, y); }
  FormalSum pow(const FormalSum& x, long e) override {
    FormalSum r = fs_one(a);
    for (long i = 0; i < e; ++i) r = fs_mul(r, x);
    return r;
  }
};

}  // namespace

FormalSum fs_parse(const AlgebraPtr& a, const std::string& text) {
  FsAlgebraEval alg(a);
  ExprParser<FormalSum> parser(expr_lex(text), alg);
  return parser.parse();
}

// ---- constructive theorems ----------------------------------------------------

bool is_subgroup_like_subset(const FiniteMagma& m, const Subset& h) {
  if (h.empty()) return false;
  auto idx = h.indices();
  for (int x : idx) {
    Subset xh(m.size());
    for (int y : idx) xh.add(m.op(x, y));
    if (!(xh == h)) return false;
  }
  return true;
}

FormalSum subgroup_sum(const AlgebraPtr& a, const Subset& h) {
  if (!is_subgroup_like_subset(a->magma(), h))
    throw std::invalid_argument("subset is not subgroup-like (xH = H fails)");
  FormalSum f = fs_zero(a);
  for (int i : h.indices()) f.coeffs[i] = ns_one(a->scalars().base);
  return f;
}

std::pair<FormalSum, FormalSum> zero_divisor_pair(const FormalSum& alpha, int n) {
  const AlgebraPtr& a = alpha.alg;
  NeutroScalar nn = ns_make(a->scalars().base, n, 0);
  return {alpha, fs_sub(alpha, fs_scalar(a, nn))};
}

UnitConstruction unit_from_subgroup(const FormalSum& alpha, int n, const NeutroScalar& a) {
  const AlgebraPtr& alg = alpha.alg;
  NeutroScalar av = alg->check_scalar(a);
  NeutroScalar nv = ns_make(alg->scalars().base, n, 0);
  NeutroScalar denom = ns_sub(ns_mul(av, nv), ns_one(alg->scalars().base));
  auto inv = classify_unit(denom);
  if (!inv) throw std::domain_error("(a*n - 1) is not invertible in the coefficient ring");
  UnitConstruction out;
  out.x = fs_sub(fs_one(alg), fs_scale(alpha, av));
  out.y = fs_sub(fs_one(alg), fs_scale(alpha, ns_mul(av, *inv)));
  out.verified =
      fs_mul(out.x, out.y) == fs_one(alg) && fs_mul(out.y, out.x) == fs_one(alg);
  if (auto ie = alg->magma().indeterminate()) {
    FormalSum target = fs_element(alg, *ie);
    FormalSum yp = fs_mul(out.y, target);
    if (fs_mul(out.x, yp) == target) {
      out.neutro_partner = yp;
      out.neutro_target = target;
    }
  } else if (alg->scalars().kind == ScalarKind::Neutro && alg->magma().identity()) {
    FormalSum target = fs_scalar(alg, ns_indeterminate(alg->scalars().base));
    FormalSum yp = fs_scale(out.y, ns_indeterminate(alg->scalars().base));
    if (fs_mul(out.x, yp) == target) {
      out.neutro_partner = yp;
      out.neutro_target = target;
    }
  }
  return out;
}

FsIdempotentReport fs_idempotent_report(const FormalSum& x) {
  FsIdempotentReport rep;
  rep.idempotent = fs_mul(x, x) == x;
  rep.support_neutro = fs_support_has_neutro(x);
  rep.coeff_neutro = fs_coeff_has_neutro(x);
  return rep;
}

// ---- packed enumeration -------------------------------------------------------

namespace {

struct Packing {
  AlgebraPtr alg;
  std::vector<NeutroScalar> scalars;
  int ns = 0;
  int nelems = 0;
  std::int64_t total = 0;
  std::vector<std::int64_t> pw;
  std::vector<int> sadd, smul, sneg;
  int szero = 0, sone = 0;

  explicit Packing(const AlgebraPtr& a, double cap) : alg(a) {
    const BaseRing& b = a->scalars().base;
    if (b.kind != RingKind::Mod)
      throw std::domain_error("enumeration needs a finite coefficient ring");
    if (a->scalars().kind == ScalarKind::Plain) {
      for (std::int64_t v = 0; v < b.modulus; ++v) scalars.push_back(ns_make(b, v, 0));
    } else {
      scalars = enumerate_scalars(b);
    }
    ns = static_cast<int>(scalars.size());
    nelems = a->magma().size();
    double t = std::pow(static_cast<double>(ns), nelems);
    if (t > cap) throw std::domain_error("algebra too large for exhaustive enumeration");
    total = static_cast<std::int64_t>(t + 0.5);
    pw.resize(nelems + 1);
    pw[0] = 1;
    for (int i = 0; i < nelems; ++i) pw[i + 1] = pw[i] * ns;
    sadd.resize(static_cast<size_t>(ns) * ns);
    smul.resize(static_cast<size_t>(ns) * ns);
    sneg.resize(ns);
    auto index_of = [&](const NeutroScalar& s) {
      std::int64_t av = std::get<std::int64_t>(s.a.v), bv = std::get<std::int64_t>(s.b.v);
      if (a->scalars().kind == ScalarKind::Plain) return static_cast<int>(av);
      return static_cast<int>(av * b.modulus + bv);
    };
    for (int i = 0; i < ns; ++i) {
      sneg[i] = index_of(ns_neg(scalars[i]));
      for (int j = 0; j < ns; ++j) {
        sadd[static_cast<size_t>(i) * ns + j] = index_of(ns_add(scalars[i], scalars[j]));
        smul[static_cast<size_t>(i) * ns + j] = index_of(ns_mul(scalars[i], scalars[j]));
      }
    }
    szero = index_of(ns_zero(b));
    sone = index_of(ns_one(b));
  }

  int digit(std::int64_t x, int i) const { return static_cast<int>((x / pw[i]) % ns); }

  std::int64_t pack(const FormalSum& f) const {
    std::int64_t x = 0;
    auto index_of = [&](const NeutroScalar& s) {
      std::int64_t av = std::get<std::int64_t>(s.a.v), bv = std::get<std::int64_t>(s.b.v);
      if (alg->scalars().kind == ScalarKind::Plain) return static_cast<std::int64_t>(av);
      return av * alg->scalars().base.modulus + bv;
    };
    for (const auto& [i, c] : f.coeffs) x += index_of(c) * pw[i];
    return x;
  }

  FormalSum unpack(std::int64_t x) const {
    FormalSum f = fs_zero(alg);
    for (int i = 0; i < nelems; ++i) {
      int d = digit(x, i);
      if (d != szero) f.coeffs[i] = scalars[d];
    }
    return f;
  }
};

class PackedAlgebraView : public FiniteRingView {
 public:
  PackedAlgebraView(AlgebraPtr a, double cap) : p_(a, cap) {
    const FiniteMagma& m = a->magma();
    mt_.resize(static_cast<size_t>(m.size()) * m.size());
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j) mt_[static_cast<size_t>(i) * m.size() + j] = m.op(i, j);
    if (auto e = m.identity()) one_ = p_.sone * p_.pw[*e];
    if (auto ie = m.indeterminate()) {
      i_elem_ = p_.sone * p_.pw[*ie];
    } else if (a->scalars().kind == ScalarKind::Neutro && m.identity()) {
      const BaseRing& b = a->scalars().base;
      int idx = static_cast<int>(0 * b.modulus + 1);  // scalar I
      i_elem_ = static_cast<std::int64_t>(idx) * p_.pw[*m.identity()];
    }
  }

  const Packing& packing() const { return p_; }

  int size() const override { return static_cast<int>(p_.total); }
  int add(int x, int y) const override {
    std::int64_t r = 0;
    for (int i = 0; i < p_.nelems; ++i)
      r += static_cast<std::int64_t>(
               p_.sadd[static_cast<size_t>(p_.digit(x, i)) * p_.ns + p_.digit(y, i)]) *
           p_.pw[i];
    return static_cast<int>(r);
  }
  int mul(int x, int y) const override {
    std::vector<int> acc(p_.nelems, p_.szero);
    for (int i = 0; i < p_.nelems; ++i) {
      int di = p_.digit(x, i);
      if (di == p_.szero) continue;
      for (int j = 0; j < p_.nelems; ++j) {
        int dj = p_.digit(y, j);
        if (dj == p_.szero) continue;
        int k = mt_[static_cast<size_t>(i) * p_.nelems + j];
        int prod = p_.smul[static_cast<size_t>(di) * p_.ns + dj];
        acc[k] = p_.sadd[static_cast<size_t>(acc[k]) * p_.ns + prod];
      }
    }
    std::int64_t r = 0;
    for (int i = 0; i < p_.nelems; ++i) r += static_cast<std::int64_t>(acc[i]) * p_.pw[i];
    return static_cast<int>(r);
  }
  int neg(int x) const override {
    std::int64_t r = 0;
    for (int i = 0; i < p_.nelems; ++i)
      r += static_cast<std::int64_t>(p_.sneg[p_.digit(x, i)]) * p_.pw[i];
    return static_cast<int>(r);
  }
  int zero() const override { return 0; }
  std::optional<int> one() const override {
    return one_ >= 0 ? std::optional<int>(static_cast<int>(one_)) : std::nullopt;
  }
  std::optional<int> indeterminate() const override {
    return i_elem_ >= 0 ? std::optional<int>(static_cast<int>(i_elem_)) : std::nullopt;
  }
  bool neutro(int x) const override { return fs_is_neutrosophic(p_.unpack(x)); }
  bool pure_indeterminate(int) const override { return false; }
  std::string label(int x) const override { return fs_to_string(p_.unpack(x)); }

 private:
  Packing p_;
  std::vector<int> mt_;
  std::int64_t one_ = -1, i_elem_ = -1;
};

}  // namespace

std::shared_ptr<FiniteRingView> algebra_ring_view(const AlgebraPtr& a, double cap) {
  return std::make_shared<PackedAlgebraView>(a, cap);
}

FsSearchResult idempotent_search(const AlgebraPtr& a, double cap) {
  FsSearchResult out;
  PackedAlgebraView v(a, cap);
  out.exhaustive = true;
  for (int x = 0; x < v.size(); ++x)
    if (v.mul(x, x) == x) out.found.push_back(v.packing().unpack(x));
  return out;
}

FsZeroDivisorReport fs_zero_divisor_report(const FormalSum& alpha, double cap) {
  FsZeroDivisorReport rep;
  rep.neutrosophic = fs_is_neutrosophic(alpha);
  if (fs_is_zero(alpha)) return rep;
  PackedAlgebraView v(alpha.alg, cap);
  rep.searched = true;
  int xa = static_cast<int>(v.packing().pack(alpha));
  for (int y = 1; y < v.size(); ++y)
    if (v.mul(xa, y) == 0) {
      rep.witness = v.packing().unpack(y);
      break;
    }
  return rep;
}

FsUnitReport fs_unit_report(const FormalSum& alpha, double cap) {
  FsUnitReport rep;
  rep.neutrosophic_element = fs_is_neutrosophic(alpha);
  PackedAlgebraView v(alpha.alg, cap);
  rep.searched = true;
  int xa = static_cast<int>(v.packing().pack(alpha));
  auto e = v.one();
  auto ie = v.indeterminate();
  for (int y = 0; y < v.size(); ++y) {
    int p = v.mul(xa, y);
    if (e && p == *e && v.mul(y, xa) == *e && !rep.inverse)
      rep.inverse = v.packing().unpack(y);
    if (ie && p == *ie && !rep.neutro_partner) rep.neutro_partner = v.packing().unpack(y);
    if (rep.inverse && (!ie || rep.neutro_partner)) break;
  }
  return rep;
}

// ---- substructures --------------------------------------------------------------

namespace {

Subset view_ring_closure(const FiniteRingView& v, Subset s) {
  s.add(v.zero());
  while (true) {
    Subset next = s;
    auto idx = s.indices();
    for (int x : idx) {
      for (int y : idx) {
        next.add(v.add(x, y));
        next.add(v.mul(x, y));
      }
    }
    if (next == s) return s;
    s = next;
  }
}

std::vector<Subset> enumerate_subrings(const FiniteRingView& v, bool* exhaustive) {
  std::unordered_set<Subset, SubsetHash> found;
  const int n = v.size();
  if (n <= 256) {
    *exhaustive = true;
    std::vector<Subset> frontier;
    {
      Subset z(n);
      z.add(v.zero());
      found.insert(z);
      frontier.push_back(z);
    }
    while (!frontier.empty()) {
      std::vector<Subset> next;
      for (const Subset& s : frontier)
        for (int i = 0; i < n; ++i) {
          if (s.contains(i)) continue;
          Subset t = s;
          t.add(i);
          Subset c = view_ring_closure(v, t);
          if (found.insert(c).second && found.size() < 50000) next.push_back(c);
        }
      frontier = std::move(next);
    }
  } else {
    *exhaustive = false;
    for (int i = 0; i < n; ++i) {
      Subset s(n);
      s.add(i);
      found.insert(view_ring_closure(v, s));
    }
  }
  std::vector<Subset> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

// ring-closure of a coefficient set inside the (finite) scalar ring
std::vector<NeutroScalar> scalar_subring_closure(const ScalarRing& sr,
                                                 std::vector<NeutroScalar> seed) {
  seed.push_back(ns_zero(sr.base));
  std::vector<NeutroScalar> cur = seed;
  auto contains = [&](const NeutroScalar& x) {
    return std::find(cur.begin(), cur.end(), x) != cur.end();
  };
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<NeutroScalar> snapshot = cur;
    for (const auto& x : snapshot)
      for (const auto& y : snapshot) {
        for (NeutroScalar z : {ns_add(x, y), ns_mul(x, y), ns_neg(x)}) {
          if (!contains(z)) {
            cur.push_back(z);
            grew = true;
          }
        }
      }
  }
  return cur;
}

}  // namespace

FsSubringKind fs_classify_subring(const AlgebraPtr& a, const std::vector<FormalSum>& subset) {
  const FiniteMagma& m = a->magma();
  bool any_neutro = false;
  for (const auto& f : subset)
    if (fs_is_neutrosophic(f)) any_neutro = true;

  // structural span test: subset == S' H (all sums over H with coefficients
  // in the scalar subring S' generated by the occurring coefficients)
  Subset support(m.size());
  std::vector<NeutroScalar> coeffs;
  for (const auto& f : subset)
    for (const auto& [i, c] : f.coeffs) {
      support.add(i);
      if (std::find(coeffs.begin(), coeffs.end(), c) == coeffs.end()) coeffs.push_back(c);
    }
  bool span_match = false;
  bool support_closed = !support.empty() && is_closed(m, support);
  if (support_closed && a->scalars().base.kind == RingKind::Mod) {
    auto sub = scalar_subring_closure(a->scalars(), coeffs);
    double span = std::pow(static_cast<double>(sub.size()),
                           static_cast<double>(support.count()));
    if (span == static_cast<double>(subset.size())) {
      // every combination must be present; count match + membership of the
      // subset in the span suffices since the span is closed
      span_match = true;
      for (const auto& f : subset) {
        for (const auto& [i, c] : f.coeffs) {
          if (!support.contains(i) ||
              std::find(sub.begin(), sub.end(), c) == sub.end()) {
            span_match = false;
            break;
          }
        }
        if (!span_match) break;
      }
    }
  }
  if (span_match) {
    SubstructureKind sk = classify_substructure(m, support);
    bool plain_coeffs = true;
    for (const auto& c : coeffs)
      if (ns_is_neutrosophic(c)) plain_coeffs = false;
    if (sk == SubstructureKind::NeutrosophicSubgroup) return FsSubringKind::SubneutrosophicGroupRing;
    if (sk == SubstructureKind::PlainSubgroup && plain_coeffs) return FsSubringKind::SubgroupRing;
  }

  // <S u I>: ring closure of the plain members together with I
  if (any_neutro) {
    std::optional<FormalSum> i_sum;
    if (auto ie = m.indeterminate()) i_sum = fs_element(a, *ie);
    else if (a->scalars().kind == ScalarKind::Neutro && m.identity())
      i_sum = fs_scalar(a, ns_indeterminate(a->scalars().base));
    bool has_nonzero_plain = false;
    for (const auto& f : subset)
      if (!fs_is_neutrosophic(f) && !fs_is_zero(f)) has_nonzero_plain = true;
    if (i_sum && has_nonzero_plain) {
      std::vector<FormalSum> gen;
      for (const auto& f : subset)
        if (!fs_is_neutrosophic(f)) gen.push_back(f);
      gen.push_back(*i_sum);
      // ring closure by repeated add/mul
      std::vector<FormalSum> cur;
      auto contains = [&](const FormalSum& x) {
        return std::find(cur.begin(), cur.end(), x) != cur.end();
      };
      for (const auto& f : gen)
        if (!contains(f)) cur.push_back(f);
      if (!contains(fs_zero(a))) cur.push_back(fs_zero(a));
      bool grew = true;
      while (grew && cur.size() <= subset.size() + 8) {
        grew = false;
        std::vector<FormalSum> snap = cur;
        for (const auto& x : snap)
          for (const auto& y : snap)
            for (FormalSum z : {fs_add(x, y), fs_mul(x, y), fs_neg(x)})
              if (!contains(z)) {
                cur.push_back(z);
                grew = true;
              }
      }
      if (cur.size() == subset.size()) {
        bool equal = true;
        for (const auto& f : subset)
          if (!contains(f)) {
            equal = false;
            break;
          }
        if (equal) return FsSubringKind::NeutrosophicSubring;
      }
    }
    return FsSubringKind::PseudoNeutrosophicSubring;
  }
  return FsSubringKind::JustSubring;
}

FsSubringTaxonomy fs_subring_taxonomy(const AlgebraPtr& a, double cap) {
  FsSubringTaxonomy out;
  PackedAlgebraView v(a, cap);
  std::vector<Subset> subs = enumerate_subrings(v, &out.exhaustive);
  for (const Subset& s : subs) {
    if (static_cast<int>(s.count()) == v.size()) continue;
    FsSubringRecord rec;
    for (int i : s.indices()) rec.elements.push_back(v.packing().unpack(i));
    rec.order = static_cast<int>(s.count());
    rec.kind = fs_classify_subring(a, rec.elements);
    out.subrings.push_back(std::move(rec));
  }
  return out;
}

bool fs_is_ideal(const AlgebraPtr& a, const std::vector<FormalSum>& subset) {
  PackedAlgebraView v(a, 1 << 22);
  Subset s(v.size());
  for (const auto& f : subset) s.add(static_cast<int>(v.packing().pack(f)));
  auto idx = s.indices();
  for (int x : idx)
    for (int y : idx)
      if (!s.contains(v.add(x, y))) return false;
  for (int x : idx)
    for (int r = 0; r < v.size(); ++r)
      if (!s.contains(v.mul(r, x)) || !s.contains(v.mul(x, r))) return false;
  return true;
}

namespace {

Subset view_principal_ideal(const FiniteRingView& v, int x, bool comm) {
  if (comm) {
    Subset cur(v.size());
    for (int s = 0; s < v.size(); ++s) cur.add(v.mul(x, s));
    // close additively
    while (true) {
      Subset next = cur;
      auto idx = cur.indices();
      for (int p : idx)
        for (int q : idx) next.add(v.add(p, q));
      if (next == cur) return cur;
      cur = next;
    }
  }
  Subset cur(v.size());
  cur.add(v.zero());
  cur.add(x);
  bool grew = true;
  while (grew) {
    grew = false;
    Subset next = cur;
    auto idx = cur.indices();
    for (int p : idx) {
      for (int q : idx) next.add(v.add(p, q));
      for (int r = 0; r < v.size(); ++r) {
        next.add(v.mul(r, p));
        next.add(v.mul(p, r));
      }
    }
    if (!(next == cur)) {
      grew = true;
      cur = next;
    }
  }
  return cur;
}

}  // namespace

FsIdealTaxonomy fs_ideal_taxonomy(const AlgebraPtr& a, double cap, bool with_quasi) {
  FsIdealTaxonomy out;
  PackedAlgebraView v(a, cap);
  out.exhaustive = true;
  bool comm = a->magma().is_commutative();
  std::set<Subset> found;
  for (int x = 0; x < v.size(); ++x) found.insert(view_principal_ideal(v, x, comm));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subset> cur(found.begin(), found.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Subset join(v.size());
        for (int p : cur[i].indices())
          for (int q : cur[j].indices()) join.add(v.add(p, q));
        if (found.insert(join).second) grew = true;
      }
  }
  for (const Subset& s : found) {
    if (static_cast<int>(s.count()) == v.size()) continue;
    FsIdealRecord rec;
    for (int i : s.indices()) rec.elements.push_back(v.packing().unpack(i));
    rec.order = static_cast<int>(s.count());
    rec.kind = fs_classify_subring(a, rec.elements);
    rec.pseudo = rec.kind == FsSubringKind::PseudoNeutrosophicSubring;
    out.ideals.push_back(std::move(rec));
  }
  std::sort(out.ideals.begin(), out.ideals.end(),
            [](const FsIdealRecord& x, const FsIdealRecord& y) { return x.order < y.order; });

  if (with_quasi) {
    bool exh = false;
    std::vector<Subset> subs = enumerate_subrings(v, &exh);
    std::vector<Subset> proper;
    for (const Subset& s : subs)
      if (static_cast<int>(s.count()) < v.size()) proper.push_back(s);
    auto absorbs_into = [&](const Subset& s, const Subset& p) {
      for (int x : s.indices())
        for (int y : p.indices())
          if (!s.contains(v.mul(x, y)) || !s.contains(v.mul(y, x))) return false;
      return true;
    };
    for (size_t i = 0; i < proper.size(); ++i) {
      QuasiRelation rel;
      rel.subring_s = static_cast<int>(i);
      for (size_t j = 0; j < proper.size(); ++j) {
        if (i == j) continue;
        if (absorbs_into(proper[i], proper[j])) rel.relative_p.push_back(static_cast<int>(j));
      }
      rel.loyal = rel.relative_p.size() == 1;
      out.quasi.push_back(rel);
    }
    for (const auto& r1 : out.quasi)
      for (int p : r1.relative_p) {
        const auto& r2 = out.quasi[p];
        if (std::find(r2.relative_p.begin(), r2.relative_p.end(), r1.subring_s) !=
                r2.relative_p.end() &&
            r1.subring_s < p)
          out.bonded_pairs.push_back({r1.subring_s, p});
      }
  }
  return out;
}

// ---- ring-theoretic predicates --------------------------------------------------

SemiprimenessReport semiprimeness_routes(const AlgebraPtr& a) {
  SemiprimenessReport rep;
  rep.p = a->scalars().base.characteristic();
  const FiniteMagma& m = a->magma();

  auto view = algebra_ring_view(a);
  FiniteRing fr;
  fr.view = view;
  RadicalReport rad = radical_and_semisimplicity(fr);
  rep.semiprime_by_ideal_scan = rad.semiprime;

  // route 2: Delta(<G u I>) is the whole finite magma; look for an element
  // of order p
  rep.delta_has_no_p_element = true;
  if (rep.p > 1 && m.identity()) {
    for (int x = 0; x < m.size(); ++x) {
      int cur = x;
      for (int k = 1; k <= m.size(); ++k) {
        if (cur == *m.identity()) {
          if (k == rep.p) rep.delta_has_no_p_element = false;
          break;
        }
        cur = m.op(cur, x);
      }
    }
  }

  // route 3: no normal (group-like) closed subset with order divisible by p
  rep.no_normal_subgroup_order_div_p = true;
  if (rep.p > 1) {
    auto closed = enumerate_closed_subsets(m);
    for (const Subset& s : closed.sets) {
      if (!is_group_like(m, s)) continue;
      if (s.count() % rep.p != 0) continue;
      bool normal = true;
      if (!m.is_commutative()) {
        for (int x = 0; x < m.size() && normal; ++x)
          normal = act_left(m, x, s) == act_right(m, s, x);
      }
      if (normal) {
        rep.no_normal_subgroup_order_div_p = false;
        break;
      }
    }
  }
  rep.routes_agree = rep.semiprime_by_ideal_scan == rep.delta_has_no_p_element &&
                     rep.semiprime_by_ideal_scan == rep.no_normal_subgroup_order_div_p;
  return rep;
}

namespace {

FiniteMagma restrict_magma(const FiniteMagma& m, const Subset& s) {
  auto idx = s.indices();
  std::vector<int> pos(m.size(), -1);
  for (size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = static_cast<int>(i);
  std::vector<Element> es;
  for (size_t i = 0; i < idx.size(); ++i)
    es.push_back({static_cast<int>(i), m.element(idx[i]).label, m.element(idx[i]).neutro});
  std::vector<int> t(idx.size() * idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) {
      int z = m.op(idx[i], idx[j]);
      if (pos[z] < 0) throw std::invalid_argument("subset not closed");
      t[i * idx.size() + j] = pos[z];
    }
  return FiniteMagma(std::move(es), std::move(t), std::nullopt, m.op_name());
}

bool sub_algebra_semisimple(const AlgebraPtr& sub) {
  auto view = algebra_ring_view(sub);
  FiniteRing fr;
  fr.view = view;
  return radical_and_semisimplicity(fr).semisimple;
}

RadicalReport sub_algebra_radical(const AlgebraPtr& sub) {
  auto view = algebra_ring_view(sub);
  FiniteRing fr;
  fr.view = view;
  return radical_and_semisimplicity(fr);
}

}  // namespace

FsPrimeReport prime_semiprime_semisimple(const AlgebraPtr& a) {
  FsPrimeReport rep;
  try {
    RadicalReport rad = sub_algebra_radical(a);
    rep.full_computed = true;
    rep.prime = rad.prime;
    rep.semiprime = rad.semiprime;
    rep.semisimple = rad.semisimple;
  } catch (const std::domain_error&) {
    // whole algebra beyond the packing cap; the pseudo predicates below act
    // on the smaller designated sub-algebras
  }

  ScalarRing plain{ScalarKind::Plain, a->scalars().base};
  bool neu_scalars = a->scalars().kind == ScalarKind::Neutro;
  bool neu_magma = a->magma_neutrosophified();
  if (neu_scalars && !neu_magma) {
    // <K u I>[G or S]: pseudo predicates live on KG
    AlgebraPtr kg = make_algebra(plain, a->magma_ptr());
    RadicalReport sub = sub_algebra_radical(kg);
    rep.pseudo_semisimple = sub.semisimple;
    rep.pseudo_prime = sub.prime;
    rep.pseudo_semiprime = sub.semiprime;
  } else if (!neu_scalars && neu_magma) {
    // K[<G u I>]: pseudo predicates live on K[G]
    Subset pp = plain_part(a->magma());
    AlgebraPtr kg = make_algebra(plain, restrict_magma(a->magma(), pp));
    RadicalReport sub = sub_algebra_radical(kg);
    rep.pseudo_semisimple = sub.semisimple;
    rep.pseudo_prime = sub.prime;
    rep.pseudo_semiprime = sub.semiprime;
  } else if (neu_scalars && neu_magma) {
    // weakly pseudo: one of K[<G u I>] or <K u I>[G]
    AlgebraPtr left = make_algebra(plain, a->magma_ptr());
    Subset pp = plain_part(a->magma());
    AlgebraPtr right = make_algebra(a->scalars(), restrict_magma(a->magma(), pp));
    RadicalReport rl = sub_algebra_radical(left);
    RadicalReport rr = sub_algebra_radical(right);
    rep.weakly_pseudo_semiprime = rl.semiprime || rr.semiprime;
  }
  return rep;
}

std::vector<ContainmentEntry> containment_lattice(const AlgebraPtr& a) {
  std::vector<ContainmentEntry> out;
  const FiniteMagma& m = a->magma();
  bool neu_scalars = a->scalars().kind == ScalarKind::Neutro;
  bool neu_magma = a->magma_neutrosophified();
  std::string K = a->scalars().base.name();
  std::string KI = "<" + K + " u I>";
  std::string scal = neu_scalars ? KI : K;

  auto closed_subset = [&](const Subset& s) { return is_closed(m, s); };

  if (neu_magma) {
    Subset pp = plain_part(m);
    out.push_back({"plain-magma part", scal + "[plain part of the magma]", closed_subset(pp)});
    if (neu_scalars)
      out.push_back({"neutrosophic magma ring over the plain coefficients",
                     K + "[whole magma]", true});
  }
  if (neu_scalars) out.push_back({"plain-coefficient ring", K + "[whole magma]", true});
  if (a->magma_is_s_semigroup() && a->group_witness()) {
    Subset w = *a->group_witness();
    out.push_back(
        {"group ring over the embedded group", K + "[group subset]", closed_subset(w)});
    if (neu_scalars)
      out.push_back({"group neutrosophic ring over the embedded group",
                     KI + "[group subset]", closed_subset(w)});
    if (auto ie = m.indeterminate()) {
      // A u AI, when the magma carries the indeterminate element
      Subset wi = w;
      for (int x : w.indices()) wi.add(m.op(x, *ie));
      out.push_back({"neutrosophic group ring over the embedded group",
                     K + "[<group subset u I>]", closed_subset(wi)});
      if (neu_scalars)
        out.push_back({"neutrosophic group neutrosophic ring over the embedded group",
                       KI + "[<group subset u I>]", closed_subset(wi)});
    }
  }
  if (m.size() == 1)
    out.push_back({"scalar ring itself", scal, true});
  return out;
}

SpecialCheck special_group_ring_check(const AlgebraPtr& a) {
  SpecialCheck out;
  if (a->scalars().kind != ScalarKind::Plain) {
    out.reason = "coefficients are a neutrosophic ring, the check applies to K<G u I>";
    return out;
  }
  if (!a->magma_neutrosophified() || !a->magma_is_group()) {
    out.reason = "magma is not a neutrosophified group";
    return out;
  }
  // subrings of the coefficient ring possessing their own unit
  const BaseRing& b = a->scalars().base;
  if (b.kind == RingKind::Rationals) {
    out.scalar_subrings_with_unit = 2;  // Z and Q at least
    out.reason = "Q contains the unital subring Z";
  } else if (b.kind == RingKind::Integers) {
    out.scalar_subrings_with_unit = 1;  // only Z itself
  } else {
    for (std::int64_t d = 1; d <= b.modulus; ++d) {
      if (b.modulus % d != 0) continue;
      // subring dZ_n; look for its own two-sided unit
      std::vector<std::int64_t> elems;
      for (std::int64_t v = 0; v < b.modulus; v += d) elems.push_back(v);
      if (elems.size() < 2 && elems[0] == 0) continue;  // zero ring
      for (std::int64_t e : elems) {
        bool ok = e != 0;
        for (std::int64_t x : elems)
          if ((e * x) % b.modulus != x) {
            ok = false;
            break;
          }
        if (ok) {
          ++out.scalar_subrings_with_unit;
          break;
        }
      }
    }
  }
  // nontrivial subgroups of the plain group part (including itself)
  Subset pp = plain_part(a->magma());
  FiniteMagma g = restrict_magma(a->magma(), pp);
  auto closed = enumerate_closed_subsets(g);
  for (const Subset& s : closed.sets)
    if (s.count() >= 2 && is_group_like(g, s)) ++out.nontrivial_subgroups;
  out.special = out.scalar_subrings_with_unit == 1 && out.nontrivial_subgroups == 1;
  if (!out.special && out.reason.empty())
    out.reason = out.nontrivial_subgroups != 1 ? "the group part has more than one subgroup"
                                               : "the coefficient ring has extra unital subrings";
  return out;
}

AlgebraHomReport verify_algebra_homomorphism(const AlgebraPtr& src, const AlgebraPtr& dst,
                                             const std::vector<int>& magma_map, double cap) {
  AlgebraHomReport rep;
  if (src->scalars() != dst->scalars())
    throw std::invalid_argument("homomorphism check requires matching coefficient rings");
  const FiniteMagma& ms = src->magma();
  const FiniteMagma& md = dst->magma();
  if (magma_map.size() != static_cast<size_t>(ms.size()))
    throw std::invalid_argument("map must cover every magma element");
  for (int v : magma_map)
    if (v < 0 || v >= md.size()) throw std::invalid_argument("map image out of range");

  if (ms.identity() && (!md.identity() || magma_map[*ms.identity()] != *md.identity())) {
    rep.violated = "phi(1)";
    return rep;
  }
  if (ms.indeterminate()) {
    if (!md.indeterminate() || magma_map[*ms.indeterminate()] != *md.indeterminate()) {
      rep.violated = "phi(I)";
      return rep;
    }
  }
  for (int g = 0; g < ms.size(); ++g)
    for (int h = 0; h < ms.size(); ++h)
      if (magma_map[ms.op(g, h)] != md.op(magma_map[g], magma_map[h])) {
        rep.violated = "multiplicativity";
        return rep;
      }
  rep.ok = true;

  // kernel, when enumerable: phi(sum c_g g) = sum c_g phi(g)
  try {
    PackedAlgebraView v(src, cap);
    for (int x = 0; x < v.size(); ++x) {
      FormalSum f = v.packing().unpack(x);
      FormalSum img = fs_zero(dst);
      for (const auto& [i, c] : f.coeffs) img = fs_add(img, fs_term(dst, c, magma_map[i]));
      if (fs_is_zero(img)) {
        if (fs_is_neutrosophic(f)) rep.kernel_contains_neutro = true;
        rep.kernel.push_back(f);
      }
    }
    FsSubringKind k = fs_classify_subring(src, rep.kernel);
    rep.kernel_is_form_neutrosophic = k == FsSubringKind::NeutrosophicSubring ||
                                      k == FsSubringKind::SubneutrosophicGroupRing;
  } catch (const std::domain_error&) {
    // kernel enumeration skipped for large algebras
  }
  return rep;
}

}  // namespace neutro
