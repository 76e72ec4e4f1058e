#include "neutro/scalar.hpp"

#include <cctype>

namespace neutro {

NeutroScalar ns_make(const BaseRing& r, const BaseElement& a, const BaseElement& b) {
  if (a.ring != r || b.ring != r) throw RingMismatch();
  return {r, a, b};
}

NeutroScalar ns_make(const BaseRing& r, std::int64_t a, std::int64_t b) {
  return {r, be_make(r, a), be_make(r, b)};
}

NeutroScalar ns_zero(const BaseRing& r) { return ns_make(r, 0, 0); }
NeutroScalar ns_one(const BaseRing& r) { return ns_make(r, 1, 0); }
NeutroScalar ns_indeterminate(const BaseRing& r) { return ns_make(r, 0, 1); }
NeutroScalar ns_from_base(const BaseElement& a) { return {a.ring, a, be_zero(a.ring)}; }

NeutroScalar ns_add(const NeutroScalar& x, const NeutroScalar& y) {
  if (x.ring != y.ring) throw RingMismatch();
  return {x.ring, be_add(x.a, y.a), be_add(x.b, y.b)};
}

NeutroScalar ns_neg(const NeutroScalar& x) { return {x.ring, be_neg(x.a), be_neg(x.b)}; }
NeutroScalar ns_sub(const NeutroScalar& x, const NeutroScalar& y) { return ns_add(x, ns_neg(y)); }

NeutroScalar ns_mul(const NeutroScalar& x, const NeutroScalar& y) {
  if (x.ring != y.ring) throw RingMismatch();
  // (a+bI)(c+dI) = ac + (ad+bc+bd)I
  BaseElement ac = be_mul(x.a, y.a);
  BaseElement ind = be_add(be_add(be_mul(x.a, y.b), be_mul(x.b, y.a)), be_mul(x.b, y.b));
  return {x.ring, ac, ind};
}

NeutroScalar ns_scale(const NeutroScalar& x, const BaseElement& c) {
  return {x.ring, be_mul(x.a, c), be_mul(x.b, c)};
}

bool ns_is_zero(const NeutroScalar& x) { return be_is_zero(x.a) && be_is_zero(x.b); }
bool ns_is_neutrosophic(const NeutroScalar& x) { return !be_is_zero(x.b); }

SplitPair split(const NeutroScalar& x) { return {x.a, be_add(x.a, x.b)}; }

NeutroScalar unsplit(const SplitPair& p, const BaseRing& r) {
  if (p.u.ring != r || p.v.ring != r) throw RingMismatch();
  return {r, p.u, be_sub(p.v, p.u)};
}

std::optional<NeutroScalar> classify_unit(const NeutroScalar& x) {
  SplitPair s = split(x);
  if (!be_is_unit(s.u) || !be_is_unit(s.v)) return std::nullopt;
  return unsplit({be_inverse(s.u), be_inverse(s.v)}, x.ring);
}

bool ns_is_unit(const NeutroScalar& x) { return classify_unit(x).has_value(); }

bool ns_is_idempotent(const NeutroScalar& x) { return ns_mul(x, x) == x; }

bool ns_is_zero_divisor(const NeutroScalar& x) {
  if (ns_is_zero(x)) return false;
  SplitPair s = split(x);
  return be_is_zero(s.u) || be_is_zero(s.v) || be_is_zero_divisor(s.u) || be_is_zero_divisor(s.v);
}

namespace {

// x is of the form a - aI with a != 0 (so x * I = 0).
bool is_trivial_family(const NeutroScalar& x) {
  return !be_is_zero(x.a) && be_is_zero(be_add(x.a, x.b));
}

bool is_pure_indeterminate(const NeutroScalar& x) {
  return be_is_zero(x.a) && !be_is_zero(x.b);
}

}  // namespace

ZeroDivisorTag classify_zero_divisor_pair(const NeutroScalar& x, const NeutroScalar& y) {
  if (ns_is_zero(x) || ns_is_zero(y)) return ZeroDivisorTag::None;
  if (!ns_is_zero(ns_mul(x, y))) return ZeroDivisorTag::None;
  if ((is_trivial_family(x) && is_pure_indeterminate(y)) ||
      (is_trivial_family(y) && is_pure_indeterminate(x)))
    return ZeroDivisorTag::TrivialNeutrosophic;
  bool x_neu = ns_is_neutrosophic(x), y_neu = ns_is_neutrosophic(y);
  bool x_full = x_neu && !be_is_zero(x.a);
  bool y_full = y_neu && !be_is_zero(y.a);
  if (x_full && !y_neu) return ZeroDivisorTag::SemiNeutrosophic;
  if (y_full && !x_neu) return ZeroDivisorTag::SemiNeutrosophic;
  if (x_neu && y_neu) return ZeroDivisorTag::Neutrosophic;
  return ZeroDivisorTag::Plain;
}

std::vector<NeutroScalar> zero_divisor_witnesses(const NeutroScalar& x) {
  std::vector<NeutroScalar> out;
  if (x.ring.kind != RingKind::Mod) {
    // split-pattern witness only: if a component vanishes, the complementary
    // split idempotent annihilates x
    if (ns_is_zero(x)) return out;
    SplitPair s = split(x);
    if (be_is_zero(s.u)) out.push_back(unsplit({be_one(x.ring), be_zero(x.ring)}, x.ring));
    if (be_is_zero(s.v)) out.push_back(ns_indeterminate(x.ring));
    return out;
  }
  for (const NeutroScalar& y : enumerate_scalars(x.ring)) {
    if (ns_is_zero(y)) continue;
    if (ns_is_zero(ns_mul(x, y))) out.push_back(y);
  }
  return out;
}

ZeroDivisorClass classify_zero_divisor(const NeutroScalar& x) {
  ZeroDivisorClass res;
  if (ns_is_zero(x)) return res;
  std::vector<NeutroScalar> ws = zero_divisor_witnesses(x);
  if (ws.empty()) return res;

  auto find = [&](auto pred) -> std::optional<NeutroScalar> {
    for (const auto& y : ws)
      if (pred(y)) return y;
    return std::nullopt;
  };

  // Trivial family first, then Def 2.2.13 (with the side condition
  // b != 0, a not in {b, -b}), then Def 2.2.14, then plain.
  if (is_trivial_family(x)) {
    auto w = find([&](const NeutroScalar& y) { return is_pure_indeterminate(y); });
    if (w) {
      res.tag = ZeroDivisorTag::TrivialNeutrosophic;
      res.witness = w;
      return res;
    }
  }
  bool side = ns_is_neutrosophic(x) && x.a != x.b && x.a != be_neg(x.b);
  if (side) {
    auto w = find([&](const NeutroScalar& y) { return ns_is_neutrosophic(y); });
    if (w) {
      res.tag = ZeroDivisorTag::Neutrosophic;
      res.witness = w;
      return res;
    }
  }
  if (ns_is_neutrosophic(x) && !be_is_zero(x.a)) {
    auto w = find([&](const NeutroScalar& y) { return !ns_is_neutrosophic(y); });
    if (w) {
      res.tag = ZeroDivisorTag::SemiNeutrosophic;
      res.witness = w;
      return res;
    }
  }
  res.tag = ZeroDivisorTag::Plain;
  res.witness = ws.front();
  return res;
}

std::string ns_to_string(const NeutroScalar& x) {
  if (ns_is_zero(x)) return "0";
  std::string out;
  if (!be_is_zero(x.a)) out = be_to_string(x.a);
  if (!be_is_zero(x.b)) {
    std::string bs = be_to_string(x.b);
    bool neg = !bs.empty() && bs[0] == '-';
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (neg) bs = bs.substr(1);
    if (bs == "1") out += "I";
    else out += bs + "I";
  }
  return out;
}

namespace {

// splits "2-5I" style strings into the determinate and I parts
struct ScalarParser {
  const std::string& s;
  size_t i = 0;
  explicit ScalarParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  // number token: digits with optional /digits
  std::string number() {
    size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    return s.substr(start, i - start);
  }
};

}  // namespace

NeutroScalar ns_parse(const BaseRing& r, const std::string& str) {
  BaseElement a = be_zero(r), b = be_zero(r);
  ScalarParser p(str);
  p.skip_ws();
  bool any = false;
  while (true) {
    p.skip_ws();
    if (p.i >= p.s.size()) break;
    int sign = 1;
    while (p.i < p.s.size() && (p.s[p.i] == '+' || p.s[p.i] == '-')) {
      if (p.s[p.i] == '-') sign = -sign;
      ++p.i;
      p.skip_ws();
    }
    if (p.i >= p.s.size()) throw std::invalid_argument("dangling sign in scalar: " + str);
    std::string num;
    if (std::isdigit(static_cast<unsigned char>(p.s[p.i]))) num = p.number();
    p.skip_ws();
    bool has_i = p.i < p.s.size() && p.s[p.i] == 'I';
    if (has_i) ++p.i;
    if (num.empty() && !has_i) throw std::invalid_argument("bad scalar: " + str);
    BaseElement val = num.empty() ? be_one(r) : be_parse(r, num);
    if (sign < 0) val = be_neg(val);
    if (has_i) b = be_add(b, val);
    else a = be_add(a, val);
    any = true;
  }
  if (!any) throw std::invalid_argument("empty scalar");
  return {r, a, b};
}

std::vector<NeutroScalar> enumerate_scalars(const BaseRing& r) {
  if (r.kind != RingKind::Mod) throw std::domain_error("enumeration needs a finite ring");
  std::vector<NeutroScalar> out;
  out.reserve(static_cast<size_t>(r.modulus) * r.modulus);
  for (std::int64_t a = 0; a < r.modulus; ++a)
    for (std::int64_t b = 0; b < r.modulus; ++b) out.push_back(ns_make(r, a, b));
  return out;
}

}  // namespace neutro
