#include "neutro/poly.hpp"

#include <algorithm>
#include <random>
#include <regex>

#include "neutro/expr.hpp"

namespace neutro {

namespace {

int total_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += static_cast<int>(e);
  return d;
}

// graded lexicographic, ascending
bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

NeutroPoly poly_zero(const BaseRing& r, int nvars) { return {r, nvars, {}}; }

NeutroPoly poly_one(const BaseRing& r, int nvars) { return poly_const(ns_one(r), nvars); }

NeutroPoly poly_const(const NeutroScalar& c, int nvars) {
  NeutroPoly p{c.ring, nvars, {}};
  if (!ns_is_zero(c)) p.terms[Monomial(nvars, 0)] = c;
  return p;
}

NeutroPoly poly_var(const BaseRing& r, int nvars, int var, std::uint32_t exp) {
  if (var < 0 || var >= nvars) throw std::invalid_argument("variable index out of range");
  NeutroPoly p{r, nvars, {}};
  Monomial m(nvars, 0);
  m[var] = exp;
  p.terms[m] = ns_one(r);
  return p;
}

void poly_set(NeutroPoly& p, const Monomial& m, const NeutroScalar& c) {
  if (static_cast<int>(m.size()) != p.nvars) throw std::invalid_argument("monomial arity");
  if (ns_is_zero(c)) p.terms.erase(m);
  else p.terms[m] = c;
}

NeutroPoly poly_add(const NeutroPoly& p, const NeutroPoly& q) {
  if (p.ring != q.ring || p.nvars != q.nvars) throw RingMismatch();
  NeutroPoly r = p;
  for (const auto& [m, c] : q.terms) {
    auto it = r.terms.find(m);
    if (it == r.terms.end()) r.terms.emplace(m, c);
    else {
      NeutroScalar s = ns_add(it->second, c);
      if (ns_is_zero(s)) r.terms.erase(it);
      else it->second = s;
    }
  }
  return r;
}

NeutroPoly poly_neg(const NeutroPoly& p) {
  NeutroPoly r = p;
  for (auto& [m, c] : r.terms) c = ns_neg(c);
  return r;
}

NeutroPoly poly_sub(const NeutroPoly& p, const NeutroPoly& q) { return poly_add(p, poly_neg(q)); }

NeutroPoly poly_mul(const NeutroPoly& p, const NeutroPoly& q) {
  if (p.ring != q.ring || p.nvars != q.nvars) throw RingMismatch();
  NeutroPoly r = poly_zero(p.ring, p.nvars);
  for (const auto& [mp, cp] : p.terms)
    for (const auto& [mq, cq] : q.terms) {
      Monomial m(p.nvars);
      for (int i = 0; i < p.nvars; ++i) m[i] = mp[i] + mq[i];
      NeutroScalar c = ns_mul(cp, cq);
      auto it = r.terms.find(m);
      if (it == r.terms.end()) {
        if (!ns_is_zero(c)) r.terms.emplace(std::move(m), c);
      } else {
        NeutroScalar s = ns_add(it->second, c);
        if (ns_is_zero(s)) r.terms.erase(it);
        else it->second = s;
      }
    }
  return r;
}

NeutroPoly poly_scale(const NeutroPoly& p, const NeutroScalar& c) {
  NeutroPoly r = poly_zero(p.ring, p.nvars);
  for (const auto& [m, v] : p.terms) {
    NeutroScalar s = ns_mul(v, c);
    if (!ns_is_zero(s)) r.terms.emplace(m, s);
  }
  return r;
}

bool poly_is_zero(const NeutroPoly& p) { return p.terms.empty(); }

int poly_degree(const NeutroPoly& p) {
  int d = -1;
  for (const auto& [m, c] : p.terms) d = std::max(d, total_degree(m));
  return d;
}

NeutroScalar poly_coeff(const NeutroPoly& p, const Monomial& m) {
  auto it = p.terms.find(m);
  return it == p.terms.end() ? ns_zero(p.ring) : it->second;
}

PolyClass classify_poly(const NeutroPoly& p) {
  bool any_neutro = false, all_neutro = true;
  for (const auto& [m, c] : p.terms) {
    if (ns_is_neutrosophic(c)) any_neutro = true;
    else all_neutro = false;
  }
  if (p.terms.empty()) return PolyClass::Plain;
  if (all_neutro) return PolyClass::Strong;
  return any_neutro ? PolyClass::Mixed : PolyClass::Plain;
}

NeutroScalar content(const NeutroPoly& p) {
  if (p.ring.kind != RingKind::Integers) throw std::domain_error("content needs <Z u I>");
  if (poly_is_zero(p)) throw std::domain_error("content of the zero polynomial");
  Int g1 = 0, g2 = 0;
  for (const auto& [m, c] : p.terms) {
    SplitPair s = split(c);
    g1 = int_gcd(g1, std::get<Int>(s.u.v));
    g2 = int_gcd(g2, std::get<Int>(s.v.v));
  }
  return unsplit({be_make(p.ring, g1), be_make(p.ring, g2)}, p.ring);
}

bool is_primitive(const NeutroPoly& p) { return content(p) == ns_one(p.ring); }

bool is_integer_monic(const NeutroPoly& p) {
  if (p.ring.kind != RingKind::Integers || poly_is_zero(p)) return false;
  Monomial lead;
  bool first = true;
  for (const auto& [m, c] : p.terms)
    if (first || grlex_less(lead, m)) {
      lead = m;
      first = false;
    }
  return poly_coeff(p, lead) == ns_one(p.ring);
}

std::optional<NeutroPoly> divides_scalar(const NeutroScalar& d, const NeutroPoly& p) {
  SplitPair sd = split(d);
  NeutroPoly q = poly_zero(p.ring, p.nvars);
  for (const auto& [m, c] : p.terms) {
    SplitPair sc = split(c);
    BaseElement qu = be_zero(p.ring), qv = be_zero(p.ring);
    if (!be_divides(sd.u, sc.u, &qu)) return std::nullopt;
    if (!be_divides(sd.v, sc.v, &qv)) return std::nullopt;
    q.terms[m] = unsplit({qu, qv}, p.ring);
  }
  return q;
}

namespace {

// classical univariate exact division of split components over the base ring;
// complete when the base is Z/Q or the divisor's leading coefficient is a unit
struct ClassicalPoly {
  std::vector<BaseElement> c;  // c[i] = coefficient of x^i

  int deg() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      if (!be_is_zero(c[i])) return i;
    return -1;
  }
};

enum class CDiv { Quotient, Fail, Incomplete };

CDiv classical_divide(const ClassicalPoly& d, ClassicalPoly rem, ClassicalPoly* q,
                      const BaseRing& ring) {
  int dd = d.deg();
  if (dd < 0) return rem.deg() < 0 ? CDiv::Quotient : CDiv::Fail;
  const BaseElement& lc = d.c[dd];
  bool decisive = ring.kind != RingKind::Mod || be_is_unit(lc);
  q->c.assign(std::max(rem.deg() - dd + 1, 1), be_zero(ring));
  while (rem.deg() >= dd) {
    int rd = rem.deg();
    BaseElement f = be_zero(ring);
    if (!be_divides(lc, rem.c[rd], &f)) return decisive ? CDiv::Fail : CDiv::Incomplete;
    q->c[rd - dd] = f;
    for (int i = 0; i <= dd; ++i)
      rem.c[rd - dd + i] = be_sub(rem.c[rd - dd + i], be_mul(f, d.c[i]));
    if (!be_is_zero(rem.c[rd])) return decisive ? CDiv::Fail : CDiv::Incomplete;
  }
  if (rem.deg() < 0) return CDiv::Quotient;
  return decisive ? CDiv::Fail : CDiv::Incomplete;
}

ClassicalPoly side_of(const NeutroPoly& p, bool v_side) {
  ClassicalPoly out;
  out.c.assign(static_cast<size_t>(std::max(poly_degree(p), 0)) + 1, be_zero(p.ring));
  for (const auto& [m, c] : p.terms) {
    SplitPair s = split(c);
    out.c[m[0]] = v_side ? s.v : s.u;
  }
  return out;
}

}  // namespace

DivisionResult divides_poly(const NeutroPoly& d, const NeutroPoly& p, std::int64_t search_cap) {
  DivisionResult res;
  if (d.nvars != 1 || p.nvars != 1) throw std::invalid_argument("polynomial division is univariate");
  if (d.ring != p.ring) throw RingMismatch();
  if (poly_is_zero(d)) {
    res.outcome = poly_is_zero(p) ? DivisionOutcome::Quotient : DivisionOutcome::NoQuotient;
    if (poly_is_zero(p)) res.quotient = poly_zero(p.ring, 1);
    return res;
  }
  ClassicalPoly du = side_of(d, false), dv = side_of(d, true);
  ClassicalPoly pu = side_of(p, false), pv = side_of(p, true);
  ClassicalPoly qu, qv;
  CDiv ru = classical_divide(du, pu, &qu, p.ring);
  CDiv rv = classical_divide(dv, pv, &qv, p.ring);
  if (ru == CDiv::Quotient && rv == CDiv::Quotient) {
    NeutroPoly q = poly_zero(p.ring, 1);
    size_t len = std::max(qu.c.size(), qv.c.size());
    qu.c.resize(len, be_zero(p.ring));
    qv.c.resize(len, be_zero(p.ring));
    for (size_t i = 0; i < len; ++i) {
      NeutroScalar c = unsplit({qu.c[i], qv.c[i]}, p.ring);
      if (!ns_is_zero(c)) q.terms[{static_cast<std::uint32_t>(i)}] = c;
    }
    if (poly_mul(d, q) == p) {
      res.outcome = DivisionOutcome::Quotient;
      res.quotient = q;
      return res;
    }
  }
  if (ru == CDiv::Fail || rv == CDiv::Fail) {
    res.outcome = DivisionOutcome::NoQuotient;
    return res;
  }
  // incomplete split division: brute-force quotient search over small Z_n
  if (p.ring.kind == RingKind::Mod) {
    int qdeg = poly_degree(p) - poly_degree(d);
    if (qdeg < 0) qdeg = 0;
    std::int64_t n2 = p.ring.modulus * p.ring.modulus;
    double combos = 1;
    for (int i = 0; i <= qdeg; ++i) combos *= static_cast<double>(n2);
    if (combos <= static_cast<double>(search_cap)) {
      auto scalars = enumerate_scalars(p.ring);
      std::vector<size_t> pick(static_cast<size_t>(qdeg) + 1, 0);
      while (true) {
        NeutroPoly q = poly_zero(p.ring, 1);
        for (size_t i = 0; i < pick.size(); ++i) {
          const NeutroScalar& c = scalars[pick[i]];
          if (!ns_is_zero(c)) q.terms[{static_cast<std::uint32_t>(i)}] = c;
        }
        if (poly_mul(d, q) == p) {
          res.outcome = DivisionOutcome::Quotient;
          res.quotient = q;
          return res;
        }
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == scalars.size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
      // degree of a product can collapse over zero-divisor coefficients, so a
      // failed bounded search is not a proof of non-divisibility
      res.outcome = DivisionOutcome::Unknown;
      return res;
    }
  }
  res.outcome = DivisionOutcome::Unknown;
  return res;
}

namespace {

std::vector<Monomial> box_monomials(const NeutroPoly& p, int max_total) {
  Monomial box(p.nvars, 0);
  for (const auto& [m, c] : p.terms)
    for (int i = 0; i < p.nvars; ++i) box[i] = std::max(box[i], m[i]);
  std::vector<Monomial> out;
  Monomial cur(p.nvars, 0);
  while (true) {
    if (total_degree(cur) <= max_total) out.push_back(cur);
    int i = p.nvars - 1;
    while (i >= 0 && cur[i] == box[i]) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

}  // namespace

ReducibilityReport reducibility_classify(const NeutroPoly& p, int degree_bound,
                                         std::int64_t search_cap) {
  ReducibilityReport rep;
  if (poly_is_zero(p)) throw std::invalid_argument("zero polynomial");
  if (p.ring.kind != RingKind::Mod)
    throw std::domain_error("reducibility search needs a finite coefficient ring");
  int deg = poly_degree(p);
  bool p_neutro = classify_poly(p) != PolyClass::Plain;
  if (deg == 0) {
    NeutroScalar c = p.terms.begin()->second;
    if (ns_is_unit(c)) rep.cls = Reducibility::Unit;
    else rep.cls = p_neutro ? Reducibility::IrreducibleNeutrosophic : Reducibility::IrreduciblePlain;
    return rep;
  }
  if (degree_bound < 0) degree_bound = deg;

  auto scalars = enumerate_scalars(p.ring);
  auto monos = box_monomials(p, degree_bound - 1);
  // candidate factors: polynomials of degree in [1, degree_bound-1] supported
  // on the divisor box of p
  double per_factor = 1;
  for (size_t i = 0; i < monos.size(); ++i) per_factor *= static_cast<double>(scalars.size());
  if (per_factor * per_factor > static_cast<double>(search_cap)) {
    rep.cls = Reducibility::Unknown;
    return rep;
  }

  std::vector<NeutroPoly> cands;
  std::vector<size_t> pick(monos.size(), 0);
  while (true) {
    NeutroPoly f = poly_zero(p.ring, p.nvars);
    for (size_t i = 0; i < monos.size(); ++i)
      if (!ns_is_zero(scalars[pick[i]])) f.terms[monos[i]] = scalars[pick[i]];
    if (poly_degree(f) >= 1) cands.push_back(std::move(f));
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == scalars.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }

  int best = -1;  // 0 plain, 1 semi, 2 neutro
  for (const auto& r : cands) {
    for (const auto& s : cands) {
      if (poly_degree(r) + poly_degree(s) > degree_bound) continue;
      if (!(poly_mul(r, s) == p)) continue;
      bool rn = classify_poly(r) != PolyClass::Plain;
      bool sn = classify_poly(s) != PolyClass::Plain;
      int score = rn && sn ? 2 : (rn || sn ? 1 : 0);
      if (score > best) {
        best = score;
        rep.factorization = {r, s};
        if (best == 2) break;
      }
    }
    if (best == 2) break;
  }
  if (best < 0) {
    rep.cls = p_neutro ? Reducibility::IrreducibleNeutrosophic : Reducibility::IrreduciblePlain;
  } else {
    rep.cls = best == 2   ? Reducibility::NeutrosophicReducible
              : best == 1 ? Reducibility::SemiNeutrosophicReducible
                          : Reducibility::PlainReducible;
  }
  return rep;
}

GaussProbeResult gauss_lemma_probe(long samples, int max_degree, std::uint64_t seed) {
  GaussProbeResult out;
  BaseRing z = BaseRing::integers();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> degree(1, std::max(max_degree, 1));

  auto random_primitive = [&]() {
    while (true) {
      NeutroPoly p = poly_zero(z, 1);
      int d = degree(rng);
      for (int i = 0; i <= d; ++i) {
        NeutroScalar c = ns_make(z, coeff(rng), coeff(rng));
        if (!ns_is_zero(c)) p.terms[{static_cast<std::uint32_t>(i)}] = c;
      }
      if (poly_is_zero(p)) continue;
      NeutroScalar ct = content(p);
      auto q = divides_scalar(ct, p);
      if (q && is_primitive(*q)) return *q;
    }
  };

  for (long k = 0; k < samples; ++k) {
    NeutroPoly p = random_primitive();
    NeutroPoly q = random_primitive();
    ++out.samples;
    if (!is_primitive(poly_mul(p, q))) {
      out.pass = false;
      out.counterexample = {p, q};
      return out;
    }
  }
  return out;
}

SplitPoly poly_split(const NeutroPoly& p) {
  SplitPoly out;
  for (const auto& [m, c] : p.terms) {
    SplitPair s = split(c);
    if (!be_is_zero(s.u)) out.u[m] = s.u;
    if (!be_is_zero(s.v)) out.v[m] = s.v;
  }
  return out;
}

namespace {

std::string monomial_to_string(const Monomial& m, int nvars) {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += nvars == 1 ? "x" : "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string poly_to_string(const NeutroPoly& p) {
  if (poly_is_zero(p)) return "0";
  std::vector<std::pair<Monomial, NeutroScalar>> ts(p.terms.begin(), p.terms.end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); });
  std::string out;
  for (const auto& [m, c] : ts) {
    std::string mono = monomial_to_string(m, p.nvars);
    std::string cs = ns_to_string(c);
    bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    bool negative = !composite && !cs.empty() && cs[0] == '-';
    std::string join = out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (negative) cs = cs.substr(1);
    std::string body;
    if (mono.empty()) body = composite ? "(" + cs + ")" : cs;
    else if (composite) body = "(" + cs + ")" + mono;
    else if (cs == "1") body = mono;
    else body = cs + " " + mono;
    out += join + body;
  }
  return out;
}

namespace {

struct PolyAlgebra : ExprAlgebra<NeutroPoly> {
  BaseRing ring;
  int nvars;
  PolyAlgebra(const BaseRing& r, int nv) : ring(r), nvars(nv) {}

  NeutroPoly number(const std::string& text) override {
    return poly_const(ns_from_base(be_parse(ring, text)), nvars);
  }
  NeutroPoly atom(const std::string& name, bool) override {
    if (name == "I") return poly_const(ns_indeterminate(ring), nvars);
    if (name == "x" && nvars >= 1) return poly_var(ring, nvars, 0);
    if (name.size() >= 2 && name[0] == 'x') {
      int idx = std::stoi(name.substr(1));
      if (idx >= 1 && idx <= nvars) return poly_var(ring, nvars, idx - 1);
    }
    throw std::invalid_argument("unknown symbol '" + name + "' in polynomial");
  }
  NeutroPoly add(const NeutroPoly& a, const NeutroPoly& b) override { return poly_add(a, b); }
  NeutroPoly sub(const NeutroPoly& a, const NeutroPoly& b) override { return poly_sub(a, b); }
  NeutroPoly neg(const NeutroPoly& a) override { return poly_neg(a); }
  NeutroPoly mul(const NeutroPoly& a, const NeutroPoly& b) override { return poly_mul(a, b); }
  NeutroPoly pow(const NeutroPoly& a, long e) override {
    NeutroPoly r = poly_one(ring, nvars);
    for (long i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
  }
};

}  // namespace

NeutroPoly poly_parse(const BaseRing& r, const std::string& text, int min_nvars) {
  // infer variable count from x / xK tokens
  int nvars = std::max(min_nvars, 1);
  static const std::regex var_re("x([0-9]+)?");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var_re);
       it != std::sregex_iterator(); ++it) {
    if ((*it)[1].matched) nvars = std::max(nvars, std::stoi((*it)[1].str()));
  }
  PolyAlgebra alg(r, nvars);
  ExprParser<NeutroPoly> parser(expr_lex(text), alg);
  return parser.parse();
}

}  // namespace neutro
