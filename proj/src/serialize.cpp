#include "neutro/serialize.hpp"

namespace neutro {

Json ring_to_json(const BaseRing& r) {
  switch (r.kind) {
    case RingKind::Integers: return Json("Z");
    case RingKind::Rationals: return Json("Q");
    case RingKind::Mod: return Json{{"Zn", r.modulus}};
  }
  throw std::logic_error("bad ring");
}

BaseRing ring_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Z") return BaseRing::integers();
    if (s == "Q") return BaseRing::rationals();
    throw std::invalid_argument("unknown ring '" + s + "'");
  }
  if (j.is_object() && j.contains("Zn")) return BaseRing::mod(j["Zn"].get<std::int64_t>());
  throw std::invalid_argument("bad ring json");
}

Json scalar_to_json(const NeutroScalar& s) {
  return Json{{"ring", ring_to_json(s.ring)}, {"a", be_to_string(s.a)}, {"b", be_to_string(s.b)}};
}

NeutroScalar scalar_from_json(const Json& j) {
  BaseRing r = ring_from_json(j.at("ring"));
  return {r, be_parse(r, j.at("a").get<std::string>()), be_parse(r, j.at("b").get<std::string>())};
}

Json magma_to_json(const FiniteMagma& m) {
  Json elements = Json::array();
  Json neutro = Json::array();
  for (const auto& e : m.elements()) {
    elements.push_back(e.label);
    neutro.push_back(e.neutro);
  }
  Json table = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m.op(i, j));
    table.push_back(row);
  }
  Json out{{"elements", elements}, {"table", table}};
  if (m.identity()) out["identity"] = *m.identity();
  else out["identity"] = nullptr;
  out["neutro"] = neutro;
  out["op"] = m.op_name();
  return out;
}

FiniteMagma magma_from_json(const Json& j) {
  std::vector<std::string> labels = j.at("elements").get<std::vector<std::string>>();
  std::vector<bool> neutro(labels.size(), false);
  if (j.contains("neutro")) neutro = j["neutro"].get<std::vector<bool>>();
  std::vector<int> table;
  for (const auto& row : j.at("table")) for (const auto& v : row) table.push_back(v.get<int>());
  std::string op = j.value("op", "*");
  return build_custom(labels, neutro, table, op);
}

std::string magma_to_csv(const FiniteMagma& m) {
  std::string out = "*";
  for (const auto& e : m.elements()) out += "," + e.label;
  out += "\n";
  for (int i = 0; i < m.size(); ++i) {
    out += m.element(i).label;
    for (int j = 0; j < m.size(); ++j) out += "," + m.element(m.op(i, j)).label;
    out += "\n";
  }
  return out;
}

Json finite_ring_to_json(const FiniteRing& r) {
  if (r.parametric_n) return Json{{"parametric", *r.parametric_n}};
  const FiniteRingView& v = *r.view;
  Json labels = Json::array(), addt = Json::array(), mult = Json::array();
  for (int i = 0; i < v.size(); ++i) labels.push_back(v.label(i));
  for (int i = 0; i < v.size(); ++i) {
    Json ra = Json::array(), rm = Json::array();
    for (int j = 0; j < v.size(); ++j) {
      ra.push_back(v.add(i, j));
      rm.push_back(v.mul(i, j));
    }
    addt.push_back(ra);
    mult.push_back(rm);
  }
  Json out{{"tabular", Json{{"elements", labels}, {"add", addt}, {"mul", mult},
                            {"zero", v.zero()}}}};
  if (v.one()) out["tabular"]["one"] = *v.one();
  return out;
}

Json poly_to_json(const NeutroPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms) {
    Json exp = Json::array();
    for (auto e : m) exp.push_back(e);
    terms.push_back(Json{{"exp", exp}, {"a", be_to_string(c.a)}, {"b", be_to_string(c.b)}});
  }
  return terms;
}

NeutroPoly poly_from_json(const BaseRing& r, const Json& j) {
  int nvars = 1;
  for (const auto& t : j) nvars = std::max<int>(nvars, static_cast<int>(t.at("exp").size()));
  NeutroPoly p = poly_zero(r, nvars);
  for (const auto& t : j) {
    Monomial m(nvars, 0);
    const auto& exp = t.at("exp");
    for (size_t i = 0; i < exp.size(); ++i) m[i] = exp[i].get<std::uint32_t>();
    NeutroScalar c{r, be_parse(r, t.at("a").get<std::string>()),
                   be_parse(r, t.at("b").get<std::string>())};
    poly_set(p, m, ns_add(poly_coeff(p, m), c));
  }
  return p;
}

Json matrix_to_json(const NeutroMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim; ++j) row.push_back(ns_to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

NeutroMatrix matrix_from_json(const BaseRing& r, const Json& j) {
  int dim = static_cast<int>(j.size());
  std::vector<NeutroScalar> entries;
  for (const auto& row : j) {
    if (static_cast<int>(row.size()) != dim) throw std::invalid_argument("matrix must be square");
    for (const auto& v : row) entries.push_back(ns_parse(r, v.get<std::string>()));
  }
  return mat_make(r, dim, entries);
}

Json scalar_ring_to_json(const ScalarRing& s) {
  return Json{{"kind", s.kind == ScalarKind::Plain ? "plain" : "neutrosophic"},
              {"base", ring_to_json(s.base)}};
}

ScalarRing scalar_ring_from_json(const Json& j) {
  ScalarRing s;
  s.base = ring_from_json(j.at("base"));
  std::string k = j.at("kind").get<std::string>();
  if (k == "plain") s.kind = ScalarKind::Plain;
  else if (k == "neutrosophic") s.kind = ScalarKind::Neutro;
  else throw std::invalid_argument("bad scalar ring kind");
  return s;
}

Json formal_sum_to_json(const FormalSum& f, const std::string& magma_ref) {
  Json terms = Json::array();
  for (const auto& [i, c] : f.coeffs)
    terms.push_back(Json{{"elem", f.alg->magma().element(i).label},
                         {"coef", Json{{"a", be_to_string(c.a)}, {"b", be_to_string(c.b)}}}});
  Json out{{"scalars", scalar_ring_to_json(f.alg->scalars())}, {"terms", terms}};
  if (!magma_ref.empty()) out["magma_ref"] = magma_ref;
  return out;
}

FormalSum formal_sum_from_json(const AlgebraPtr& a, const Json& j) {
  FormalSum f = fs_zero(a);
  for (const auto& t : j.at("terms")) {
    auto idx = a->magma().index_of(t.at("elem").get<std::string>());
    if (!idx) throw std::invalid_argument("unknown magma element in formal sum");
    const auto& cj = t.at("coef");
    NeutroScalar c{a->scalars().base, be_parse(a->scalars().base, cj.at("a").get<std::string>()),
                   be_parse(a->scalars().base, cj.at("b").get<std::string>())};
    f = fs_add(f, fs_term(a, c, *idx));
  }
  return f;
}

}  // namespace neutro
