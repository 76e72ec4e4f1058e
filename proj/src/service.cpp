#include "neutro/service.hpp"

#include <algorithm>
#include <functional>

#include "neutro/group_analysis.hpp"
#include "neutro/semigroup_analysis.hpp"
#include "neutro/verify.hpp"

namespace neutro {

namespace {

constexpr int kEInval = 1;
constexpr int kEUnsupported = 2;
constexpr int kECap = 3;
constexpr int kENotFound = 4;

// ---- shared builders --------------------------------------------------------

FiniteMagma magma_from_spec(const Json& spec) {
  std::string neutro = spec.value("neutro", "none");
  if (neutro == "ambient") {
    std::int64_t n = spec.at("ring_n").get<std::int64_t>();
    BaseRing zn = BaseRing::mod(n);
    bool add = spec.value("op", "add") == "add";
    std::vector<NeutroScalar> gens;
    if (!spec.contains("generators") || spec["generators"] == "determinate")
      gens = ambient_generators_determinate(zn);
    else if (spec["generators"] == "all") gens = ambient_generators_all(zn);
    else if (spec["generators"] == "units") gens = ambient_generators_units(zn);
    else if (spec["generators"].is_array()) {
      for (const auto& g : spec["generators"]) gens.push_back(ns_parse(zn, g.get<std::string>()));
    } else {
      throw ServiceError(kEInval, "bad ambient generators");
    }
    return neutrosophify_ambient(zn, add, gens);
  }

  FiniteMagma base = [&]() -> FiniteMagma {
    if (spec.contains("table")) return magma_from_json(spec["table"]);
    std::string family = spec.at("family").get<std::string>();
    std::int64_t n = spec.value("n", 0);
    if (family == "cyclic") return build_cyclic(static_cast<int>(n));
    if (family == "dihedral") return build_dihedral(static_cast<int>(n));
    if (family == "symmetric") return build_symmetric(static_cast<int>(n));
    if (family == "transformation") return build_transformation(static_cast<int>(n));
    if (family == "zn-add") return build_zn_add(n);
    if (family == "zn-mul") return build_zn_mul(n);
    if (family == "units-mul") {
      BaseRing zn = BaseRing::mod(n);
      // multiplicative group of units as a plain magma
      std::vector<NeutroScalar> units = ambient_generators_units(zn);
      std::vector<std::string> labels;
      std::vector<bool> flags(units.size(), false);
      std::vector<int> table(units.size() * units.size());
      for (size_t i = 0; i < units.size(); ++i) labels.push_back(ns_to_string(units[i]));
      for (size_t i = 0; i < units.size(); ++i)
        for (size_t j = 0; j < units.size(); ++j) {
          NeutroScalar p = ns_mul(units[i], units[j]);
          int k = -1;
          for (size_t t = 0; t < units.size(); ++t)
            if (units[t] == p) k = static_cast<int>(t);
          table[i * units.size() + j] = k;
        }
      return build_custom(labels, flags, table, "*");
    }
    throw ServiceError(kEInval, "unknown magma family '" + family + "'");
  }();
  if (neutro == "tagged") return neutrosophify_tagged(base);
  if (neutro != "none") throw ServiceError(kEInval, "neutro must be none|tagged|ambient");
  return base;
}

Json subset_json(const FiniteMagma& m, const Subset& s) {
  Json labels = Json::array();
  for (int i : s.indices()) labels.push_back(m.element(i).label);
  return labels;
}

Subset subset_from_json(const FiniteMagma& m, const Json& j) {
  std::vector<std::string> labels = j.get<std::vector<std::string>>();
  return subset_from_labels(m, labels);
}

const char* substructure_kind_name(SubstructureKind k) {
  switch (k) {
    case SubstructureKind::PlainSubgroup: return "PlainSubgroup";
    case SubstructureKind::NeutrosophicSubgroup: return "NeutrosophicSubgroup";
    case SubstructureKind::PseudoNeutrosophicSubgroup: return "PseudoNeutrosophicSubgroup";
    case SubstructureKind::ClosedNonGroup: return "ClosedNonGroup";
  }
  return "?";
}

const char* lagrange_name(LagrangeKind k) {
  switch (k) {
    case LagrangeKind::Lagrange: return "Lagrange";
    case LagrangeKind::WeaklyLagrange: return "WeaklyLagrange";
    case LagrangeKind::LagrangeFree: return "LagrangeFree";
  }
  return "?";
}

const char* cauchy_name(CauchyKind k) {
  switch (k) {
    case CauchyKind::StrongCauchy: return "StrongCauchy";
    case CauchyKind::Cauchy: return "Cauchy";
    case CauchyKind::Neither: return "Neither";
  }
  return "?";
}

const char* sylow_name(SylowKind k) {
  switch (k) {
    case SylowKind::Sylow: return "Sylow";
    case SylowKind::WeaklySylow: return "WeaklySylow";
    case SylowKind::SylowFree: return "SylowFree";
  }
  return "?";
}

const char* ideal_kind_name(IdealKind k) {
  switch (k) {
    case IdealKind::NeutrosophicIdeal: return "NeutrosophicIdeal";
    case IdealKind::PseudoNeutrosophicIdeal: return "PseudoNeutrosophicIdeal";
    case IdealKind::JustIdeal: return "JustIdeal";
  }
  return "?";
}

const char* subring_kind_name(SubringKind k) {
  switch (k) {
    case SubringKind::NeutrosophicSubring: return "NeutrosophicSubring";
    case SubringKind::PseudoNeutrosophicSubring: return "PseudoNeutrosophicSubring";
    case SubringKind::JustSubring: return "JustSubring";
  }
  return "?";
}

const char* quotient_kind_name(QuotientKind k) {
  switch (k) {
    case QuotientKind::NeutrosophicQuotient: return "NeutrosophicQuotient";
    case QuotientKind::FalseNeutrosophicQuotient: return "FalseNeutrosophicQuotient";
    case QuotientKind::PseudoQuotientNeutrosophic: return "PseudoQuotientNeutrosophic";
    case QuotientKind::FalsePseudoQuotientNeutrosophic: return "FalsePseudoQuotientNeutrosophic";
  }
  return "?";
}

const char* fs_subring_kind_name(FsSubringKind k) {
  switch (k) {
    case FsSubringKind::SubneutrosophicGroupRing: return "SubneutrosophicGroupRing";
    case FsSubringKind::NeutrosophicSubring: return "NeutrosophicSubring";
    case FsSubringKind::PseudoNeutrosophicSubring: return "PseudoNeutrosophicSubring";
    case FsSubringKind::SubgroupRing: return "SubgroupRing";
    case FsSubringKind::JustSubring: return "JustSubring";
  }
  return "?";
}

FiniteRing ring_from_spec(const Json& spec) {
  if (spec.contains("zn")) return FiniteRing::parametric(spec["zn"].get<std::int64_t>());
  if (spec.contains("tabular")) {
    const Json& t = spec["tabular"];
    std::vector<std::string> labels = t.at("elements").get<std::vector<std::string>>();
    auto flat = [&](const Json& rows) {
      std::vector<int> out;
      for (const auto& row : rows)
        for (const auto& v : row) out.push_back(v.get<int>());
      return out;
    };
    std::optional<int> one;
    if (t.contains("one")) one = t["one"].get<int>();
    std::vector<bool> nf(labels.size(), false), pf(labels.size(), false);
    if (t.contains("neutro")) nf = t["neutro"].get<std::vector<bool>>();
    if (t.contains("pure_i")) pf = t["pure_i"].get<std::vector<bool>>();
    std::optional<int> ie;
    if (t.contains("i_elem")) ie = t["i_elem"].get<int>();
    auto tab = std::make_shared<TabularRing>(labels, flat(t.at("add")), flat(t.at("mul")),
                                             t.at("zero").get<int>(), one, nf, pf, ie);
    tab->verify_axioms();
    return FiniteRing::tabular(tab);
  }
  throw ServiceError(kEInval, "ring spec needs 'zn' or 'tabular'");
}

ScalarRing scalar_ring_from_code(const std::string& code) {
  // "z", "q", "z12" plain; trailing "I" for neutrosophic: "qI", "z2I"
  std::string c = code;
  ScalarKind kind = ScalarKind::Plain;
  if (!c.empty() && c.back() == 'I') {
    kind = ScalarKind::Neutro;
    c.pop_back();
  }
  if (c == "z" || c == "Z") return {kind, BaseRing::integers()};
  if (c == "q" || c == "Q") return {kind, BaseRing::rationals()};
  if ((c.size() > 1) && (c[0] == 'z' || c[0] == 'Z'))
    return {kind, BaseRing::mod(std::stoll(c.substr(1)))};
  throw ServiceError(kEInval, "bad coefficient code '" + code + "'");
}

AlgebraPtr algebra_from_spec(const Json& spec) {
  ScalarRing sr;
  if (spec.at("coeff").is_string()) sr = scalar_ring_from_code(spec["coeff"].get<std::string>());
  else sr = scalar_ring_from_json(spec["coeff"]);
  return make_algebra(sr, magma_from_spec(spec.at("magma")));
}

// ---- handlers ---------------------------------------------------------------

Json handle_scalar(const Json& req) {
  BaseRing ring = ring_from_json(req.at("ring"));
  std::string op = req.at("op").get<std::string>();
  NeutroScalar x = ns_parse(ring, req.at("x").get<std::string>());
  Json out;
  if (op == "add" || op == "mul") {
    NeutroScalar y = ns_parse(ring, req.at("y").get<std::string>());
    NeutroScalar z = op == "add" ? ns_add(x, y) : ns_mul(x, y);
    out["result"] = ns_to_string(z);
    out["result_json"] = scalar_to_json(z);
  } else if (op == "split") {
    SplitPair s = split(x);
    out["u"] = be_to_string(s.u);
    out["v"] = be_to_string(s.v);
  } else if (op == "unsplit") {
    SplitPair s{be_parse(ring, req.at("x").get<std::string>()),
                be_parse(ring, req.at("y").get<std::string>())};
    out["result"] = ns_to_string(unsplit(s, ring));
  } else if (op == "unit") {
    auto inv = classify_unit(x);
    out["unit"] = inv.has_value();
    if (inv) out["inverse"] = ns_to_string(*inv);
  } else if (op == "idempotent") {
    out["idempotent"] = ns_is_idempotent(x);
  } else if (op == "zero_divisor") {
    ZeroDivisorClass z = classify_zero_divisor(x);
    const char* names[] = {"None", "TrivialNeutrosophic", "Neutrosophic", "SemiNeutrosophic",
                           "Plain"};
    out["class"] = names[static_cast<int>(z.tag)];
    if (z.witness) out["witness"] = ns_to_string(*z.witness);
    if (req.contains("y")) {
      NeutroScalar y = ns_parse(ring, req.at("y").get<std::string>());
      out["pair_class"] = names[static_cast<int>(classify_zero_divisor_pair(x, y))];
    }
  } else {
    throw ServiceError(kEInval, "unknown scalar op '" + op + "'");
  }
  return out;
}

Json predicates_json(const FiniteMagma& m) {
  MagmaPredicates p = predicates(m);
  Json out{{"is_semigroup", p.is_semigroup},   {"is_monoid", p.is_monoid},
           {"is_group", p.is_group},           {"is_commutative", p.is_commutative},
           {"is_s_semigroup", p.is_s_semigroup}};
  Json idem = Json::array();
  for (int i : p.idempotent_elements) idem.push_back(m.element(i).label);
  out["idempotent_elements"] = idem;
  if (p.s_semigroup_witness) out["s_semigroup_witness"] = subset_json(m, *p.s_semigroup_witness);
  Json orders = Json::array();
  for (const auto& rec : p.element_orders) {
    Json o{{"element", m.element(rec.element).label}};
    if (rec.order) o["order"] = *rec.order;
    if (rec.neutro_exponent) o["neutro_exponent"] = *rec.neutro_exponent;
    o["cycle_length"] = rec.cycle_length;
    orders.push_back(o);
  }
  out["element_orders"] = orders;
  return out;
}

Json handle_magma(const Json& req, const std::string& sub) {
  FiniteMagma m = magma_from_spec(req.at("magma"));
  Json out;
  if (sub == "build") {
    out["magma"] = magma_to_json(m);
    out["order"] = m.size();
    out["predicates"] = predicates_json(m);
  } else if (sub == "predicates") {
    out = predicates_json(m);
  } else if (sub == "csv") {
    out["csv"] = magma_to_csv(m);
  } else if (sub == "closure") {
    Subset s = subset_from_json(m, req.at("subset"));
    out["closure"] = subset_json(m, closure(m, s));
  } else if (sub == "unique_product") {
    auto r = unique_product_check(m, subset_from_json(m, req.at("a")),
                                  subset_from_json(m, req.at("b")));
    out["found"] = r.has_value();
    if (r) out["element"] = m.element(*r).label;
  } else {
    throw ServiceError(kEInval, "unknown magma command");
  }
  return out;
}

Json handle_direct_product(const Json& req) {
  std::vector<FiniteMagma> ms;
  for (const auto& spec : req.at("factors")) ms.push_back(magma_from_spec(spec));
  std::vector<const FiniteMagma*> ptrs;
  for (const auto& m : ms) ptrs.push_back(&m);
  FiniteMagma p = direct_product(ptrs);
  return Json{{"order", p.size()}, {"magma", magma_to_json(p)}};
}

Json handle_group(const Json& req, const std::string& sub) {
  FiniteMagma m = magma_from_spec(req.at("magma"));
  int cap = req.value("max_carrier", 24);
  Json out;
  if (sub == "analyze") {
    GroupReport rep = group_analyze(m, cap);
    out["order"] = rep.order;
    out["enumeration"] = rep.exhaustive ? "exhaustive" : "generator-closure";
    Json subs = Json::array();
    for (const auto& s : rep.substructures)
      subs.push_back(Json{{"subset", subset_json(m, s.subset)},
                          {"kind", substructure_kind_name(s.kind)},
                          {"order", s.order}});
    out["substructures"] = subs;
    out["lagrange"] = lagrange_name(rep.lagrange);
    out["pseudo_lagrange"] = lagrange_name(rep.pseudo_lagrange);
    out["cauchy"] = cauchy_name(rep.cauchy);
    Json ce = Json::array();
    for (const auto& rec : rep.cauchy_elements) {
      Json o{{"element", m.element(rec.element).label}};
      if (rec.torsion_exponent) o["torsion_exponent"] = *rec.torsion_exponent;
      if (rec.neutro_exponent) o["neutro_exponent"] = *rec.neutro_exponent;
      o["cauchy"] = rec.cauchy;
      o["cauchy_neutrosophic"] = rec.cauchy_neutrosophic;
      ce.push_back(o);
    }
    out["cauchy_elements"] = ce;
    Json sy = Json::array();
    for (const auto& rec : rep.sylow) {
      Json o{{"prime", rec.prime},
             {"exponent", rec.exponent},
             {"has_neutrosophic", rec.has_neutrosophic},
             {"has_pseudo", rec.has_pseudo}};
      if (rec.neutrosophic_witness) o["neutrosophic_witness"] = subset_json(m, *rec.neutrosophic_witness);
      if (rec.pseudo_witness) o["pseudo_witness"] = subset_json(m, *rec.pseudo_witness);
      sy.push_back(o);
    }
    out["sylow"] = sy;
    out["sylow_kind"] = sylow_name(rep.sylow_kind);
    out["pseudo_sylow_kind"] = sylow_name(rep.pseudo_sylow_kind);
    out["center"] = subset_json(m, rep.center);
  } else if (sub == "cosets") {
    Subset h = subset_from_json(m, req.at("subset"));
    bool right = req.value("side", "right") == "right";
    CosetReport rep = cosets(m, h, right);
    Json cs = Json::array();
    for (const auto& c : rep.cosets) cs.push_back(subset_json(m, c));
    out["cosets"] = cs;
    out["partitions"] = rep.partitions;
  } else if (sub == "conjugate") {
    auto w = conjugate_check(m, subset_from_json(m, req.at("p")), subset_from_json(m, req.at("k")));
    out["conjugate"] = w.has_value();
    if (w) {
      out["x"] = m.element(w->first).label;
      out["y"] = m.element(w->second).label;
    }
  } else if (sub == "normality") {
    SimplicityReport rep = normality_and_simplicity(m, cap);
    Json ns = Json::array();
    for (const auto& rec : rep.normality) {
      Json o{{"subset", subset_json(m, rec.subset)},
             {"exists_normal", rec.exists_normal},
             {"forall_normal", rec.forall_normal}};
      if (rec.witness)
        o["witness"] = Json::array({m.element(rec.witness->first).label,
                                    m.element(rec.witness->second).label});
      ns.push_back(o);
    }
    out["normality"] = ns;
    out["simple"] = rep.simple;
    out["pseudo_simple"] = rep.pseudo_simple;
  } else if (sub == "center") {
    out["center"] = subset_json(m, center(m));
  } else {
    throw ServiceError(kEInval, "unknown group command");
  }
  return out;
}

Json handle_semigroup(const Json& req, const std::string& sub) {
  FiniteMagma m = magma_from_spec(req.at("magma"));
  int cap = req.value("max_carrier", 24);
  Json out;
  const char* sskind[] = {"NeutrosophicSubsemigroup", "NeutrosophicSubmonoid", "PlainSubsemigroup",
                          "OtherClosed"};
  if (sub == "analyze") {
    out["order"] = m.size();
    out["predicates"] = predicates_json(m);
    if (m.is_associative()) {
      auto en = subsemigroups(m, cap);
      out["enumeration"] = en.exhaustive ? "exhaustive" : "generator-closure";
      Json subs = Json::array();
      for (const auto& s : en.subsemigroups)
        subs.push_back(Json{{"subset", subset_json(m, s.subset)},
                            {"kind", sskind[static_cast<int>(s.kind)]},
                            {"order", s.order}});
      out["subsemigroups"] = subs;
      auto ideals = semigroup_ideals(m, cap);
      Json is = Json::array();
      for (const auto& rec : ideals.ideals) {
        Json o{{"subset", subset_json(m, rec.subset)},
               {"sided", rec.sided == IdealSide::TwoSided
                             ? "two-sided"
                             : (rec.sided == IdealSide::Left ? "left" : "right")},
               {"principal", rec.principal},
               {"maximal", rec.maximal},
               {"minimal", rec.minimal},
               {"neutrosophic", rec.neutrosophic},
               {"order", rec.order}};
        if (rec.generator) o["generator"] = m.element(*rec.generator).label;
        is.push_back(o);
      }
      out["ideals"] = is;
      const char* ik[] = {"Idempotent", "WeaklyIdempotent", "Neither"};
      out["idempotent_class"] = ik[static_cast<int>(idempotent_semigroup_classify(m, cap))];
    }
    Json els = Json::array();
    for (const auto& rec : zero_divisors_and_units(m)) {
      Json o{{"element", m.element(rec.element).label}, {"idempotent", rec.idempotent}};
      if (!rec.zero_divisor_witnesses.empty()) {
        Json ws = Json::array();
        for (int w : rec.zero_divisor_witnesses) ws.push_back(m.element(w).label);
        o["zero_divisor_witnesses"] = ws;
      }
      if (rec.inverse) o["inverse"] = m.element(*rec.inverse).label;
      els.push_back(o);
    }
    out["elements"] = els;
  } else if (sub == "classify_subset") {
    Subset s = subset_from_json(m, req.at("subset"));
    out["kind"] = sskind[static_cast<int>(classify_subsemigroup(m, s))];
    out["closed"] = is_closed(m, s);
  } else {
    throw ServiceError(kEInval, "unknown semigroup command");
  }
  return out;
}

Json handle_ring(const Json& req, const std::string& sub) {
  FiniteRing ring = ring_from_spec(req.at("ring"));
  const FiniteRingView& v = *ring.view;
  Json out;
  if (sub == "analyze") {
    out["order"] = v.size();
    out["characteristic"] = characteristic(v);
    auto ideals = ring_ideals(ring);
    Json is = Json::array();
    for (const auto& rec : ideals) {
      if (rec.order <= 1 || rec.order == v.size()) continue;
      is.push_back(Json{{"subset", ring_subset_to_string(v, rec.subset)},
                        {"kind", ideal_kind_name(rec.kind)},
                        {"order", rec.order}});
    }
    out["ideals"] = is;
    Json qs = Json::array();
    for (const auto& rec : ideals) {
      if (rec.order <= 1 || rec.order == v.size()) continue;
      QuotientResult q = quotient(ring, rec.subset);
      qs.push_back(Json{{"ideal", ring_subset_to_string(v, rec.subset)},
                        {"order", q.quotient->size()},
                        {"class", quotient_kind_name(q.kind)}});
    }
    out["quotients"] = qs;
    RadicalReport rad = radical_and_semisimplicity(ring);
    out["radical"] = Json{{"jacobson", ring_subset_to_string(v, rad.jacobson)},
                          {"semisimple", rad.semisimple},
                          {"semiprime", rad.semiprime},
                          {"prime", rad.prime},
                          {"integral_domain", rad.integral_domain},
                          {"division_ring", rad.division_ring},
                          {"commutative", rad.commutative}};
    FieldReport fr = field_predicates(ring);
    out["field"] = Json{{"is_neutrosophic_field", fr.is_neutrosophic_field},
                        {"prime_neutrosophic_field", fr.prime_neutrosophic_field}};
    if (v.size() <= req.value("taxonomy_cap", 256) && req.value("taxonomy", true)) {
      SubringTaxonomy tax = subring_taxonomy(v);
      Json ts = Json::array();
      for (const auto& rec : tax.subrings)
        ts.push_back(Json{{"subset", ring_subset_to_string(v, rec.subset)},
                          {"kind", subring_kind_name(rec.kind)},
                          {"order", rec.order}});
      out["subrings"] = ts;
    }
  } else if (sub == "quotient") {
    Subset ideal(v.size());
    if (req.at("ideal").is_string() && req["ideal"] == "all-I") {
      if (!ring.parametric_n) throw ServiceError(kEInval, "all-I needs a parametric ring");
      ideal = all_indeterminate_ideal(static_cast<const ParametricRing&>(v));
    } else {
      ideal = ring_subset_from_labels(v, req.at("ideal").get<std::vector<std::string>>());
    }
    QuotientResult q = quotient(ring, ideal);
    out["order"] = q.quotient->size();
    out["class"] = quotient_kind_name(q.kind);
    Json cs = Json::array();
    for (const auto& c : q.cosets) cs.push_back(ring_subset_to_string(v, c));
    out["cosets"] = cs;
    if (ring.parametric_n &&
        ideal == all_indeterminate_ideal(static_cast<const ParametricRing&>(v)))
      out["isomorphic_to_Zn"] = quotient_isomorphic_to_zn(q, *ring.parametric_n);
  } else if (sub == "hom_check") {
    FiniteRing dst = ring_from_spec(req.at("dst"));
    std::vector<int> map;
    if (req.at("map").is_string() && req["map"] == "determinate-part") {
      if (!ring.parametric_n) throw ServiceError(kEInval, "preset map needs a parametric ring");
      std::int64_t n = *ring.parametric_n;
      for (int x = 0; x < v.size(); ++x) map.push_back(static_cast<int>((x / n) * n));
    } else {
      map = req.at("map").get<std::vector<int>>();
    }
    HomomorphismReport rep = verify_homomorphism(v, *dst.view, map);
    out["ok"] = rep.ok;
    if (!rep.ok) {
      out["violated"] = rep.violated;
      if (rep.witness)
        out["witness"] = Json::array({v.label(rep.witness->first), v.label(rep.witness->second)});
    } else {
      out["kernel"] = ring_subset_to_string(v, rep.kernel);
      out["kernel_contains_neutro"] = rep.kernel_contains_neutro;
      out["kernel_is_neutrosophic_subring"] = rep.kernel_is_neutrosophic_subring;
    }
  } else {
    throw ServiceError(kEInval, "unknown ring command");
  }
  return out;
}

Json handle_poly(const Json& req, const std::string& sub) {
  BaseRing ring = ring_from_json(req.at("ring"));
  Json out;
  auto get = [&](const char* key) { return poly_parse(ring, req.at(key).get<std::string>()); };
  if (sub == "add" || sub == "mul") {
    NeutroPoly p = get("lhs"), q = get("rhs");
    NeutroPoly r = sub == "add" ? poly_add(p, q) : poly_mul(p, q);
    out["result"] = poly_to_string(r);
    out["result_json"] = poly_to_json(r);
  } else if (sub == "classify") {
    NeutroPoly p = get("lhs");
    PolyClass k = classify_poly(p);
    out["class"] = k == PolyClass::Strong ? "Strong" : (k == PolyClass::Mixed ? "Mixed" : "Plain");
  } else if (sub == "content") {
    NeutroPoly p = get("lhs");
    NeutroScalar ct = content(p);
    out["content"] = ns_to_string(ct);
    out["primitive"] = is_primitive(p);
    out["integer_monic"] = is_integer_monic(p);
  } else if (sub == "divides") {
    NeutroPoly p = get("rhs");
    if (req.contains("scalar")) {
      NeutroScalar d = ns_parse(ring, req.at("scalar").get<std::string>());
      auto q = divides_scalar(d, p);
      out["divides"] = q.has_value();
      if (q) out["quotient"] = poly_to_string(*q);
    } else {
      NeutroPoly d = get("lhs");
      DivisionResult r = divides_poly(d, p);
      out["outcome"] = r.outcome == DivisionOutcome::Quotient
                           ? "quotient"
                           : (r.outcome == DivisionOutcome::NoQuotient ? "no-quotient" : "unknown");
      if (r.quotient) out["quotient"] = poly_to_string(*r.quotient);
    }
  } else if (sub == "reduce") {
    NeutroPoly p = get("lhs");
    ReducibilityReport rep = reducibility_classify(p, req.value("degree_bound", -1));
    const char* names[] = {"Unit",
                           "NeutrosophicReducible",
                           "SemiNeutrosophicReducible",
                           "PlainReducible",
                           "IrreducibleNeutrosophic",
                           "IrreduciblePlain",
                           "Unknown"};
    out["class"] = names[static_cast<int>(rep.cls)];
    if (rep.factorization)
      out["factorization"] = Json::array({poly_to_string(rep.factorization->first),
                                          poly_to_string(rep.factorization->second)});
  } else if (sub == "gauss_probe") {
    GaussProbeResult rep = gauss_lemma_probe(req.value("samples", 1000L),
                                             req.value("degree", 3), req.value("seed", 0ULL));
    out["pass"] = rep.pass;
    out["samples"] = rep.samples;
    if (rep.counterexample)
      out["counterexample"] = Json::array({poly_to_string(rep.counterexample->first),
                                           poly_to_string(rep.counterexample->second)});
  } else {
    throw ServiceError(kEInval, "unknown poly command");
  }
  return out;
}

Json handle_matrix(const Json& req, const std::string& sub) {
  BaseRing ring = ring_from_json(req.at("ring"));
  Json out;
  auto get = [&](const char* key) { return matrix_from_json(ring, req.at(key)); };
  if (sub == "add" || sub == "mul") {
    NeutroMatrix x = get("lhs"), y = get("rhs");
    NeutroMatrix r = sub == "add" ? mat_add(x, y) : mat_mul(x, y);
    out["result"] = matrix_to_json(r);
  } else if (sub == "det") {
    NeutroMatrix x = get("lhs");
    out["det"] = ns_to_string(determinant(x));
    out["invertible"] = mat_is_invertible(x);
  } else if (sub == "idempotent") {
    auto rep = idempotent_report(get("lhs"));
    out["idempotent"] = rep.idempotent;
    out["neutrosophic"] = rep.neutrosophic;
  } else if (sub == "zd_search") {
    bool right = req.value("side", "right") == "right";
    auto rep = one_sided_zero_divisor_search(get("lhs"), right, req.value("seed", 0ULL));
    out["outcome"] = rep.outcome == SearchOutcome::Found
                         ? "found"
                         : (rep.outcome == SearchOutcome::NotFound ? "not-found" : "unknown");
    out["probes"] = rep.probes;
    if (rep.witness) {
      out["witness"] = matrix_to_json(*rep.witness);
      out["one_sided"] = rep.one_sided;
    }
  } else if (sub == "unit_magma") {
    FiniteMagma m = invertible_matrices_magma(ring, 2);
    out["order"] = m.size();
    out["is_group"] = predicates(m).is_group;
  } else {
    throw ServiceError(kEInval, "unknown matrix command");
  }
  return out;
}

Json fs_json(const FormalSum& f) {
  return Json{{"text", fs_to_string(f)}, {"terms", formal_sum_to_json(f)["terms"]}};
}

Json handle_algebra(const Json& req, const std::string& sub) {
  AlgebraPtr a = algebra_from_spec(req);
  Json out;
  double cap = req.value("max_algebra", 1 << 20);
  if (sub == "build" || sub == "classify") {
    out["kind"] = algebra_kind_name(a->kind());
    out["magma_order"] = a->magma().size();
    if (auto o = a->order()) out["order"] = *o;
    out["magma_is_group"] = a->magma_is_group();
    out["magma_is_s_semigroup"] = a->magma_is_s_semigroup();
    if (sub == "classify") {
      Json lat = Json::array();
      for (const auto& e : containment_lattice(a))
        lat.push_back(Json{{"name", e.name}, {"description", e.description},
                           {"verified", e.verified}});
      out["containment"] = lat;
      SpecialCheck spc = special_group_ring_check(a);
      out["special_group_ring"] =
          Json{{"special", spc.special},
               {"reason", spc.reason},
               {"scalar_subrings_with_unit", spc.scalar_subrings_with_unit},
               {"nontrivial_subgroups", spc.nontrivial_subgroups}};
      try {
        FsPrimeReport pr = prime_semiprime_semisimple(a);
        Json p;
        if (pr.full_computed) {
          p["prime"] = pr.prime;
          p["semiprime"] = pr.semiprime;
          p["semisimple"] = pr.semisimple;
        } else {
          p["note"] = "whole-algebra scan skipped (beyond the packing cap)";
        }
        if (pr.pseudo_semisimple) p["pseudo_semisimple"] = *pr.pseudo_semisimple;
        if (pr.pseudo_prime) p["pseudo_prime"] = *pr.pseudo_prime;
        if (pr.pseudo_semiprime) p["pseudo_semiprime"] = *pr.pseudo_semiprime;
        if (pr.weakly_pseudo_semiprime) p["weakly_pseudo_semiprime"] = *pr.weakly_pseudo_semiprime;
        out["predicates"] = p;
      } catch (const std::domain_error& e) {
        out["predicates"] = Json{{"skipped", e.what()}};
      }
    }
  } else if (sub == "eval") {
    FormalSum f = fs_parse(a, req.at("expr").get<std::string>());
    out["value"] = fs_json(f);
    auto idem = fs_idempotent_report(f);
    out["idempotent"] = idem.idempotent;
    out["neutrosophic_element"] = fs_is_neutrosophic(f);
    try {
      auto ur = fs_unit_report(f, cap);
      if (ur.inverse) out["inverse"] = fs_json(*ur.inverse);
      if (ur.neutro_partner) out["neutro_partner"] = fs_json(*ur.neutro_partner);
      auto zr = fs_zero_divisor_report(f, cap);
      if (zr.witness) out["zero_divisor_witness"] = fs_json(*zr.witness);
    } catch (const std::domain_error& e) {
      out["search"] = Json{{"skipped", e.what()}};
    }
  } else if (sub == "idempotents") {
    auto rep = idempotent_search(a, cap);
    Json list = Json::array();
    for (const auto& f : rep.found) list.push_back(fs_to_string(f));
    out["exhaustive"] = rep.exhaustive;
    out["idempotents"] = list;
  } else if (sub == "units") {
    auto view = algebra_ring_view(a, cap);
    Json list = Json::array();
    auto e = view->one();
    if (!e) throw ServiceError(kEUnsupported, "algebra has no identity");
    for (int x = 0; x < view->size(); ++x)
      if (view->is_unit(x)) list.push_back(view->label(x));
    out["units"] = list;
  } else if (sub == "zero_divisors") {
    auto view = algebra_ring_view(a, cap);
    Json list = Json::array();
    for (int x = 1; x < view->size(); ++x) {
      for (int y = 1; y < view->size(); ++y)
        if (view->mul(x, y) == 0) {
          list.push_back(Json::array({view->label(x), view->label(y)}));
          break;
        }
    }
    out["zero_divisor_pairs"] = list;
  } else if (sub == "ideals") {
    auto rep = fs_ideal_taxonomy(a, req.value("max_algebra", 1 << 12),
                                 req.value("quasi", false));
    out["exhaustive"] = rep.exhaustive;
    Json list = Json::array();
    for (const auto& rec : rep.ideals) {
      Json els = Json::array();
      for (const auto& f : rec.elements) els.push_back(fs_to_string(f));
      list.push_back(Json{{"elements", els},
                          {"kind", fs_subring_kind_name(rec.kind)},
                          {"order", rec.order}});
    }
    out["ideals"] = list;
    if (req.value("quasi", false)) {
      Json qs = Json::array();
      for (const auto& q : rep.quasi)
        qs.push_back(Json{{"subring", q.subring_s},
                          {"relative", q.relative_p},
                          {"loyal", q.loyal}});
      out["quasi"] = qs;
      Json bp = Json::array();
      for (auto [i, j] : rep.bonded_pairs) bp.push_back(Json::array({i, j}));
      out["bonded_pairs"] = bp;
    }
  } else if (sub == "subrings") {
    auto rep = fs_subring_taxonomy(a, req.value("max_algebra", 1 << 12));
    out["exhaustive"] = rep.exhaustive;
    Json list = Json::array();
    for (const auto& rec : rep.subrings) {
      Json els = Json::array();
      for (const auto& f : rec.elements) els.push_back(fs_to_string(f));
      list.push_back(Json{{"elements", els},
                          {"kind", fs_subring_kind_name(rec.kind)},
                          {"order", rec.order}});
    }
    out["subrings"] = list;
  } else if (sub == "subgroup_sum") {
    Subset h = subset_from_json(a->magma(), req.at("subset"));
    FormalSum alpha = subgroup_sum(a, h);
    int n = static_cast<int>(h.count());
    auto [x, y] = zero_divisor_pair(alpha, n);
    out["alpha"] = fs_json(alpha);
    out["n"] = n;
    out["alpha_times_alpha_minus_n_is_zero"] = fs_is_zero(fs_mul(x, y));
  } else if (sub == "unit_from_subgroup") {
    Subset h = subset_from_json(a->magma(), req.at("subset"));
    FormalSum alpha = subgroup_sum(a, h);
    NeutroScalar av = ns_parse(a->scalars().base, req.at("a").get<std::string>());
    UnitConstruction u = unit_from_subgroup(alpha, static_cast<int>(h.count()), av);
    out["x"] = fs_json(u.x);
    out["y"] = fs_json(u.y);
    out["verified"] = u.verified;
    if (u.neutro_partner) {
      out["neutro_partner"] = fs_json(*u.neutro_partner);
      out["neutro_target"] = fs_json(*u.neutro_target);
    }
  } else if (sub == "semiprimeness") {
    SemiprimenessReport rep = semiprimeness_routes(a);
    out = Json{{"p", rep.p},
               {"semiprime_by_ideal_scan", rep.semiprime_by_ideal_scan},
               {"delta_has_no_p_element", rep.delta_has_no_p_element},
               {"no_normal_subgroup_order_div_p", rep.no_normal_subgroup_order_div_p},
               {"routes_agree", rep.routes_agree}};
  } else {
    throw ServiceError(kEInval, "unknown algebra command");
  }
  return out;
}

}  // namespace

Json run_command(const Json& request) {
  if (!request.is_object() || !request.contains("cmd"))
    throw ServiceError(kEInval, "request must be an object with a 'cmd' field");
  std::string cmd = request["cmd"].get<std::string>();
  Json out{{"schema_version", kSchemaVersion}, {"cmd", cmd}};
  auto dot = cmd.find('.');
  std::string verb = dot == std::string::npos ? cmd : cmd.substr(0, dot);
  std::string sub = dot == std::string::npos ? "" : cmd.substr(dot + 1);
  try {
    Json body;
    if (cmd == "version") body = Json{{"version", "0.1.0"}};
    else if (verb == "scalar") body = handle_scalar(request);
    else if (cmd == "magma.direct_product") body = handle_direct_product(request);
    else if (verb == "magma") body = handle_magma(request, sub);
    else if (verb == "group") body = handle_group(request, sub);
    else if (verb == "semigroup") body = handle_semigroup(request, sub);
    else if (verb == "ring") body = handle_ring(request, sub);
    else if (verb == "poly") body = handle_poly(request, sub);
    else if (verb == "matrix") body = handle_matrix(request, sub);
    else if (verb == "algebra") body = handle_algebra(request, sub);
    else if (cmd == "verify.all") {
      VerifyOutcome v = run_verify(request.value("seed", 0ULL));
      body = v.report;
    } else {
      throw ServiceError(kENotFound, "unknown command '" + cmd + "'");
    }
    out["ok"] = true;
    out["result"] = body;
  } catch (const ServiceError&) {
    throw;
  } catch (const Json::exception& e) {
    throw ServiceError(kEInval, e.what());
  } catch (const std::invalid_argument& e) {
    throw ServiceError(kEInval, e.what());
  } catch (const std::domain_error& e) {
    throw ServiceError(kECap, e.what());
  }
  return out;
}

VerifyOutcome run_verify(std::uint64_t seed) {
  VerifyOutcome out;
  auto results = run_acceptance(seed);
  Json list = Json::array();
  for (const auto& r : results) {
    list.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    if (!r.pass) ++out.failures;
  }
  out.report = Json{{"criteria", list},
                    {"total", results.size()},
                    {"failures", out.failures},
                    {"seed", seed}};
  return out;
}

}  // namespace neutro
