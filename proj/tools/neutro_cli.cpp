// Command-line front end. Everything goes through the C API; this file only
// parses arguments, builds JSON requests, and renders the JSON reports.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "neutro/neutro_c.h"

namespace {

using Json = nlohmann::ordered_json;

struct Session {
  neutro_session* s = neutro_session_new();
  ~Session() { neutro_session_free(s); }
};

// ---- text rendering ----------------------------------------------------------

bool is_scalarish(const Json& j) {
  return j.is_primitive();
}

void render_text(const Json& j, std::ostream& os, int indent);

void render_table(const Json& arr, std::ostream& os, int indent) {
  std::vector<std::string> cols;
  for (const auto& row : arr)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  std::vector<std::vector<std::string>> cells;
  cells.push_back(cols);
  for (const auto& row : arr) {
    std::vector<std::string> line;
    for (const auto& c : cols) {
      if (!row.contains(c)) {
        line.push_back("");
        continue;
      }
      const Json& v = row[c];
      line.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    cells.push_back(line);
  }
  std::vector<size_t> w(cols.size(), 0);
  for (const auto& line : cells)
    for (size_t i = 0; i < line.size(); ++i) w[i] = std::max(w[i], line[i].size());
  for (size_t r = 0; r < cells.size(); ++r) {
    os << std::string(indent, ' ');
    for (size_t i = 0; i < cells[r].size(); ++i) {
      os << cells[r][i] << std::string(w[i] - cells[r][i].size() + 2, ' ');
    }
    os << "\n";
    if (r == 0) {
      os << std::string(indent, ' ');
      for (size_t i = 0; i < cols.size(); ++i) os << std::string(w[i], '-') << "  ";
      os << "\n";
    }
  }
}

void render_text(const Json& j, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (is_scalarish(v)) {
        os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else if (v.is_array() && (v.empty() || is_scalarish(v.front()))) {
        os << pad << it.key() << ": " << v.dump() << "\n";
      } else if (v.is_array() && v.front().is_object()) {
        os << pad << it.key() << ":\n";
        render_table(v, os, indent + 2);
      } else if (v.is_array() && v.front().is_array()) {
        os << pad << it.key() << ":\n";
        for (const auto& row : v) os << pad << "  " << row.dump() << "\n";
      } else {
        os << pad << it.key() << ":\n";
        render_text(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) render_text(v, os, indent);
  } else {
    os << pad << j.dump() << "\n";
  }
}

void render_csv(const Json& j, std::ostream& os) {
  if (j.is_object() && j.contains("csv")) {
    os << j["csv"].get<std::string>();
    return;
  }
  // first array-of-objects member becomes the csv body
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (v.is_array() && !v.empty() && v.front().is_object()) {
        std::vector<std::string> cols;
        for (const auto& row : v)
          for (auto kt = row.begin(); kt != row.end(); ++kt)
            if (std::find(cols.begin(), cols.end(), kt.key()) == cols.end())
              cols.push_back(kt.key());
        for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
        os << "\n";
        for (const auto& row : v) {
          for (size_t i = 0; i < cols.size(); ++i) {
            if (i) os << ",";
            if (row.contains(cols[i])) {
              const Json& cell = row[cols[i]];
              std::string cellstr = cell.is_string() ? cell.get<std::string>() : cell.dump();
              if (cellstr.find(',') != std::string::npos) os << '"' << cellstr << '"';
              else os << cellstr;
            }
          }
          os << "\n";
        }
        return;
      }
    }
  }
  throw std::runtime_error("this report has no tabular section; use --format json");
}

struct GlobalOpts {
  std::string format = "text";
  std::uint64_t seed = 0;
  int max_carrier = 24;
  double max_algebra = 1 << 20;
};

int run_request(Session& session, const Json& request, const GlobalOpts& g) {
  char* response = nullptr;
  neutro_status st = neutro_run_json(session.s, request.dump().c_str(), &response);
  if (st != NEUTRO_OK) {
    std::cerr << "error: " << neutro_last_error(session.s) << "\n";
    return st == NEUTRO_EINVAL || st == NEUTRO_ENOTFOUND ? 2 : 1;
  }
  Json res = Json::parse(response);
  neutro_string_free(response);
  const Json& body = res["result"];
  if (g.format == "json") {
    std::cout << body.dump(2) << "\n";
  } else if (g.format == "csv") {
    try {
      render_csv(body, std::cout);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  } else {
    render_text(body, std::cout, 0);
  }
  return 0;
}

// "cyclic:4" or ("mul-mod", 5) -> magma spec json
Json magma_spec(const std::string& base, std::optional<std::int64_t> n, const std::string& neutro,
                const std::string& op, const std::string& generators) {
  std::string family = base;
  std::int64_t param = n.value_or(0);
  auto colon = base.find(':');
  if (colon != std::string::npos) {
    family = base.substr(0, colon);
    param = std::stoll(base.substr(colon + 1));
  }
  if (family == "mul-mod") family = "units-mul";
  if (family == "add-mod") family = "zn-add";
  Json spec;
  if (neutro == "ambient") {
    spec["neutro"] = "ambient";
    spec["ring_n"] = param;
    std::string the_op = op;
    if (the_op.empty()) the_op = family == "units-mul" || family == "zn-mul" ? "mul" : "add";
    spec["op"] = the_op;
    std::string gen = generators;
    if (gen.empty()) gen = family == "units-mul" ? "units" : (the_op == "mul" ? "all" : "determinate");
    if (gen.find(',') != std::string::npos) {
      Json list = Json::array();
      std::stringstream ss(gen);
      std::string item;
      while (std::getline(ss, item, ',')) list.push_back(item);
      spec["generators"] = list;
    } else {
      spec["generators"] = gen;
    }
    return spec;
  }
  spec["family"] = family;
  spec["n"] = param;
  spec["neutro"] = neutro;
  return spec;
}

Json labels_json(const std::string& csv) {
  Json out = Json::array();
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // trim
    size_t b = item.find_first_not_of(' ');
    size_t e = item.find_last_not_of(' ');
    out.push_back(b == std::string::npos ? item : item.substr(b, e - b + 1));
  }
  return out;
}

Json ring_json_from_code(const std::string& code) {
  if (code == "Z" || code == "z") return Json("Z");
  if (code == "Q" || code == "q") return Json("Q");
  if ((code[0] == 'Z' || code[0] == 'z') && code.size() > 1)
    return Json{{"Zn", std::stoll(code.substr(1))}};
  throw CLI::ValidationError("--ring must be Z, Q, or Z<n>");
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("NEUTRO_MAX_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(threads, &end, 10);
    if (!end || *end != '\0' || v < 1) {
      std::cerr << "error: NEUTRO_MAX_THREADS must be a positive integer\n";
      return 2;
    }
    // analyses in this build are single-threaded; the value is an upper bound
  }

  CLI::App app{"exact neutrosophic computational algebra (a + bI with I^2 = I)"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", g.seed, "seed for randomized probes");
  app.add_option("--max-carrier", g.max_carrier, "exhaustive-enumeration cap for magmas");
  app.add_option("--max-algebra", g.max_algebra, "exhaustive-enumeration cap for formal-sum algebras");

  Session session;
  Json request;

  // shared magma options
  struct MagmaOpts {
    std::string base, neutro = "none", op, generators, table_file;
    std::optional<std::int64_t> n;
  };
  auto add_magma_opts = [](CLI::App* cmd, MagmaOpts& mo, bool require_neutro) {
    cmd->add_option("--base,--magma", mo.base,
                    "magma family: cyclic:N dihedral:N symmetric:N transformation:N "
                    "zn-add:N zn-mul:N mul-mod:N add-mod:N");
    cmd->add_option("--n", mo.n, "family parameter (alternative to base:N)");
    auto* no = cmd->add_option("--neutro", mo.neutro, "neutrosophification: none|tagged|ambient");
    if (require_neutro) no->required();
    cmd->add_option("--op", mo.op, "ambient ring operation: add|mul");
    cmd->add_option("--generators", mo.generators,
                    "ambient generators: all|determinate|units|comma,list");
    cmd->add_option("--table", mo.table_file, "JSON file with a custom Cayley table");
  };
  auto spec_of = [](const MagmaOpts& mo) {
    if (!mo.table_file.empty()) {
      std::ifstream in(mo.table_file);
      if (!in) throw CLI::ValidationError("cannot read " + mo.table_file);
      Json t = Json::parse(in);
      Json spec{{"table", t}, {"neutro", mo.neutro}};
      return spec;
    }
    if (mo.base.empty()) throw CLI::ValidationError("--base/--magma or --table required");
    return magma_spec(mo.base, mo.n, mo.neutro, mo.op, mo.generators);
  };

  // ---- ring ----
  auto* ring = app.add_subcommand("ring", "finite neutrosophic ring analysis");
  std::int64_t ring_zn = 0;
  bool ring_taxonomy = true;
  std::string ring_ideal, ring_dst, ring_map = "determinate-part";
  auto* ring_analyze = ring->add_subcommand("analyze", "ideals, quotients, predicates");
  ring_analyze->add_option("--zn", ring_zn, "analyze <Z_n u I>")->required();
  ring_analyze->add_flag("--taxonomy,!--no-taxonomy", ring_taxonomy, "include subring taxonomy");
  auto* ring_quot = ring->add_subcommand("quotient", "quotient by an ideal");
  ring_quot->add_option("--zn", ring_zn)->required();
  ring_quot->add_option("--ideal", ring_ideal, "comma-separated element labels, or all-I")
      ->required();
  auto* ring_hom = ring->add_subcommand("hom-check", "verify a neutrosophic ring homomorphism");
  ring_hom->add_option("--zn", ring_zn)->required();
  ring_hom->add_option("--dst-zn", ring_dst, "destination <Z_m u I>")->required();
  ring_hom->add_option("--map", ring_map, "determinate-part (preset)");

  // ---- group / semigroup ----
  MagmaOpts gm;
  auto* group = app.add_subcommand("group", "finite neutrosophic group analysis");
  auto* group_analyze = group->add_subcommand("analyze", "full classification report");
  add_magma_opts(group_analyze, gm, true);
  std::string subset_csv, subset_p, subset_k, side = "right";
  auto* group_cosets = group->add_subcommand("cosets", "coset family of a subset");
  add_magma_opts(group_cosets, gm, true);
  group_cosets->add_option("--subset", subset_csv)->required();
  group_cosets->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  auto* group_conj = group->add_subcommand("conjugate", "conjugacy witness xP = Ky");
  add_magma_opts(group_conj, gm, true);
  group_conj->add_option("--p", subset_p)->required();
  group_conj->add_option("--k", subset_k)->required();
  auto* group_norm = group->add_subcommand("normality", "both normality readings per subgroup");
  add_magma_opts(group_norm, gm, true);
  auto* group_center = group->add_subcommand("center", "commuting elements");
  add_magma_opts(group_center, gm, true);

  MagmaOpts sm;
  auto* semi = app.add_subcommand("semigroup", "finite neutrosophic semigroup analysis");
  auto* semi_analyze = semi->add_subcommand("analyze", "subsemigroups, ideals, idempotents");
  add_magma_opts(semi_analyze, sm, false);
  auto* semi_classify = semi->add_subcommand("classify-subset", "classify one subset");
  add_magma_opts(semi_classify, sm, false);
  std::string semi_subset;
  semi_classify->add_option("--subset", semi_subset)->required();

  // ---- poly ----
  auto* poly = app.add_subcommand("poly", "neutrosophic polynomial arithmetic");
  std::string poly_ring = "Z", poly_lhs, poly_rhs, poly_scalar;
  int poly_degree_bound = -1, poly_degree = 3;
  long poly_samples = 1000;
  for (const char* opn : {"add", "mul", "classify", "content", "divides", "reduce", "gauss-probe"}) {
    auto* cmd = poly->add_subcommand(opn);
    cmd->add_option("--ring", poly_ring, "Z, Q, or Z<n>");
    if (std::string(opn) != "gauss-probe") cmd->add_option("--lhs", poly_lhs)->required();
    if (std::string(opn) == "add" || std::string(opn) == "mul" || std::string(opn) == "divides")
      cmd->add_option("--rhs", poly_rhs);
    if (std::string(opn) == "divides") cmd->add_option("--scalar", poly_scalar);
    if (std::string(opn) == "reduce") cmd->add_option("--degree-bound", poly_degree_bound);
    if (std::string(opn) == "gauss-probe") {
      cmd->add_option("--samples", poly_samples);
      cmd->add_option("--degree", poly_degree);
    }
  }

  // ---- matrix ----
  auto* matrix = app.add_subcommand("matrix", "neutrosophic matrix arithmetic");
  std::string mat_ring = "Z2", mat_lhs, mat_rhs, mat_side = "right";
  for (const char* opn : {"add", "mul", "det", "idempotent", "zd-search", "unit-magma"}) {
    auto* cmd = matrix->add_subcommand(opn);
    cmd->add_option("--ring", mat_ring, "Z, Q, or Z<n>");
    if (std::string(opn) != "unit-magma") cmd->add_option("--lhs", mat_lhs)->required();
    if (std::string(opn) == "add" || std::string(opn) == "mul")
      cmd->add_option("--rhs", mat_rhs)->required();
    if (std::string(opn) == "zd-search")
      cmd->add_option("--side", mat_side)->check(CLI::IsMember({"left", "right"}));
  }

  // ---- algebra ----
  MagmaOpts am;
  std::string alg_coeff = "z2", alg_expr, alg_subset, alg_a = "5";
  bool alg_quasi = false;
  auto* algebra = app.add_subcommand("algebra", "group/semigroup rings and generalizations");
  for (const char* opn : {"build", "classify", "eval", "units", "idempotents", "zero-divisors",
                          "ideals", "subrings", "subgroup-sum", "unit-from-subgroup",
                          "semiprimeness"}) {
    auto* cmd = algebra->add_subcommand(opn);
    cmd->add_option("--coeff", alg_coeff,
                    "coefficient ring: z, q, zN (plain) or zI, qI, zNI (neutrosophic)");
    add_magma_opts(cmd, am, false);
    if (std::string(opn) == "eval") cmd->add_option("--expr", alg_expr)->required();
    if (std::string(opn) == "subgroup-sum" || std::string(opn) == "unit-from-subgroup")
      cmd->add_option("--subset", alg_subset)->required();
    if (std::string(opn) == "unit-from-subgroup") cmd->add_option("--a", alg_a);
    if (std::string(opn) == "ideals") cmd->add_flag("--quasi", alg_quasi);
  }

  // ---- magma / verify ----
  MagmaOpts mm;
  auto* magma = app.add_subcommand("magma", "Cayley-table utilities");
  auto* magma_csv = magma->add_subcommand("csv", "export the Cayley table as CSV");
  add_magma_opts(magma_csv, mm, false);
  auto* magma_closure = magma->add_subcommand("closure", "closure of a subset");
  add_magma_opts(magma_closure, mm, false);
  std::string magma_subset;
  magma_closure->add_option("--subset", magma_subset)->required();

  auto* verify = app.add_subcommand("verify", "reproduction suite");
  verify->add_subcommand("all", "run every check and print a pass/fail matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ring_analyze->parsed()) {
      request = {{"cmd", "ring.analyze"}, {"ring", {{"zn", ring_zn}}}, {"taxonomy", ring_taxonomy}};
    } else if (ring_quot->parsed()) {
      request = {{"cmd", "ring.quotient"}, {"ring", {{"zn", ring_zn}}}};
      request["ideal"] = ring_ideal == "all-I" ? Json("all-I") : labels_json(ring_ideal);
    } else if (ring_hom->parsed()) {
      request = {{"cmd", "ring.hom_check"},
                 {"ring", {{"zn", ring_zn}}},
                 {"dst", {{"zn", std::stoll(ring_dst)}}},
                 {"map", ring_map}};
    } else if (group_analyze->parsed() || group_cosets->parsed() || group_conj->parsed() ||
               group_norm->parsed() || group_center->parsed()) {
      Json spec = spec_of(gm);
      if (group_analyze->parsed())
        request = {{"cmd", "group.analyze"}, {"magma", spec}, {"max_carrier", g.max_carrier}};
      else if (group_cosets->parsed())
        request = {{"cmd", "group.cosets"}, {"magma", spec}, {"subset", labels_json(subset_csv)},
                   {"side", side}};
      else if (group_conj->parsed())
        request = {{"cmd", "group.conjugate"}, {"magma", spec}, {"p", labels_json(subset_p)},
                   {"k", labels_json(subset_k)}};
      else if (group_norm->parsed())
        request = {{"cmd", "group.normality"}, {"magma", spec}, {"max_carrier", g.max_carrier}};
      else
        request = {{"cmd", "group.center"}, {"magma", spec}};
    } else if (semi_analyze->parsed() || semi_classify->parsed()) {
      Json spec = spec_of(sm);
      if (semi_analyze->parsed())
        request = {{"cmd", "semigroup.analyze"}, {"magma", spec}, {"max_carrier", g.max_carrier}};
      else
        request = {{"cmd", "semigroup.classify_subset"}, {"magma", spec},
                   {"subset", labels_json(semi_subset)}};
    } else if (poly->parsed()) {
      std::string sub = poly->get_subcommands().front()->get_name();
      std::string cmd = sub == "gauss-probe" ? "gauss_probe" : sub;
      request = {{"cmd", "poly." + cmd}, {"ring", ring_json_from_code(poly_ring)}};
      if (!poly_lhs.empty()) request["lhs"] = poly_lhs;
      if (!poly_rhs.empty()) request["rhs"] = poly_rhs;
      if (!poly_scalar.empty()) request["scalar"] = poly_scalar;
      if (sub == "reduce") request["degree_bound"] = poly_degree_bound;
      if (sub == "gauss-probe") {
        request["samples"] = poly_samples;
        request["degree"] = poly_degree;
        request["seed"] = g.seed;
      }
      if (sub == "divides" && poly_scalar.empty() && poly_rhs.empty())
        throw CLI::ValidationError("divides needs --rhs (and --lhs divisor) or --scalar");
      if (sub == "divides" && !poly_scalar.empty() && poly_rhs.empty()) {
        request["rhs"] = poly_lhs;  // scalar divisor divides --lhs
        request.erase("lhs");
      }
    } else if (matrix->parsed()) {
      std::string sub = matrix->get_subcommands().front()->get_name();
      std::string cmd = sub == "zd-search" ? "zd_search" : (sub == "unit-magma" ? "unit_magma" : sub);
      request = {{"cmd", "matrix." + cmd}, {"ring", ring_json_from_code(mat_ring)}};
      if (!mat_lhs.empty()) request["lhs"] = Json::parse(mat_lhs);
      if (!mat_rhs.empty()) request["rhs"] = Json::parse(mat_rhs);
      if (sub == "zd-search") {
        request["side"] = mat_side;
        request["seed"] = g.seed;
      }
    } else if (algebra->parsed()) {
      std::string sub = algebra->get_subcommands().front()->get_name();
      std::string cmd = sub;
      for (auto& ch : cmd)
        if (ch == '-') ch = '_';
      request = {{"cmd", "algebra." + cmd}, {"coeff", alg_coeff}, {"magma", spec_of(am)},
                 {"max_algebra", g.max_algebra}};
      if (!alg_expr.empty()) request["expr"] = alg_expr;
      if (!alg_subset.empty()) request["subset"] = labels_json(alg_subset);
      if (sub == "unit-from-subgroup") request["a"] = alg_a;
      if (alg_quasi) request["quasi"] = true;
    } else if (magma_csv->parsed()) {
      request = {{"cmd", "magma.csv"}, {"magma", spec_of(mm)}};
      if (g.format == "text") g.format = "csv";
    } else if (magma_closure->parsed()) {
      request = {{"cmd", "magma.closure"}, {"magma", spec_of(mm)},
                 {"subset", labels_json(magma_subset)}};
    } else if (verify->parsed()) {
      char* report = nullptr;
      int failures = 0;
      neutro_status st = neutro_verify_all(session.s, g.seed, &report, &failures);
      if (!report) {
        std::cerr << "error: " << neutro_last_error(session.s) << "\n";
        return 1;
      }
      Json rep = Json::parse(report);
      neutro_string_free(report);
      if (g.format == "json") {
        std::cout << rep.dump(2) << "\n";
      } else {
        for (const auto& cr : rep["criteria"])
          std::cout << (cr["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
                    << "criterion-" << cr["id"].get<int>() << "  "
                    << cr["name"].get<std::string>() << "  --  "
                    << cr["detail"].get<std::string>() << "\n";
        std::cout << rep["total"].get<int>() - failures << "/" << rep["total"].get<int>()
                  << " criteria passed\n";
      }
      return st == NEUTRO_OK ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return run_request(session, request, g);
}
