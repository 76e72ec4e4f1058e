// Exercises the shared-library surface the way an external client would.
#include <cstdio>
#include <cstring>
#include <string>

#include "json.hpp"
#include "neutro/neutro_c.h"

using Json = nlohmann::ordered_json;

static int failures = 0;

#define EXPECT(cond, msg)                                     \
  do {                                                        \
    if (!(cond)) {                                            \
      std::fprintf(stderr, "[FAIL] %s:%d %s\n", __FILE__, __LINE__, msg); \
      ++failures;                                             \
    }                                                         \
  } while (0)

int main() {
  EXPECT(std::strcmp(neutro_version(), "0.1.0") == 0, "version string");

  neutro_session* s = neutro_session_new();
  EXPECT(s != nullptr, "session allocation");

  {
    char* out = nullptr;
    Json req{{"cmd", "ring.analyze"}, {"ring", {{"zn", 5}}}};
    neutro_status st = neutro_run_json(s, req.dump().c_str(), &out);
    EXPECT(st == NEUTRO_OK, "ring.analyze status");
    Json res = Json::parse(out);
    neutro_string_free(out);
    EXPECT(res["ok"] == true, "ring.analyze ok flag");
    int pseudo = 0;
    for (const auto& rec : res["result"]["ideals"])
      if (rec["kind"] == "PseudoNeutrosophicIdeal" && rec["order"] == 5) ++pseudo;
    EXPECT(pseudo == 1, "one pseudo ideal of order 5");
  }

  {
    char* out = nullptr;
    Json req{{"cmd", "scalar.mul"},
             {"op", "mul"},
             {"ring", "Z"},
             {"x", "8-8I"},
             {"y", "5I"}};
    neutro_status st = neutro_run_json(s, req.dump().c_str(), &out);
    EXPECT(st == NEUTRO_OK, "scalar.mul status");
    Json res = Json::parse(out);
    neutro_string_free(out);
    EXPECT(res["result"]["result"] == "0", "(8-8I)(5I) = 0");
  }

  {
    char* out = nullptr;
    Json req{{"cmd", "poly.mul"},
             {"ring", "Z"},
             {"lhs", "(2-I) + (7+5I)x - 8I x^2"},
             {"rhs", "(7+I) + (2+5I)x^2 + (3+I)x^3"}};
    neutro_status st = neutro_run_json(s, req.dump().c_str(), &out);
    EXPECT(st == NEUTRO_OK, "poly.mul status");
    Json res = Json::parse(out);
    neutro_string_free(out);
    std::string text = res["result"]["result"].get<std::string>();
    EXPECT(text.rfind("(14 - 6I)", 0) == 0, "product starts with C0 = (14 - 6I)");
  }

  {
    // malformed JSON and unknown commands produce codes + messages
    char* out = nullptr;
    EXPECT(neutro_run_json(s, "{not json", &out) == NEUTRO_EINVAL, "bad json code");
    EXPECT(std::strlen(neutro_last_error(s)) > 0, "error message populated");
    Json req{{"cmd", "no.such"}};
    EXPECT(neutro_run_json(s, req.dump().c_str(), &out) == NEUTRO_ENOTFOUND, "unknown cmd code");
  }

  {
    // handle-based magma registry
    neutro_handle h = 0;
    Json spec{{"family", "cyclic"}, {"n", 3}, {"neutro", "tagged"}};
    EXPECT(neutro_magma_build(s, spec.dump().c_str(), &h) == NEUTRO_OK, "magma build");
    char* mj = nullptr;
    EXPECT(neutro_magma_json(s, h, &mj) == NEUTRO_OK, "magma json");
    Json m = Json::parse(mj);
    neutro_string_free(mj);
    EXPECT(m["elements"].size() == 6, "tagged cyclic(3) has 6 elements");
    char* csv = nullptr;
    EXPECT(neutro_magma_csv(s, h, &csv) == NEUTRO_OK, "magma csv");
    EXPECT(std::strlen(csv) > 10, "csv body");
    neutro_string_free(csv);
    EXPECT(neutro_handle_free(s, h) == NEUTRO_OK, "handle free");
    EXPECT(neutro_handle_free(s, h) == NEUTRO_ENOTFOUND, "double free reported");
  }

  {
    // a cap-limited request surfaces NEUTRO_ECAP
    char* out = nullptr;
    Json req{{"cmd", "algebra.idempotents"},
             {"coeff", "z2I"},
             {"magma", {{"family", "cyclic"}, {"n", 6}, {"neutro", "tagged"}}},
             {"max_algebra", 1024}};
    neutro_status st = neutro_run_json(s, req.dump().c_str(), &out);
    EXPECT(st == NEUTRO_ECAP, "cap exceeded code");
  }

  neutro_session_free(s);
  if (failures == 0) std::printf("capi tests passed\n");
  return failures == 0 ? 0 : 1;
}
