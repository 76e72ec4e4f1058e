#include "neutro/neutro_c.h"

#include <cstring>
#include <map>
#include <memory>
#include <string>

#include "neutro/magma.hpp"
#include "neutro/serialize.hpp"
#include "neutro/service.hpp"

struct neutro_session {
  std::string last_error;
  std::map<neutro_handle, std::shared_ptr<const neutro::FiniteMagma>> magmas;
  neutro_handle next_handle = 1;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

neutro_status fail(neutro_session* s, neutro_status code, const std::string& msg) {
  if (s) s->last_error = msg;
  return code;
}

neutro_status to_status(int code) {
  switch (code) {
    case 1: return NEUTRO_EINVAL;
    case 2: return NEUTRO_EUNSUPPORTED;
    case 3: return NEUTRO_ECAP;
    case 4: return NEUTRO_ENOTFOUND;
    default: return NEUTRO_EINTERNAL;
  }
}

}  // namespace

extern "C" {

const char* neutro_version(void) { return "0.1.0"; }

neutro_session* neutro_session_new(void) { return new (std::nothrow) neutro_session(); }

void neutro_session_free(neutro_session* s) { delete s; }

const char* neutro_last_error(const neutro_session* s) {
  return s ? s->last_error.c_str() : "";
}

neutro_status neutro_run_json(neutro_session* s, const char* request_json, char** response_json) {
  if (!s || !request_json || !response_json) return fail(s, NEUTRO_EINVAL, "null argument");
  *response_json = nullptr;
  try {
    neutro::Json req = neutro::Json::parse(request_json);
    neutro::Json res = neutro::run_command(req);
    *response_json = dup_string(res.dump());
    return *response_json ? NEUTRO_OK : fail(s, NEUTRO_EINTERNAL, "out of memory");
  } catch (const neutro::ServiceError& e) {
    return fail(s, to_status(e.code), e.what());
  } catch (const neutro::Json::exception& e) {
    return fail(s, NEUTRO_EINVAL, e.what());
  } catch (const std::exception& e) {
    return fail(s, NEUTRO_EINTERNAL, e.what());
  }
}

void neutro_string_free(char* p) { std::free(p); }

neutro_status neutro_magma_build(neutro_session* s, const char* spec_json, neutro_handle* out) {
  if (!s || !spec_json || !out) return fail(s, NEUTRO_EINVAL, "null argument");
  try {
    neutro::Json spec = neutro::Json::parse(spec_json);
    neutro::Json req{{"cmd", "magma.build"}, {"magma", spec}};
    neutro::Json res = neutro::run_command(req);
    auto m = std::make_shared<neutro::FiniteMagma>(
        neutro::magma_from_json(res["result"]["magma"]));
    neutro_handle h = s->next_handle++;
    s->magmas[h] = m;
    *out = h;
    return NEUTRO_OK;
  } catch (const neutro::ServiceError& e) {
    return fail(s, to_status(e.code), e.what());
  } catch (const std::exception& e) {
    return fail(s, NEUTRO_EINVAL, e.what());
  }
}

neutro_status neutro_magma_json(neutro_session* s, neutro_handle h, char** magma_json) {
  if (!s || !magma_json) return fail(s, NEUTRO_EINVAL, "null argument");
  auto it = s->magmas.find(h);
  if (it == s->magmas.end()) return fail(s, NEUTRO_ENOTFOUND, "no such handle");
  *magma_json = dup_string(neutro::magma_to_json(*it->second).dump());
  return *magma_json ? NEUTRO_OK : fail(s, NEUTRO_EINTERNAL, "out of memory");
}

neutro_status neutro_magma_csv(neutro_session* s, neutro_handle h, char** csv) {
  if (!s || !csv) return fail(s, NEUTRO_EINVAL, "null argument");
  auto it = s->magmas.find(h);
  if (it == s->magmas.end()) return fail(s, NEUTRO_ENOTFOUND, "no such handle");
  *csv = dup_string(neutro::magma_to_csv(*it->second));
  return *csv ? NEUTRO_OK : fail(s, NEUTRO_EINTERNAL, "out of memory");
}

neutro_status neutro_handle_free(neutro_session* s, neutro_handle h) {
  if (!s) return NEUTRO_EINVAL;
  return s->magmas.erase(h) ? NEUTRO_OK : fail(s, NEUTRO_ENOTFOUND, "no such handle");
}

neutro_status neutro_verify_all(neutro_session* s, uint64_t seed, char** report_json,
                                int* failures) {
  if (!s || !report_json || !failures) return fail(s, NEUTRO_EINVAL, "null argument");
  try {
    neutro::VerifyOutcome v = neutro::run_verify(seed);
    *report_json = dup_string(v.report.dump());
    *failures = v.failures;
    if (!*report_json) return fail(s, NEUTRO_EINTERNAL, "out of memory");
    return v.failures == 0 ? NEUTRO_OK : NEUTRO_EVERIFY;
  } catch (const std::exception& e) {
    return fail(s, NEUTRO_EINTERNAL, e.what());
  }
}

}  // extern "C"
