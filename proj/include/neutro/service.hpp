#ifndef NEUTRO_SERVICE_HPP
#define NEUTRO_SERVICE_HPP

#include <string>

#include "neutro/serialize.hpp"

namespace neutro {

struct ServiceError : std::runtime_error {
  int code;  // mirrors the C API status codes
  ServiceError(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

/// One JSON command in, one JSON report out. The single engine surface used
/// by the shared library and (through it) the CLI.
Json run_command(const Json& request);

/// Criteria runner used by `verify all`.
struct VerifyOutcome {
  Json report;
  int failures = 0;
};
VerifyOutcome run_verify(std::uint64_t seed);

}  // namespace neutro

#endif
