// Acceptance suite: one pass/fail line per criterion; nonzero exit on any
// failure. Every fixture is constructed internally.
#include <cstdio>
#include <cstring>

#include "neutro/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  for (int i = 1; i < argc - 1; ++i)
    if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);

  auto results = neutro::run_acceptance(seed);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s  criterion-%02d  %-32s  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%d/%d criteria passed\n", static_cast<int>(results.size()) - failures,
              static_cast<int>(results.size()));
  return failures == 0 ? 0 : 1;
}
