#ifndef NEUTRO_VERIFY_HPP
#define NEUTRO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace neutro {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the full reproduction suite; every fixture is constructed internally.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0);

}  // namespace neutro

#endif
