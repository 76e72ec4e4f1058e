#ifndef NEUTRO_SEMIGROUP_ANALYSIS_HPP
#define NEUTRO_SEMIGROUP_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "neutro/magma.hpp"

namespace neutro {

enum class SubsemigroupKind {
  NeutrosophicSubsemigroup,
  NeutrosophicSubmonoid,
  PlainSubsemigroup,
  OtherClosed
};

struct SubsemigroupRecord {
  Subset subset;
  SubsemigroupKind kind;
  int order = 0;
};

/// A neutrosophic subsemigroup needs a neutro element and an all-plain
/// subsemigroup inside; "submonoid" additionally requires the ambient
/// identity. Plain closed subsets are PlainSubsemigroup.
SubsemigroupKind classify_subsemigroup(const FiniteMagma& m, const Subset& s);

struct SubsemigroupEnumeration {
  std::vector<SubsemigroupRecord> subsemigroups;  // proper only
  bool exhaustive = true;
};
SubsemigroupEnumeration subsemigroups(const FiniteMagma& m, int carrier_cap = 24);

enum class IdealSide { Left, Right, TwoSided };

struct SemigroupIdealRecord {
  Subset subset;
  IdealSide sided = IdealSide::TwoSided;
  bool principal = false;
  std::optional<int> generator;
  bool maximal = false;
  bool minimal = false;
  bool neutrosophic = false;  // contains a neutro element
  int order = 0;
};

struct SemigroupIdealEnumeration {
  std::vector<SemigroupIdealRecord> ideals;  // proper only
  bool exhaustive = true;
};
/// Closed proper subsets with one- or two-sided absorption. Maximality and
/// minimality are computed within the proper ideals of matching sidedness.
SemigroupIdealEnumeration semigroup_ideals(const FiniteMagma& m, int carrier_cap = 24);

/// Principal (cyclic) ideal of g: smallest two-sided ideal containing g.
Subset principal_semigroup_ideal(const FiniteMagma& m, int g);

enum class IdempotentSemigroupKind { Idempotent, WeaklyIdempotent, Neither };
IdempotentSemigroupKind idempotent_semigroup_classify(const FiniteMagma& m, int carrier_cap = 24);

struct ElementArithmeticRecord {
  int element = 0;
  std::vector<int> zero_divisor_witnesses;  // y != 0 with x*y = 0
  std::optional<int> inverse;               // y with xy = yx = e
  bool idempotent = false;
};
/// Per-element zero divisors (against the designated zero) and invertibles.
std::vector<ElementArithmeticRecord> zero_divisors_and_units(const FiniteMagma& m);

}  // namespace neutro

#endif
