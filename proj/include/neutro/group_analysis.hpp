#ifndef NEUTRO_GROUP_ANALYSIS_HPP
#define NEUTRO_GROUP_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "neutro/magma.hpp"

namespace neutro {

enum class SubstructureKind {
  PlainSubgroup,
  NeutrosophicSubgroup,
  PseudoNeutrosophicSubgroup,
  ClosedNonGroup
};

struct SubstructureClass {
  Subset subset;
  SubstructureKind kind;
  int order = 0;
};

/// Classification of one closed subset:
///   NeutrosophicSubgroup       : closed, has a neutro element, and contains a
///                                nontrivial all-plain subgroup
///   PseudoNeutrosophicSubgroup : closed, has a neutro element and a local
///                                two-sided identity, no nontrivial all-plain
///                                subgroup inside
///   PlainSubgroup              : closed all-plain subset that is a group
///   ClosedNonGroup             : everything else closed
SubstructureKind classify_substructure(const FiniteMagma& m, const Subset& s);

struct SubstructureEnumeration {
  std::vector<SubstructureClass> substructures;  // proper subsets only
  bool exhaustive = true;
};

SubstructureEnumeration enumerate_substructures(const FiniteMagma& m, int carrier_cap = 24);

enum class LagrangeKind { Lagrange, WeaklyLagrange, LagrangeFree };
enum class CauchyKind { StrongCauchy, Cauchy, Neither };
enum class SylowKind { Sylow, WeaklySylow, SylowFree };

struct CauchyElementRecord {
  int element = 0;
  std::optional<int> torsion_exponent;  // least m with x^m = 1
  std::optional<int> neutro_exponent;   // least t with x^t = I
  bool cauchy = false;                  // torsion exponent divides o(N(G))
  bool cauchy_neutrosophic = false;     // neutro exponent divides o(N(G))
};

struct SylowPrimeRecord {
  std::int64_t prime = 0;
  int exponent = 0;  // p^exponent exactly divides the order
  bool has_neutrosophic = false;
  bool has_pseudo = false;
  std::optional<Subset> neutrosophic_witness;
  std::optional<Subset> pseudo_witness;
};

struct NormalityRecord {
  Subset subset;
  bool exists_normal = false;            // some (x,y) != (e,e) with xHy = H
  bool forall_normal = false;            // for every x some y with xHy = H
  std::optional<std::pair<int, int>> witness;
};

struct GroupReport {
  int order = 0;
  std::vector<SubstructureClass> substructures;
  bool exhaustive = true;
  LagrangeKind lagrange = LagrangeKind::LagrangeFree;
  LagrangeKind pseudo_lagrange = LagrangeKind::LagrangeFree;
  CauchyKind cauchy = CauchyKind::Neither;
  std::vector<CauchyElementRecord> cauchy_elements;
  std::vector<SylowPrimeRecord> sylow;
  SylowKind sylow_kind = SylowKind::SylowFree;
  SylowKind pseudo_sylow_kind = SylowKind::SylowFree;
  Subset center;
};

GroupReport group_analyze(const FiniteMagma& m, int carrier_cap = 24);

LagrangeKind lagrange_classify(int order, const std::vector<SubstructureClass>& subs,
                               SubstructureKind kind);
std::vector<CauchyElementRecord> cauchy_elements(const FiniteMagma& m);
CauchyKind cauchy_classify(const FiniteMagma& m);
std::vector<SylowPrimeRecord> sylow_classify(const FiniteMagma& m,
                                             const std::vector<SubstructureClass>& subs);

struct CosetReport {
  std::vector<Subset> cosets;  // distinct cosets in first-appearance order
  bool partitions = false;
};

/// Right (Hn) or left (nH) cosets under the magma operation, n over the
/// whole carrier.
CosetReport cosets(const FiniteMagma& m, const Subset& h, bool right_side);

/// Witness (x, y) with xP = Ky as sets, or nullopt. Products use the ambient
/// ring multiplication for ambient magmas, the table otherwise.
std::optional<std::pair<int, int>> conjugate_check(const FiniteMagma& m, const Subset& p,
                                                   const Subset& k);

struct SimplicityReport {
  std::vector<NormalityRecord> normality;  // one per (pseudo)neutrosophic subgroup
  bool simple = false;         // no nontrivial exists-normal neutrosophic subgroup
  bool pseudo_simple = false;  // pseudo analogue
};

SimplicityReport normality_and_simplicity(const FiniteMagma& m, int carrier_cap = 24);
NormalityRecord normality_of(const FiniteMagma& m, const Subset& h);

Subset center(const FiniteMagma& m);

}  // namespace neutro

#endif
