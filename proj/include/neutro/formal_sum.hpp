#ifndef NEUTRO_FORMAL_SUM_HPP
#define NEUTRO_FORMAL_SUM_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "neutro/magma.hpp"
#include "neutro/ring_analysis.hpp"

namespace neutro {

enum class ScalarKind { Plain, Neutro };

/// Coefficient ring of a formal-sum algebra: R or <R u I>. Plain scalars are
/// NeutroScalars with zero I-part.
struct ScalarRing {
  ScalarKind kind = ScalarKind::Plain;
  BaseRing base;

  bool operator==(const ScalarRing&) const = default;
};

enum class AlgebraKind {
  GroupRing,
  NeutrosophicGroupRing,
  SemigroupRing,
  NeutrosophicSemigroupRing,
  GroupNeutrosophicRing,
  SemigroupNeutrosophicRing,
  SSemigroupNeutrosophicRing,
  NeutrosophicGroupNeutrosophicRing,
  NeutrosophicSemigroupNeutrosophicRing,
  SNeutrosophicSemigroupNeutrosophicRing
};

std::string algebra_kind_name(AlgebraKind k);

/// Shared context: scalar ring + magma + derived structure tags.
class Algebra {
 public:
  Algebra(ScalarRing scalars, std::shared_ptr<const FiniteMagma> magma);

  const ScalarRing& scalars() const { return scalars_; }
  const FiniteMagma& magma() const { return *magma_; }
  std::shared_ptr<const FiniteMagma> magma_ptr() const { return magma_; }
  AlgebraKind kind() const { return kind_; }
  bool magma_neutrosophified() const { return neu_magma_; }
  bool magma_is_group() const { return group_; }
  bool magma_is_s_semigroup() const { return s_semigroup_; }
  std::optional<Subset> group_witness() const { return group_witness_; }

  /// scalar validation: Plain algebras reject nonzero I-parts
  NeutroScalar check_scalar(const NeutroScalar& c) const;

  /// number of elements when the scalar ring is finite, else nullopt
  std::optional<double> order() const;

 private:
  ScalarRing scalars_;
  std::shared_ptr<const FiniteMagma> magma_;
  AlgebraKind kind_;
  bool neu_magma_ = false, group_ = false, s_semigroup_ = false;
  std::optional<Subset> group_witness_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(ScalarRing scalars, FiniteMagma magma);
AlgebraPtr make_algebra(ScalarRing scalars, std::shared_ptr<const FiniteMagma> magma);

/// Finitely supported scalar combination of magma elements.
struct FormalSum {
  AlgebraPtr alg;
  std::map<int, NeutroScalar> coeffs;  // element index -> nonzero scalar

  bool operator==(const FormalSum& o) const { return coeffs == o.coeffs; }
};

FormalSum fs_zero(const AlgebraPtr& a);
FormalSum fs_one(const AlgebraPtr& a);  // requires magma identity
FormalSum fs_element(const AlgebraPtr& a, int index);
FormalSum fs_term(const AlgebraPtr& a, const NeutroScalar& c, int index);
FormalSum fs_scalar(const AlgebraPtr& a, const NeutroScalar& c);  // c * identity

FormalSum fs_add(const FormalSum& x, const FormalSum& y);
FormalSum fs_sub(const FormalSum& x, const FormalSum& y);
FormalSum fs_neg(const FormalSum& x);
FormalSum fs_mul(const FormalSum& x, const FormalSum& y);
FormalSum fs_scale(const FormalSum& x, const NeutroScalar& c);
bool fs_is_zero(const FormalSum& x);

bool fs_support_has_neutro(const FormalSum& x);
bool fs_coeff_has_neutro(const FormalSum& x);
/// neutrosophic element: neutro magma element in the support, or a
/// coefficient with nonzero I-part
bool fs_is_neutrosophic(const FormalSum& x);

std::string fs_to_string(const FormalSum& x);
/// "1 - 5*(1 + g^3 + I + g^3*I)"; identifiers resolve to magma labels, I to
/// the magma element I when present else the scalar I.
FormalSum fs_parse(const AlgebraPtr& a, const std::string& text);

// ---- constructive theorems --------------------------------------------------

/// Sum over a subgroup-like subset (xH = H for every x in H under the table).
/// Throws when the subset is not subgroup-like.
FormalSum subgroup_sum(const AlgebraPtr& a, const Subset& h);
bool is_subgroup_like_subset(const FiniteMagma& m, const Subset& h);

/// (alpha, alpha - n*1): multiplies to zero when alpha is a subgroup sum of
/// order n.
std::pair<FormalSum, FormalSum> zero_divisor_pair(const FormalSum& alpha, int n);

struct UnitConstruction {
  FormalSum x;  // 1 - a*alpha
  FormalSum y;  // 1 - (a/(a n - 1)) * alpha
  bool verified = false;
  /// when the algebra has an I (magma element or scalar): y' with x*y' = I
  std::optional<FormalSum> neutro_partner;
  std::optional<FormalSum> neutro_target;  // the I the partner reaches
};
/// Requires alpha^2 = n*alpha and (a*n - 1) invertible in the scalar ring.
UnitConstruction unit_from_subgroup(const FormalSum& alpha, int n, const NeutroScalar& a);

struct FsIdempotentReport {
  bool idempotent = false;
  bool support_neutro = false;
  bool coeff_neutro = false;
};
FsIdempotentReport fs_idempotent_report(const FormalSum& x);

struct FsSearchResult {
  bool exhaustive = false;
  bool truncated = false;
  std::vector<FormalSum> found;
};
/// All idempotents when |scalars|^|magma| fits the cap.
FsSearchResult idempotent_search(const AlgebraPtr& a, double cap = 1 << 20);

struct FsZeroDivisorReport {
  bool searched = false;
  std::optional<FormalSum> witness;  // beta != 0 with alpha*beta = 0
  bool neutrosophic = false;         // alpha is a neutrosophic element
};
FsZeroDivisorReport fs_zero_divisor_report(const FormalSum& alpha, double cap = 1 << 20);

struct FsUnitReport {
  bool searched = false;
  std::optional<FormalSum> inverse;         // beta with alpha*beta = beta*alpha = 1
  std::optional<FormalSum> neutro_partner;  // beta with alpha*beta = I
  bool neutrosophic_element = false;
};
FsUnitReport fs_unit_report(const FormalSum& alpha, double cap = 1 << 20);

// ---- substructures ----------------------------------------------------------

enum class FsSubringKind {
  SubneutrosophicGroupRing,
  NeutrosophicSubring,
  PseudoNeutrosophicSubring,
  SubgroupRing,
  JustSubring
};

struct FsSubringRecord {
  std::vector<FormalSum> elements;
  FsSubringKind kind;
  int order = 0;
};

struct FsSubringTaxonomy {
  std::vector<FsSubringRecord> subrings;  // proper only
  bool exhaustive = false;
};
/// Exhaustive lattice walk for algebras of <= 256 elements; generator-closure
/// (2 seeds) beyond, up to the cap.
FsSubringTaxonomy fs_subring_taxonomy(const AlgebraPtr& a, double cap = 1 << 12);

/// Classify one ring-closed subset given as element list.
FsSubringKind fs_classify_subring(const AlgebraPtr& a, const std::vector<FormalSum>& subset);

struct FsIdealRecord {
  std::vector<FormalSum> elements;
  bool pseudo = false;  // pseudo-neutrosophic vs (sub)neutrosophic form
  FsSubringKind kind;
  int order = 0;
};

struct QuasiRelation {
  int subring_s = 0;  // indexes into the taxonomy list
  std::vector<int> relative_p;
  bool loyal = false;  // exactly one P
};

struct FsIdealTaxonomy {
  std::vector<FsIdealRecord> ideals;  // proper two-sided ideals
  std::vector<QuasiRelation> quasi;
  std::vector<std::pair<int, int>> bonded_pairs;
  bool exhaustive = false;
};
FsIdealTaxonomy fs_ideal_taxonomy(const AlgebraPtr& a, double cap = 1 << 12,
                                  bool with_quasi = false);

bool fs_is_ideal(const AlgebraPtr& a, const std::vector<FormalSum>& subset);

// ---- ring-theoretic predicates ----------------------------------------------

/// FiniteRingView over the packed coefficient enumeration (finite scalars).
std::shared_ptr<FiniteRingView> algebra_ring_view(const AlgebraPtr& a, double cap = 4096);

struct SemiprimenessReport {
  bool semiprime_by_ideal_scan = false;
  bool delta_has_no_p_element = false;        // no element of order p in the magma
  bool no_normal_subgroup_order_div_p = false;
  std::int64_t p = 0;  // scalar characteristic used
  bool routes_agree = false;
};
/// Semiprimeness checked by three independent routes at finite scale;
/// p = the coefficient characteristic.
SemiprimenessReport semiprimeness_routes(const AlgebraPtr& a);

struct FsPrimeReport {
  bool full_computed = false;  // whole-algebra predicates need a packable algebra
  bool prime = false;
  bool semiprime = false;
  bool semisimple = false;
  // pseudo predicates computed on the designated sub-algebras
  std::optional<bool> pseudo_semisimple;
  std::optional<bool> pseudo_prime;
  std::optional<bool> pseudo_semiprime;
  std::optional<bool> weakly_pseudo_semiprime;
};
FsPrimeReport prime_semiprime_semisimple(const AlgebraPtr& a);

struct ContainmentEntry {
  std::string name;         // e.g. "group ring KA"
  std::string description;  // scalar part x magma part
  bool verified = false;    // both parts closed under the operations
};
std::vector<ContainmentEntry> containment_lattice(const AlgebraPtr& a);

/// True when exactly one proper (K', H) group-ring subset exists: the
/// coefficient ring has a single unital subring and the group part a single
/// nontrivial subgroup.
struct SpecialCheck {
  bool special = false;
  std::string reason;
  int scalar_subrings_with_unit = 0;
  int nontrivial_subgroups = 0;
};
SpecialCheck special_group_ring_check(const AlgebraPtr& a);

struct AlgebraHomReport {
  bool ok = false;
  std::string violated;  // "phi(0)", "phi(I)", "phi(1)", "additivity", "multiplicativity"
  std::vector<FormalSum> kernel;
  bool kernel_contains_neutro = false;
  bool kernel_is_form_neutrosophic = false;
};
/// Map given on magma elements (indices into dst magma); scalars map
/// identically (same scalar ring required). Checked on generators and, when
/// the algebra is enumerable, exhaustively with kernel computation.
AlgebraHomReport verify_algebra_homomorphism(const AlgebraPtr& src, const AlgebraPtr& dst,
                                             const std::vector<int>& magma_map,
                                             double cap = 1 << 12);

}  // namespace neutro

#endif
