#ifndef NEUTRO_RING_ANALYSIS_HPP
#define NEUTRO_RING_ANALYSIS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "neutro/scalar.hpp"
#include "neutro/subset.hpp"

namespace neutro {

/// Uniform element-indexed access to a finite ring. Implemented by the
/// parametric ring <Z_n u I>, explicit-table rings, and formal-sum algebras.
class FiniteRingView {
 public:
  virtual ~FiniteRingView() = default;
  virtual int size() const = 0;
  virtual int add(int x, int y) const = 0;
  virtual int mul(int x, int y) const = 0;
  virtual int neg(int x) const = 0;
  virtual int zero() const = 0;
  virtual std::optional<int> one() const = 0;
  virtual std::optional<int> indeterminate() const = 0;  // the element I, if present
  virtual bool neutro(int x) const = 0;                  // nonzero I-part
  virtual bool pure_indeterminate(int x) const = 0;      // of the form bI, b != 0
  virtual std::string label(int x) const = 0;

  bool is_commutative() const;
  bool is_unit(int x) const;  // two-sided
};

/// <Z_n u I> with pair arithmetic; index = a*n + b for a + bI.
class ParametricRing : public FiniteRingView {
 public:
  explicit ParametricRing(std::int64_t n);
  int size() const override { return static_cast<int>(n_ * n_); }
  int add(int x, int y) const override;
  int mul(int x, int y) const override;
  int neg(int x) const override;
  int zero() const override { return 0; }
  std::optional<int> one() const override { return static_cast<int>(n_); }
  std::optional<int> indeterminate() const override { return 1; }
  bool neutro(int x) const override { return x % n_ != 0; }
  bool pure_indeterminate(int x) const override { return x < n_ && x != 0; }
  std::string label(int x) const override;

  std::int64_t modulus() const { return n_; }
  NeutroScalar value(int x) const;
  int index_of(const NeutroScalar& s) const;

 private:
  std::int64_t n_;
};

class TabularRing : public FiniteRingView {
 public:
  TabularRing(std::vector<std::string> labels, std::vector<int> add_table,
              std::vector<int> mul_table, int zero, std::optional<int> one,
              std::vector<bool> neutro_flags, std::vector<bool> pure_i_flags,
              std::optional<int> i_elem);
  int size() const override { return static_cast<int>(labels_.size()); }
  int add(int x, int y) const override { return add_[static_cast<size_t>(x) * size() + y]; }
  int mul(int x, int y) const override { return mul_[static_cast<size_t>(x) * size() + y]; }
  int neg(int x) const override { return neg_[x]; }
  int zero() const override { return zero_; }
  std::optional<int> one() const override { return one_; }
  std::optional<int> indeterminate() const override { return i_elem_; }
  bool neutro(int x) const override { return neutro_[x]; }
  bool pure_indeterminate(int x) const override { return pure_i_[x]; }
  std::string label(int x) const override { return labels_[x]; }

  /// Checks the ring axioms exhaustively; throws on violation.
  void verify_axioms() const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> add_, mul_, neg_;
  int zero_;
  std::optional<int> one_;
  std::vector<bool> neutro_, pure_i_;
  std::optional<int> i_elem_;
};

/// Either representation behind one handle.
struct FiniteRing {
  std::shared_ptr<FiniteRingView> view;
  std::optional<std::int64_t> parametric_n;

  static FiniteRing parametric(std::int64_t n);
  static FiniteRing tabular(std::shared_ptr<TabularRing> t);
};

// ---- structure ------------------------------------------------------------

std::int64_t characteristic(const FiniteRingView& r);

enum class SubringKind { NeutrosophicSubring, PseudoNeutrosophicSubring, JustSubring };

struct SubringRecord {
  Subset subset;
  SubringKind kind;
  int order = 0;
};

struct SubringTaxonomy {
  std::vector<SubringRecord> subrings;  // proper, nonzero carrier excluded? no: all proper
  bool exhaustive = true;
};

/// All proper additively+multiplicatively closed subsets, classified.
/// NeutrosophicSubring = closure(S u {kI}) for a nonzero all-plain subring S;
/// PseudoNeutrosophicSubring = nonzero subset of {0} u pure-I elements;
/// JustSubring otherwise.
SubringTaxonomy subring_taxonomy(const FiniteRingView& r, int size_cap = 256);

enum class IdealKind { NeutrosophicIdeal, PseudoNeutrosophicIdeal, JustIdeal };

struct RingIdealRecord {
  Subset subset;
  IdealKind kind;
  int order = 0;
};

/// All two-sided ideals (including {0} and the whole ring) via principal
/// ideals closed under pairwise ideal sum; classified like subrings.
std::vector<RingIdealRecord> ring_ideals(const FiniteRing& r);

enum class QuotientKind {
  NeutrosophicQuotient,
  FalseNeutrosophicQuotient,
  PseudoQuotientNeutrosophic,
  FalsePseudoQuotientNeutrosophic
};

struct QuotientResult {
  std::shared_ptr<TabularRing> quotient;
  QuotientKind kind;
  std::vector<Subset> cosets;        // quotient element i = cosets[i]
  std::vector<int> representatives;  // minimal representative per coset
};

QuotientResult quotient(const FiniteRing& r, const Subset& ideal);

/// True iff the quotient of <Z_n u I> by the all-I pseudo ideal is ring-
/// isomorphic to Z_n under the canonical representative map.
bool quotient_isomorphic_to_zn(const QuotientResult& q, std::int64_t n);

struct HomomorphismReport {
  bool ok = false;
  std::string violated;  // empty when ok; else "additivity"/"multiplicativity"/"phi(I)"
  std::optional<std::pair<int, int>> witness;
  Subset kernel;
  bool kernel_contains_neutro = false;
  bool kernel_is_neutrosophic_subring = false;
};

HomomorphismReport verify_homomorphism(const FiniteRingView& src, const FiniteRingView& dst,
                                       const std::vector<int>& map);

struct RadicalReport {
  Subset jacobson;
  bool semisimple = false;
  bool semiprime = false;
  bool prime = false;
  bool integral_domain = false;
  bool division_ring = false;
  bool commutative = false;
};

RadicalReport radical_and_semisimplicity(const FiniteRing& r);

struct FieldReport {
  bool is_neutrosophic_field = false;
  bool prime_neutrosophic_field = false;
  std::vector<Subset> neutrosophic_subfields;
};

FieldReport field_predicates(const FiniteRing& r);

/// Additive subgroups (complete lattice walk), used by the taxonomy.
std::vector<Subset> additive_subgroups(const FiniteRingView& r);

std::string ring_subset_to_string(const FiniteRingView& r, const Subset& s);
Subset ring_subset_from_labels(const FiniteRingView& r, const std::vector<std::string>& labels);
/// The all-I pseudo ideal {0, I, 2I, ...} of a parametric ring.
Subset all_indeterminate_ideal(const ParametricRing& r);

/// Quotient of the infinite ring <Z u I> by the ideal m<Z u I>: reduces to
/// the parametric ring <Z_m u I>.
FiniteRing integer_ring_quotient(std::int64_t m);

}  // namespace neutro

#endif
