#ifndef NEUTRO_MAGMA_HPP
#define NEUTRO_MAGMA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neutro/scalar.hpp"
#include "neutro/subset.hpp"

namespace neutro {

struct Element {
  int index = 0;
  std::string label;
  bool neutro = false;  // carries an I factor / nonzero indeterminate part
};

enum class MagmaProvenance { Custom, Standard, Tagged, Ambient, Product };

/// Payload for magmas carved out of <Z_n u I> by closure under one ring
/// operation; keeps the scalar value of each element so set-products in the
/// ambient ring remain available (conjugacy, normality).
struct AmbientData {
  BaseRing ring;                      // Z_n
  std::vector<NeutroScalar> values;   // per element
  bool op_is_add = false;
};

/// A finite magma given by a Cayley table. Immutable after construction.
class FiniteMagma {
 public:
  FiniteMagma(std::vector<Element> elems, std::vector<int> table, std::optional<int> identity,
              std::string op_name);

  int size() const { return static_cast<int>(elems_.size()); }
  int op(int a, int b) const { return table_[static_cast<size_t>(a) * elems_.size() + b]; }
  const Element& element(int i) const { return elems_[i]; }
  const std::vector<Element>& elements() const { return elems_; }
  const std::vector<int>& table() const { return table_; }
  std::optional<int> identity() const { return identity_; }
  std::optional<int> zero() const { return zero_; }  // two-sided absorbing element
  const std::string& op_name() const { return op_name_; }

  std::optional<int> index_of(const std::string& label) const;
  /// Index of the bare indeterminate element I, when the magma has one.
  std::optional<int> indeterminate() const { return i_elem_; }

  bool is_associative() const;
  bool is_commutative() const;

  MagmaProvenance provenance = MagmaProvenance::Custom;
  std::optional<AmbientData> ambient;
  /// for Tagged magmas, indices [0, size/2) are the original plain copy
  bool tagged = false;

 private:
  std::vector<Element> elems_;
  std::vector<int> table_;
  std::optional<int> identity_;
  std::optional<int> zero_;
  std::optional<int> i_elem_;
  std::string op_name_;
  mutable std::optional<bool> assoc_;
};

// ---- builders -------------------------------------------------------------

FiniteMagma build_cyclic(int n);
FiniteMagma build_dihedral(int n);           // order 2n, a^2 = b^n = 1, bab = a
FiniteMagma build_symmetric(int n);          // S_n, n <= 5
FiniteMagma build_transformation(int n);     // full transformation monoid S(n), n <= 4
FiniteMagma build_zn_add(std::int64_t n);
FiniteMagma build_zn_mul(std::int64_t n);
/// Custom table; identity/zero detected, associativity checked lazily.
FiniteMagma build_custom(std::vector<std::string> labels, std::vector<bool> neutro,
                         std::vector<int> table, std::string op_name);

/// G u GI with g(hI) = (gI)h = (gh)I and (gI)(hI) = (gh)I; order doubles.
FiniteMagma neutrosophify_tagged(const FiniteMagma& m);

/// Closure of generators u {I} inside <Z_n u I> under + or *.
FiniteMagma neutrosophify_ambient(const BaseRing& zn, bool op_is_add,
                                  const std::vector<NeutroScalar>& generators);
/// Convenience: generator choices used throughout.
std::vector<NeutroScalar> ambient_generators_all(const BaseRing& zn);
std::vector<NeutroScalar> ambient_generators_determinate(const BaseRing& zn);
std::vector<NeutroScalar> ambient_generators_units(const BaseRing& zn);

FiniteMagma direct_product(const std::vector<const FiniteMagma*>& factors);

// ---- operations -----------------------------------------------------------

/// Smallest superset of s closed under the table.
Subset closure(const FiniteMagma& m, const Subset& s);
bool is_closed(const FiniteMagma& m, const Subset& s);

struct OrderRecord {
  int element = 0;
  std::optional<int> order;            // least k with x^k = identity
  std::optional<int> neutro_exponent;  // least k with x^k = I
  int cycle_length = 0;                // eventual period of the power sequence
};

struct MagmaPredicates {
  bool is_semigroup = false;
  bool is_monoid = false;
  bool is_group = false;
  bool is_commutative = false;
  bool is_s_semigroup = false;  // proper subset forming a nontrivial group
  std::optional<Subset> s_semigroup_witness;
  std::vector<int> idempotent_elements;
  std::vector<OrderRecord> element_orders;
};

MagmaPredicates predicates(const FiniteMagma& m);

/// Element with exactly one factorization x = a*b (a in A, b in B), if any.
std::optional<int> unique_product_check(const FiniteMagma& m, const Subset& a, const Subset& b);

/// x*S (or S*x) where the product is the ambient ring multiplication for
/// ambient magmas and the table op otherwise.
Subset act_left(const FiniteMagma& m, int x, const Subset& s);
Subset act_right(const FiniteMagma& m, const Subset& s, int x);

/// All closed subsets (proper and improper) when the carrier is small enough
/// for the closed-set lattice walk; otherwise closures of <= max_generators
/// seeds. `exhaustive` reports which mode ran.
struct ClosedSetEnumeration {
  std::vector<Subset> sets;
  bool exhaustive = true;
};
ClosedSetEnumeration enumerate_closed_subsets(const FiniteMagma& m, int carrier_cap = 24,
                                              int max_generators = 3);

/// True when the subset is a group under the induced table (a local identity
/// is allowed; it need not be the ambient identity).
bool is_group_like(const FiniteMagma& m, const Subset& s);
/// Local two-sided identity within s, if any.
std::optional<int> local_identity(const FiniteMagma& m, const Subset& s);

std::string subset_to_string(const FiniteMagma& m, const Subset& s);
Subset subset_from_labels(const FiniteMagma& m, const std::vector<std::string>& labels);

}  // namespace neutro

#endif
