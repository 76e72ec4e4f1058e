#ifndef NEUTRO_SCALAR_HPP
#define NEUTRO_SCALAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "neutro/base_ring.hpp"

namespace neutro {

/// A neutrosophic scalar a + bI with I*I = I over a base ring.
/// Multiplication: (a+bI)(c+dI) = ac + (ad+bc+bd)I.
struct NeutroScalar {
  BaseRing ring;
  BaseElement a;  // determinate part
  BaseElement b;  // coefficient of I

  bool operator==(const NeutroScalar& o) const { return a == o.a && b == o.b; }
};

/// Image of a+bI under the split map a+bI -> (a, a+b), a ring isomorphism
/// onto R x R (componentwise operations). The artifact's master oracle.
struct SplitPair {
  BaseElement u;
  BaseElement v;
};

enum class ZeroDivisorTag { None, TrivialNeutrosophic, Neutrosophic, SemiNeutrosophic, Plain };

struct ZeroDivisorClass {
  ZeroDivisorTag tag = ZeroDivisorTag::None;
  std::optional<NeutroScalar> witness;  // y with x*y = 0 when tag != None
};

NeutroScalar ns_make(const BaseRing& r, const BaseElement& a, const BaseElement& b);
NeutroScalar ns_make(const BaseRing& r, std::int64_t a, std::int64_t b);
NeutroScalar ns_zero(const BaseRing& r);
NeutroScalar ns_one(const BaseRing& r);
NeutroScalar ns_indeterminate(const BaseRing& r);  // I
NeutroScalar ns_from_base(const BaseElement& a);

NeutroScalar ns_add(const NeutroScalar& x, const NeutroScalar& y);
NeutroScalar ns_sub(const NeutroScalar& x, const NeutroScalar& y);
NeutroScalar ns_neg(const NeutroScalar& x);
NeutroScalar ns_mul(const NeutroScalar& x, const NeutroScalar& y);
NeutroScalar ns_scale(const NeutroScalar& x, const BaseElement& c);
bool ns_is_zero(const NeutroScalar& x);
bool ns_is_neutrosophic(const NeutroScalar& x);  // b != 0

SplitPair split(const NeutroScalar& x);
NeutroScalar unsplit(const SplitPair& p, const BaseRing& r);

/// Inverse when both split components are base-ring units; nullopt otherwise.
std::optional<NeutroScalar> classify_unit(const NeutroScalar& x);
bool ns_is_unit(const NeutroScalar& x);
bool ns_is_idempotent(const NeutroScalar& x);

/// Split-based zero-divisor predicate: x != 0 and some split component is
/// zero or a base zero divisor. Exact over Z, Q, Z_n.
bool ns_is_zero_divisor(const NeutroScalar& x);

/// Classifies the pair (x, y) given x*y = 0, x != 0, y != 0:
///   TrivialNeutrosophic : {a - aI (a!=0)} against {cI (c!=0)}
///   SemiNeutrosophic    : x = a+bI with a!=0, b!=0 against a determinate y
///   Neutrosophic        : both factors carry nonzero I-part
///   Plain               : anything else
ZeroDivisorTag classify_zero_divisor_pair(const NeutroScalar& x, const NeutroScalar& y);

/// Per-element classification with deterministic (lexicographic-first) witness.
/// Exhaustive witness search over Z_n; split-pattern detection over Z and Q.
ZeroDivisorClass classify_zero_divisor(const NeutroScalar& x);

/// All nonzero witnesses y with x*y = 0 over finite rings, lexicographic (a,b).
std::vector<NeutroScalar> zero_divisor_witnesses(const NeutroScalar& x);

std::string ns_to_string(const NeutroScalar& x);
/// Parses "2-5I", "I", "-8I", "3", "5/19", "1/2+3/4I".
NeutroScalar ns_parse(const BaseRing& r, const std::string& s);

/// All n^2 elements of <Z_n u I>, lexicographic (a, b).
std::vector<NeutroScalar> enumerate_scalars(const BaseRing& r);

}  // namespace neutro

#endif
