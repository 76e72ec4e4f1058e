#ifndef NEUTRO_BASE_RING_HPP
#define NEUTRO_BASE_RING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace neutro {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RingKind { Integers, Rationals, Mod };

/// A commutative base ring: Z, Q, or Z_n with canonical residues in [0, n).
struct BaseRing {
  RingKind kind = RingKind::Integers;
  std::int64_t modulus = 0;  // only for Mod, >= 2

  static BaseRing integers() { return {RingKind::Integers, 0}; }
  static BaseRing rationals() { return {RingKind::Rationals, 0}; }
  static BaseRing mod(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("modulus must be >= 2");
    return {RingKind::Mod, n};
  }

  bool operator==(const BaseRing&) const = default;
  bool finite() const { return kind == RingKind::Mod; }
  /// Least n > 0 with n*x = 0 for all x; 0 for Z and Q.
  std::int64_t characteristic() const { return kind == RingKind::Mod ? modulus : 0; }
  std::string name() const;
};

/// One element of a base ring. Values live in the ring's canonical domain:
/// cpp_int for Z, normalized cpp_rational for Q, residue in [0, n) for Z_n.
struct BaseElement {
  BaseRing ring;
  std::variant<Int, Rat, std::int64_t> v;

  bool operator==(const BaseElement& o) const { return ring == o.ring && v == o.v; }
};

struct RingMismatch : std::invalid_argument {
  RingMismatch() : std::invalid_argument("base ring mismatch") {}
};

BaseElement be_make(const BaseRing& r, const Int& z);
BaseElement be_make(const BaseRing& r, std::int64_t z);
BaseElement be_make_rat(const BaseRing& r, const Int& num, const Int& den);
BaseElement be_zero(const BaseRing& r);
BaseElement be_one(const BaseRing& r);

BaseElement be_add(const BaseElement& x, const BaseElement& y);
BaseElement be_sub(const BaseElement& x, const BaseElement& y);
BaseElement be_neg(const BaseElement& x);
BaseElement be_mul(const BaseElement& x, const BaseElement& y);

bool be_is_zero(const BaseElement& x);
bool be_is_one(const BaseElement& x);

/// True iff x has a multiplicative inverse in its ring.
bool be_is_unit(const BaseElement& x);
/// Inverse of a unit; throws std::domain_error otherwise.
BaseElement be_inverse(const BaseElement& x);
/// x*x == x.
bool be_is_idempotent(const BaseElement& x);
/// True iff x != 0 and x*y = 0 for some y != 0 (always false in Z, Q).
bool be_is_zero_divisor(const BaseElement& x);
/// Exact division: returns q with x = q*d if it exists.
bool be_divides(const BaseElement& d, const BaseElement& x, BaseElement* quotient);

/// n-fold sum of x (n may be negative).
BaseElement be_scale(const BaseElement& x, const Int& n);

std::string be_to_string(const BaseElement& x);
/// Parses "123", "-7", "3/4" in the given ring (residues reduced mod n).
BaseElement be_parse(const BaseRing& r, const std::string& s);

/// gcd normalized nonnegative; Z only.
Int int_gcd(const Int& a, const Int& b);

}  // namespace neutro

#endif
