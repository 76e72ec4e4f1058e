#include "neutro/base_ring.hpp"

#include <numeric>

namespace neutro {

namespace {

std::int64_t norm_mod(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

std::int64_t mod_of(const BaseElement& x) { return std::get<std::int64_t>(x.v); }

// extended gcd on int64, returns g and x with a*x ~ g (mod b context handled by caller)
std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1, y1;
  std::int64_t g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

std::string BaseRing::name() const {
  switch (kind) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::Mod: return "Z" + std::to_string(modulus);
  }
  return "?";
}

BaseElement be_make(const BaseRing& r, const Int& z) {
  switch (r.kind) {
    case RingKind::Integers: return {r, z};
    case RingKind::Rationals: return {r, Rat(z)};
    case RingKind::Mod: {
      Int m = z % r.modulus;
      if (m < 0) m += r.modulus;
      return {r, static_cast<std::int64_t>(m)};
    }
  }
  throw std::logic_error("bad ring kind");
}

BaseElement be_make(const BaseRing& r, std::int64_t z) { return be_make(r, Int(z)); }

BaseElement be_make_rat(const BaseRing& r, const Int& num, const Int& den) {
  if (r.kind != RingKind::Rationals) throw std::invalid_argument("rational value in non-Q ring");
  if (den == 0) throw std::invalid_argument("zero denominator");
  return {r, Rat(num, den)};
}

BaseElement be_zero(const BaseRing& r) { return be_make(r, 0); }
BaseElement be_one(const BaseRing& r) { return be_make(r, 1); }

BaseElement be_add(const BaseElement& x, const BaseElement& y) {
  if (x.ring != y.ring) throw RingMismatch();
  switch (x.ring.kind) {
    case RingKind::Integers: return {x.ring, Int(std::get<Int>(x.v) + std::get<Int>(y.v))};
    case RingKind::Rationals: return {x.ring, Rat(std::get<Rat>(x.v) + std::get<Rat>(y.v))};
    case RingKind::Mod:
      return {x.ring, norm_mod(mod_of(x) + mod_of(y), x.ring.modulus)};
  }
  throw std::logic_error("bad ring kind");
}

BaseElement be_neg(const BaseElement& x) {
  switch (x.ring.kind) {
    case RingKind::Integers: return {x.ring, Int(-std::get<Int>(x.v))};
    case RingKind::Rationals: return {x.ring, Rat(-std::get<Rat>(x.v))};
    case RingKind::Mod: return {x.ring, norm_mod(-mod_of(x), x.ring.modulus)};
  }
  throw std::logic_error("bad ring kind");
}

BaseElement be_sub(const BaseElement& x, const BaseElement& y) { return be_add(x, be_neg(y)); }

BaseElement be_mul(const BaseElement& x, const BaseElement& y) {
  if (x.ring != y.ring) throw RingMismatch();
  switch (x.ring.kind) {
    case RingKind::Integers: return {x.ring, Int(std::get<Int>(x.v) * std::get<Int>(y.v))};
    case RingKind::Rationals: return {x.ring, Rat(std::get<Rat>(x.v) * std::get<Rat>(y.v))};
    case RingKind::Mod: {
      // moduli stay well below 2^31, products fit in int64
      return {x.ring, norm_mod(mod_of(x) * mod_of(y), x.ring.modulus)};
    }
  }
  throw std::logic_error("bad ring kind");
}

bool be_is_zero(const BaseElement& x) {
  switch (x.ring.kind) {
    case RingKind::Integers: return std::get<Int>(x.v) == 0;
    case RingKind::Rationals: return std::get<Rat>(x.v) == 0;
    case RingKind::Mod: return mod_of(x) == 0;
  }
  return false;
}

bool be_is_one(const BaseElement& x) {
  switch (x.ring.kind) {
    case RingKind::Integers: return std::get<Int>(x.v) == 1;
    case RingKind::Rationals: return std::get<Rat>(x.v) == 1;
    case RingKind::Mod: return mod_of(x) == 1 % x.ring.modulus;
  }
  return false;
}

bool be_is_unit(const BaseElement& x) {
  switch (x.ring.kind) {
    case RingKind::Integers: {
      const Int& z = std::get<Int>(x.v);
      return z == 1 || z == -1;
    }
    case RingKind::Rationals: return std::get<Rat>(x.v) != 0;
    case RingKind::Mod: {
      std::int64_t a = mod_of(x), b = x.ring.modulus;
      return std::gcd(a, b) == 1;
    }
  }
  return false;
}

BaseElement be_inverse(const BaseElement& x) {
  switch (x.ring.kind) {
    case RingKind::Integers: {
      const Int& z = std::get<Int>(x.v);
      if (z == 1 || z == -1) return x;
      throw std::domain_error("not a unit in Z");
    }
    case RingKind::Rationals: {
      const Rat& q = std::get<Rat>(x.v);
      if (q == 0) throw std::domain_error("zero has no inverse");
      return {x.ring, Rat(Rat(1) / q)};
    }
    case RingKind::Mod: {
      std::int64_t a = mod_of(x), n = x.ring.modulus, u, w;
      std::int64_t g = egcd(a, n, u, w);
      if (g != 1 && g != -1) throw std::domain_error("not a unit mod n");
      return {x.ring, norm_mod(u * (g < 0 ? -1 : 1), n)};
    }
  }
  throw std::logic_error("bad ring kind");
}

bool be_is_idempotent(const BaseElement& x) { return be_mul(x, x) == x; }

bool be_is_zero_divisor(const BaseElement& x) {
  if (be_is_zero(x)) return false;
  if (x.ring.kind != RingKind::Mod) return false;
  return std::gcd(mod_of(x), x.ring.modulus) != 1;
}

bool be_divides(const BaseElement& d, const BaseElement& x, BaseElement* quotient) {
  if (d.ring != x.ring) throw RingMismatch();
  switch (d.ring.kind) {
    case RingKind::Integers: {
      const Int &dz = std::get<Int>(d.v), &xz = std::get<Int>(x.v);
      if (dz == 0) {
        if (xz != 0) return false;
        if (quotient) *quotient = be_zero(d.ring);
        return true;
      }
      if (xz % dz != 0) return false;
      if (quotient) *quotient = BaseElement{d.ring, Int(xz / dz)};
      return true;
    }
    case RingKind::Rationals: {
      if (be_is_zero(d)) {
        if (!be_is_zero(x)) return false;
        if (quotient) *quotient = be_zero(d.ring);
        return true;
      }
      if (quotient) *quotient = be_mul(x, be_inverse(d));
      return true;
    }
    case RingKind::Mod: {
      std::int64_t a = mod_of(d), b = mod_of(x), n = d.ring.modulus;
      for (std::int64_t q = 0; q < n; ++q)
        if (norm_mod(a * q, n) == b) {
          if (quotient) *quotient = BaseElement{d.ring, q};
          return true;
        }
      return false;
    }
  }
  return false;
}

BaseElement be_scale(const BaseElement& x, const Int& n) {
  switch (x.ring.kind) {
    case RingKind::Integers: return {x.ring, Int(std::get<Int>(x.v) * n)};
    case RingKind::Rationals: return {x.ring, Rat(std::get<Rat>(x.v) * Rat(n))};
    case RingKind::Mod: {
      Int m = (n % x.ring.modulus) * mod_of(x);
      return be_make(x.ring, m);
    }
  }
  throw std::logic_error("bad ring kind");
}

std::string be_to_string(const BaseElement& x) {
  switch (x.ring.kind) {
    case RingKind::Integers: return std::get<Int>(x.v).str();
    case RingKind::Rationals: {
      const Rat& q = std::get<Rat>(x.v);
      if (denominator(q) == 1) return numerator(q).str();
      return numerator(q).str() + "/" + denominator(q).str();
    }
    case RingKind::Mod: return std::to_string(mod_of(x));
  }
  return "?";
}

BaseElement be_parse(const BaseRing& r, const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (r.kind == RingKind::Rationals) return be_make_rat(r, num, den);
    if (r.kind == RingKind::Mod) {
      BaseElement d = be_make(r, den);
      if (!be_is_unit(d)) throw std::domain_error("denominator not a unit mod n");
      return be_mul(be_make(r, num), be_inverse(d));
    }
    throw std::invalid_argument("fraction in Z");
  }
  return be_make(r, Int(s));
}

Int int_gcd(const Int& a, const Int& b) {
  Int g = boost::multiprecision::gcd(a, b);
  return g < 0 ? Int(-g) : g;
}

}  // namespace neutro
