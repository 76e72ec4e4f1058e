#ifndef NEUTRO_POLY_HPP
#define NEUTRO_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neutro/scalar.hpp"

namespace neutro {

using Monomial = std::vector<std::uint32_t>;  // exponent vector, length nvars

/// Sparse polynomial over neutrosophic scalars. No zero coefficients stored;
/// the zero polynomial has an empty term map and degree -1 (sentinel).
struct NeutroPoly {
  BaseRing ring;
  int nvars = 1;
  std::map<Monomial, NeutroScalar> terms;

  bool operator==(const NeutroPoly& o) const {
    return ring == o.ring && nvars == o.nvars && terms == o.terms;
  }
};

enum class PolyClass { Strong, Mixed, Plain };

enum class Reducibility {
  Unit,
  NeutrosophicReducible,
  SemiNeutrosophicReducible,
  PlainReducible,
  IrreducibleNeutrosophic,
  IrreduciblePlain,
  Unknown
};

struct ReducibilityReport {
  Reducibility cls = Reducibility::Unknown;
  std::optional<std::pair<NeutroPoly, NeutroPoly>> factorization;
};

NeutroPoly poly_zero(const BaseRing& r, int nvars = 1);
NeutroPoly poly_one(const BaseRing& r, int nvars = 1);
NeutroPoly poly_const(const NeutroScalar& c, int nvars = 1);
NeutroPoly poly_var(const BaseRing& r, int nvars, int var, std::uint32_t exp = 1);
void poly_set(NeutroPoly& p, const Monomial& m, const NeutroScalar& c);

NeutroPoly poly_add(const NeutroPoly& p, const NeutroPoly& q);
NeutroPoly poly_neg(const NeutroPoly& p);
NeutroPoly poly_sub(const NeutroPoly& p, const NeutroPoly& q);
NeutroPoly poly_mul(const NeutroPoly& p, const NeutroPoly& q);
NeutroPoly poly_scale(const NeutroPoly& p, const NeutroScalar& c);

bool poly_is_zero(const NeutroPoly& p);
int poly_degree(const NeutroPoly& p);  // total degree, -1 for zero
NeutroScalar poly_coeff(const NeutroPoly& p, const Monomial& m);

PolyClass classify_poly(const NeutroPoly& p);

/// Content over <Z u I> via componentwise split gcd, both components
/// normalized nonnegative. Throws on the zero polynomial.
NeutroScalar content(const NeutroPoly& p);
bool is_primitive(const NeutroPoly& p);
/// All coefficients in <Z u I> and leading (graded-lex) coefficient 1.
bool is_integer_monic(const NeutroPoly& p);

std::optional<NeutroPoly> divides_scalar(const NeutroScalar& d, const NeutroPoly& p);

enum class DivisionOutcome { Quotient, NoQuotient, Unknown };
struct DivisionResult {
  DivisionOutcome outcome = DivisionOutcome::Unknown;
  std::optional<NeutroPoly> quotient;
};
/// Univariate d | p. Long division when the leading coefficient is a unit
/// after split; exhaustive coefficient search over small finite rings.
DivisionResult divides_poly(const NeutroPoly& d, const NeutroPoly& p,
                            std::int64_t search_cap = 1 << 20);

/// Exhaustive factor-pair search over a finite coefficient ring; factors are
/// restricted to monomials dividing p's exponent box, both of degree >= 1.
ReducibilityReport reducibility_classify(const NeutroPoly& p, int degree_bound = -1,
                                         std::int64_t search_cap = 1 << 22);

struct GaussProbeResult {
  bool pass = true;
  long samples = 0;
  std::optional<std::pair<NeutroPoly, NeutroPoly>> counterexample;
};
/// Random primitive pairs over <Z u I>; checks primitivity of products.
GaussProbeResult gauss_lemma_probe(long samples, int max_degree, std::uint64_t seed);

/// split extended coefficientwise: classical integer polynomials (u, v).
struct SplitPoly {
  std::map<Monomial, BaseElement> u, v;
};
SplitPoly poly_split(const NeutroPoly& p);

std::string poly_to_string(const NeutroPoly& p);
/// Accepts "(2-I) + (7+5I)x - 8I x^2" and multivariate "x1*x2 + (1+I)x2".
/// min_nvars forces the arity when a text mentions fewer variables.
NeutroPoly poly_parse(const BaseRing& r, const std::string& text, int min_nvars = 1);

}  // namespace neutro

#endif
