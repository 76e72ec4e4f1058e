#ifndef NEUTRO_MATRIX_HPP
#define NEUTRO_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "neutro/magma.hpp"
#include "neutro/scalar.hpp"

namespace neutro {

/// Square matrix over neutrosophic scalars.
struct NeutroMatrix {
  BaseRing ring;
  int dim = 0;
  std::vector<NeutroScalar> entries;  // row-major dim*dim

  const NeutroScalar& at(int r, int c) const { return entries[static_cast<size_t>(r) * dim + c]; }
  NeutroScalar& at(int r, int c) { return entries[static_cast<size_t>(r) * dim + c]; }
  bool operator==(const NeutroMatrix& o) const {
    return ring == o.ring && dim == o.dim && entries == o.entries;
  }
};

NeutroMatrix mat_zero(const BaseRing& r, int dim);
NeutroMatrix mat_identity(const BaseRing& r, int dim);
NeutroMatrix mat_make(const BaseRing& r, int dim, const std::vector<NeutroScalar>& entries);

NeutroMatrix mat_add(const NeutroMatrix& x, const NeutroMatrix& y);
NeutroMatrix mat_sub(const NeutroMatrix& x, const NeutroMatrix& y);
NeutroMatrix mat_mul(const NeutroMatrix& x, const NeutroMatrix& y);
bool mat_is_zero(const NeutroMatrix& x);
bool mat_is_neutrosophic(const NeutroMatrix& x);  // some entry has b != 0

struct MatrixIdempotentReport {
  bool idempotent = false;
  bool neutrosophic = false;
};
MatrixIdempotentReport idempotent_report(const NeutroMatrix& x);

/// Laplace-expansion determinant (commutative scalars).
NeutroScalar determinant(const NeutroMatrix& x);

/// Entrywise split: pair of classical matrices over the base ring.
struct SplitMatrix {
  std::vector<BaseElement> u, v;  // row-major
};
SplitMatrix mat_split(const NeutroMatrix& x);

/// Invertible iff both split images are invertible over the base ring
/// (equivalently, det is a unit scalar for commutative bases).
bool mat_is_invertible(const NeutroMatrix& x);

enum class SearchOutcome { Found, NotFound, Unknown };
struct ZeroDivisorSearch {
  SearchOutcome outcome = SearchOutcome::Unknown;
  std::optional<NeutroMatrix> witness;  // y with x*y = 0 (right) or y*x = 0 (left)
  bool one_sided = false;               // witness works on one side only
  long probes = 0;
};
/// Exhaustive for dim <= 2 over tiny rings, dim 3 uses seeded random probes.
ZeroDivisorSearch one_sided_zero_divisor_search(const NeutroMatrix& x, bool right_side,
                                                std::uint64_t seed = 0, long max_probes = 200000);

/// Magma of all dim x dim matrices with unit determinant under multiplication;
/// base ring must be tiny (Z2 or Z3), dim = 2.
FiniteMagma invertible_matrices_magma(const BaseRing& r, int dim);

std::string mat_to_string(const NeutroMatrix& x);

}  // namespace neutro

#endif
