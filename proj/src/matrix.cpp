#include "neutro/matrix.hpp"

#include <random>

namespace neutro {

NeutroMatrix mat_zero(const BaseRing& r, int dim) {
  NeutroMatrix m{r, dim, {}};
  m.entries.assign(static_cast<size_t>(dim) * dim, ns_zero(r));
  return m;
}

NeutroMatrix mat_identity(const BaseRing& r, int dim) {
  NeutroMatrix m = mat_zero(r, dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = ns_one(r);
  return m;
}

NeutroMatrix mat_make(const BaseRing& r, int dim, const std::vector<NeutroScalar>& entries) {
  if (entries.size() != static_cast<size_t>(dim) * dim)
    throw std::invalid_argument("matrix shape");
  for (const auto& e : entries)
    if (e.ring != r) throw RingMismatch();
  return {r, dim, entries};
}

NeutroMatrix mat_add(const NeutroMatrix& x, const NeutroMatrix& y) {
  if (x.ring != y.ring || x.dim != y.dim) throw RingMismatch();
  NeutroMatrix m = x;
  for (size_t i = 0; i < m.entries.size(); ++i) m.entries[i] = ns_add(m.entries[i], y.entries[i]);
  return m;
}

NeutroMatrix mat_sub(const NeutroMatrix& x, const NeutroMatrix& y) {
  if (x.ring != y.ring || x.dim != y.dim) throw RingMismatch();
  NeutroMatrix m = x;
  for (size_t i = 0; i < m.entries.size(); ++i) m.entries[i] = ns_sub(m.entries[i], y.entries[i]);
  return m;
}

NeutroMatrix mat_mul(const NeutroMatrix& x, const NeutroMatrix& y) {
  if (x.ring != y.ring || x.dim != y.dim) throw RingMismatch();
  NeutroMatrix m = mat_zero(x.ring, x.dim);
  for (int i = 0; i < x.dim; ++i)
    for (int k = 0; k < x.dim; ++k) {
      const NeutroScalar& xij = x.at(i, k);
      if (ns_is_zero(xij)) continue;
      for (int j = 0; j < x.dim; ++j)
        m.at(i, j) = ns_add(m.at(i, j), ns_mul(xij, y.at(k, j)));
    }
  return m;
}

bool mat_is_zero(const NeutroMatrix& x) {
  for (const auto& e : x.entries)
    if (!ns_is_zero(e)) return false;
  return true;
}

bool mat_is_neutrosophic(const NeutroMatrix& x) {
  for (const auto& e : x.entries)
    if (ns_is_neutrosophic(e)) return true;
  return false;
}

MatrixIdempotentReport idempotent_report(const NeutroMatrix& x) {
  return {mat_mul(x, x) == x, mat_is_neutrosophic(x)};
}

NeutroScalar determinant(const NeutroMatrix& x) {
  if (x.dim == 0) return ns_one(x.ring);
  if (x.dim == 1) return x.at(0, 0);
  NeutroScalar det = ns_zero(x.ring);
  for (int c = 0; c < x.dim; ++c) {
    NeutroMatrix minor = mat_zero(x.ring, x.dim - 1);
    for (int i = 1; i < x.dim; ++i) {
      int jc = 0;
      for (int j = 0; j < x.dim; ++j) {
        if (j == c) continue;
        minor.at(i - 1, jc++) = x.at(i, j);
      }
    }
    NeutroScalar term = ns_mul(x.at(0, c), determinant(minor));
    det = (c % 2 == 0) ? ns_add(det, term) : ns_sub(det, term);
  }
  return det;
}

SplitMatrix mat_split(const NeutroMatrix& x) {
  SplitMatrix s;
  s.u.reserve(x.entries.size());
  s.v.reserve(x.entries.size());
  for (const auto& e : x.entries) {
    SplitPair p = split(e);
    s.u.push_back(p.u);
    s.v.push_back(p.v);
  }
  return s;
}

bool mat_is_invertible(const NeutroMatrix& x) {
  // commutative base: both classical determinants must be units
  NeutroScalar d = determinant(x);
  return ns_is_unit(d);
}

ZeroDivisorSearch one_sided_zero_divisor_search(const NeutroMatrix& x, bool right_side,
                                                std::uint64_t seed, long max_probes) {
  ZeroDivisorSearch res;
  if (x.ring.kind != RingKind::Mod) {
    res.outcome = SearchOutcome::Unknown;
    return res;
  }
  auto consider = [&](const NeutroMatrix& y) {
    if (mat_is_zero(y)) return false;
    NeutroMatrix this_side = right_side ? mat_mul(x, y) : mat_mul(y, x);
    if (!mat_is_zero(this_side)) return false;
    NeutroMatrix other = right_side ? mat_mul(y, x) : mat_mul(x, y);
    res.outcome = SearchOutcome::Found;
    res.witness = y;
    res.one_sided = !mat_is_zero(other);
    return true;
  };
  auto scalars = enumerate_scalars(x.ring);
  const size_t cells = static_cast<size_t>(x.dim) * x.dim;
  double combos = 1;
  for (size_t i = 0; i < cells; ++i) combos *= static_cast<double>(scalars.size());
  if (combos <= 1 << 20) {
    std::vector<size_t> pick(cells, 0);
    while (true) {
      NeutroMatrix y = mat_zero(x.ring, x.dim);
      for (size_t i = 0; i < cells; ++i) y.entries[i] = scalars[pick[i]];
      ++res.probes;
      if (consider(y)) return res;
      size_t i = 0;
      while (i < cells && ++pick[i] == scalars.size()) pick[i++] = 0;
      if (i == cells) break;
    }
    res.outcome = SearchOutcome::NotFound;
    return res;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> d(0, scalars.size() - 1);
  for (long k = 0; k < max_probes; ++k) {
    NeutroMatrix y = mat_zero(x.ring, x.dim);
    for (size_t i = 0; i < cells; ++i) y.entries[i] = scalars[d(rng)];
    ++res.probes;
    if (consider(y)) return res;
  }
  res.outcome = SearchOutcome::Unknown;
  return res;
}

FiniteMagma invertible_matrices_magma(const BaseRing& r, int dim) {
  if (r.kind != RingKind::Mod || r.modulus > 3 || dim != 2)
    throw std::invalid_argument("invertible-matrix magma supported over Z2/Z3, dim 2");
  auto scalars = enumerate_scalars(r);
  const size_t cells = 4;
  std::vector<NeutroMatrix> carrier;
  std::vector<size_t> pick(cells, 0);
  while (true) {
    NeutroMatrix m = mat_zero(r, 2);
    for (size_t i = 0; i < cells; ++i) m.entries[i] = scalars[pick[i]];
    if (mat_is_invertible(m)) carrier.push_back(m);
    size_t i = 0;
    while (i < cells && ++pick[i] == scalars.size()) pick[i++] = 0;
    if (i == cells) break;
  }
  // identity first
  NeutroMatrix ident = mat_identity(r, 2);
  for (size_t i = 0; i < carrier.size(); ++i)
    if (carrier[i] == ident) {
      std::swap(carrier[0], carrier[i]);
      break;
    }
  std::vector<Element> es;
  for (size_t i = 0; i < carrier.size(); ++i)
    es.push_back({static_cast<int>(i), "m" + std::to_string(i), mat_is_neutrosophic(carrier[i])});
  const int sz = static_cast<int>(carrier.size());
  std::vector<int> t(static_cast<size_t>(sz) * sz);
  auto find = [&](const NeutroMatrix& m) {
    for (int i = 0; i < sz; ++i)
      if (carrier[i] == m) return i;
    throw std::logic_error("product left the unit group");
  };
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b)
      t[static_cast<size_t>(a) * sz + b] = find(mat_mul(carrier[a], carrier[b]));
  FiniteMagma m(std::move(es), std::move(t), 0, "*");
  m.provenance = MagmaProvenance::Standard;
  return m;
}

std::string mat_to_string(const NeutroMatrix& x) {
  std::string out = "[";
  for (int i = 0; i < x.dim; ++i) {
    if (i) out += "; ";
    out += "[";
    for (int j = 0; j < x.dim; ++j) {
      if (j) out += ", ";
      out += ns_to_string(x.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace neutro
