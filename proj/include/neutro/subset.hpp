#ifndef NEUTRO_SUBSET_HPP
#define NEUTRO_SUBSET_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace neutro {

/// Bitmask over carrier indices of one specific magma/ring. Comparison and
/// ordering are by raw bitmask, which fixes the deterministic report order.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

  static Subset of(std::size_t universe, std::initializer_list<int> idxs) {
    Subset s(universe);
    for (int i : idxs) s.add(i);
    return s;
  }
  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.add(i);
    return s;
  }

  std::size_t universe() const { return n_; }
  bool contains(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void add(std::size_t i) { bits_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void remove(std::size_t i) { bits_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<int> indices() const;

  bool is_subset_of(const Subset& o) const;
  Subset unite(const Subset& o) const;
  Subset intersect(const Subset& o) const;

  bool operator==(const Subset& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  /// bitmask order (little-endian words compared from the top)
  bool operator<(const Subset& o) const;

  std::size_t hash() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace neutro

#endif
