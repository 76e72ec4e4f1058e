#include "neutro/subset.hpp"

#include <bit>

namespace neutro {

std::size_t Subset::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : bits_) c += std::popcount(w);
  return c;
}

std::vector<int> Subset::indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (contains(i)) out.push_back(static_cast<int>(i));
  return out;
}

bool Subset::is_subset_of(const Subset& o) const {
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~o.bits_[w]) return false;
  return true;
}

Subset Subset::unite(const Subset& o) const {
  Subset r(n_);
  for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] | o.bits_[w];
  return r;
}

Subset Subset::intersect(const Subset& o) const {
  Subset r(n_);
  for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] & o.bits_[w];
  return r;
}

bool Subset::operator<(const Subset& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t w = bits_.size(); w-- > 0;)
    if (bits_[w] != o.bits_[w]) return bits_[w] < o.bits_[w];
  return false;
}

std::size_t Subset::hash() const {
  std::size_t h = n_;
  for (std::uint64_t w : bits_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
  return h;
}

}  // namespace neutro
