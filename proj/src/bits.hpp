#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "polyrecon/types.hpp"

namespace polyrecon::detail {

// Fixed-width bitset over vertex ids, sized at construction.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : words_((n + 63) / 64, 0) {}
  Bits(int n, const VertexSet& s) : Bits(n) {
    for (int v : s) set(v);
  }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  friend bool operator==(const Bits&, const Bits&) = default;
  friend auto operator<=>(const Bits&, const Bits&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace polyrecon::detail
