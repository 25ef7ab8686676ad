#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "crit2/base.hpp"

namespace crit2 {

// Fixed-size bitset over element ids, the workhorse for subgroup algebra.
class Bits {
 public:
  Bits() = default;
  explicit Bits(uint32_t n) : n_(n), w_((n + 63) / 64, 0) {}

  uint32_t size() const { return n_; }
  bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(uint32_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(uint32_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  void clear() { for (auto& w : w_) w = 0; }

  uint32_t count() const {
    uint32_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); i++) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); i++) w_[i] |= o.w_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); i++)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); i++)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // "Least" subgroup in a conjugacy class = the one whose sorted element
  // list is lexicographically smallest; equivalently, at the lowest id where
  // two member sets differ, the smaller set is the one containing that id.
  bool lex_less(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); i++) {
      uint64_t d = w_[i] ^ o.w_[i];
      if (d) return (w_[i] >> std::countr_zero(d)) & 1;
    }
    return false;
  }

  // first set bit at index >= from, or size() if none
  uint32_t next_set(uint32_t from) const {
    if (from >= n_) return n_;
    uint32_t k = from >> 6;
    uint64_t w = w_[k] & (~uint64_t(0) << (from & 63));
    while (true) {
      if (w) {
        uint32_t i = (k << 6) + std::countr_zero(w);
        return i < n_ ? i : n_;
      }
      if (++k >= w_.size()) return n_;
      w = w_[k];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (uint32_t i = next_set(0); i < n_; i = next_set(i + 1)) f(i);
  }

  std::vector<uint32_t> to_list() const {
    std::vector<uint32_t> v;
    v.reserve(count());
    for_each([&](uint32_t i) { v.push_back(i); });
    return v;
  }

  uint64_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  uint32_t n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsHash {
  size_t operator()(const Bits& b) const { return size_t(b.hash()); }
};

}  // namespace crit2
