#pragma once

#include <cstdint>
#include <vector>

namespace crit2 {

// Permutations as image arrays over 0..deg-1. Products compose right-to-left:
// (a*b)(i) = a(b(i)).
using Perm = std::vector<uint16_t>;

inline Perm perm_identity(uint32_t deg) {
  Perm p(deg);
  for (uint32_t i = 0; i < deg; i++) p[i] = uint16_t(i);
  return p;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = a[b[i]];
  return r;
}

inline Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[a[i]] = uint16_t(i);
  return r;
}

inline bool perm_is_identity(const Perm& a) {
  for (size_t i = 0; i < a.size(); i++)
    if (a[i] != i) return false;
  return true;
}

inline bool perm_is_bijection(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  for (auto v : a) {
    if (v >= a.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

struct PermHash {
  size_t operator()(const Perm& p) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (auto v : p) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return size_t(h);
  }
};

}  // namespace crit2
