#pragma once

#include <functional>
#include <vector>

#include "crit2/base.hpp"
#include "crit2/perm.hpp"

namespace crit2 {

// Base and strong generating set for a permutation group on 0..degree-1.
// Deterministic: identical generator lists produce identical bases, orbits
// and transversals. Composition convention matches perm.hpp: (a*b)(i) =
// a(b(i)), and transversal reps map the base point to the orbit point.
class BSGS {
 public:
  BSGS(uint32_t degree, const std::vector<Perm>& gens);

  uint32_t degree() const { return deg_; }
  unsigned __int128 order() const;
  // order as uint64_t; throws Err::size_cap if it does not fit
  uint64_t order64() const;
  bool contains(const Perm& p) const;
  bool is_trivial() const { return base_.empty(); }

  // Adjoin one permutation; returns true when the group grew.
  bool add_generator(const Perm& p);

  // Strong generators of the whole group (level-0 list, deduplicated).
  // Empty for the trivial group, which keeps no levels at all.
  const std::vector<Perm>& generators() const {
    static const std::vector<Perm> none;
    return gens_.empty() ? none : gens_[0];
  }
  const std::vector<uint32_t>& base() const { return base_; }

  // Visit every element exactly once, deterministic order. Throws
  // Err::size_cap when the order exceeds cap. Traversal materializes one
  // element at a time (transversal tuples), nothing is stored.
  void for_each(const std::function<void(const Perm&)>& fn,
                uint64_t cap = default_caps().stream_cap) const;
  std::vector<Perm> elements(uint64_t cap = default_caps().enum_cap) const;

 private:
  struct Level {
    uint32_t bpt = 0;
    std::vector<uint32_t> orbit;   // discovery order, orbit[0] = bpt
    std::vector<int32_t> where;    // point -> orbit index, -1 outside
    std::vector<Perm> tr;          // tr[i] maps bpt to orbit[i]
  };

  void rebuild_orbit(size_t i);
  void complete(size_t i);
  // strip p through levels >= from; returns residue and stop level
  std::pair<Perm, size_t> sift(Perm p, size_t from = 0) const;
  void new_level(const Perm& witness);

  uint32_t deg_;
  std::vector<uint32_t> base_;
  std::vector<std::vector<Perm>> gens_;  // gens_[i] generates the stabilizer
                                         // of base_[0..i-1]
  std::vector<Level> lv_;
};

// Normal closure of <seed> under conjugation by <group_gens>.
BSGS normal_closure_perm(uint32_t degree, const std::vector<Perm>& group_gens,
                         const std::vector<Perm>& seed);

}  // namespace crit2
