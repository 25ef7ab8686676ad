#pragma once

#include <memory>
#include <string>
#include <vector>

#include "crit2/group.hpp"
#include "crit2/schreier.hpp"

namespace crit2 {

// Aut(G) as a permutation group on element ids. gens are slim strong
// generators; order is exact and cross-checked two ways during construction.
struct AutGroup {
  std::shared_ptr<const Group> G;  // owned copy, outlives the input group
  std::vector<Perm> gens;
  unsigned __int128 order = 1;
  uint64_t inner_order = 1;  // |G / Z(G)|
  std::shared_ptr<const BSGS> chain;

  bool contains(const Perm& p) const { return chain->contains(p); }
  bool is_2group() const;        // |Aut| a power of two
  bool out_is_2group() const;    // |Aut : Inn| a power of two
};

// conjugation by x as a permutation of element ids
Perm conj_perm(const Group& g, Elt x);
bool is_automorphism(const Group& g, const Perm& p);

// Exact fingerprint-invariant per element: equal under every automorphism
// (order, class size, centralizer profile, power map, iterated refinement).
std::vector<uint64_t> element_fingerprints(const Group& g);

// $CRIT2_CACHE_DIR, or empty when unset
std::string aut_cache_dir();

// Backtracking over images of a greedy generating sequence. |Aut| is the
// product of per-level image counts (orbit-stabilizer on the image tuple);
// the same number must come out of the BSGS built from the witnesses, or
// construction fails. cache_dir == "" disables the cache.
AutGroup automorphism_group(const Group& g, const Caps& caps = default_caps(),
                            const std::string& cache_dir = aut_cache_dir());

// O^2(A): limit of the iterated 2-residual H -> <h^2, [h,k]>^H.
// The returned BSGS is the full odd-residual subgroup.
BSGS odd_residual(const AutGroup& a);
std::vector<Perm> odd_residual_generators(const AutGroup& a);

// alpha lies in O_2(A) iff its normal closure in A is a 2-group; this
// membership test needs no O_2 computation.
bool in_o2(const AutGroup& a, const Perm& alpha);

// O_2(A) materialized. Streams the whole group, so it requires
// |A| <= enum_cap and is meant for small A only.
BSGS o2_of_aut(const AutGroup& a, const Caps& caps = default_caps());

}  // namespace crit2
