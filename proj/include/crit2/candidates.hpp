#pragma once

#include <vector>

#include "crit2/base.hpp"
#include "crit2/bits.hpp"
#include "crit2/group.hpp"
#include "crit2/perm.hpp"
#include "crit2/subgroup.hpp"

namespace crit2 {

// <x in Z_2(S) with at most two distinct commutator values [x,S]>
Subgroup z_prime(const Group& s);

// Proper centric subgroups that can carry essential automorphisms: every one
// containing core (Z' when omitted), found by ascending normalizer chains
// from the core, plus centralizers of involutions h that move Z_2(S) and
// whose normalizer index over the centralizer is 2. One representative per
// S-conjugacy class (the lexicographically least member bitset), sorted.
// Visiting more than caps.candidate_cap classes throws Err::resource.
std::vector<Subgroup> enumerate_centric_candidates(
    const Group& s, const Subgroup* core = nullptr,
    const Caps& caps = default_caps());

// Smallest subgroup containing q that is normal in s and invariant under
// every given automorphism (generators of O^2(Aut(S)) in practice).
Subgroup semicharacteristic_closure(const Group& s, const Subgroup& q,
                                    const std::vector<Perm>& odd_aut_gens);

}  // namespace crit2
