#pragma once

#include <vector>

#include "crit2/bits.hpp"
#include "crit2/group.hpp"

namespace crit2 {

struct Subgroup {
  const Group* G = nullptr;
  Bits m;
  uint32_t order = 0;

  Subgroup() = default;
  Subgroup(const Group& g, Bits members) : G(&g), m(std::move(members)), order(m.count()) {}

  bool contains(Elt x) const { return m.test(x); }
  bool operator==(const Subgroup& o) const { return G == o.G && m == o.m; }
};

Subgroup trivial_subgroup(const Group& g);
Subgroup full_subgroup(const Group& g);

Subgroup closure(const Group& g, const std::vector<Elt>& seed);
Subgroup closure_bits(const Group& g, const Bits& seed);
// H assumed closed, x normalizing or arbitrary; returns <H, x>
Subgroup extend(const Subgroup& h, Elt x);

Subgroup center(const Group& g);
Subgroup derived(const Group& g);
Subgroup frattini(const Group& g);          // 2-groups only
Subgroup upper_central_2(const Group& g);   // Z2(G): Z2/Z = Z(G/Z)
Subgroup omega1(const Subgroup& p);         // <x in P : x^2 = 1>, 2-groups only

Subgroup centralizer(const Group& g, const Subgroup& x);
Subgroup centralizer_elt(const Group& g, Elt x);
Subgroup normalizer(const Group& g, const Subgroup& p);

bool is_subgroup_abelian(const Subgroup& h);
bool is_normal(const Subgroup& h);  // normal in the parent group
bool is_cyclic_subgroup(const Subgroup& h);

Bits conjugate_bits(const Group& g, const Bits& m, Elt by);  // by * m * by^-1
std::vector<Subgroup> subgroup_conjugacy_class(const Group& g, const Subgroup& p);
// lexicographically least member bitset over the conjugacy class
Bits canonical_class_rep(const Group& g, const Bits& m);

// derived subgroup / center etc. restricted to a subgroup
Subgroup derived_of(const Subgroup& h);
Subgroup center_of(const Subgroup& h);
Subgroup frattini_of(const Subgroup& h);        // 2-groups only
Subgroup upper_central_2_of(const Subgroup& h);
Subgroup normal_closure_in(const Subgroup& ambient, const Bits& seed);

// [A,B] = <[a,b] : a in A, b in B> as a subgroup of g
Subgroup commutator_subgroup(const Group& g, const Bits& a, const Bits& b);

// index-2 subgroups of a 2-group = preimages of hyperplanes of G/Phi(G)
std::vector<Subgroup> maximal_subgroups(const Group& g);

// Quotient of g by the normal subgroup n: dense group on cosets plus the
// projection map. Numbering is BFS from the images of g's generators.
struct QuotientResult {
  Group q;
  std::vector<Elt> proj;  // element of g -> element of q
};
QuotientResult quotient_group(const Group& g, const Subgroup& n);

// Materialize a subgroup as a group in its own right (ids renumbered BFS from
// the subgroup's own greedy generators), with the inclusion map.
struct SubgroupAsGroup {
  Group g;
  std::vector<Elt> to_parent;    // new id -> parent id
  std::vector<Elt> from_parent;  // parent id -> new id (or n for non-members)
};
SubgroupAsGroup subgroup_as_group(const Subgroup& h, std::string name);

}  // namespace crit2
