#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "crit2/base.hpp"
#include "crit2/bits.hpp"
#include "crit2/group.hpp"
#include "crit2/perm.hpp"
#include "crit2/subgroup.hpp"

namespace crit2 {

enum class QuotMode { derived, frattini };

// G modulo [G,G] or Phi(G), with an invariant-factor coordinate frame:
// factors d1 | d2 | ... | dr and a coordinate vector per quotient element so
// that coord(xy) = coord(x) + coord(y) componentwise mod the factor orders.
struct AbelianQuotient {
  const Group* source = nullptr;
  QuotMode mode = QuotMode::derived;
  Subgroup kernel;           // [G,G] or Phi(G) inside *source
  Group q;                   // the quotient as a table group
  std::vector<Elt> proj;     // source element -> q element
  std::vector<uint32_t> factors;             // invariant factor orders, > 1
  std::vector<Elt> basis;                    // q elements, basis[j] has order factors[j]
  std::vector<std::vector<uint32_t>> coord;  // q element -> exponents mod factors

  const std::vector<uint32_t>& coordinates(Elt source_elt) const {
    return coord[proj[source_elt]];
  }
};

// Frattini mode requires a 2-group; derived mode takes any group.
AbelianQuotient abelian_quotient(const Group& g, QuotMode mode);

// The permutation alpha (an automorphism of aq's source) pushed down to the
// quotient. Throws Err::inconsistency when alpha does not preserve the kernel.
Perm induced_on_quotient(const AbelianQuotient& aq, const Perm& alpha);

// Classical transfer to a subgroup: with left coset representatives r_i and
// g r_i = r_{sigma(i)} h_i, the image of g is the product of the h_i in the
// abelianized subgroup. Representatives are the least ids per coset; the map
// is rebuilt from the greatest-id transversal and both must agree.
struct TransferMap {
  std::shared_ptr<const SubgroupAsGroup> sub;  // the subgroup as its own group
  AbelianQuotient dom;                         // over the parent group
  AbelianQuotient cod;                         // over sub->g
  std::vector<Elt> map;                        // dom.q element -> cod.q element

  Elt apply(Elt dom_q) const { return map[dom_q]; }
};
TransferMap transfer_map(const Group& g, const Subgroup& h, QuotMode mode);

// Intersection over all maximal subgroups M < S of the kernel of the
// transfer S -> M, as a member set of aq.q where aq covers S in this mode.
struct KernelIntersection {
  AbelianQuotient aq;
  Bits kernel;
};
KernelIntersection transfer_kernel_intersection(const Group& s, QuotMode mode);

// The subgroup of aq(S) of elements fixed by every listed automorphism of S
// whose transfer image in each listed subgroup P is fixed by the listed
// automorphisms of P. P-side permutations act on the canonical renumbering
// produced by subgroup_as_group. With no input data this is the full
// quotient.
struct FixedResult {
  AbelianQuotient aq;
  Bits fixed;
};
FixedResult transfer_fixed_subgroup(
    const Group& s, QuotMode mode, const std::vector<Perm>& auts_s,
    const std::vector<std::pair<Subgroup, std::vector<Perm>>>& subgroup_auts);

}  // namespace crit2
