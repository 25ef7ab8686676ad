#pragma once

#include <memory>
#include <optional>
#include <string>

#include "crit2/base.hpp"
#include "crit2/bits.hpp"
#include "crit2/group.hpp"
#include "crit2/perm.hpp"
#include "crit2/subgroup.hpp"

namespace crit2 {

enum class Tri { yes, no, not_decided };
const char* tri_name(Tri t);

// Answer to an embedding question. When status == yes the witness pair is
// filled in: `inner` is strongly 2-embedded in `outer`. The bitsets refer to
// `arena` when that is set, otherwise to the group the question was about.
struct EmbeddingVerdict {
  Tri status = Tri::not_decided;
  std::string note;
  std::shared_ptr<const Group> arena;
  Bits inner;
  Bits outer;
  Bits sylow;  // the Sylow 2-subgroup the search was anchored at
};

// Deterministic Sylow 2-subgroup: grow by the least 2-element of the current
// normalizer until the order reaches the 2-part of |g|.
Subgroup sylow_2_subgroup(const Group& g);

// Largest normal 2-subgroup: normal core of a Sylow 2-subgroup.
Subgroup o2_subgroup(const Group& g);

// Literal definition check: h proper, of even order, and h ∩ x h x^-1 has odd
// order for every x outside h.
bool is_strongly_2_embedded(const Group& g, const Bits& h);

// Exact search for a strongly 2-embedded subgroup. Every such subgroup
// contains the normalizer of a Sylow 2-subgroup up to conjugacy, so scanning
// the overgroups of one fixed Sylow normalizer decides the question.
EmbeddingVerdict has_strongly_2_embedded(const Group& g,
                                         const Caps& caps = default_caps());

// Conjugation by n restricted to the subgroup pg was built from, as a
// permutation of pg's own element ids. Throws Err::usage when n does not
// normalize the subgroup.
Perm restricted_conj_perm(const Group& s, const SubgroupAsGroup& pg, Elt n);

// Out(P) = Aut(P)/Inn(P) materialized as a dense table group by BFS over the
// cosets of the inner automorphisms, together with the image of N_S(P).
struct OuterData {
  std::shared_ptr<const Group> out;
  Bits s0;  // image of N_S(P)-conjugation inside *out
  uint64_t inn_order = 0;
  unsigned __int128 aut_order = 1;
};
std::optional<OuterData> outer_automorphisms(const Group& s, const Subgroup& p,
                                             const Caps& caps = default_caps(),
                                             std::string* why = nullptr);

// Exact decision whether subgroups S0 <= G0 < G <= Out(P) exist with G0
// strongly 2-embedded in G and S0 = image of N_S(P) a Sylow 2-subgroup of G.
// Searches the overgroups of S0 in Out(P) whose 2-part stays |S0| and applies
// has_strongly_2_embedded to each. not_decided when Out(P) exceeds caps.
EmbeddingVerdict critical_oracle(const Group& s, const Subgroup& p,
                                 const Caps& caps = default_caps());

// Shape facts about a 2-group quotient N_S(P)/P consumed by the screening
// criteria: cyclicity, center = socle, and |S0| a small power of |Z(S0)|.
struct SylowShape {
  bool cyclic = false;
  bool center_omega = false;  // Z(S0) == Omega_1(S0)
  bool order_power = false;   // |S0| == |Z(S0)|^m for m in {1,2,3}
  uint32_t m = 0;             // the exponent when order_power holds
  uint32_t center_rank = 0;   // log2 |Omega_1(Z(S0))|
};
SylowShape sylow_shape_checks(const Group& s0);

// All involutions of the subgroup s0_image lie in one conjugacy orbit of its
// normalizer inside `out`. Vacuously true with at most one involution.
bool involutions_conjugate_in_normalizer(const Group& out, const Bits& s0_image);

}  // namespace crit2
