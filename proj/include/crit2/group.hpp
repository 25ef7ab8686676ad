#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "crit2/base.hpp"
#include "crit2/perm.hpp"

namespace crit2 {

struct Group;

// One cyclic extension layer: adjoin t to the current group G with
//   t x t^-1 = phi(x)   (phi an automorphism of G)
//   t^index = power     (an element with phi(power) = power)
// phi is given by image words for G's generators (1-based indices, negative
// for inverses), power as a word as well. Words keep specs independent of the
// internal element numbering.
struct ExtensionStep {
  uint32_t index = 2;
  std::vector<std::vector<int>> phi;
  std::vector<int> power;
};

// How the group was built, with enough data to re-emit an exact construction
// spec where the route supports one (perm, named, extension); other routes
// serialize as a full table.
struct Provenance {
  std::string kind;     // "cayley", "perm", "extension", "named", "product"
  std::string summary;  // human-readable construction summary
  uint32_t degree = 0;                  // kind == "perm"
  std::vector<Perm> perm_gens;          // kind == "perm": 0-based images
  std::string family;                   // kind == "named"
  std::vector<uint32_t> params;         // kind == "named"
  std::shared_ptr<const Group> ext_base;  // kind == "extension"
  std::vector<ExtensionStep> ext_steps;   // kind == "extension"
};

// A finite group on dense element ids 0..n-1 with id 0 the identity.
// Element numbering is BFS order from the generators (right multiplication),
// so identical construction parameters always yield the identical table.
struct Group {
  uint32_t n = 1;
  std::vector<uint16_t> mul;  // row-major: mul[a*n+b] = a*b
  std::vector<uint16_t> inv;
  std::vector<Elt> gens;
  std::string name;
  Provenance prov;

  Elt op(Elt a, Elt b) const { return mul[a * n + b]; }
  Elt iv(Elt a) const { return inv[a]; }
  // conj(g,x) = g x g^-1
  Elt conj(Elt g, Elt x) const { return op(op(g, x), inv[g]); }
  // comm(g,h) = g h g^-1 h^-1
  Elt comm(Elt g, Elt h) const { return op(op(g, h), op(inv[g], inv[h])); }

  bool is_abelian() const;
  bool is_2group() const { return is_pow2(n); }
};

uint32_t element_order(const Group& g, Elt x);

// Conjugacy classes, numbered by least member id.
struct ConjClasses {
  std::vector<uint16_t> of;             // element -> class index
  std::vector<std::vector<Elt>> members;
};
ConjClasses conjugacy_classes(const Group& g);

// Build a group from an arbitrary multiplication callback on 0..n-1 with 0 the
// identity, then renumber it BFS from the given generators. Callers guarantee
// the callback is a group law; fixture tests re-verify associativity anyway.
Group group_from_fn(uint32_t n, const std::function<Elt(Elt, Elt)>& f,
                    const std::vector<Elt>& gens, std::string name);

// Renumber so ids follow BFS discovery order from gens. Fails if the
// generators do not generate. When new_of_old is non-null it receives the
// id translation (old id -> new id).
Group renumber_bfs(const Group& g, const std::vector<Elt>& gens,
                   std::vector<Elt>* new_of_old = nullptr);

// Table sanity: identity row/column, Latin property, two-sided inverses.
// Exhaustive associativity on top of that when n <= assoc_limit.
void verify_table(const Group& g, uint32_t assoc_limit = 2048);

// Deterministic small generating set: repeatedly adjoin the least element id
// outside the closure of what was picked so far.
std::vector<Elt> greedy_generators(const Group& g);

// External constructors.
Group from_cayley_table(const std::vector<std::vector<Elt>>& table,
                        std::string name = "cayley",
                        const Caps& caps = default_caps());
Group from_permutation_generators(uint32_t degree,
                                  const std::vector<std::vector<uint32_t>>& one_based_gens,
                                  std::string name = "perm",
                                  const Caps& caps = default_caps());

// Recover the permutation action of one element of a perm-provenance group.
Perm element_permutation(const Group& g, Elt x);

// Extend generator images to the full map g -> target (img[gens[i]] =
// images[i]) and verify the homomorphism property on every pair. Throws
// Err::inconsistency when the images do not define a homomorphism.
std::vector<Elt> hom_from_gen_images(const Group& g, const Group& target,
                                     const std::vector<Elt>& images);

// Evaluate a word in g's generators: entries are 1-based generator indices,
// negative for inverses, empty word = identity.
Elt eval_word(const Group& g, const std::vector<int>& word);

}  // namespace crit2
