#pragma once

#include <string>
#include <vector>

#include "crit2/group.hpp"

namespace crit2 {

// Adjoin t with t^m = z and conjugation phi (given on all of base, as images
// of base.gens extended to a verified automorphism). Consistency checks:
// phi(z) = z and phi^m = conjugation by z; the classical extension lemma then
// makes the pair table a group, and the table is re-verified exhaustively.
// Generators of the result are the images of base.gens followed by t.
Group cyclic_extension(const Group& base, const std::vector<Elt>& phi_gen_images,
                       uint32_t m, Elt z, std::string name,
                       const Caps& caps = default_caps());

// Iterated cyclic extensions on top of a base group. Step k's words refer to
// the generator list of the group built so far.
Group build_extension(const Group& base, const std::vector<ExtensionStep>& steps,
                      std::string name, const Caps& caps = default_caps());

}  // namespace crit2
