#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crit2/base.hpp"
#include "crit2/group.hpp"
#include "crit2/perm.hpp"
#include "crit2/subgroup.hpp"

namespace crit2 {

// GF(2) row vectors packed into 16 bits; a matrix is its list of rows.
// Vectors act on the right: (v * A) = xor of rows A[i] over set bits i of v,
// so "apply A then B" is the product A*B and row i of A is the image of e_i.
using F2Vec = uint16_t;
using F2Mat = std::vector<F2Vec>;

F2Mat f2_identity(uint32_t dim);
F2Vec f2_apply(const F2Mat& a, F2Vec v);
F2Mat f2_mul(const F2Mat& a, const F2Mat& b);
uint32_t f2_rank(F2Mat a);  // by value: reduces in place
bool f2_is_identity(const F2Mat& a);
F2Mat f2_inverse(const F2Mat& a);  // Err::domain when singular

// A GF(2) vector space with a linear action given by one invertible matrix
// per acting generator. labels name the generators (same length as action,
// or empty).
struct F2Module {
  uint32_t dim = 0;
  std::vector<F2Mat> action;
  std::vector<std::string> labels;
};

// Dimension bound for all module computations.
inline constexpr uint32_t kF2DimMax = 16;

// Checks dim <= 16, matrix shapes, and that every action matrix is
// invertible. Throws Err::domain on violation.
void validate_module(const F2Module& m);

// Word in the acting generators, 1-based and signed: k means action[k-1],
// -k its inverse, empty word the identity.
F2Mat action_of_word(const F2Module& m, const std::vector<int>& word);

// rank(A - I) and its complement dim - rank(A - I), the dimension of the
// fixed subspace.
uint32_t commutator_rank(const F2Module& m, const F2Mat& s);
uint32_t commutator_rank(const F2Module& m, const std::vector<int>& word);
uint32_t fixed_rank(const F2Module& m, const F2Mat& s);
uint32_t fixed_rank(const F2Module& m, const std::vector<int>& word);

// Full list of composition factors, computed by exhaustive spinning: every
// nonzero vector is spun under the action, a spin of minimal dimension is a
// minimal (hence irreducible) submodule, and the quotient is processed
// recursively. Factor action lists parallel m.action, so any operator
// supplied as a generator reappears, induced, at the same index in every
// factor. seed != 0 shuffles the vector enumeration order; the factor
// dimension multiset does not depend on it.
std::vector<F2Module> composition_factors(const F2Module& m, uint64_t seed = 0);

// Looks for a composition factor F with dim(F) >= 2k which, when k >= 2, is
// moved 2-dimensionally by every designated operator: commutator_rank >= 2
// on F for each index in s0 (positions into m.action). Returns the first
// such factor, or nullopt.
std::optional<F2Module> moved_factor_witness(const F2Module& m,
                                             const std::vector<size_t>& s0,
                                             uint32_t k);

// The module structure of an elementary abelian section upper/lower of g
// under the given actors (permutations of element ids, e.g. automorphisms
// or conjugations). Requires lower <= upper with [upper,upper] and squares
// inside lower, and both subgroups invariant under every actor; violations
// throw Err::domain. Basis cosets are chosen by least element id, so the
// result is deterministic.
F2Module section_module(const Group& g, const Subgroup& upper,
                        const Subgroup& lower, const std::vector<Perm>& actors,
                        std::vector<std::string> labels = {});

// section_module of g / Phi(g) for a 2-group g.
F2Module frattini_module(const Group& g, const std::vector<Perm>& actors,
                         std::vector<std::string> labels = {});

}  // namespace crit2
