#include "crit2/fixtures.hpp"

#include <algorithm>

#include "crit2/extension.hpp"
#include "crit2/named.hpp"

namespace crit2 {

Group a12_sylow() {
  // commuting involution products generating a Sylow 2-subgroup of Alt(12)
  std::vector<std::vector<uint32_t>> gens = {
      {2, 1, 4, 3, 5, 6, 7, 8, 9, 10, 11, 12},    // a1 = (1 2)(3 4)
      {1, 2, 3, 4, 6, 5, 8, 7, 9, 10, 11, 12},    // a2 = (5 6)(7 8)
      {1, 2, 3, 4, 5, 6, 7, 8, 10, 9, 12, 11},    // a3 = (9 10)(11 12)
      {3, 4, 1, 2, 5, 6, 7, 8, 9, 10, 11, 12},    // b1 = (1 3)(2 4)
      {1, 2, 3, 4, 7, 8, 5, 6, 9, 10, 11, 12},    // b2 = (5 7)(6 8)
      {1, 2, 3, 4, 5, 6, 7, 8, 11, 12, 9, 10},    // b3 = (9 11)(10 12)
      {2, 1, 3, 4, 6, 5, 7, 8, 9, 10, 11, 12},    // mu12 = (1 2)(5 6)
      {1, 2, 3, 4, 6, 5, 7, 8, 10, 9, 11, 12},    // mu23 = (5 6)(9 10)
      {5, 6, 7, 8, 1, 2, 3, 4, 9, 10, 11, 12},    // tau = (1 5)(2 6)(3 7)(4 8)
  };
  Group g = from_permutation_generators(12, gens, "a12-sylow");
  if (g.n != 512) throw Error(Err::inconsistency, "a12-sylow closure has wrong order");
  return g;
}

namespace {

Group on_hs_skeleton(bool on) {
  Group a = abelian({4, 4, 4});
  // Adjoin s of index 4. The defining relations act on the right
  // (v^s = s^-1 v s: v1 -> v2 -> v3 -> v1 v2^-1 v3), so conjugation by s on
  // the left is the inverse cycle.
  ExtensionStep add_s;
  add_s.index = 4;
  add_s.phi = {{1, -2, 3}, {1}, {2}};
  if (on) add_s.power = {1, 3};  // s^4 = v1 v3
  // Adjoin the involution t: v1 -> v3^-1, v2 -> v2^-1, v3 -> v1^-1, s -> s^-1.
  ExtensionStep add_t;
  add_t.index = 2;
  add_t.phi = {{-3}, {-2}, {-1}, {-4}};
  Group g = build_extension(a, {add_s, add_t}, on ? "on-sylow" : "hs-sylow");
  if (g.n != 512) throw Error(Err::inconsistency, "extension has wrong order");
  return g;
}

}  // namespace

Group on_sylow() { return on_hs_skeleton(true); }
Group hs_sylow() { return on_hs_skeleton(false); }

Group psp6_sylow() {
  Group w = wreath_c2(quaternion(8));
  Group g = central_product(w, quaternion(8), "psp6-sylow");
  if (g.n != 512) throw Error(Err::inconsistency, "central product has wrong order");
  return g;
}

const std::vector<FixtureDef>& fixture_catalog() {
  static const std::vector<FixtureDef> defs = [] {
    std::vector<FixtureDef> v;
    auto add = [&](std::string name, bool corpus, std::function<Group()> b) {
      // catalog key wins over whatever the constructor called the group
      auto build = [name, b = std::move(b)] {
        Group g = b();
        g.name = name;
        return g;
      };
      v.push_back({std::move(name), corpus, std::move(build)});
    };
    // abelian corpus entries
    add("c4", true, [] { return cyclic(4); });
    add("c8", true, [] { return cyclic(8); });
    add("c16", true, [] { return cyclic(16); });
    add("c32", true, [] { return cyclic(32); });
    add("c64", true, [] { return cyclic(64); });
    add("v4", true, [] { return elementary_abelian(2); });
    add("e8", true, [] { return elementary_abelian(3); });
    add("e16", true, [] { return elementary_abelian(4); });
    add("c4xc2", true, [] { return abelian({4, 2}); });
    add("c4xc4", true, [] { return abelian({4, 4}); });
    add("c8xc2", true, [] { return abelian({8, 2}); });
    // dihedral / semidihedral / quaternion corpus
    add("d8", true, [] { return dihedral(8); });
    add("d16", true, [] { return dihedral(16); });
    add("d32", true, [] { return dihedral(32); });
    add("d64", true, [] { return dihedral(64); });
    add("sd16", true, [] { return semidihedral(16); });
    add("sd32", true, [] { return semidihedral(32); });
    add("sd64", true, [] { return semidihedral(64); });
    add("q8", true, [] { return quaternion(8); });
    add("q16", true, [] { return quaternion(16); });
    add("q32", true, [] { return quaternion(32); });
    add("q64", true, [] { return quaternion(64); });
    // matrix groups and products
    add("ut32", true, [] { return unitriangular(3, 2); });
    add("ut42", true, [] { return unitriangular(4, 2); });
    add("ut34", true, [] { return unitriangular(3, 4); });
    add("d8xc2", true, [] { return direct_product(dihedral(8), cyclic(2)); });
    add("q8xc2", true, [] { return direct_product(quaternion(8), cyclic(2)); });
    add("d8xc4", true, [] { return direct_product(dihedral(8), cyclic(4)); });
    add("d8xd8", true, [] { return direct_product(dihedral(8), dihedral(8)); });
    add("d8xq8", true, [] { return direct_product(dihedral(8), quaternion(8)); });
    add("es32+", true, [] { return extraspecial_plus(2); });
    add("es32-", true, [] { return extraspecial_minus(2); });
    add("c4wr2", true, [] { return wreath_c2(cyclic(4)); });
    add("c2wr2", true, [] { return wreath_c2(cyclic(2)); });
    add("q8od8", true, [] { return central_product(quaternion(8), dihedral(8)); });
    // order-128 filter fixtures
    add("d8wr2", false, [] { return wreath_c2(dihedral(8)); });
    add("d8xd16", false, [] { return direct_product(dihedral(8), dihedral(16)); });
    add("d8xsd16", false, [] { return direct_product(dihedral(8), semidihedral(16)); });
    add("d128", false, [] { return dihedral(128); });
    add("sd128", false, [] { return semidihedral(128); });
    add("c8wr2", false, [] { return wreath_c2(cyclic(8)); });
    // order-512 constructions
    add("a12-sylow", false, a12_sylow);
    add("on-sylow", false, on_sylow);
    add("hs-sylow", false, hs_sylow);
    add("psp6-sylow", false, psp6_sylow);
    add("d16wr2", false, [] { return wreath_c2(dihedral(16)); });
    add("sd16wr2", false, [] { return wreath_c2(semidihedral(16)); });
    // non-2-groups exercising the embedding oracle
    add("sym3", false, [] {
      return from_permutation_generators(3, {{2, 1, 3}, {2, 3, 1}}, "sym3");
    });
    add("alt4", false, [] {
      return from_permutation_generators(4, {{2, 3, 1, 4}, {2, 1, 4, 3}}, "alt4");
    });
    add("sym4", false, [] {
      return from_permutation_generators(4, {{2, 1, 3, 4}, {2, 3, 4, 1}}, "sym4");
    });
    add("sym5", false, [] {
      return from_permutation_generators(5, {{2, 1, 3, 4, 5}, {2, 3, 4, 5, 1}}, "sym5");
    });
    add("alt5", false, [] {
      return from_permutation_generators(5, {{2, 3, 1, 4, 5}, {1, 2, 4, 5, 3}}, "alt5");
    });
    add("alt6", false, [] {
      return from_permutation_generators(6, {{2, 3, 4, 5, 1, 6}, {1, 2, 3, 5, 6, 4}}, "alt6");
    });
    add("psl27", false, [] {
      return from_permutation_generators(
          8, {{1, 3, 4, 5, 6, 7, 8, 2}, {2, 1, 8, 5, 4, 7, 6, 3}}, "psl27");
    });
    add("psl28", false, [] {
      // projective line over GF(8): 1 = inf, 2 = 0, 2+k = alpha^(k-1);
      // generators z -> alpha*z, z -> z+1, z -> 1/z
      return from_permutation_generators(9,
                                         {{1, 2, 4, 5, 6, 7, 8, 9, 3},
                                          {1, 3, 2, 6, 9, 4, 8, 7, 5},
                                          {2, 1, 3, 9, 8, 7, 6, 5, 4}},
                                         "psl28");
    });
    return v;
  }();
  return defs;
}

bool is_fixture(const std::string& name) {
  for (const auto& d : fixture_catalog())
    if (d.name == name) return true;
  return false;
}

Group fixture(const std::string& name) {
  for (const auto& d : fixture_catalog())
    if (d.name == name) return d.build();
  throw Error(Err::usage, "unknown fixture: " + name);
}

}  // namespace crit2
