#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "crit2/extension.hpp"
#include "crit2/named.hpp"
#include "crit2/subgroup.hpp"

using namespace crit2;

namespace {

std::multiset<uint32_t> order_multiset(const Group& g) {
  std::multiset<uint32_t> s;
  for (Elt x = 0; x < g.n; x++) s.insert(element_order(g, x));
  return s;
}

uint32_t involution_count(const Group& g) {
  uint32_t c = 0;
  for (Elt x = 1; x < g.n; x++)
    if (g.op(x, x) == 0) c++;
  return c;
}

}  // namespace

TEST_CASE("cyclic and abelian constructions") {
  Group c8 = cyclic(8);
  verify_table(c8);
  CHECK(element_order(c8, 1) == 8);
  CHECK(c8.is_abelian());

  Group a = abelian({4, 4, 4});
  verify_table(a);
  CHECK(a.n == 64);
  CHECK(a.is_abelian());
  CHECK(a.gens.size() == 3);
  for (Elt g : a.gens) CHECK(element_order(a, g) == 4);
  CHECK(order_multiset(a).count(2) == 7);   // involutions of C4^3
  CHECK(order_multiset(a).count(4) == 56);

  Group e = elementary_abelian(4);
  CHECK(e.n == 16);
  CHECK(involution_count(e) == 15);
}

TEST_CASE("dihedral semidihedral quaternion element order profiles") {
  Group d8 = dihedral(8);
  verify_table(d8);
  CHECK(order_multiset(d8) == std::multiset<uint32_t>{1, 2, 2, 2, 2, 2, 4, 4});
  CHECK(center(d8).order == 2);
  CHECK(derived(d8).order == 2);

  Group q8 = quaternion(8);
  verify_table(q8);
  CHECK(order_multiset(q8) == std::multiset<uint32_t>{1, 2, 4, 4, 4, 4, 4, 4});
  CHECK(involution_count(q8) == 1);
  CHECK(center(q8).order == 2);

  Group sd16 = semidihedral(16);
  verify_table(sd16);
  auto om = order_multiset(sd16);
  CHECK(om.count(2) == 5);
  CHECK(om.count(4) == 6);
  CHECK(om.count(8) == 4);
  CHECK(center(sd16).order == 2);
  Subgroup d = derived(sd16);
  CHECK(d.order == 4);
  CHECK(is_cyclic_subgroup(d));
  CHECK(frattini(sd16).m == d.m);

  Group q16 = quaternion(16);
  CHECK(involution_count(q16) == 1);
  CHECK(order_multiset(q16).count(8) == 4);
}

TEST_CASE("unitriangular groups over small fields") {
  Group u32 = unitriangular(3, 2);
  verify_table(u32);
  CHECK(u32.n == 8);
  CHECK(!u32.is_abelian());
  CHECK(order_multiset(u32) == order_multiset(dihedral(8)));

  Group u34 = unitriangular(3, 4);
  verify_table(u34);
  CHECK(u34.n == 64);
  Subgroup z = center(u34);
  CHECK(z.order == 4);
  CHECK(z.m == derived(u34).m);
  CHECK(z.m == frattini(u34).m);
  CHECK(!is_cyclic_subgroup(z));
  // exponent 4, with all squares landing in the center
  for (Elt x = 0; x < u34.n; x++) {
    CHECK(z.contains(u34.op(x, x)));
    CHECK(element_order(u34, x) <= 4);
  }

  Group u42 = unitriangular(4, 2);
  verify_table(u42);
  CHECK(u42.n == 64);
  CHECK(center(u42).order == 2);
  CHECK(derived(u42).order == 8);
}

TEST_CASE("direct and wreath products") {
  Group d8xd16 = direct_product(dihedral(8), dihedral(16));
  verify_table(d8xd16);
  CHECK(d8xd16.n == 128);
  CHECK(center(d8xd16).order == 4);
  CHECK(derived(d8xd16).order == 8);

  Group w = wreath_c2(cyclic(2));
  CHECK(w.n == 8);
  CHECK(order_multiset(w) == order_multiset(dihedral(8)));

  Group d8w = wreath_c2(dihedral(8));
  verify_table(d8w);
  CHECK(d8w.n == 128);
  CHECK(center(d8w).order == 2);
  CHECK(derived(d8w).order == 16);
  CHECK(frattini(d8w).order == 16);

  Group c8w = wreath_c2(cyclic(8));
  CHECK(c8w.n == 128);
  // the center of a wreath square over an abelian base is the full diagonal
  Subgroup zc = center(c8w);
  CHECK(zc.order == 8);
  CHECK(is_cyclic_subgroup(zc));
  CHECK(derived(c8w).order == 8);
  CHECK(is_cyclic_subgroup(derived(c8w)));
}

TEST_CASE("central products and extraspecial groups") {
  Group p2 = extraspecial_plus(2);
  verify_table(p2);
  CHECK(p2.n == 32);
  CHECK(center(p2).order == 2);
  CHECK(derived(p2).m == center(p2).m);
  CHECK(frattini(p2).m == center(p2).m);
  CHECK(involution_count(p2) == 19);

  Group m2 = extraspecial_minus(2);
  CHECK(m2.n == 32);
  CHECK(center(m2).order == 2);
  CHECK(involution_count(m2) == 11);

  Group p3 = extraspecial_plus(3);
  CHECK(p3.n == 128);
  CHECK(involution_count(p3) == 71);

  // central product of two Q8 has plus type: Q8 o Q8 = D8 o D8
  Group qq = central_product(quaternion(8), quaternion(8));
  CHECK(qq.n == 32);
  CHECK(involution_count(qq) == 19);

  // a klein factor has three central involutions, so the default is ambiguous
  CHECK_THROWS_AS(central_product(elementary_abelian(2), quaternion(8)), Error);
  Group c4q = central_product(cyclic(4), quaternion(8));
  CHECK(c4q.n == 16);
  CHECK(center(c4q).order == 4);
}

TEST_CASE("cyclic extensions reproduce dihedral quaternion and c8") {
  Group c4 = cyclic(4);
  // inversion automorphism, t^2 = 1
  Group d8 = cyclic_extension(c4, {c4.iv(c4.gens[0])}, 2, 0, "d8x");
  CHECK(order_multiset(d8) == order_multiset(dihedral(8)));
  // inversion, t^2 = r^2
  Elt r2 = c4.op(c4.gens[0], c4.gens[0]);
  Group q8 = cyclic_extension(c4, {c4.iv(c4.gens[0])}, 2, r2, "q8x");
  CHECK(order_multiset(q8) == order_multiset(quaternion(8)));
  // identity, t^2 = r gives C8
  Group c8 = cyclic_extension(c4, {c4.gens[0]}, 2, c4.gens[0], "c8x");
  CHECK(c8.is_abelian());
  CHECK(order_multiset(c8).count(8) == 4);
}

TEST_CASE("extension consistency violations throw") {
  Group c4 = cyclic(4);
  // generator image of order 2 is not a homomorphism image for C4
  CHECK_THROWS_AS(cyclic_extension(c4, {c4.op(c4.gens[0], c4.gens[0])}, 2, 0, "bad"), Error);
  // phi must fix t^m
  Group v4 = elementary_abelian(2);
  CHECK_THROWS_AS(cyclic_extension(v4, {v4.gens[1], v4.gens[0]}, 2, v4.gens[0], "bad"), Error);
  // phi^m must be conjugation by t^m
  CHECK_THROWS_AS(cyclic_extension(c4, {c4.iv(c4.gens[0])}, 3, 0, "bad"), Error);
  // swap with t^2 = 1 is fine and gives d8
  Group w = cyclic_extension(v4, {v4.gens[1], v4.gens[0]}, 2, 0, "v4sw");
  CHECK(order_multiset(w) == order_multiset(dihedral(8)));
}

TEST_CASE("build_extension applies word specs layer by layer") {
  // D16 as C4 extended twice: first to C8 (t^2 = r), then inversion
  Group c4 = cyclic(4);
  ExtensionStep to_c8{2, {{1}}, {1}};
  ExtensionStep invert{2, {{-1}, {-2}}, {}};
  // after step one gens are (r, t); inversion sends each to its inverse
  Group d16 = build_extension(c4, {to_c8, invert}, "d16x");
  CHECK(d16.n == 16);
  CHECK(order_multiset(d16) == order_multiset(dihedral(16)));
}

TEST_CASE("named_group dispatch") {
  CHECK(named_group("dihedral", {16}).n == 16);
  CHECK(named_group("unitriangular", {3, 2}).n == 8);
  CHECK(named_group("abelian", {2, 4}).n == 8);
  CHECK_THROWS_AS(named_group("frobnicate", {1}), Error);
  CHECK_THROWS_AS(named_group("dihedral", {3}), Error);
}

TEST_CASE("regular representation round trip preserves structure") {
  for (const Group& g : {dihedral(16), unitriangular(3, 2), quaternion(8)}) {
    std::vector<std::vector<Elt>> table(g.n, std::vector<Elt>(g.n));
    for (Elt a = 0; a < g.n; a++)
      for (Elt b = 0; b < g.n; b++) table[a][b] = g.op(a, b);
    Group h = from_cayley_table(table, g.name + "_rt");
    CHECK(h.n == g.n);
    CHECK(order_multiset(h) == order_multiset(g));
    CHECK(derived(h).order == derived(g).order);
    CHECK(center(h).order == center(g).order);
  }
}
