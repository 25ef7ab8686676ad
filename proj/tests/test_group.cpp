#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "crit2/group.hpp"
#include "crit2/subgroup.hpp"

using namespace crit2;

namespace {

// Hand-written dihedral group of order 8 on {1, r, r2, r3, s, rs, r2s, r3s}
// with s r s = r^-1. Written out literally so the table itself is the anchor,
// not any construction code.
Group d8_hand() {
  std::vector<std::vector<Elt>> t = {
      {0, 1, 2, 3, 4, 5, 6, 7},
      {1, 2, 3, 0, 5, 6, 7, 4},
      {2, 3, 0, 1, 6, 7, 4, 5},
      {3, 0, 1, 2, 7, 4, 5, 6},
      {4, 7, 6, 5, 0, 3, 2, 1},
      {5, 4, 7, 6, 1, 0, 3, 2},
      {6, 5, 4, 7, 2, 1, 0, 3},
      {7, 6, 5, 4, 3, 2, 1, 0},
  };
  return from_cayley_table(t, "d8_hand");
}

Group sym3() {
  return from_permutation_generators(3, {{2, 1, 3}, {2, 3, 1}}, "sym3");
}

// independent slow closure: saturate by forming all pairwise products
Bits slow_closure(const Group& g, std::vector<Elt> seed) {
  seed.push_back(0);
  Bits in(g.n);
  for (Elt x : seed) in.set(x);
  bool grew = true;
  while (grew) {
    grew = false;
    auto mem = in.to_list();
    for (Elt a : mem)
      for (Elt b : mem) {
        Elt c = g.op(Elt(a), Elt(b));
        if (!in.test(c)) {
          in.set(c);
          grew = true;
        }
      }
  }
  return in;
}

}  // namespace

TEST_CASE("hand cayley table passes verification and has dihedral structure") {
  Group g = d8_hand();
  verify_table(g);
  CHECK(g.n == 8);
  CHECK(!g.is_abelian());
  CHECK(g.is_2group());
  CHECK(element_order(g, 1) == 4);
  CHECK(element_order(g, 2) == 2);
  CHECK(element_order(g, 4) == 2);
  CHECK(element_order(g, 5) == 2);

  Subgroup z = center(g);
  CHECK(z.order == 2);
  CHECK(z.contains(2));

  Subgroup d = derived(g);
  CHECK(d.order == 2);
  CHECK(d.contains(2));

  Subgroup phi = frattini(g);
  CHECK(phi.m == d.m);

  auto cc = conjugacy_classes(g);
  std::multiset<size_t> sizes;
  for (auto& m : cc.members) sizes.insert(m.size());
  CHECK(sizes == std::multiset<size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("permutation construction is deterministic and BFS numbered") {
  Group a = sym3();
  Group b = sym3();
  CHECK(a.n == 6);
  CHECK(a.mul == b.mul);
  CHECK(a.gens == b.gens);
  verify_table(a);
  CHECK(!a.is_abelian());

  // recovered element actions multiply like the table says
  for (Elt x = 0; x < a.n; x++)
    for (Elt y = 0; y < a.n; y++) {
      Perm px = element_permutation(a, x);
      Perm py = element_permutation(a, y);
      CHECK(perm_compose(px, py) == element_permutation(a, a.op(x, y)));
    }
}

TEST_CASE("bad permutation input is rejected") {
  CHECK_THROWS_AS(from_permutation_generators(3, {{1, 1, 2}}, "dup"), Error);
  CHECK_THROWS_AS(from_permutation_generators(3, {{0, 1, 2}}, "zero"), Error);
  CHECK_THROWS_AS(from_permutation_generators(3, {{1, 2}}, "short"), Error);
}

TEST_CASE("bad cayley tables are rejected") {
  // identity fine, but row 1 repeats an entry
  std::vector<std::vector<Elt>> bad = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(from_cayley_table(bad, "bad"), Error);
  // order-3 latin square that is not associative: x*y = (2x + 2y) mod 3 has
  // identity 0 and inverses but (1*1)*2 != 1*(1*2)
  std::vector<std::vector<Elt>> nonassoc = {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  CHECK_THROWS_AS(from_cayley_table(nonassoc, "nonassoc"), Error);
}

TEST_CASE("group_from_fn renumbering is generator BFS") {
  // C12 as Z/12 with the generator 5: after renumbering, id 1 must be the
  // generator and powers follow discovery order
  Group c12 = group_from_fn(12, [](Elt a, Elt b) { return Elt((a + b) % 12); }, {5}, "c12");
  verify_table(c12);
  CHECK(c12.is_abelian());
  CHECK(!c12.is_2group());
  CHECK(c12.gens == std::vector<Elt>{1});
  CHECK(element_order(c12, 1) == 12);
  // orders of all elements in a cyclic group of order 12
  std::multiset<uint32_t> ords;
  for (Elt x = 0; x < 12; x++) ords.insert(element_order(c12, x));
  CHECK(ords == std::multiset<uint32_t>{1, 2, 3, 3, 4, 4, 6, 6, 12, 12, 12, 12});
}

TEST_CASE("closure matches slow saturation on dihedral and symmetric fixtures") {
  for (const Group& g : {d8_hand(), sym3()}) {
    for (Elt x = 0; x < g.n; x++)
      for (Elt y = 0; y < g.n; y++) {
        Subgroup h = closure(g, {x, y});
        CHECK(h.m == slow_closure(g, {x, y}));
      }
  }
}

TEST_CASE("subgroup helpers agree with definitions on d8") {
  Group g = d8_hand();
  // <r> is cyclic of order 4
  Subgroup r = closure(g, {1});
  CHECK(r.order == 4);
  CHECK(is_cyclic_subgroup(r));
  CHECK(is_normal(r));
  // <s> has centralizer {1, s, r2, r2s} and a conjugacy class of size 2
  Subgroup s = closure(g, {4});
  CHECK(s.order == 2);
  Subgroup cs = centralizer(g, s);
  CHECK(cs.order == 4);
  CHECK(cs.m == closure(g, {4, 2}).m);
  Subgroup ns = normalizer(g, s);
  CHECK(ns.m == cs.m);
  auto cls = subgroup_conjugacy_class(g, s);
  CHECK(cls.size() == 2);
  CHECK(cls[0].contains(4));
  CHECK(cls[1].contains(6));
  CHECK(canonical_class_rep(g, cls[1].m) == cls[0].m);
  // normal closure of s is the klein group <s, r2>
  Subgroup nc = normal_closure_in(full_subgroup(g), s.m);
  CHECK(nc.order == 4);
  CHECK(is_subgroup_abelian(nc));
  CHECK(!is_cyclic_subgroup(nc));
  // [G, G] via the two-argument commutator
  Bits all = full_subgroup(g).m;
  CHECK(commutator_subgroup(g, all, all).m == derived(g).m);
}

TEST_CASE("maximal subgroups of d8 are the three order-4 subgroups") {
  Group g = d8_hand();
  auto maxs = maximal_subgroups(g);
  REQUIRE(maxs.size() == 3);
  int cyclic = 0, klein = 0;
  Bits meet = maxs[0].m;
  for (auto& m : maxs) {
    CHECK(m.order == 4);
    CHECK(is_normal(m));
    meet &= m.m;
    (is_cyclic_subgroup(m) ? cyclic : klein)++;
  }
  CHECK(cyclic == 1);
  CHECK(klein == 2);
  CHECK(meet == frattini(g).m);
}

TEST_CASE("quotient of d8 by its center is klein") {
  Group g = d8_hand();
  auto qr = quotient_group(g, center(g));
  verify_table(qr.q);
  CHECK(qr.q.n == 4);
  CHECK(qr.q.is_abelian());
  for (Elt x = 0; x < qr.q.n; x++) CHECK(qr.q.op(x, x) == 0);
  // projection is a homomorphism
  for (Elt a = 0; a < g.n; a++)
    for (Elt b = 0; b < g.n; b++)
      CHECK(qr.proj[g.op(a, b)] == qr.q.op(qr.proj[a], qr.proj[b]));
}

TEST_CASE("quotient by a non-normal subgroup throws") {
  Group g = d8_hand();
  Subgroup s = closure(g, {4});
  CHECK(!is_normal(s));
  CHECK_THROWS_AS(quotient_group(g, s), Error);
}

TEST_CASE("subgroup_as_group round trips and preserves products") {
  Group g = d8_hand();
  Subgroup k = closure(g, {4, 2});  // klein four
  auto sub = subgroup_as_group(k, "v4");
  verify_table(sub.g);
  CHECK(sub.g.n == 4);
  CHECK(sub.g.is_abelian());
  for (Elt a = 0; a < 4; a++) {
    CHECK(sub.from_parent[sub.to_parent[a]] == a);
    for (Elt b = 0; b < 4; b++)
      CHECK(sub.to_parent[sub.g.op(a, b)] == g.op(sub.to_parent[a], sub.to_parent[b]));
  }
  for (Elt p = 0; p < g.n; p++)
    if (!k.contains(p)) CHECK(sub.from_parent[p] == 4);
}

TEST_CASE("upper central series step and omega1") {
  // d16 = <r, s | r^8, s^2, srs = r^-1> via fn construction on pairs (i, e)
  auto idx = [](Elt i, Elt e) { return Elt(e * 8 + i); };
  Group d16 = group_from_fn(
      16,
      [&](Elt a, Elt b) {
        Elt ia = a % 8, ea = a / 8, ib = b % 8, eb = b / 8;
        // (r^ia s^ea)(r^ib s^eb): move s^ea past r^ib
        Elt i = ea ? (ia + 8 - ib) % 8 : (ia + ib) % 8;
        return idx(i, ea ^ eb);
      },
      {idx(1, 0), idx(0, 1)}, "d16");
  verify_table(d16);
  CHECK(center(d16).order == 2);
  Subgroup z2 = upper_central_2(d16);
  CHECK(z2.order == 4);
  CHECK(is_cyclic_subgroup(z2));
  // omega1 of the cyclic <r> is the order-2 subgroup; omega1 of d16 has
  // index 2 since 8 of the reflections square to 1 but r does not
  Subgroup rgrp = closure(d16, {d16.gens[0]});
  CHECK(rgrp.order == 8);
  CHECK(omega1(rgrp).order == 2);
  Subgroup o1 = omega1(full_subgroup(d16));
  CHECK(o1.order == 16);  // reflections generate everything: rs * s = r
}

TEST_CASE("extend by a normalizing element equals plain closure") {
  Group g = d8_hand();
  for (Elt seed = 0; seed < g.n; seed++) {
    Subgroup h = closure(g, {seed});
    for (Elt x = 0; x < g.n; x++) {
      Subgroup a = extend(h, x);
      Bits b = h.m;
      b.set(x);
      CHECK(a.m == closure_bits(g, b).m);
    }
  }
}

TEST_CASE("greedy generators regenerate the group") {
  for (const Group& g : {d8_hand(), sym3()}) {
    auto gen = greedy_generators(g);
    CHECK(closure(g, gen).order == g.n);
  }
}
