#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "crit2/autgroup.hpp"
#include "crit2/embedded.hpp"
#include "crit2/fixtures.hpp"
#include "crit2/named.hpp"
#include "crit2/subgroup.hpp"
#include "crit2/transfer.hpp"

using namespace crit2;

namespace {

Bits full_bits(uint32_t n) {
  Bits b(n);
  for (uint32_t i = 0; i < n; i++) b.set(i);
  return b;
}

// coset-factor product over an arbitrary transversal, nothing shared with the
// library walk except the coordinate frame of the target
Elt brute_transfer(const Group& g, const Bits& hm, const SubgroupAsGroup& hg,
                   const AbelianQuotient& cod, const std::vector<Elt>& reps,
                   Elt x) {
  Elt acc = 0;
  for (Elt r : reps) {
    Elt xr = g.op(x, r);
    bool found = false;
    for (Elt c : reps) {
      Elt h = g.op(g.iv(c), xr);
      if (hm.test(h)) {
        acc = cod.q.op(acc, cod.proj[hg.from_parent[h]]);
        found = true;
        break;
      }
    }
    REQUIRE(found);
  }
  return acc;
}

std::vector<Elt> random_transversal(const Group& g, const Bits& hm,
                                    std::mt19937& rng) {
  std::vector<std::vector<Elt>> cosets;
  std::vector<int8_t> seen(g.n, 0);
  for (Elt x = 0; x < g.n; x++) {
    if (seen[x]) continue;
    std::vector<Elt> cs;
    hm.for_each([&](uint32_t h) {
      Elt y = g.op(x, Elt(h));
      seen[y] = 1;
      cs.push_back(y);
    });
    cosets.push_back(std::move(cs));
  }
  std::vector<Elt> reps;
  for (auto& cs : cosets)
    reps.push_back(cs[std::uniform_int_distribution<size_t>(
        0, cs.size() - 1)(rng)]);
  return reps;
}

// small harvest of subgroups: closures of single elements and pairs
std::vector<Bits> some_subgroups(const Group& g, size_t cap) {
  std::vector<Bits> out;
  auto push = [&](const Bits& m) {
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  };
  for (Elt x = 0; x < g.n && out.size() < cap; x++) push(closure(g, {x}).m);
  for (Elt x = 1; x < g.n && out.size() < cap; x++)
    for (Elt y = x + 1; y < g.n && out.size() < cap; y++)
      push(closure(g, {x, y}).m);
  return out;
}

Subgroup noncyclic_maximal(const Group& g, size_t which) {
  std::vector<Subgroup> ks;
  for (const Subgroup& m : maximal_subgroups(g))
    if (!is_cyclic_subgroup(m)) ks.push_back(m);
  REQUIRE(ks.size() == 2);
  return ks[which];
}

Bits kernel_of(const TransferMap& tm) {
  Bits k(tm.dom.q.n);
  for (Elt x = 0; x < tm.dom.q.n; x++)
    if (tm.map[x] == 0) k.set(x);
  return k;
}

}  // namespace

TEST_CASE("abelian quotients carry invariant factor coordinates") {
  struct Row {
    const char* name;
    QuotMode mode;
    std::vector<uint32_t> factors;
    uint32_t kernel_order;
  };
  const std::vector<Row> rows = {
      {"c4", QuotMode::derived, {4}, 1},
      {"c4", QuotMode::frattini, {2}, 2},
      {"d8", QuotMode::derived, {2, 2}, 2},
      {"d8", QuotMode::frattini, {2, 2}, 2},
      {"d16", QuotMode::derived, {2, 2}, 4},
      {"q8", QuotMode::derived, {2, 2}, 2},
      {"q8", QuotMode::frattini, {2, 2}, 2},
      {"c4xc2", QuotMode::derived, {2, 4}, 1},
      {"c4xc2", QuotMode::frattini, {2, 2}, 2},
      {"e8", QuotMode::derived, {2, 2, 2}, 1},
      {"sym4", QuotMode::derived, {2}, 12},
      {"alt4", QuotMode::derived, {3}, 4},
      {"sym3", QuotMode::derived, {2}, 3},
      {"c4xc4", QuotMode::frattini, {2, 2}, 4},
      {"sd16", QuotMode::derived, {2, 2}, 4},
  };
  for (const Row& r : rows) {
    CAPTURE(r.name);
    Group g = fixture(r.name);
    AbelianQuotient aq = abelian_quotient(g, r.mode);
    CHECK(aq.factors == r.factors);
    CHECK(aq.kernel.order == r.kernel_order);
    uint64_t prod = 1;
    for (uint32_t d : aq.factors) prod *= d;
    CHECK(prod == aq.q.n);
    for (size_t j = 0; j + 1 < aq.factors.size(); j++)
      CHECK(aq.factors[j + 1] % aq.factors[j] == 0);
    for (size_t j = 0; j < aq.basis.size(); j++)
      CHECK(element_order(aq.q, aq.basis[j]) == aq.factors[j]);
    for (uint32_t c : aq.coordinates(0)) CHECK(c == 0);
  }

  Group c12 = cyclic(12);
  CHECK(abelian_quotient(c12, QuotMode::derived).factors ==
        std::vector<uint32_t>{12});
  Group s4 = fixture("sym4");
  CHECK_THROWS_AS(abelian_quotient(s4, QuotMode::frattini), Error);

  // additivity of coordinates over every pair, checked by hand here
  for (const char* name : {"d8", "c4xc2", "alt4"}) {
    Group g = fixture(name);
    AbelianQuotient aq = abelian_quotient(g, QuotMode::derived);
    for (Elt a = 0; a < aq.q.n; a++)
      for (Elt b = 0; b < aq.q.n; b++) {
        const auto& ca = aq.coord[a];
        const auto& cb = aq.coord[b];
        const auto& cab = aq.coord[aq.q.op(a, b)];
        for (size_t j = 0; j < aq.factors.size(); j++)
          CHECK(cab[j] == (ca[j] + cb[j]) % aq.factors[j]);
      }
  }

  // same input, same frame
  Group d16 = fixture("d16");
  AbelianQuotient x = abelian_quotient(d16, QuotMode::derived);
  AbelianQuotient y = abelian_quotient(d16, QuotMode::derived);
  CHECK(x.factors == y.factors);
  CHECK(x.proj == y.proj);
  CHECK(x.coord == y.coord);
  CHECK(x.basis == y.basis);
}

TEST_CASE("transfer map classical values") {
  // trivial map onto a line of the Klein group
  {
    Group v = fixture("v4");
    TransferMap tm = transfer_map(v, closure(v, {1}), QuotMode::derived);
    for (Elt x = 0; x < tm.dom.q.n; x++) CHECK(tm.apply(x) == 0);
  }
  // the square survives: C4 onto its order-2 subgroup
  {
    Group c4 = fixture("c4");
    Elt g = 0, sq = 0;
    for (Elt x = 1; x < c4.n; x++)
      if (element_order(c4, x) == 4) g = x;
    for (Elt x = 1; x < c4.n; x++)
      if (element_order(c4, x) == 2) sq = x;
    TransferMap tm = transfer_map(c4, closure(c4, {sq}), QuotMode::derived);
    CHECK(tm.apply(tm.dom.proj[g]) != 0);
    CHECK(tm.apply(tm.dom.proj[g]) == tm.cod.proj[tm.sub->from_parent[sq]]);
    CHECK(kernel_of(tm).count() == 2);
  }
  // whole group: the identity up to renumbering
  {
    Group d8 = fixture("d8");
    TransferMap tm = transfer_map(d8, full_subgroup(d8), QuotMode::derived);
    for (Elt x = 0; x < d8.n; x++)
      CHECK(tm.apply(tm.dom.proj[x]) == tm.cod.proj[tm.sub->from_parent[x]]);
  }
  // dihedral of order 8: the cyclic maximal absorbs everything, the Klein
  // maximals keep exactly one nontrivial class and hit the central involution
  {
    Group d8 = fixture("d8");
    Elt z = 0;
    center(d8).m.for_each([&](uint32_t x) {
      if (x) z = Elt(x);
    });
    std::vector<Bits> klein_kernels;
    for (const Subgroup& m : maximal_subgroups(d8)) {
      TransferMap tm = transfer_map(d8, m, QuotMode::derived);
      Bits ker = kernel_of(tm);
      if (is_cyclic_subgroup(m)) {
        CHECK(ker.count() == tm.dom.q.n);
      } else {
        CHECK(ker.count() == 2);
        Elt zc = tm.cod.proj[tm.sub->from_parent[z]];
        CHECK(zc != 0);
        for (Elt x = 0; x < tm.dom.q.n; x++)
          if (!ker.test(x)) CHECK(tm.apply(x) == zc);
        klein_kernels.push_back(ker);
      }
    }
    REQUIRE(klein_kernels.size() == 2);
    CHECK_FALSE(klein_kernels[0] == klein_kernels[1]);
  }
  // quaternion: each cyclic maximal kernels exactly on its own image
  {
    Group q8 = fixture("q8");
    for (const Subgroup& m : maximal_subgroups(q8)) {
      TransferMap tm = transfer_map(q8, m, QuotMode::derived);
      Bits ker = kernel_of(tm);
      Bits himg(tm.dom.q.n);
      m.m.for_each([&](uint32_t h) { himg.set(tm.dom.proj[h]); });
      CHECK(ker == himg);
      CHECK(ker.count() == 2);
    }
  }
  // odd index: transfer to a Sylow 2-subgroup is injective on the
  // abelianization since inclusion following it cubes, an isomorphism here
  {
    Group s4 = fixture("sym4");
    TransferMap tm =
        transfer_map(s4, sylow_2_subgroup(s4), QuotMode::derived);
    CHECK(tm.dom.q.n == 2);
    CHECK(tm.apply(0) == 0);
    CHECK(tm.apply(1) != 0);
  }
}

TEST_CASE("transfer agrees with every transversal and stays a homomorphism") {
  std::mt19937 rng(0xc0ffee);
  for (const FixtureDef& fd : fixture_catalog()) {
    Group g = fd.build();
    if (g.n > 48) continue;
    CAPTURE(fd.name);
    size_t used = 0;
    for (const Bits& hm : some_subgroups(g, 40)) {
      uint32_t ho = hm.count();
      if (g.n / ho > 8 || ho == g.n) continue;
      if (++used > 6) break;
      Subgroup h(g, hm);
      TransferMap tm = transfer_map(g, h, QuotMode::derived);
      CHECK(tm.apply(0) == 0);
      for (Elt a = 0; a < tm.dom.q.n; a++)
        for (Elt b = 0; b < tm.dom.q.n; b++)
          CHECK(tm.map[tm.dom.q.op(a, b)] ==
                tm.cod.q.op(tm.map[a], tm.map[b]));
      for (int round = 0; round < 2; round++) {
        std::vector<Elt> reps = random_transversal(g, hm, rng);
        for (Elt x = 0; x < g.n; x++)
          CHECK(brute_transfer(g, hm, *tm.sub, tm.cod, reps, x) ==
                tm.apply(tm.dom.proj[x]));
      }
    }
  }
}

namespace {

void check_transitive(const Group& g, const Bits& hm, const Bits& km,
                      QuotMode mode) {
  REQUIRE(km.subset_of(hm));
  TransferMap gh = transfer_map(g, Subgroup(g, hm), mode);
  const Group& hgrp = gh.sub->g;
  Bits kh(hgrp.n);
  km.for_each([&](uint32_t x) { kh.set(gh.sub->from_parent[x]); });
  TransferMap hk = transfer_map(hgrp, Subgroup(hgrp, kh), mode);
  TransferMap gk = transfer_map(g, Subgroup(g, km), mode);

  // both passes over the middle group must use one frame
  REQUIRE(hk.dom.q.n == gh.cod.q.n);
  REQUIRE(hk.dom.proj == gh.cod.proj);
  REQUIRE(gk.dom.proj == gh.dom.proj);

  // identify the two materializations of the bottom group
  std::vector<Elt> phi(gk.cod.q.n, Elt(gk.cod.q.n));
  bool ok = true;
  km.for_each([&](uint32_t x) {
    Elt a = gk.cod.proj[gk.sub->from_parent[x]];
    Elt b = hk.cod.proj[hk.sub->from_parent[gh.sub->from_parent[x]]];
    if (phi[a] == Elt(gk.cod.q.n))
      phi[a] = b;
    else if (phi[a] != b)
      ok = false;
  });
  REQUIRE(ok);
  for (Elt x = 0; x < gh.dom.q.n; x++)
    CHECK(phi[gk.map[x]] == hk.map[gh.map[x]]);
}

}  // namespace

TEST_CASE("transfer composes along subgroup chains") {
  {
    Group d16 = fixture("d16");
    Elt r = 0;
    for (Elt x = 1; x < d16.n; x++)
      if (element_order(d16, x) == 8) r = x;
    Bits c8 = closure(d16, {r}).m;
    Bits c4 = closure(d16, {d16.op(r, r)}).m;
    check_transitive(d16, c8, c4, QuotMode::derived);
    check_transitive(d16, c8, c4, QuotMode::frattini);
    // through a dihedral maximal down to one of its own index-2 subgroups
    Subgroup mid = noncyclic_maximal(d16, 0);
    SubgroupAsGroup mg = subgroup_as_group(mid, "mid");
    for (const Subgroup& inner : maximal_subgroups(mg.g)) {
      Bits km(d16.n);
      inner.m.for_each([&](uint32_t x) { km.set(mg.to_parent[x]); });
      check_transitive(d16, mid.m, km, QuotMode::derived);
    }
  }
  {
    Group d8 = fixture("d8");
    for (const Subgroup& m : maximal_subgroups(d8)) {
      check_transitive(d8, m.m, center(d8).m, QuotMode::derived);
      check_transitive(d8, m.m, center(d8).m, QuotMode::frattini);
    }
    check_transitive(d8, full_bits(d8.n), noncyclic_maximal(d8, 0).m,
                     QuotMode::derived);
  }
  {
    Group q8 = fixture("q8");
    for (const Subgroup& m : maximal_subgroups(q8))
      check_transitive(q8, m.m, center(q8).m, QuotMode::derived);
  }
  {
    Group s4 = fixture("sym4");
    Subgroup syl = sylow_2_subgroup(s4);
    Subgroup v = o2_subgroup(s4);
    check_transitive(s4, syl.m, v.m, QuotMode::derived);
  }
  {
    Group g = fixture("c4xc4");
    Subgroup f = frattini(g);
    check_transitive(g, maximal_subgroups(g)[0].m, f.m, QuotMode::derived);
  }
}

TEST_CASE("transfer commutes with automorphisms fixing the subgroup") {
  for (const char* name : {"d8", "q8", "d16", "sd16"}) {
    CAPTURE(name);
    Group g = fixture(name);
    AutGroup a = automorphism_group(g);
    std::vector<Subgroup> targets = maximal_subgroups(g);
    targets.push_back(center(g));
    size_t hits = 0;
    for (const Subgroup& h : targets) {
      if (h.order == 1 || h.order == g.n) continue;
      for (const Perm& alpha : a.gens) {
        Bits moved(g.n);
        h.m.for_each([&](uint32_t x) { moved.set(alpha[x]); });
        if (!(moved == h.m)) continue;
        hits++;
        TransferMap tm = transfer_map(g, h, QuotMode::derived);
        Perm dbar = induced_on_quotient(tm.dom, alpha);
        Perm beta(tm.sub->g.n);
        h.m.for_each([&](uint32_t x) {
          beta[tm.sub->from_parent[x]] = tm.sub->from_parent[alpha[x]];
        });
        Perm cbar = induced_on_quotient(tm.cod, beta);
        for (Elt y = 0; y < tm.dom.q.n; y++)
          CHECK(cbar[tm.apply(y)] == tm.apply(dbar[y]));
      }
    }
    CHECK(hits > 0);
  }
}

TEST_CASE("kernel intersections over the maximal subgroups") {
  // dihedral of order 8 cuts the full quotient to nothing in both modes
  {
    Group d8 = fixture("d8");
    for (QuotMode mode : {QuotMode::derived, QuotMode::frattini}) {
      KernelIntersection ki = transfer_kernel_intersection(d8, mode);
      CHECK(ki.kernel.count() == 1);
      CHECK(ki.kernel.test(0));
    }
  }
  // quaternion: trivial in derived mode, but -1 generates each maximal's
  // Frattini subgroup, so the Frattini-mode transfers all collapse
  {
    Group q8 = fixture("q8");
    CHECK(transfer_kernel_intersection(q8, QuotMode::derived).kernel.count() ==
          1);
    CHECK(transfer_kernel_intersection(q8, QuotMode::frattini).kernel.count() ==
          4);
  }
  // cyclic: the single maximal keeps its own image in derived mode only
  {
    Group c4 = fixture("c4");
    CHECK(transfer_kernel_intersection(c4, QuotMode::derived).kernel.count() ==
          2);
    CHECK(transfer_kernel_intersection(c4, QuotMode::frattini).kernel.count() ==
          1);
  }
  // elementary abelian: every transfer to an index-2 subgroup squares, so
  // every kernel is everything
  {
    Group e8 = fixture("e8");
    for (QuotMode mode : {QuotMode::derived, QuotMode::frattini}) {
      KernelIntersection ki = transfer_kernel_intersection(e8, mode);
      CHECK(ki.kernel.count() == 8);
    }
  }
  // abelian but not elementary: all three kernels agree on the square index
  {
    Group g = fixture("c4xc2");
    KernelIntersection ki = transfer_kernel_intersection(g, QuotMode::derived);
    CHECK(ki.kernel.count() == 4);
  }
  // the order-128 direct product passing the whole necessary-condition
  // screen: both intersections collapse to the identity
  {
    Group g = fixture("d8xd16");
    for (QuotMode mode : {QuotMode::derived, QuotMode::frattini}) {
      KernelIntersection ki = transfer_kernel_intersection(g, mode);
      CHECK(ki.kernel.count() == 1);
    }
  }
  Group s4 = fixture("sym4");
  CHECK_THROWS_AS(transfer_kernel_intersection(s4, QuotMode::derived),
                  Error);
}

TEST_CASE("fixed subgroups of the transfer data") {
  // no constraints: the whole quotient comes back
  {
    Group g = fixture("c4xc2");
    FixedResult fr =
        transfer_fixed_subgroup(g, QuotMode::derived, {}, {});
    CHECK(fr.fixed.count() == 8);
    FixedResult ff =
        transfer_fixed_subgroup(g, QuotMode::frattini, {}, {});
    CHECK(ff.fixed.count() == 4);
  }
  // the full linear group moves every nonzero vector
  {
    Group e8 = fixture("e8");
    std::vector<Perm> odd = odd_residual_generators(automorphism_group(e8));
    REQUIRE(!odd.empty());
    FixedResult fr = transfer_fixed_subgroup(e8, QuotMode::derived, odd, {});
    CHECK(fr.fixed.count() == 1);
  }
  // dihedral of order 8 against its Klein maximals: one Klein leaves the
  // diagonal class alive, the second kills it
  {
    Group d8 = fixture("d8");
    auto crit_data = [&](size_t which) {
      Subgroup k = noncyclic_maximal(d8, which);
      std::vector<Perm> odd =
          odd_residual_generators(automorphism_group(subgroup_as_group(k, "k").g));
      REQUIRE(!odd.empty());
      return std::make_pair(k, odd);
    };
    for (QuotMode mode : {QuotMode::derived, QuotMode::frattini}) {
      FixedResult one = transfer_fixed_subgroup(d8, mode, {}, {crit_data(0)});
      CHECK(one.fixed.count() == 2);
      FixedResult both = transfer_fixed_subgroup(
          d8, mode, {}, {crit_data(0), crit_data(1)});
      CHECK(both.fixed.count() == 1);
    }
  }
  // a 2-group worth of automorphisms never cuts anything
  {
    Group q8 = fixture("q8");
    Subgroup m = maximal_subgroups(q8)[0];
    std::vector<Perm> none =
        odd_residual_generators(automorphism_group(subgroup_as_group(m, "m").g));
    CHECK(none.empty());
    FixedResult fr =
        transfer_fixed_subgroup(q8, QuotMode::derived, {}, {{m, none}});
    CHECK(fr.fixed.count() == 4);
  }
  // degree mismatches are caller bugs
  {
    Group d8 = fixture("d8");
    CHECK_THROWS_AS(transfer_fixed_subgroup(
                        d8, QuotMode::derived, {Perm(3)}, {}),
                    Error);
    Group q8 = fixture("q8");
    Subgroup foreign = maximal_subgroups(q8)[0];
    CHECK_THROWS_AS(transfer_fixed_subgroup(d8, QuotMode::derived, {},
                                                  {{foreign, {}}}),
                    Error);
  }
}

TEST_CASE("transfer results are deterministic") {
  Group d16 = fixture("d16");
  Subgroup m = maximal_subgroups(d16)[1];
  TransferMap a = transfer_map(d16, m, QuotMode::derived);
  TransferMap b = transfer_map(d16, m, QuotMode::derived);
  CHECK(a.map == b.map);
  CHECK(a.dom.factors == b.dom.factors);
  KernelIntersection k1 = transfer_kernel_intersection(d16, QuotMode::derived);
  KernelIntersection k2 = transfer_kernel_intersection(d16, QuotMode::derived);
  CHECK(k1.kernel == k2.kernel);
}
