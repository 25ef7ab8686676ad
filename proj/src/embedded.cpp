#include "crit2/embedded.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "crit2/autgroup.hpp"

namespace crit2 {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "not_decided";
  }
}

Subgroup sylow_2_subgroup(const Group& g) {
  Subgroup t = trivial_subgroup(g);
  uint64_t want = two_part(g.n);
  while (t.order < want) {
    Subgroup nz = normalizer(g, t);
    Elt pick = g.n;
    for (Elt x = nz.m.next_set(1); x < g.n; x = nz.m.next_set(x + 1)) {
      if (!t.m.test(x) && is_pow2(element_order(g, x))) { pick = x; break; }
    }
    // a proper 2-subgroup always grows inside its normalizer
    if (pick == g.n)
      throw Error(Err::inconsistency, "sylow ascent stalled in " + g.name);
    t = extend(t, pick);
    if (!is_pow2(t.order))
      throw Error(Err::inconsistency, "sylow ascent left the 2-world in " + g.name);
  }
  return t;
}

Subgroup o2_subgroup(const Group& g) {
  Subgroup t = sylow_2_subgroup(g);
  if (t.order <= 1) return t;
  std::vector<Elt> gens = g.gens.empty() ? greedy_generators(g) : g.gens;
  Bits c = t.m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elt x : gens) {
      Bits cx = conjugate_bits(g, c, x);
      if (cx != c) {
        c &= cx;  // conjugates have equal size, so this strictly shrinks
        changed = true;
      }
    }
  }
  return Subgroup(g, c);
}

bool is_strongly_2_embedded(const Group& g, const Bits& h) {
  uint32_t hn = h.count();
  if (!h.test(0) || hn == g.n || hn % 2) return false;
  std::vector<Elt> invs;
  h.for_each([&](uint32_t x) {
    if (x && g.op(Elt(x), Elt(x)) == 0) invs.push_back(Elt(x));
  });
  if (invs.empty()) return false;  // even order forces an involution
  for (Elt x = 1; x < g.n; x++) {
    if (h.test(x)) continue;
    Elt xi = g.iv(x);
    // t in h ∩ x h x^-1 iff x^-1 t x in h
    for (Elt t : invs)
      if (h.test(g.conj(xi, t))) return false;
  }
  return true;
}

namespace {

// BFS over the overgroups of seed: adjoin one element at a time, skipping the
// rest of its left coset (⟨H, hx⟩ = ⟨H, x⟩). Nodes failing expand_gate are
// recorded but not grown further. Returns nodes in discovery order, or
// nullopt when more than node_cap subgroups or work_cap extensions appear.
template <typename Gate>
std::optional<std::vector<Bits>> overgroups_of(const Group& g, const Bits& seed,
                                               uint64_t node_cap, uint64_t work_cap,
                                               Gate expand_gate) {
  std::vector<Bits> order;
  std::unordered_set<Bits, BitsHash> seen;
  seen.insert(seed);
  order.push_back(seed);
  uint64_t work = 0;
  for (size_t qi = 0; qi < order.size(); qi++) {
    Bits h = order[qi];
    if (h.count() == g.n || !expand_gate(h)) continue;
    Subgroup hs(g, h);
    Bits tried = h;
    for (Elt x = 1; x < g.n; x++) {
      if (tried.test(x)) continue;
      if (++work > work_cap) return std::nullopt;
      Subgroup ext = extend(hs, x);
      h.for_each([&](uint32_t e) { tried.set(g.op(Elt(x), Elt(e))); });
      if (seen.insert(ext.m).second) {
        if (seen.size() > node_cap) return std::nullopt;
        order.push_back(ext.m);
      }
    }
  }
  return order;
}

}  // namespace

EmbeddingVerdict has_strongly_2_embedded(const Group& g, const Caps& caps) {
  EmbeddingVerdict v;
  if (g.n > caps.oracle_cap) {
    v.note = "group order " + std::to_string(g.n) + " exceeds the oracle cap";
    return v;
  }
  if (g.n % 2) {
    v.status = Tri::no;
    v.note = "odd order";
    return v;
  }
  Subgroup t = sylow_2_subgroup(g);
  v.sylow = t.m;
  // every strongly 2-embedded subgroup contains a full Sylow normalizer:
  // for its own Sylow T and x normalizing T, T <= H ∩ xHx^-1 forces x in H
  Subgroup nt = normalizer(g, t);
  auto cands = overgroups_of(g, nt.m, caps.oracle_cap, caps.candidate_cap,
                             [](const Bits&) { return true; });
  if (!cands) {
    v.note = "overgroup search exceeded caps";
    return v;
  }
  std::sort(cands->begin(), cands->end(), [](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.lex_less(b);
  });
  for (const Bits& h : *cands) {
    if (h.count() == g.n) continue;
    if (!is_strongly_2_embedded(g, h)) continue;
    if (o2_subgroup(g).order != 1)
      throw Error(Err::inconsistency,
                  "strongly 2-embedded subgroup found with O2 != 1 in " + g.name);
    v.status = Tri::yes;
    v.inner = h;
    v.outer = full_subgroup(g).m;
    v.note = "subgroup of order " + std::to_string(h.count());
    return v;
  }
  v.status = Tri::no;
  return v;
}

Perm restricted_conj_perm(const Group& s, const SubgroupAsGroup& pg, Elt n) {
  uint32_t pn = pg.g.n;
  Perm q(pn);
  for (uint32_t x = 0; x < pn; x++) {
    Elt img = s.conj(n, pg.to_parent[x]);
    Elt y = pg.from_parent[img];
    if (y >= pn)
      throw Error(Err::usage, "element does not normalize the subgroup");
    q[x] = uint16_t(y);
  }
  return q;
}

namespace {

// lexicographically least element of the coset alpha*Inn
Perm coset_key(const Perm& alpha, const std::vector<Perm>& inns) {
  Perm best = perm_compose(alpha, inns[0]);
  for (size_t i = 1; i < inns.size(); i++) {
    Perm c = perm_compose(alpha, inns[i]);
    if (c < best) best = c;
  }
  return best;
}

}  // namespace

std::optional<OuterData> outer_automorphisms(const Group& s, const Subgroup& p,
                                             const Caps& caps, std::string* why) {
  if (p.G != &s) throw Error(Err::usage, "subgroup belongs to a different group");
  auto fail = [&](const std::string& msg) -> std::optional<OuterData> {
    if (why) *why = msg;
    return std::nullopt;
  };
  SubgroupAsGroup pg = subgroup_as_group(p, s.name + "|P" + std::to_string(p.order));
  AutGroup a;
  try {
    a = automorphism_group(pg.g, caps);
  } catch (const Error& e) {
    if (e.kind == Err::resource || e.kind == Err::size_cap)
      return fail(std::string("automorphism search gave up: ") + e.what());
    throw;
  }

  // distinct inner automorphisms, discovery order
  std::vector<Perm> inns;
  std::unordered_set<Perm, PermHash> inn_seen;
  for (Elt z = 0; z < pg.g.n; z++) {
    Perm c = conj_perm(pg.g, z);
    if (inn_seen.insert(c).second) inns.push_back(std::move(c));
  }
  if (inns.size() != a.inner_order)
    throw Error(Err::inconsistency, "inner automorphism count mismatch");
  if (a.order % inns.size() != 0)
    throw Error(Err::inconsistency, "inner order does not divide |Aut|");
  unsigned __int128 big = a.order / inns.size();
  if (big > caps.oracle_cap)
    return fail("outer automorphism group too large for the oracle cap");
  uint32_t on = uint32_t(big);

  // coset BFS over the slim generators; ids in discovery order
  std::unordered_map<Perm, Elt, PermHash> id_of;
  std::vector<Perm> rep;
  std::vector<std::pair<Elt, size_t>> via;  // node -> (parent, generator)
  rep.push_back(coset_key(perm_identity(pg.g.n), inns));
  id_of.emplace(rep[0], 0);
  via.emplace_back(0, 0);
  std::vector<std::vector<Elt>> edge(a.gens.size());
  for (size_t qi = 0; qi < rep.size(); qi++) {
    Perm cur = rep[qi];  // copy: rep may reallocate while we append
    for (size_t gi = 0; gi < a.gens.size(); gi++) {
      Perm key = coset_key(perm_compose(cur, a.gens[gi]), inns);
      auto it = id_of.find(key);
      Elt to;
      if (it == id_of.end()) {
        to = Elt(rep.size());
        if (to >= on)
          throw Error(Err::inconsistency, "more cosets than |Aut:Inn| allows");
        id_of.emplace(key, to);
        rep.push_back(std::move(key));
        via.emplace_back(Elt(qi), gi);
      } else {
        to = it->second;
      }
      if (edge[gi].size() <= qi) edge[gi].resize(qi + 1);
      edge[gi][qi] = to;
    }
  }
  if (rep.size() != on)
    throw Error(Err::inconsistency, "coset scan found " + std::to_string(rep.size()) +
                                        " cosets, expected " + std::to_string(on));
  for (auto& e : edge) e.resize(on);

  Group out;
  out.n = on;
  out.name = "Out(" + pg.g.name + ")";
  out.prov.kind = "cayley";
  out.prov.summary = "outer automorphism classes of a subgroup of " + s.name;
  out.mul.resize(size_t(on) * on);
  out.inv.resize(on);
  // right-multiplication tables: column j folds back to column parent(j)
  for (Elt i = 0; i < on; i++) out.mul[size_t(i) * on] = uint16_t(i);
  for (Elt j = 1; j < on; j++) {
    auto [pj, gj] = via[j];
    const std::vector<Elt>& e = edge[gj];
    for (Elt i = 0; i < on; i++)
      out.mul[size_t(i) * on + j] = uint16_t(e[out.mul[size_t(i) * on + pj]]);
  }
  for (Elt i = 0; i < on; i++) {
    Elt j = 0;
    while (j < on && out.mul[size_t(i) * on + j] != 0) j++;
    if (j == on) throw Error(Err::inconsistency, "coset table has no inverse");
    out.inv[i] = uint16_t(j);
  }
  for (size_t gi = 0; gi < a.gens.size(); gi++) {
    Elt c = edge[gi][0];
    if (c != 0 && std::find(out.gens.begin(), out.gens.end(), c) == out.gens.end())
      out.gens.push_back(c);
  }
  if (out.gens.empty() && on > 1)
    throw Error(Err::inconsistency, "nontrivial quotient with no generators");
  verify_table(out, 128);

  OuterData od;
  od.inn_order = inns.size();
  od.aut_order = a.order;
  od.s0 = Bits(on);
  Subgroup ns = normalizer(s, p);
  ns.m.for_each([&](uint32_t nelt) {
    Perm q = restricted_conj_perm(s, pg, Elt(nelt));
    auto it = id_of.find(coset_key(q, inns));
    if (it == id_of.end())
      throw Error(Err::inconsistency, "parent conjugation missing from Aut scan");
    od.s0.set(it->second);
  });
  if (closure_bits(out, od.s0).m != od.s0)
    throw Error(Err::inconsistency, "parent image is not closed");
  od.out = std::make_shared<Group>(std::move(out));
  return od;
}

EmbeddingVerdict critical_oracle(const Group& s, const Subgroup& p, const Caps& caps) {
  if (p.G != &s) throw Error(Err::usage, "subgroup belongs to a different group");
  if (!s.is_2group()) throw Error(Err::domain, "ambient group must be a 2-group");
  EmbeddingVerdict v;
  Subgroup cent = centralizer(s, p);
  if (!cent.m.subset_of(p.m)) {
    v.status = Tri::no;
    v.note = "not centric";
    return v;
  }
  if (p.order == s.n) {
    v.status = Tri::no;
    v.note = "whole group has trivial parent image";
    return v;
  }
  std::string why;
  auto od = outer_automorphisms(s, p, caps, &why);
  if (!od) {
    v.note = why;
    return v;
  }
  const Group& out = *od->out;
  v.arena = od->out;
  v.sylow = od->s0;
  if (is_pow2(out.n)) {
    // S0 Sylow in a 2-group G forces G = S0 <= G0 < G, impossible
    v.status = Tri::no;
    v.note = "outer automorphism group is a 2-group";
    return v;
  }
  uint64_t s2 = od->s0.count();
  if (!is_pow2(s2))
    throw Error(Err::inconsistency, "parent image is not a 2-group");
  auto nodes = overgroups_of(out, od->s0, caps.oracle_cap, caps.candidate_cap,
                             [&](const Bits& h) { return two_part(h.count()) == s2; });
  if (!nodes) {
    v.note = "overgroup search exceeded caps";
    return v;
  }
  std::sort(nodes->begin(), nodes->end(), [](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.lex_less(b);
  });
  bool undecided = false;
  for (const Bits& gm : *nodes) {
    if (gm.count() == s2 || two_part(gm.count()) != s2) continue;
    SubgroupAsGroup gg = subgroup_as_group(Subgroup(out, gm), "G");
    EmbeddingVerdict sub = has_strongly_2_embedded(gg.g, caps);
    if (sub.status == Tri::not_decided) {
      undecided = true;
      continue;
    }
    if (sub.status != Tri::yes) continue;
    Bits g0(out.n);
    sub.inner.for_each([&](uint32_t x) { g0.set(gg.to_parent[x]); });
    // move the witness onto our Sylow: its Sylow is conjugate to S0 inside G
    if (!od->s0.subset_of(g0)) {
      bool moved = false;
      for (Elt c = gm.next_set(0); c < out.n; c = gm.next_set(c + 1)) {
        Bits g0c = conjugate_bits(out, g0, c);
        if (od->s0.subset_of(g0c)) {
          g0 = g0c;
          moved = true;
          break;
        }
      }
      if (!moved)
        throw Error(Err::inconsistency, "witness cannot be moved onto S0");
    }
    if (!is_strongly_2_embedded(gg.g, [&] {
          Bits back(gg.g.n);
          g0.for_each([&](uint32_t x) { back.set(gg.from_parent[x]); });
          return back;
        }()))
      throw Error(Err::inconsistency, "conjugated witness lost the property");
    v.status = Tri::yes;
    v.inner = g0;
    v.outer = gm;
    v.note = "G0 of order " + std::to_string(g0.count()) + " inside G of order " +
             std::to_string(gm.count());
    return v;
  }
  if (undecided) {
    v.note = "some candidate groups were undecidable";
    return v;
  }
  v.status = Tri::no;
  return v;
}

SylowShape sylow_shape_checks(const Group& s0) {
  if (!s0.is_2group()) throw Error(Err::domain, "shape checks expect a 2-group");
  SylowShape r;
  Subgroup all = full_subgroup(s0);
  r.cyclic = is_cyclic_subgroup(all);
  Subgroup z = center(s0);
  Subgroup om = omega1(all);
  r.center_omega = z.m == om.m;
  uint64_t pw = z.order;
  for (uint32_t m = 1; m <= 3; m++) {
    if (pw == s0.n) {
      r.order_power = true;
      r.m = m;
      break;
    }
    if (pw > s0.n / z.order) break;  // next multiply would overflow past n
    pw *= z.order;
  }
  Subgroup zsoc = omega1(z);
  r.center_rank = uint32_t(std::countr_zero(uint64_t(zsoc.order)));
  return r;
}

bool involutions_conjugate_in_normalizer(const Group& out, const Bits& s0_image) {
  if (closure_bits(out, s0_image).m != s0_image)
    throw Error(Err::usage, "image set is not a subgroup");
  std::vector<Elt> invs;
  s0_image.for_each([&](uint32_t x) {
    if (x && out.op(Elt(x), Elt(x)) == 0) invs.push_back(Elt(x));
  });
  if (invs.size() <= 1) return true;
  Subgroup nz = normalizer(out, Subgroup(out, s0_image));
  Bits orb(out.n);
  nz.m.for_each([&](uint32_t n) { orb.set(out.conj(Elt(n), invs[0])); });
  for (Elt t : invs)
    if (!orb.test(t)) return false;
  return true;
}

}  // namespace crit2
