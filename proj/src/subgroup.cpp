#include "crit2/subgroup.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace crit2 {

Subgroup trivial_subgroup(const Group& g) {
  Bits b(g.n);
  b.set(0);
  return Subgroup(g, b);
}

Subgroup full_subgroup(const Group& g) {
  Bits b(g.n);
  for (Elt x = 0; x < g.n; x++) b.set(x);
  return Subgroup(g, b);
}

Subgroup closure_bits(const Group& g, const Bits& seed) {
  Bits in(g.n);
  in.set(0);
  std::vector<Elt> queue{0};
  seed.for_each([&](uint32_t x) {
    if (!in.test(x)) {
      in.set(x);
      queue.push_back(Elt(x));
    }
  });
  std::vector<Elt> done;
  done.reserve(queue.size());
  for (size_t qi = 0; qi < queue.size(); qi++) {
    Elt u = queue[qi];
    done.push_back(u);
    for (size_t di = 0; di < done.size(); di++) {
      Elt v = done[di];
      for (Elt y : {g.op(u, v), g.op(v, u)}) {
        if (!in.test(y)) {
          in.set(y);
          queue.push_back(y);
        }
      }
    }
  }
  return Subgroup(g, in);
}

Subgroup closure(const Group& g, const std::vector<Elt>& seed) {
  Bits b(g.n);
  for (Elt x : seed) b.set(x);
  return closure_bits(g, b);
}

Subgroup extend(const Subgroup& h, Elt x) {
  const Group& g = *h.G;
  if (h.m.test(x)) return h;
  // when x normalizes H, <H,x> is the union of the cosets H x^j
  Bits cx = conjugate_bits(g, h.m, x);
  if (cx == h.m) {
    Bits in = h.m;
    Elt p = x;
    while (!in.test(p)) {
      h.m.for_each([&](uint32_t e) { in.set(g.op(Elt(e), p)); });
      p = g.op(p, x);
    }
    return Subgroup(g, in);
  }
  Bits seed = h.m;
  seed.set(x);
  return closure_bits(g, seed);
}

Subgroup center(const Group& g) {
  Bits b(g.n);
  for (Elt x = 0; x < g.n; x++) {
    bool cent = true;
    for (Elt a : g.gens)
      if (g.op(x, a) != g.op(a, x)) { cent = false; break; }
    if (cent) b.set(x);
  }
  return Subgroup(g, b);
}

Subgroup derived(const Group& g) {
  Bits comms(g.n);
  for (Elt a = 0; a < g.n; a++)
    for (Elt b = 0; b < g.n; b++) comms.set(g.comm(a, b));
  return closure_bits(g, comms);
}

static void require_2group(const Group& g, const char* what) {
  if (!g.is_2group()) throw Error(Err::domain, std::string(what) + " requires a 2-group: " + g.name);
}

Subgroup frattini(const Group& g) {
  require_2group(g, "frattini");
  Bits seed(g.n);
  for (Elt a = 0; a < g.n; a++) {
    seed.set(g.op(a, a));
    for (Elt b = 0; b < g.n; b++) seed.set(g.comm(a, b));
  }
  return closure_bits(g, seed);
}

Subgroup upper_central_2(const Group& g) {
  Subgroup z = center(g);
  auto qr = quotient_group(g, z);
  Subgroup zq = center(qr.q);
  Bits b(g.n);
  for (Elt x = 0; x < g.n; x++)
    if (zq.m.test(qr.proj[x])) b.set(x);
  return Subgroup(g, b);
}

Subgroup omega1(const Subgroup& p) {
  const Group& g = *p.G;
  require_2group(g, "omega1");
  Bits seed(g.n);
  p.m.for_each([&](uint32_t x) {
    if (g.op(Elt(x), Elt(x)) == 0) seed.set(x);
  });
  return closure_bits(g, seed);
}

Subgroup centralizer(const Group& g, const Subgroup& x) {
  auto mem = x.m.to_list();
  Bits b(g.n);
  for (Elt y = 0; y < g.n; y++) {
    bool cent = true;
    for (Elt a : mem)
      if (g.op(y, Elt(a)) != g.op(Elt(a), y)) { cent = false; break; }
    if (cent) b.set(y);
  }
  return Subgroup(g, b);
}

Subgroup centralizer_elt(const Group& g, Elt x) {
  Bits b(g.n);
  for (Elt y = 0; y < g.n; y++)
    if (g.op(y, x) == g.op(x, y)) b.set(y);
  return Subgroup(g, b);
}

Bits conjugate_bits(const Group& g, const Bits& m, Elt by) {
  Bits r(g.n);
  m.for_each([&](uint32_t x) { r.set(g.conj(by, Elt(x))); });
  return r;
}

Subgroup normalizer(const Group& g, const Subgroup& p) {
  Bits b(g.n);
  auto mem = p.m.to_list();
  for (Elt y = 0; y < g.n; y++) {
    bool ok = true;
    for (Elt a : mem)
      if (!p.m.test(g.conj(y, Elt(a)))) { ok = false; break; }
    if (ok) b.set(y);
  }
  return Subgroup(g, b);
}

bool is_subgroup_abelian(const Subgroup& h) {
  auto mem = h.m.to_list();
  for (size_t i = 0; i < mem.size(); i++)
    for (size_t j = i + 1; j < mem.size(); j++)
      if (h.G->op(mem[i], mem[j]) != h.G->op(mem[j], mem[i])) return false;
  return true;
}

bool is_normal(const Subgroup& h) {
  const Group& g = *h.G;
  for (Elt a : g.gens)
    if (conjugate_bits(g, h.m, a) != h.m) return false;
  return true;
}

bool is_cyclic_subgroup(const Subgroup& h) {
  if (h.order == 1) return true;
  const Group& g = *h.G;
  auto mem = h.m.to_list();
  for (Elt x : mem)
    if (element_order(g, Elt(x)) == h.order) return true;
  return false;
}

// orbit of a member bitset under conjugation by the parent's generators
static std::vector<Bits> bits_orbit(const Group& g, const Bits& m) {
  std::unordered_set<Bits, BitsHash> seen{m};
  std::vector<Bits> orbit{m};
  for (size_t head = 0; head < orbit.size(); head++) {
    Bits cur = orbit[head];
    for (Elt a : g.gens) {
      Bits c = conjugate_bits(g, cur, a);
      if (seen.insert(c).second) orbit.push_back(std::move(c));
    }
  }
  return orbit;
}

std::vector<Subgroup> subgroup_conjugacy_class(const Group& g, const Subgroup& p) {
  auto orbit = bits_orbit(g, p.m);
  std::vector<Subgroup> out;
  out.reserve(orbit.size());
  for (auto& b : orbit) out.emplace_back(g, b);
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.m.lex_less(b.m); });
  return out;
}

Bits canonical_class_rep(const Group& g, const Bits& m) {
  auto orbit = bits_orbit(g, m);
  Bits best = orbit[0];
  for (auto& c : orbit)
    if (c.lex_less(best)) best = c;
  return best;
}

Subgroup derived_of(const Subgroup& h) {
  const Group& g = *h.G;
  auto mem = h.m.to_list();
  Bits comms(g.n);
  for (Elt a : mem)
    for (Elt b : mem) comms.set(g.comm(Elt(a), Elt(b)));
  return closure_bits(g, comms);
}

Subgroup center_of(const Subgroup& h) {
  const Group& g = *h.G;
  auto mem = h.m.to_list();
  Bits b(g.n);
  for (Elt x : mem) {
    bool cent = true;
    for (Elt a : mem)
      if (g.op(Elt(x), Elt(a)) != g.op(Elt(a), Elt(x))) { cent = false; break; }
    if (cent) b.set(x);
  }
  return Subgroup(g, b);
}

Subgroup frattini_of(const Subgroup& h) {
  const Group& g = *h.G;
  if (!is_pow2(h.order)) throw Error(Err::domain, "frattini_of requires a 2-group");
  auto mem = h.m.to_list();
  Bits seed(g.n);
  for (Elt a : mem) {
    seed.set(g.op(Elt(a), Elt(a)));
    for (Elt b : mem) seed.set(g.comm(Elt(a), Elt(b)));
  }
  return closure_bits(g, seed);
}

Subgroup upper_central_2_of(const Subgroup& h) {
  auto sub = subgroup_as_group(h, "tmp");
  Subgroup z2 = upper_central_2(sub.g);
  Bits b(h.G->n);
  z2.m.for_each([&](uint32_t x) { b.set(sub.to_parent[x]); });
  return Subgroup(*h.G, b);
}

Subgroup normal_closure_in(const Subgroup& ambient, const Bits& seed) {
  const Group& g = *ambient.G;
  auto amem = ambient.m.to_list();
  Subgroup cur = closure_bits(g, seed);
  while (true) {
    Bits grown = cur.m;
    cur.m.for_each([&](uint32_t x) {
      for (Elt a : amem) grown.set(g.conj(Elt(a), Elt(x)));
    });
    Subgroup cl = closure_bits(g, grown);
    if (cl.m == cur.m) return cl;
    cur = std::move(cl);
  }
}

Subgroup commutator_subgroup(const Group& g, const Bits& a, const Bits& b) {
  Bits comms(g.n);
  a.for_each([&](uint32_t x) {
    b.for_each([&](uint32_t y) { comms.set(g.comm(Elt(x), Elt(y))); });
  });
  return closure_bits(g, comms);
}

std::vector<Subgroup> maximal_subgroups(const Group& g) {
  require_2group(g, "maximal_subgroups");
  Subgroup phi = frattini(g);
  auto qr = quotient_group(g, phi);
  const Group& q = qr.q;
  // q is elementary abelian; maximal subgroups of g are preimages of its
  // hyperplanes
  std::vector<Elt> basis;
  {
    Subgroup span = trivial_subgroup(q);
    for (Elt x = 1; x < q.n; x++)
      if (!span.m.test(x)) {
        basis.push_back(x);
        span = extend(span, x);
      }
  }
  uint32_t d = uint32_t(basis.size());
  std::vector<Elt> elt_of_mask(size_t(1) << d);
  std::vector<uint32_t> coord(q.n, 0);
  elt_of_mask[0] = 0;
  for (uint32_t mask = 1; mask < (1u << d); mask++) {
    uint32_t li = uint32_t(std::countr_zero(mask));
    elt_of_mask[mask] = q.op(basis[li], elt_of_mask[mask & (mask - 1)]);
    coord[elt_of_mask[mask]] = mask;
  }
  std::vector<Subgroup> out;
  for (uint32_t f = 1; f < (1u << d); f++) {
    Bits b(g.n);
    for (Elt x = 0; x < g.n; x++)
      if (std::popcount(coord[qr.proj[x]] & f) % 2 == 0) b.set(x);
    out.emplace_back(g, b);
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.m.lex_less(b.m); });
  return out;
}

QuotientResult quotient_group(const Group& g, const Subgroup& n) {
  if (!is_normal(n)) throw Error(Err::domain, "quotient by non-normal subgroup in " + g.name);
  std::vector<Elt> cos(g.n, Elt(g.n));
  std::vector<Elt> rep;  // coset -> least parent element
  for (Elt x = 0; x < g.n; x++) {
    if (cos[x] != g.n) continue;
    Elt id = Elt(rep.size());
    rep.push_back(x);
    n.m.for_each([&](uint32_t h) { cos[g.op(x, Elt(h))] = id; });
  }
  uint32_t qn = uint32_t(rep.size());
  Group q;
  q.n = qn;
  q.name = g.name + "/N" + std::to_string(n.order);
  q.prov.kind = "quotient";
  q.prov.summary = "quotient of " + g.name + " by a normal subgroup of order " + std::to_string(n.order);
  q.mul.resize(size_t(qn) * qn);
  q.inv.resize(qn);
  for (Elt a = 0; a < qn; a++) {
    for (Elt b = 0; b < qn; b++) q.mul[size_t(a) * qn + b] = uint16_t(cos[g.op(rep[a], rep[b])]);
    q.inv[a] = uint16_t(cos[g.iv(rep[a])]);
  }
  for (Elt a : g.gens) {
    Elt c = cos[a];
    if (c != 0 && std::find(q.gens.begin(), q.gens.end(), c) == q.gens.end()) q.gens.push_back(c);
  }
  if (q.gens.empty() && qn > 1) q.gens = greedy_generators(q);
  if (qn == 1) return {std::move(q), std::move(cos)};
  std::vector<Elt> new_of_old;
  Group q2 = renumber_bfs(q, q.gens, &new_of_old);
  for (auto& c : cos) c = new_of_old[c];
  return {std::move(q2), std::move(cos)};
}

SubgroupAsGroup subgroup_as_group(const Subgroup& h, std::string name) {
  const Group& g = *h.G;
  auto mem = h.m.to_list();
  uint32_t n = uint32_t(mem.size());
  std::vector<Elt> from_parent(g.n, n);
  for (uint32_t i = 0; i < n; i++) from_parent[mem[i]] = i;
  Group s;
  s.n = n;
  s.name = std::move(name);
  s.prov.kind = "subgroup";
  s.prov.summary = "subgroup of " + g.name + " of order " + std::to_string(n);
  s.mul.resize(size_t(n) * n);
  s.inv.resize(n);
  for (uint32_t a = 0; a < n; a++) {
    for (uint32_t b = 0; b < n; b++)
      s.mul[size_t(a) * n + b] = uint16_t(from_parent[g.op(mem[a], mem[b])]);
    s.inv[a] = uint16_t(from_parent[g.iv(mem[a])]);
  }
  std::vector<Elt> to_parent(n);
  if (n == 1) {
    to_parent[0] = mem[0];
    return {std::move(s), std::move(to_parent), std::move(from_parent)};
  }
  s.gens = greedy_generators(s);
  std::vector<Elt> new_of_old;
  Group s2 = renumber_bfs(s, s.gens, &new_of_old);
  for (uint32_t old = 0; old < n; old++) to_parent[new_of_old[old]] = mem[old];
  for (uint32_t p = 0; p < g.n; p++)
    if (from_parent[p] != n) from_parent[p] = new_of_old[from_parent[p]];
  return {std::move(s2), std::move(to_parent), std::move(from_parent)};
}

}  // namespace crit2
