#include "crit2/candidates.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace crit2 {

Subgroup z_prime(const Group& s) {
  Subgroup z2 = upper_central_2(s);
  Bits seed(s.n);
  z2.m.for_each([&](uint32_t x) {
    // the literal commutator value set, not the subgroup it generates
    Bits vals(s.n);
    uint32_t distinct = 0;
    for (Elt y = 0; y < s.n && distinct <= 2; y++) {
      Elt c = s.op(s.op(Elt(x), y), s.op(s.iv(Elt(x)), s.iv(y)));
      if (!vals.test(c)) {
        vals.set(c);
        distinct++;
      }
    }
    if (distinct <= 2) seed.set(x);
  });
  return closure_bits(s, seed);
}

std::vector<Subgroup> enumerate_centric_candidates(const Group& s,
                                                   const Subgroup* core,
                                                   const Caps& caps) {
  if (!s.is_2group()) throw Error(Err::domain, "needs a 2-group");
  if (core && core->G != &s)
    throw Error(Err::usage, "core from a different group");
  Subgroup zp = core ? *core : z_prime(s);

  std::unordered_set<Bits, BitsHash> seen;
  std::unordered_set<Bits, BitsHash> found;
  std::deque<Bits> queue;
  auto push = [&](const Bits& m) {
    Bits can = canonical_class_rep(s, m);
    if (!seen.insert(can).second) return;
    if (seen.size() > caps.candidate_cap)
      throw Error(Err::resource, "candidate ascent exceeded cap");
    queue.push_back(std::move(can));
  };

  // ascend from the core: in a 2-group every overgroup is reached through
  // normalizer steps, so this sees every class above zp
  push(zp.m);
  while (!queue.empty()) {
    Bits hm = std::move(queue.front());
    queue.pop_front();
    Subgroup h(s, hm);
    if (h.order < s.n && centralizer(s, h).m.subset_of(hm)) found.insert(hm);
    Subgroup nz = normalizer(s, h);
    nz.m.for_each([&](uint32_t x) {
      if (!hm.test(x)) push(extend(h, Elt(x)).m);
    });
  }

  // centralizers of involutions that move the second center
  Subgroup z2 = upper_central_2(s);
  for (Elt h = 1; h < s.n; h++) {
    if (s.op(h, h) != 0) continue;
    bool moves = false;
    z2.m.for_each([&](uint32_t z) {
      if (s.op(h, Elt(z)) != s.op(Elt(z), h)) moves = true;
    });
    if (!moves) continue;
    Subgroup p = centralizer_elt(s, h);
    if (p.order == s.n) continue;
    if (normalizer(s, p).order != 2 * p.order) continue;
    if (!centralizer(s, p).m.subset_of(p.m))
      throw Error(Err::inconsistency, "involution centralizer not centric");
    found.insert(canonical_class_rep(s, p.m));
  }

  std::vector<Bits> reps(found.begin(), found.end());
  std::sort(reps.begin(), reps.end(),
            [](const Bits& a, const Bits& b) { return a.lex_less(b); });
  std::vector<Subgroup> out;
  out.reserve(reps.size());
  for (Bits& m : reps) out.emplace_back(s, std::move(m));
  return out;
}

Subgroup semicharacteristic_closure(const Group& s, const Subgroup& q,
                                    const std::vector<Perm>& odd_aut_gens) {
  if (q.G != &s) throw Error(Err::usage, "subgroup of a different group");
  for (const Perm& a : odd_aut_gens)
    if (a.size() != s.n) throw Error(Err::usage, "degree mismatch");
  Bits cur = q.m;
  while (true) {
    Bits next = closure_bits(s, cur).m;
    Bits grow = next;
    for (Elt g : s.gens) grow |= conjugate_bits(s, next, g);
    for (const Perm& a : odd_aut_gens)
      next.for_each([&](uint32_t x) { grow.set(a[x]); });
    if (grow == next) return Subgroup(s, next);
    cur = std::move(grow);
  }
}

}  // namespace crit2
