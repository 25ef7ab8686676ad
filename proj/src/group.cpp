#include "crit2/group.hpp"

#include <algorithm>
#include <unordered_map>

namespace crit2 {

bool Group::is_abelian() const {
  for (Elt a = 1; a < n; a++)
    for (Elt b = a + 1; b < n; b++)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

uint32_t element_order(const Group& g, Elt x) {
  if (x >= g.n) throw Error(Err::usage, "element id out of range");
  uint32_t k = 1;
  Elt y = x;
  while (y != 0) {
    y = g.op(y, x);
    k++;
  }
  return k;
}

ConjClasses conjugacy_classes(const Group& g) {
  ConjClasses cc;
  cc.of.assign(g.n, uint16_t(0xFFFF));
  for (Elt x = 0; x < g.n; x++) {
    if (cc.of[x] != 0xFFFF) continue;
    uint16_t id = uint16_t(cc.members.size());
    cc.members.push_back({});
    auto& mem = cc.members.back();
    // orbit of x under conjugation
    std::vector<Elt> stack{x};
    cc.of[x] = id;
    mem.push_back(x);
    while (!stack.empty()) {
      Elt y = stack.back();
      stack.pop_back();
      for (Elt a : g.gens) {
        Elt z = g.conj(a, y);
        if (cc.of[z] == 0xFFFF) {
          cc.of[z] = id;
          mem.push_back(z);
          stack.push_back(z);
        }
      }
    }
    std::sort(mem.begin(), mem.end());
  }
  return cc;
}

Group renumber_bfs(const Group& g, const std::vector<Elt>& gens,
                   std::vector<Elt>* new_of_old_out) {
  std::vector<Elt> new_of_old(g.n, Elt(g.n));
  std::vector<Elt> old_of_new;
  old_of_new.reserve(g.n);
  new_of_old[0] = 0;
  old_of_new.push_back(0);
  for (uint32_t head = 0; head < old_of_new.size(); head++) {
    Elt x = old_of_new[head];
    for (Elt a : gens) {
      Elt y = g.op(x, a);
      if (new_of_old[y] == g.n) {
        new_of_old[y] = Elt(old_of_new.size());
        old_of_new.push_back(y);
      }
    }
  }
  if (old_of_new.size() != g.n)
    throw Error(Err::malformed, "generators do not generate: group " + g.name);
  if (new_of_old_out) *new_of_old_out = new_of_old;
  Group r;
  r.n = g.n;
  r.name = g.name;
  r.prov = g.prov;
  r.mul.resize(size_t(g.n) * g.n);
  r.inv.resize(g.n);
  for (Elt a = 0; a < g.n; a++) {
    Elt oa = old_of_new[a];
    for (Elt b = 0; b < g.n; b++)
      r.mul[size_t(a) * g.n + b] = uint16_t(new_of_old[g.op(oa, old_of_new[b])]);
    r.inv[a] = uint16_t(new_of_old[g.iv(oa)]);
  }
  r.gens.reserve(gens.size());
  for (Elt a : gens) r.gens.push_back(new_of_old[a]);
  return r;
}

Group group_from_fn(uint32_t n, const std::function<Elt(Elt, Elt)>& f,
                    const std::vector<Elt>& gens, std::string name) {
  if (n == 0 || n > 0xFFFF) throw Error(Err::size_cap, "group order out of range: " + name);
  Group g;
  g.n = n;
  g.name = std::move(name);
  g.mul.resize(size_t(n) * n);
  g.inv.assign(n, uint16_t(0xFFFF));
  for (Elt a = 0; a < n; a++)
    for (Elt b = 0; b < n; b++) {
      Elt c = f(a, b);
      if (c >= n) throw Error(Err::malformed, "product out of range in " + g.name);
      g.mul[size_t(a) * n + b] = uint16_t(c);
      if (c == 0) g.inv[a] = uint16_t(b);
    }
  for (Elt a = 0; a < n; a++)
    if (g.inv[a] == 0xFFFF) throw Error(Err::malformed, "missing inverse in " + g.name);
  g.gens = gens;
  if (g.gens.empty() && n > 1) g.gens = greedy_generators(g);
  return renumber_bfs(g, g.gens);
}

void verify_table(const Group& g, uint32_t assoc_limit) {
  uint32_t n = g.n;
  if (g.mul.size() != size_t(n) * n || g.inv.size() != n)
    throw Error(Err::malformed, "table size mismatch in " + g.name);
  std::vector<char> seen(n);
  for (Elt a = 0; a < n; a++) {
    if (g.op(0, a) != a || g.op(a, 0) != a)
      throw Error(Err::malformed, "id 0 is not an identity in " + g.name);
    // Latin rows/columns
    std::fill(seen.begin(), seen.end(), 0);
    for (Elt b = 0; b < n; b++) {
      Elt c = g.op(a, b);
      if (seen[c]) throw Error(Err::malformed, "row " + std::to_string(a) + " not Latin in " + g.name);
      seen[c] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elt b = 0; b < n; b++) {
      Elt c = g.op(b, a);
      if (seen[c]) throw Error(Err::malformed, "column " + std::to_string(a) + " not Latin in " + g.name);
      seen[c] = 1;
    }
    if (g.op(a, g.iv(a)) != 0 || g.op(g.iv(a), a) != 0)
      throw Error(Err::malformed, "bad inverse in " + g.name);
  }
  if (n <= assoc_limit) {
    const uint16_t* m = g.mul.data();
    for (Elt a = 0; a < n; a++)
      for (Elt b = 0; b < n; b++) {
        Elt ab = m[size_t(a) * n + b];
        const uint16_t* rb = m + size_t(b) * n;
        const uint16_t* rab = m + size_t(ab) * n;
        for (Elt c = 0; c < n; c++)
          if (rab[c] != m[size_t(a) * n + rb[c]])
            throw Error(Err::malformed, "non-associative triple (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ") in " + g.name);
      }
  }
}

std::vector<Elt> greedy_generators(const Group& g) {
  std::vector<Elt> gens;
  std::vector<char> in(g.n, 0);
  in[0] = 1;
  uint32_t have = 1;
  while (have < g.n) {
    Elt pick = 0;
    for (Elt x = 1; x < g.n; x++)
      if (!in[x]) { pick = x; break; }
    gens.push_back(pick);
    // grow closure of <gens>
    std::vector<Elt> frontier{pick};
    in[pick] = 1;
    have++;
    while (!frontier.empty()) {
      std::vector<Elt> next;
      for (Elt f : frontier)
        for (Elt x = 0; x < g.n; x++) {
          if (!in[x]) continue;
          for (Elt y : {g.op(x, f), g.op(f, x)}) {
            if (!in[y]) {
              in[y] = 1;
              have++;
              next.push_back(y);
            }
          }
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

Group from_cayley_table(const std::vector<std::vector<Elt>>& table, std::string name,
                        const Caps& caps) {
  uint32_t n = uint32_t(table.size());
  if (n == 0) throw Error(Err::malformed, "empty table");
  if (n > caps.table_cap || n > 2048)
    throw Error(Err::size_cap, "cayley table too large for exhaustive verification: " + name);
  Group g;
  g.n = n;
  g.name = std::move(name);
  g.prov.kind = "cayley";
  g.prov.summary = "cayley table, order " + std::to_string(n);
  g.mul.resize(size_t(n) * n);
  g.inv.assign(n, uint16_t(0xFFFF));
  for (Elt a = 0; a < n; a++) {
    if (table[a].size() != n) throw Error(Err::malformed, "ragged table row in " + g.name);
    for (Elt b = 0; b < n; b++) {
      Elt c = table[a][b];
      if (c >= n) throw Error(Err::malformed, "entry out of range in " + g.name);
      g.mul[size_t(a) * n + b] = uint16_t(c);
      if (c == 0 && g.inv[a] == 0xFFFF) g.inv[a] = uint16_t(b);
    }
  }
  for (Elt a = 0; a < n; a++)
    if (g.inv[a] == 0xFFFF) throw Error(Err::malformed, "row without identity in " + g.name);
  verify_table(g, 2048);
  g.gens = greedy_generators(g);
  return g;  // keep the caller's numbering
}

Group from_permutation_generators(uint32_t degree,
                                  const std::vector<std::vector<uint32_t>>& one_based_gens,
                                  std::string name, const Caps& caps) {
  if (degree == 0) throw Error(Err::malformed, "degree must be positive");
  std::vector<Perm> gens;
  for (const auto& im : one_based_gens) {
    if (im.size() != degree) throw Error(Err::malformed, "generator image length != degree in " + name);
    Perm p(degree);
    for (uint32_t i = 0; i < degree; i++) {
      if (im[i] < 1 || im[i] > degree)
        throw Error(Err::malformed, "generator image out of 1..degree in " + name);
      p[i] = uint16_t(im[i] - 1);
    }
    if (!perm_is_bijection(p)) throw Error(Err::malformed, "generator is not a bijection in " + name);
    gens.push_back(std::move(p));
  }

  // BFS closure; discovery order is already the canonical numbering.
  std::vector<Perm> elems{perm_identity(degree)};
  std::unordered_map<Perm, Elt, PermHash> index;
  index.emplace(elems[0], 0);
  for (uint32_t head = 0; head < elems.size(); head++) {
    for (const Perm& a : gens) {
      Perm p = perm_compose(elems[head], a);
      if (index.emplace(p, Elt(elems.size())).second) {
        elems.push_back(std::move(p));
        if (elems.size() > caps.closure_cap)
          throw Error(Err::size_cap, "permutation closure exceeds cap in " + name);
      }
    }
  }
  uint32_t n = uint32_t(elems.size());
  if (n > caps.table_cap)
    throw Error(Err::size_cap, "closure of order " + std::to_string(n) + " exceeds table cap in " + name);

  Group g;
  g.n = n;
  g.name = std::move(name);
  g.prov.kind = "perm";
  g.prov.degree = degree;
  g.prov.perm_gens = gens;
  g.prov.summary = "permutation group of degree " + std::to_string(degree);
  g.mul.resize(size_t(n) * n);
  g.inv.resize(n);
  for (Elt a = 0; a < n; a++) {
    for (Elt b = 0; b < n; b++) g.mul[size_t(a) * n + b] = uint16_t(index.at(perm_compose(elems[a], elems[b])));
    g.inv[a] = uint16_t(index.at(perm_inverse(elems[a])));
  }
  g.gens.reserve(gens.size());
  for (const Perm& a : gens) g.gens.push_back(index.at(a));
  return g;  // numbering already BFS by construction
}

std::vector<Elt> hom_from_gen_images(const Group& g, const Group& target,
                                     const std::vector<Elt>& images) {
  if (images.size() != g.gens.size())
    throw Error(Err::usage, "generator image count mismatch for " + g.name);
  for (Elt im : images)
    if (im >= target.n) throw Error(Err::usage, "generator image out of range for " + g.name);
  std::vector<Elt> img(g.n, target.n);
  img[0] = 0;
  std::vector<Elt> queue{0};
  for (uint32_t head = 0; head < queue.size(); head++) {
    Elt x = queue[head];
    for (size_t i = 0; i < g.gens.size(); i++) {
      Elt y = g.op(x, g.gens[i]);
      if (img[y] == target.n) {
        img[y] = target.op(img[x], images[i]);
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != g.n)
    throw Error(Err::malformed, "generators do not generate: group " + g.name);
  for (Elt a = 0; a < g.n; a++)
    for (Elt b = 0; b < g.n; b++)
      if (img[g.op(a, b)] != target.op(img[a], img[b]))
        throw Error(Err::inconsistency,
                    "generator images do not define a homomorphism from " + g.name);
  return img;
}

Elt eval_word(const Group& g, const std::vector<int>& word) {
  Elt acc = 0;
  for (int w : word) {
    if (w == 0 || size_t(w < 0 ? -w : w) > g.gens.size())
      throw Error(Err::usage, "word letter out of generator range in " + g.name);
    Elt x = g.gens[size_t((w < 0 ? -w : w) - 1)];
    acc = g.op(acc, w < 0 ? g.iv(x) : x);
  }
  return acc;
}

Perm element_permutation(const Group& g, Elt x) {
  if (g.prov.kind != "perm") throw Error(Err::domain, "group has no permutation provenance: " + g.name);
  // walk x back to the identity along the BFS numbering: every element y > 0
  // has some generator a and predecessor p with p*a = y and p < y.
  std::vector<Perm> gp = g.prov.perm_gens;
  std::vector<Perm> acc(g.n);
  acc[0] = perm_identity(g.prov.degree);
  std::vector<char> have(g.n, 0);
  have[0] = 1;
  // BFS in id order: ids were assigned in discovery order, so a single pass works
  for (Elt y = 0; y < g.n; y++) {
    if (!have[y]) throw Error(Err::malformed, "numbering is not BFS in " + g.name);
    for (size_t gi = 0; gi < g.gens.size(); gi++) {
      Elt z = g.op(y, g.gens[gi]);
      if (!have[z]) {
        acc[z] = perm_compose(acc[y], gp[gi]);
        have[z] = 1;
      }
    }
    if (y == x) break;
  }
  return acc[x];
}

}  // namespace crit2
