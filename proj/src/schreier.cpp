#include "crit2/schreier.hpp"

#include <algorithm>

namespace crit2 {

namespace {

uint32_t least_moved(const Perm& p) {
  for (uint32_t i = 0; i < p.size(); i++)
    if (p[i] != i) return i;
  throw Error(Err::inconsistency, "identity has no moved point");
}

}  // namespace

BSGS::BSGS(uint32_t degree, const std::vector<Perm>& gens) : deg_(degree) {
  std::vector<Perm> kept;
  for (const Perm& g : gens) {
    if (g.size() != deg_) throw Error(Err::usage, "generator degree mismatch");
    if (!perm_is_bijection(g)) throw Error(Err::usage, "generator is not a permutation");
    if (perm_is_identity(g)) continue;
    if (std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(g);
  }
  for (const Perm& g : kept) {
    bool moves_base = false;
    for (uint32_t b : base_)
      if (g[b] != b) {
        moves_base = true;
        break;
      }
    if (!moves_base) new_level(g);
  }
  for (size_t j = 0; j < base_.size(); j++)
    for (const Perm& g : kept) {
      bool fixes = true;
      for (size_t i = 0; i < j && fixes; i++) fixes = g[base_[i]] == base_[i];
      if (fixes) gens_[j].push_back(g);
    }
  for (size_t j = base_.size(); j-- > 0;) complete(j);
}

void BSGS::new_level(const Perm& witness) {
  base_.push_back(least_moved(witness));
  gens_.emplace_back();
  lv_.emplace_back();
  lv_.back().bpt = base_.back();
}

void BSGS::rebuild_orbit(size_t i) {
  Level& L = lv_[i];
  L.orbit.assign(1, L.bpt);
  L.where.assign(deg_, -1);
  L.where[L.bpt] = 0;
  L.tr.assign(1, perm_identity(deg_));
  for (size_t head = 0; head < L.orbit.size(); head++) {
    uint32_t x = L.orbit[head];
    for (const Perm& s : gens_[i]) {
      uint32_t y = s[x];
      if (L.where[y] < 0) {
        L.where[y] = int32_t(L.orbit.size());
        L.orbit.push_back(y);
        L.tr.push_back(perm_compose(s, L.tr[head]));
      }
    }
  }
}

std::pair<Perm, size_t> BSGS::sift(Perm p, size_t from) const {
  for (size_t i = from; i < base_.size(); i++) {
    uint32_t x = p[lv_[i].bpt];
    if (x == lv_[i].bpt) continue;
    int32_t w = lv_[i].where[x];
    if (w < 0) return {std::move(p), i};
    p = perm_compose(perm_inverse(lv_[i].tr[w]), p);
  }
  if (perm_is_identity(p)) return {std::move(p), base_.size()};
  return {std::move(p), base_.size()};
}

void BSGS::complete(size_t i) {
  rebuild_orbit(i);
  // new_level reallocates lv_ and gens_, so index fresh on every access
  for (size_t ox = 0; ox < lv_[i].orbit.size(); ox++)
    for (size_t si = 0; si < gens_[i].size(); si++) {
      Perm sg;
      {
        const Level& L = lv_[i];
        const Perm& s = gens_[i][si];
        uint32_t y = s[L.orbit[ox]];
        sg = perm_compose(perm_inverse(L.tr[L.where[y]]), perm_compose(s, L.tr[ox]));
      }
      if (perm_is_identity(sg)) continue;
      auto [r, lvl] = sift(std::move(sg), i + 1);
      if (perm_is_identity(r)) continue;
      if (lvl == base_.size()) new_level(r);
      size_t stop = std::min(lvl, base_.size() - 1);
      for (size_t j = i + 1; j <= stop; j++) gens_[j].push_back(r);
      for (size_t j = stop + 1; j-- > i + 1;) complete(j);
    }
}

bool BSGS::add_generator(const Perm& p) {
  if (p.size() != deg_) throw Error(Err::usage, "generator degree mismatch");
  if (!perm_is_bijection(p)) throw Error(Err::usage, "generator is not a permutation");
  auto [r, lvl] = sift(p);
  if (perm_is_identity(r)) return false;
  if (lvl == base_.size()) new_level(r);
  size_t stop = std::min(lvl, base_.size() - 1);
  for (size_t j = 0; j <= stop; j++) gens_[j].push_back(r);
  for (size_t j = stop + 1; j-- > 0;) complete(j);
  return true;
}

unsigned __int128 BSGS::order() const {
  unsigned __int128 o = 1;
  for (const Level& L : lv_) o *= L.orbit.size();
  return o;
}

uint64_t BSGS::order64() const {
  unsigned __int128 o = order();
  if (o > ~uint64_t(0)) throw Error(Err::size_cap, "group order exceeds 64 bits");
  return uint64_t(o);
}

bool BSGS::contains(const Perm& p) const {
  if (p.size() != deg_) return false;
  auto [r, lvl] = sift(p);
  (void)lvl;
  return perm_is_identity(r);
}

void BSGS::for_each(const std::function<void(const Perm&)>& fn, uint64_t cap) const {
  if (order() > cap) throw Error(Err::size_cap, "element traversal exceeds cap");
  Perm id = perm_identity(deg_);
  if (base_.empty()) {
    fn(id);
    return;
  }
  // depth-first over transversal index tuples, deepest level varies fastest
  std::vector<Perm> prefix(base_.size() + 1);
  prefix[0] = id;
  std::vector<size_t> idx(base_.size(), 0);
  size_t d = 0;
  while (true) {
    if (d == base_.size()) {
      fn(prefix[d]);
      while (d-- > 0) {
        if (++idx[d] < lv_[d].orbit.size()) break;
        idx[d] = 0;
      }
      if (d == size_t(-1)) return;
    }
    prefix[d + 1] = perm_compose(prefix[d], lv_[d].tr[idx[d]]);
    d++;
  }
}

std::vector<Perm> BSGS::elements(uint64_t cap) const {
  std::vector<Perm> out;
  out.reserve(size_t(std::min<unsigned __int128>(order(), cap)));
  for_each([&](const Perm& p) { out.push_back(p); }, cap);
  return out;
}

BSGS normal_closure_perm(uint32_t degree, const std::vector<Perm>& group_gens,
                         const std::vector<Perm>& seed) {
  BSGS h(degree, seed);
  std::vector<Perm> work;
  for (const Perm& s : seed)
    if (!perm_is_identity(s)) work.push_back(s);
  for (size_t i = 0; i < work.size(); i++)
    for (const Perm& g : group_gens) {
      Perm c = perm_compose(g, perm_compose(work[i], perm_inverse(g)));
      if (h.add_generator(c)) work.push_back(std::move(c));
    }
  return h;
}

}  // namespace crit2
